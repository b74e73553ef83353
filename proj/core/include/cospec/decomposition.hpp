#pragma once

#include "cospec/graph.hpp"
#include "cospec/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

namespace cospec {

// A vertex-disjoint collection of isolated edges and cycles (length >= 3)
// of a host graph. Cycles are stored starting at their smallest vertex.
struct Decomposition {
  std::vector<std::pair<int, int>> edges;  // F(D)
  std::vector<std::vector<int>> cycles;

  std::size_t covered_count() const;  // |V(D)|
  // Even cycles, counting each isolated edge as a 2-cycle.
  std::size_t even_count() const;
  std::size_t long_cycle_count() const { return cycles.size(); }  // s(D)
};

struct EnumerationBudget {
  std::size_t max_vertices = 30;
  std::uint64_t max_decompositions = 10'000'000;
};

// Calls visit once per decomposition of g, the empty one included. The
// lowest undecided vertex is left uncovered, matched to a higher neighbour,
// or made the smallest vertex of a cycle whose direction is fixed by
// requiring second vertex < last vertex. Throws BudgetError when the graph
// or the enumeration is larger than the budget.
void enumerate_decompositions(const WeightedGraph& g,
                              const std::function<void(const Decomposition&)>& visit,
                              const EnumerationBudget& budget = {});

// (-1)^{e(D)} 2^{s(D)} prod_{E(D)} w prod_{F(D)} w / prod_{V(D)} d_i with
// the supplied degrees.
Rational decomposition_coefficient(const Decomposition& d, const WeightedGraph& g,
                                   std::span<const Rational> degrees);
Rational decomposition_coefficient(const Decomposition& d, const WeightedGraph& g);

// decomposition_coefficient * (t-1)^{n - |V(D)|}.
Polynomial decomposition_term(const Decomposition& d, const WeightedGraph& g, std::size_t n);

// Sum of decomposition_term over every decomposition of g.
Polynomial charpoly_via_decompositions(const WeightedGraph& g,
                                       const EnumerationBudget& budget = {});

enum class CConfig { SignedOnly, UnsignedEdge, ThroughAll };

// h, i, j: C modules whose long cycle uses only the signed vertices, which
// additionally carry the {a,b} edge, and whose long cycle runs through a
// and b.
struct ConfigCounts {
  std::size_t h = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  auto operator<=>(const ConfigCounts&) const = default;
};

struct LongCycleClass {
  bool is_long = false;
  std::vector<CConfig> c_configs;  // one per C module in word order
  ConfigCounts counts;
};

// A decomposition is long when one of its cycles visits every signed
// vertex. For long decompositions every P and E module must be in its
// forced configuration; a violation throws IdentityError.
LongCycleClass classify_long(const Decomposition& d, const RingGraph& ring);

struct HistogramBucket {
  std::uint64_t count = 0;
  Polynomial sum;
};

struct DecompositionAnalysis {
  std::uint64_t total = 0;
  std::uint64_t long_count = 0;
  Polynomial charpoly;    // over all decompositions
  Polynomial long_part;   // over long decompositions
  Polynomial short_part;  // over the rest
  std::map<ConfigCounts, HistogramBucket> histogram;
};

// One enumeration pass over G(W) splitting the sum into long and short
// parts. Also checks that no short decomposition has a cycle leaving a
// single module (IdentityError).
DecompositionAnalysis analyze_decompositions(const RingGraph& ring,
                                             const EnumerationBudget& budget = {});

Polynomial long_part_bruteforce(const RingGraph& ring, const EnumerationBudget& budget = {});

// (-1)^{tau-1} (t-1)^{2(m+ell)} / (2^{tau-1} (k+1)^{m+ell}).
// Throws ParameterError on tau < 3, ell + m > tau or k <= 0.
Polynomial long_part_closed_form(std::size_t tau, std::size_t ell, std::size_t m,
                                  const Rational& k);

// The contribution of all long decompositions whose C modules split as
// (h, i, j):
//   2 (-1)^{tau-1} (k+1)^{tau-ell-m} (t-1)^{2 ell} / (2(k+1))^tau
//   * m!/(h! i! j!) * ((t-1)^2)^h * (-k^4/(k(k+1))^2)^i * (k^4/(k(k+1))^2)^j
Polynomial multinomial_summand(std::size_t tau, std::size_t ell, std::size_t m,
                               const Rational& k, const ConfigCounts& c);

}  // namespace cospec
