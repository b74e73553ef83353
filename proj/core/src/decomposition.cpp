#include "cospec/decomposition.hpp"

#include "cospec/errors.hpp"

#include <algorithm>

namespace cospec {

std::size_t Decomposition::covered_count() const {
  std::size_t n = 2 * edges.size();
  for (const auto& c : cycles) n += c.size();
  return n;
}

std::size_t Decomposition::even_count() const {
  std::size_t e = edges.size();
  for (const auto& c : cycles)
    if (c.size() % 2 == 0) ++e;
  return e;
}

namespace {

class Enumerator {
 public:
  Enumerator(const WeightedGraph& g, const std::function<void(const Decomposition&)>& visit,
             const EnumerationBudget& budget)
      : g_(g), visit_(visit), budget_(budget), covered_(g.n(), 0) {}

  void run() { step(0); }

 private:
  void emit() {
    if (++count_ > budget_.max_decompositions)
      throw BudgetError("more than " + std::to_string(budget_.max_decompositions) +
                        " decompositions");
    visit_(current_);
  }

  void step(int v) {
    const int n = static_cast<int>(g_.n());
    while (v < n && covered_[v]) ++v;
    if (v == n) {
      emit();
      return;
    }
    step(v + 1);  // v stays uncovered

    covered_[v] = 1;
    for (const auto& nb : g_.neighbors(v)) {
      if (nb.vertex < v || covered_[nb.vertex]) continue;
      covered_[nb.vertex] = 1;
      current_.edges.emplace_back(v, nb.vertex);
      step(v + 1);
      current_.edges.pop_back();
      covered_[nb.vertex] = 0;
    }
    path_.assign(1, v);
    extend_cycle(v);
    covered_[v] = 0;
  }

  // path_ starts at root, the smallest vertex of the cycle being built.
  void extend_cycle(int root) {
    const int last = path_.back();
    for (const auto& nb : g_.neighbors(last)) {
      const int x = nb.vertex;
      if (x < root || covered_[x]) continue;
      covered_[x] = 1;
      path_.push_back(x);
      if (path_.size() >= 3 && path_[1] < x && g_.has_edge(x, root)) {
        current_.cycles.push_back(path_);
        std::vector<int> saved = path_;
        step(root + 1);
        path_ = std::move(saved);
        current_.cycles.pop_back();
      }
      extend_cycle(root);
      path_.pop_back();
      covered_[x] = 0;
    }
  }

  const WeightedGraph& g_;
  const std::function<void(const Decomposition&)>& visit_;
  EnumerationBudget budget_;
  std::vector<char> covered_;
  std::vector<int> path_;
  Decomposition current_;
  std::uint64_t count_ = 0;
};

}  // namespace

void enumerate_decompositions(const WeightedGraph& g,
                              const std::function<void(const Decomposition&)>& visit,
                              const EnumerationBudget& budget) {
  if (g.n() > budget.max_vertices)
    throw BudgetError("graph has " + std::to_string(g.n()) + " vertices; budget allows " +
                      std::to_string(budget.max_vertices));
  Enumerator(g, visit, budget).run();
}

Rational decomposition_coefficient(const Decomposition& d, const WeightedGraph& g,
                                   std::span<const Rational> degrees) {
  Rational num = (d.even_count() % 2 == 0) ? 1 : -1;
  Rational den = 1;
  for (const auto& [u, v] : d.edges) {
    const Rational w = g.weight(u, v);
    num *= w * w;
    den *= degrees[u] * degrees[v];
  }
  for (const auto& c : d.cycles) {
    num *= 2;
    for (std::size_t i = 0; i < c.size(); ++i) {
      num *= g.weight(c[i], c[(i + 1) % c.size()]);
      den *= degrees[c[i]];
    }
  }
  return num / den;
}

Rational decomposition_coefficient(const Decomposition& d, const WeightedGraph& g) {
  return decomposition_coefficient(d, g, g.degrees());
}

Polynomial decomposition_term(const Decomposition& d, const WeightedGraph& g, std::size_t n) {
  return Polynomial::shifted_power(1, static_cast<unsigned>(n - d.covered_count())) *
         decomposition_coefficient(d, g);
}

namespace {

// Accumulates scalars per power of (t-1) and expands once at the end.
class ShiftedAccumulator {
 public:
  explicit ShiftedAccumulator(std::size_t n) : by_power_(n + 1) {}
  void add(std::size_t power, const Rational& c) { by_power_[power] += c; }
  Polynomial result() const {
    Polynomial p;
    for (std::size_t k = 0; k < by_power_.size(); ++k)
      if (by_power_[k] != 0) p += Polynomial::shifted_power(1, unsigned(k)) * by_power_[k];
    return p;
  }

 private:
  std::vector<Rational> by_power_;
};

}  // namespace

Polynomial charpoly_via_decompositions(const WeightedGraph& g, const EnumerationBudget& budget) {
  const std::size_t n = g.n();
  ShiftedAccumulator acc(n);
  enumerate_decompositions(
      g, [&](const Decomposition& d) { acc.add(n - d.covered_count(), decomposition_coefficient(d, g)); },
      budget);
  return acc.result();
}

namespace {

// Per-vertex view of a decomposition.
struct CoverMap {
  std::vector<int> cycle_of;  // -1 if not on a cycle
  std::vector<int> partner;   // F(D) partner or -1

  CoverMap(const Decomposition& d, std::size_t n) : cycle_of(n, -1), partner(n, -1) {
    for (std::size_t c = 0; c < d.cycles.size(); ++c)
      for (int v : d.cycles[c]) cycle_of[v] = static_cast<int>(c);
    for (const auto& [u, v] : d.edges) {
      partner[u] = v;
      partner[v] = u;
    }
  }
  bool uncovered(int v) const { return cycle_of[v] < 0 && partner[v] < 0; }
};

bool cycle_uses_edge(const std::vector<int>& cycle, int x, int y) {
  const std::size_t len = cycle.size();
  for (std::size_t i = 0; i < len; ++i) {
    const int a = cycle[i];
    const int b = cycle[(i + 1) % len];
    if ((a == x && b == y) || (a == y && b == x)) return true;
  }
  return false;
}

[[noreturn]] void forced_violation(const RingGraph& ring, std::size_t module) {
  throw IdentityError("long decomposition of G(" + ring.word.str() + ") has module " +
                      std::to_string(module) + " (" + std::string(1, to_char(ring.word[module])) +
                      ") outside its allowed configurations");
}

}  // namespace

LongCycleClass classify_long(const Decomposition& d, const RingGraph& ring) {
  LongCycleClass out;
  const std::size_t tau = ring.word.tau();
  int long_index = -1;
  for (std::size_t c = 0; c < d.cycles.size(); ++c) {
    const auto& cyc = d.cycles[c];
    bool all = true;
    for (std::size_t i = 0; i < tau && all; ++i)
      all = std::find(cyc.begin(), cyc.end(), ring.signed_vertex(i)) != cyc.end();
    if (all) {
      long_index = static_cast<int>(c);
      break;
    }
  }
  if (long_index < 0) return out;
  out.is_long = true;

  const CoverMap cover(d, ring.graph.n());
  const auto& cyc = d.cycles[long_index];
  for (std::size_t i = 0; i < tau; ++i) {
    const ModuleSlots& s = ring.modules[i];
    const bool signed_edge = cycle_uses_edge(cyc, s.plus, s.minus);
    switch (ring.word[i]) {
      case ModuleKind::E:
        if (!signed_edge) forced_violation(ring, i);
        break;
      case ModuleKind::P:
        if (!signed_edge || !cover.uncovered(s.a) || !cover.uncovered(s.b))
          forced_violation(ring, i);
        break;
      case ModuleKind::C:
        if (signed_edge && cover.uncovered(s.a) && cover.uncovered(s.b)) {
          out.c_configs.push_back(CConfig::SignedOnly);
          ++out.counts.h;
        } else if (signed_edge && cover.partner[s.a] == s.b) {
          out.c_configs.push_back(CConfig::UnsignedEdge);
          ++out.counts.i;
        } else if (cycle_uses_edge(cyc, s.plus, s.a) && cycle_uses_edge(cyc, s.a, s.b) &&
                   cycle_uses_edge(cyc, s.b, s.minus)) {
          out.c_configs.push_back(CConfig::ThroughAll);
          ++out.counts.j;
        } else {
          forced_violation(ring, i);
        }
        break;
    }
  }
  return out;
}

namespace {

bool cycle_inside_one_module(const std::vector<int>& cyc, const RingGraph& ring) {
  for (const ModuleSlots& s : ring.modules) {
    const bool inside = std::all_of(cyc.begin(), cyc.end(), [&](int v) {
      return v == s.plus || v == s.minus || v == s.a || v == s.b;
    });
    if (inside) return true;
  }
  return false;
}

}  // namespace

DecompositionAnalysis analyze_decompositions(const RingGraph& ring,
                                             const EnumerationBudget& budget) {
  const WeightedGraph& g = ring.graph;
  const std::size_t n = g.n();
  ShiftedAccumulator all(n), long_acc(n), short_acc(n);
  std::map<ConfigCounts, ShiftedAccumulator> by_class;
  DecompositionAnalysis out;

  enumerate_decompositions(
      g,
      [&](const Decomposition& d) {
        ++out.total;
        const std::size_t power = n - d.covered_count();
        const Rational c = decomposition_coefficient(d, g);
        all.add(power, c);
        const LongCycleClass cls = classify_long(d, ring);
        if (cls.is_long) {
          ++out.long_count;
          long_acc.add(power, c);
          by_class.try_emplace(cls.counts, n).first->second.add(power, c);
          ++out.histogram[cls.counts].count;
        } else {
          short_acc.add(power, c);
          for (const auto& cyc : d.cycles)
            if (!cycle_inside_one_module(cyc, ring))
              throw IdentityError("short decomposition of G(" + ring.word.str() +
                                  ") has a cycle spanning several modules");
        }
      },
      budget);

  out.charpoly = all.result();
  out.long_part = long_acc.result();
  out.short_part = short_acc.result();
  for (auto& [key, acc] : by_class) out.histogram[key].sum = acc.result();
  return out;
}

Polynomial long_part_bruteforce(const RingGraph& ring, const EnumerationBudget& budget) {
  return analyze_decompositions(ring, budget).long_part;
}

namespace {

void check_word_shape(std::size_t tau, std::size_t ell, std::size_t m, const Rational& k) {
  if (tau < 3) throw ParameterError("tau must be at least 3");
  if (ell + m > tau) throw ParameterError("ell + m exceeds tau");
  if (k <= 0) throw ParameterError("k must be positive");
}

Integer factorial(std::size_t n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace

Polynomial long_part_closed_form(std::size_t tau, std::size_t ell, std::size_t m,
                                  const Rational& k) {
  check_word_shape(tau, ell, m, k);
  const unsigned lm = static_cast<unsigned>(ell + m);
  Rational scale = rational_pow(Rational(2), unsigned(tau - 1)) * rational_pow(k + 1, lm);
  Rational sign = (tau - 1) % 2 == 0 ? 1 : -1;
  return Polynomial::shifted_power(1, 2 * lm) * Rational(sign / scale);
}

Polynomial multinomial_summand(std::size_t tau, std::size_t ell, std::size_t m,
                               const Rational& k, const ConfigCounts& c) {
  check_word_shape(tau, ell, m, k);
  if (c.h + c.i + c.j != m) throw ParameterError("h + i + j must equal m");
  const Rational sign = (tau - 1) % 2 == 0 ? 1 : -1;
  Rational prefactor = 2 * sign * rational_pow(k + 1, unsigned(tau - ell - m)) /
                       rational_pow(2 * (k + 1), unsigned(tau));
  Rational multinomial(factorial(m), factorial(c.h) * factorial(c.i) * factorial(c.j));
  multinomial.canonicalize();
  prefactor *= multinomial;
  const Rational through = rational_pow(k, 4) / rational_pow(k * (k + 1), 2);
  prefactor *= rational_pow(-through, unsigned(c.i)) * rational_pow(through, unsigned(c.j));
  return Polynomial::shifted_power(1, unsigned(2 * (ell + c.h))) * prefactor;
}

}  // namespace cospec
