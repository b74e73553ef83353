// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check is exact unless a tolerance is printed with it.

#include <cospec/blowup.hpp>
#include <cospec/decomposition.hpp>
#include <cospec/errors.hpp>
#include <cospec/graph.hpp>
#include <cospec/linalg.hpp>
#include <cospec/transfer.hpp>
#include <cospec/word.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace cospec;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  std::size_t checks = 0;
  std::size_t failures = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    passed = false;
    if (failures++ < 5) detail << "\n    failed: " << what;
  }
};

// Every graph built during the run, for the structural invariants.
struct GeneratedGraph {
  std::string name;
  WeightedGraph graph;
  bool connected_ring = false;
};
std::vector<GeneratedGraph> g_generated;
std::map<std::string, Polynomial> g_charpoly_cache;

std::string key(const Word& w, const Rational& k) { return w.str() + "@" + to_string(k); }

const Polynomial& cached_charpoly(const RingGraph& r) {
  const std::string id = key(r.word, r.k);
  auto it = g_charpoly_cache.find(id);
  if (it == g_charpoly_cache.end()) {
    it = g_charpoly_cache.emplace(id, charpoly_exact(r.graph)).first;
    g_generated.push_back({id, r.graph, true});
  }
  return it->second;
}

const Rational kHalf(1, 2);

// det((t-1)I + D^{-1}A) at one point straight from the definition, with
// the determinant done by rational Gaussian elimination.
Rational charpoly_point(const WeightedGraph& g, const Rational& t) {
  Matrix<Rational> m = random_walk_matrix(g);
  for (std::size_t i = 0; i < g.n(); ++i) m(i, i) += t - 1;
  return determinant_gauss(m);
}

// 1. toggled words give equal exact characteristic polynomials.
void criterion_toggle_cospectral(Outcome& out) {
  std::size_t words = 0;
  for (const Rational& k : {Rational(1), Rational(2), kHalf})
    for (std::size_t tau = 3; tau <= 7; ++tau)
      for (const Word& w : all_words(tau)) {
        ++words;
        const Polynomial& a = cached_charpoly(assemble_ring(w, k));
        const Polynomial& b = cached_charpoly(assemble_ring(toggle(w), k));
        out.expect(a == b, w.str() + " k=" + to_pretty(k));
      }
  out.detail << words << " (word, k) pairs, " << words / 3 << " words";
}

// 2. decomposition sum equals the exact characteristic polynomial.
void criterion_oracle(Outcome& out) {
  std::size_t largest = 0, instances = 0;
  for (const Rational& k : {Rational(1), Rational(2)})
    for (std::size_t tau = 3; tau <= 4; ++tau)
      for (const Word& w : all_words(tau)) {
        ++instances;
        const RingGraph r = assemble_ring(w, k);
        largest = std::max(largest, r.graph.n());
        out.expect(charpoly_via_decompositions(r.graph) == cached_charpoly(r), w.str() + " k=" + to_pretty(k));
      }
  out.detail << instances << " instances, largest n = " << largest;
}

// 3. long part equals the closed form; grouped sums equal the multinomial
// summands.
void criterion_long_part(Outcome& out) {
  std::size_t parts = 0;
  for (const Rational& k : {Rational(1), Rational(2), kHalf})
    for (std::size_t tau = 3; tau <= 4; ++tau)
      for (const Word& w : all_words(tau))
        ++parts, out.expect(long_part_bruteforce(assemble_ring(w, k)) ==
                       long_part_closed_form(w.tau(), w.ell(), w.m(), k),
                   w.str() + " k=" + to_pretty(k));
  std::size_t buckets = 0;
  for (const char* s : {"CCC", "CCCC"})
    for (const Rational& k : {Rational(1), Rational(2), kHalf}) {
      const RingGraph r = assemble_ring(parse_word(s), k);
      const DecompositionAnalysis a = analyze_decompositions(r);
      std::size_t m = r.word.m();
      // every (h, i, j) with h + i + j = m must appear
      out.expect(a.histogram.size() == (m + 1) * (m + 2) / 2, std::string(s) + " bucket count");
      for (const auto& [c, bucket] : a.histogram) {
        ++buckets;
        out.expect(bucket.sum == multinomial_summand(r.word.tau(), r.word.ell(), m, k, c),
                   std::string(s) + " bucket (" + std::to_string(c.h) + "," + std::to_string(c.i) + "," +
                       std::to_string(c.j) + ") k=" + to_pretty(k));
      }
    }
  out.detail << parts << " long parts, " << buckets << " (h,i,j) buckets";
}

// 4. transfer-matrix polynomial equals the exact one.
void criterion_transfer(Outcome& out) {
  std::size_t n = 0;
  for (const Rational& k : {Rational(1), Rational(2)})
    for (std::size_t tau = 3; tau <= 6; ++tau)
      for (const Word& w : all_words(tau)) {
        ++n;
        const std::string ctx = w.str() + " k=" + to_pretty(k);
        out.expect(charpoly_via_transfer(w, k) == cached_charpoly(assemble_ring(w, k)), ctx);
        out.expect(short_part(w, k) == short_part_via_Y(w, k), ctx + " (Y blocks)");
      }
  out.detail << n << " (word, k) pairs";
}

RationalMatrix upper_left(const RationalMatrix& m) {
  return RationalMatrix{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}};
}

// 5. matrix identities, recomputed here from the constituent matrices.
void criterion_identities(Outcome& out) {
  const std::vector<Rational> ts{Rational(3), Rational(4), Rational(-1), Rational(1, 2), Rational(7, 3),
                                 Rational(-5, 4)};
  const RationalMatrix Q = transition_matrix(), R = similarity_r(), S = similarity_s();
  const RationalMatrix R_inv = inverse(R);
  out.expect(R * S * R_inv == Q, "Q = R S R^-1");
  for (const Rational& k : {Rational(1), Rational(2), kHalf, Rational(7, 3)})
    for (const Rational& t : ts) {
      const std::string ctx = "k=" + to_pretty(k) + " t=" + to_pretty(t);
      const Rational u = t - 1;
      std::map<ModuleKind, RationalMatrix> Y;
      for (auto kind : {ModuleKind::P, ModuleKind::C, ModuleKind::E}) {
        const RationalMatrix full = S * R_inv * local_weight_matrix(kind, k, u) * R;
        bool zero = true;
        for (std::size_t i = 2; i < 4; ++i)
          for (std::size_t j = 2; j < 4; ++j) zero = zero && full(i, j) == 0;
        out.expect(zero, ctx + " lower-right block of " + std::string(1, to_char(kind)));
        Y.emplace(kind, upper_left(full));
      }
      const RationalMatrix U = toggle_intertwiner(u);
      out.expect(U * Y.at(ModuleKind::P) == Y.at(ModuleKind::C) * U, ctx + " U Y_P = Y_C U");
      out.expect(U * Y.at(ModuleKind::C) == Y.at(ModuleKind::P) * U, ctx + " U Y_C = Y_P U");
      out.expect(U * Y.at(ModuleKind::E) == Y.at(ModuleKind::E) * U, ctx + " U Y_E = Y_E U");
      out.expect(U(0, 0) * U(1, 1) - U(0, 1) * U(1, 0) != 0, ctx + " U invertible");
      out.expect(verify_U_conjugation(k, t).identities_hold(), ctx + " library report");
    }
  out.detail << "4 values of k x " << ts.size() << " points t";
}

// 6. worked values.
void criterion_worked_values(Outcome& out) {
  const Polynomial eee{0, Rational(9, 4), -3, 1};
  const RingGraph r = assemble_ring(parse_word("EEE"), 1);
  out.expect(cached_charpoly(r) == eee, "EEE exact");
  out.expect(charpoly_via_decompositions(r.graph) == eee, "EEE decompositions");
  out.expect(charpoly_via_transfer(r.word, 1) == eee, "EEE transfer");

  // t (t-1)^2 (t-2)
  const Polynomial bip = Polynomial{0, 1} * Polynomial::shifted_power(1, 2) * Polynomial::shifted_power(2, 1);
  const std::vector<double> spectrum{0, 1, 1, 2};
  for (auto [p, q] : {std::pair{1, 3}, std::pair{2, 2}}) {
    const WeightedGraph g = complete_bipartite(p, q);
    const std::string name = "K" + std::to_string(p) + std::to_string(q);
    g_generated.push_back({name, g, false});
    out.expect(charpoly_exact(g) == bip, name + " charpoly");
    const double gap = spectrum_distance(eigenvalues_numeric(g), spectrum);
    out.expect(gap <= 1e-12, name + " spectrum gap " + std::to_string(gap));
  }
  out.detail << "EEE by 3 methods, K13 and K22 (tol 1e-12)";
}

// 7. the 24-vertex pair.
void criterion_cospectral_pair(Outcome& out) {
  const RingGraph a = assemble_ring(parse_word("PPCCPPPC"), 1);
  const RingGraph b = assemble_ring(parse_word("CCPPCCCP"), 1);
  out.expect(a.graph.n() == 24 && b.graph.n() == 24, "24 vertices each");
  out.expect(a.graph.edge_count() == 27, "27 edges");
  out.expect(b.graph.edge_count() == 29, "29 edges");
  out.expect(cached_charpoly(a) == cached_charpoly(b), "exact charpoly equality");
  const double gap = spectrum_distance(eigenvalues_numeric(a.graph), eigenvalues_numeric(b.graph));
  out.expect(gap <= 1e-9, "eigenvalue gap " + std::to_string(gap));
  out.expect(subgraph_after_symmetry(a, b), "sparse inside dense");
  out.detail << "27 vs 29 edges, eigenvalue gap " << gap;
}

std::vector<double> padded_with_ones(const WeightedGraph& g, std::size_t n) {
  auto e = eigenvalues_numeric(g);
  e.resize(n, 1.0);
  std::sort(e.begin(), e.end());
  return e;
}

// 8. blowups.
void criterion_blowups(Outcome& out) {
  double worst = 0;
  for (int k : {1, 2, 3}) {
    const BlowupPair pair = simple_blowup_recipe(parse_word("EEEPCC"), k);
    const std::string ctx = "EEEPCC k=" + std::to_string(k);
    out.expect(pair.second.source.word.str() == "EEECPP", ctx + " partner word");
    out.expect(is_simple(pair.first.blown) && is_simple(pair.second.blown), ctx + " simple");
    for (const auto* r : {&pair.first, &pair.second})
      g_generated.push_back({r->source.word.str() + " blowup k=" + std::to_string(k), r->blown, false});
    const double gap = spectrum_distance(eigenvalues_numeric(pair.first.blown), eigenvalues_numeric(pair.second.blown));
    worst = std::max(worst, gap);
    out.expect(gap <= 1e-9, ctx + " gap " + std::to_string(gap));
  }

  // pure independent-set blowups: unsigned vertices with multiplicity k,
  // and the scaled pair whose E edge is absorbed by multiplicities
  std::size_t pure = 0;
  for (const char* s : {"CCC", "PPP", "PCPC", "CPCCP", "ECPC"})
    for (int k : {2, 3}) {
      const RingGraph r = assemble_ring(parse_word(s), k);
      std::vector<int> mult(r.graph.n(), 1);
      for (const auto& m : r.modules)
        if (m.a >= 0) mult[m.a] = mult[m.b] = k;
      const BlownGraph b = blow_up(r.graph, mult);
      g_generated.push_back({std::string(s) + " pure blowup", b.graph, false});
      const double gap = spectrum_distance(eigenvalues_numeric(b.graph), padded_with_ones(r.graph, b.graph.n()));
      ++pure;
      out.expect(gap <= 1e-9, std::string(s) + " containment gap " + std::to_string(gap));
    }
  const BlowupPair ecc = scaled_blowup_pair(parse_word("ECC"), 1, 2);
  for (const auto* r : {&ecc.first, &ecc.second}) {
    ++pure;
    out.expect(is_simple(r->blown), r->source.word.str() + " scaled blowup simple");
    g_generated.push_back({r->source.word.str() + " scaled blowup", r->blown, false});
    const double gap = spectrum_distance(eigenvalues_numeric(r->blown), padded_with_ones(r->source.graph, r->blown.n()));
    out.expect(gap <= 1e-9, r->source.word.str() + " scaled containment gap " + std::to_string(gap));
  }

  std::size_t scaled = 0;
  for (const Rational& c : {Rational(2), Rational(7, 3)})
    for (std::size_t tau = 3; tau <= 4; ++tau)
      for (const Word& w : all_words(tau)) {
        const WeightedGraph g = assemble_ring(w, kHalf).graph;
        const WeightedGraph s = scale_weights(g, c);
        ++scaled;
        out.expect(laplacian_square_form(s) == laplacian_square_form(g), w.str() + " c=" + to_pretty(c));
        out.expect(random_walk_matrix(s) == random_walk_matrix(g), w.str() + " c=" + to_pretty(c) + " D^-1 A");
      }
  out.detail << "3 recipe pairs (worst gap " << worst << "), " << pure << " pure blowups, " << scaled
             << " scaled graphs";
}

// 9. structural invariants on every graph generated above.
void criterion_invariants(Outcome& out) {
  std::size_t rings = 0;
  for (const auto& gg : g_generated) {
    const auto eig = eigenvalues_numeric(gg.graph);
    out.expect(eig.front() >= -1e-9 && eig.back() <= 2 + 1e-9, gg.name + " eigenvalue range");
    auto it = g_charpoly_cache.find(gg.name);
    const Polynomial p = it != g_charpoly_cache.end() ? it->second : charpoly_exact(gg.graph);
    const long n = static_cast<long>(gg.graph.n());
    out.expect(p.degree() == n && p.is_monic(), gg.name + " monic of degree n");
    out.expect(p.coeff(gg.graph.n() - 1) == -n, gg.name + " t^(n-1) coefficient");
    if (gg.connected_ring) {
      ++rings;
      out.expect(gg.graph.is_connected(), gg.name + " connected");
      out.expect(p.coeff(0) == 0 && p.coeff(1) != 0, gg.name + " simple root at 0");
    }
  }
  // the cached polynomials themselves, spot-checked against the definition
  std::size_t sampled = 0;
  for (const auto& gg : g_generated) {
    if (!gg.connected_ring || gg.graph.n() > 12) continue;
    const Polynomial& p = g_charpoly_cache.at(gg.name);
    for (const Rational& t : {Rational(-2), Rational(1), Rational(5, 3)})
      out.expect(p.evaluate(t) == charpoly_point(gg.graph, t), gg.name + " value at " + to_pretty(t));
    if (++sampled >= 300) break;
  }
  out.detail << g_generated.size() << " graphs (" << rings << " rings), " << sampled
             << " charpolys spot-checked pointwise";
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {"toggled words are cospectral (tau 3..7, k in {1,2,1/2})", criterion_toggle_cospectral},
      {"decomposition sum equals exact charpoly (tau 3..4, k in {1,2})", criterion_oracle},
      {"long part equals closed form; multinomial buckets", criterion_long_part},
      {"transfer charpoly equals exact (tau 3..6, k in {1,2})", criterion_transfer},
      {"transfer matrix identities (k in {1,2,1/2,7/3})", criterion_identities},
      {"worked values", criterion_worked_values},
      {"24-vertex pair", criterion_cospectral_pair},
      {"blowups and scaling", criterion_blowups},
      {"structural invariants", criterion_invariants},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(out);
    } catch (const std::exception& e) {
      out.passed = false;
      out.detail << "\n    threw: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && out.passed;
    std::cout << "criterion " << i + 1 << ": " << (out.passed ? "PASS" : "FAIL") << "  " << criteria[i].title
              << "  [" << out.checks - out.failures << "/" << out.checks << " checks, " << std::fixed
              << std::setprecision(1) << secs << "s]" << std::defaultfloat << "\n    " << out.detail.str()
              << std::endl;
  }
  return all ? 0 : 1;
}
