#include <cospec/decomposition.hpp>
#include <cospec/errors.hpp>
#include <cospec/linalg.hpp>
#include <cospec/transfer.hpp>

#include <doctest.h>

#include "oracles.hpp"

using namespace cospec;

namespace {

// The Y blocks as printed, entry by entry. c8k selects the sign of the
// "8k" term in the top-left entry of the C block.
RationalMatrix printed_Y_P(const Rational& k, const Rational& u) {
  const Rational u2 = u * u, u4 = u2 * u2, k2 = k * k, kk = (k + 1) * (k + 1);
  const Rational diag = (16 * k2 * u4 + 32 * k * u4 - 8 * k2 * u2 + 16 * u4 - 8 * k * u2 + k2 - u2) / (12 * kk * u4);
  const Rational top = (-8 * k2 * u4 - 16 * k * u4 - 2 * k2 * u2 - 8 * u4 - 2 * k * u2 + k2 - u2) / (6 * kk * u4);
  const Rational bottom = (8 * k2 * u4 + 16 * k * u4 + 2 * k2 * u2 + 8 * u4 + 2 * k * u2 - k2 + u2) / (24 * kk * u4);
  return RationalMatrix{{diag, top}, {bottom, diag}};
}

Rational corrected_Y_P_bottom_right(const Rational& k, const Rational& u) {
  const Rational u2 = u * u, u4 = u2 * u2, k2 = k * k, kk = (k + 1) * (k + 1);
  return (-4 * k2 * u4 - 8 * k * u4 - 4 * u4 - 4 * k2 * u2 - 4 * k * u2 + u2 - k2) / (12 * kk * u4);
}

RationalMatrix printed_Y_C(const Rational& k, const Rational& u, int c8k) {
  const Rational u2 = u * u, k2 = k * k, kk = (k + 1) * (k + 1);
  const Rational a = (16 * k2 * u2 + 32 * k * u2 - 16 * k2 + 16 * u2 + c8k * 8 * k - 1) / (12 * kk * u2);
  const Rational b = (-8 * k2 * u2 - 16 * k * u2 + 8 * k2 - 8 * u2 - 2 * k - 1) / (6 * kk * u2);
  const Rational c = (8 * k2 * u2 + 16 * k * u2 - 8 * k2 + 8 * u2 + 2 * k + 1) / (24 * kk * u2);
  const Rational d = (-4 * k2 * u2 - 8 * k * u2 + 4 * k2 - 4 * u2 - 4 * k + 1) / (12 * kk * u2);
  return RationalMatrix{{a, b}, {c, d}};
}

RationalMatrix printed_Y_E(const Rational& u) {
  const Rational u2 = u * u;
  return RationalMatrix{{(16 * u2 - 1) / (12 * u2), (-8 * u2 - 1) / (6 * u2)},
                        {(8 * u2 + 1) / (24 * u2), (-4 * u2 + 1) / (12 * u2)}};
}

// Diagonal of X for one module, from the subset oracle on the bare gadget.
// Signed vertices get their ring degree 2(k+1); the state index records
// which of them the local decomposition covers.
std::vector<Rational> gadget_state_weights(ModuleKind kind, const Rational& k, const Rational& u) {
  const ModuleGadget gadget = build_module_gadget(kind, k);
  auto index = [](GadgetRole r) {
    switch (r) {
      case GadgetRole::Plus: return 0;
      case GadgetRole::Minus: return 1;
      case GadgetRole::A: return 2;
      default: return 3;
    }
  };
  std::vector<Edge> edges;
  for (const auto& e : gadget.edges) edges.push_back({index(e.x), index(e.y), e.weight});
  const WeightedGraph g(gadget.vertices.size(), edges);
  std::vector<Rational> degrees = g.degrees();
  degrees[0] = degrees[1] = 2 * (k + 1);
  std::vector<Rational> out(4, 0);
  for (const auto& d : oracle::decompositions_by_edge_subsets(g)) {
    const std::size_t state = (d.covered.count(0) ? kPlus : 0) + (d.covered.count(1) ? kMinus : 0);
    out[state] += oracle::subset_weight(g, d, degrees, u);
  }
  return out;
}

RationalMatrix upper_left(const RationalMatrix& m) {
  return RationalMatrix{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}};
}

}  // namespace

TEST_CASE("constant matrices") {
  const auto q = transition_matrix();
  CHECK(q(kMinus, 0) == 1);
  CHECK(q(kMinus, 1) == 0);
  CHECK(q(kMinus, 2) == 1);
  CHECK(q(kMinus, 3) == 0);
  CHECK(similarity_r() * similarity_s() * inverse(similarity_r()) == q);
}

TEST_CASE("X diagonals") {
  const auto ev = build_transfer(1, 3);
  CHECK(ev.X_P(kPlus, kPlus) == Rational(-1, 16));
  for (const Rational t : {Rational(3), Rational(-4, 3), Rational(11, 2)}) {
    const auto e = build_transfer(Rational(5, 2), t);
    CHECK(e.X_E(kBoth, kBoth) == -1 / (4 * (t - 1) * (t - 1)));
  }
}

TEST_CASE("X diagonals agree with local decompositions of each gadget") {
  for (const Rational k : {Rational(1), Rational(2), Rational(2, 5)})
    for (const Rational t : {Rational(3), Rational(-1, 2)}) {
      const auto ev = build_transfer(k, t);
      for (auto kind : {ModuleKind::P, ModuleKind::C, ModuleKind::E}) {
        const auto expected = gadget_state_weights(kind, k, t - 1);
        const auto& x = ev.X(kind);
        for (std::size_t s = 0; s < 4; ++s) {
          CHECK(x(s, s) == expected[s]);
          for (std::size_t r = 0; r < 4; ++r)
            if (r != s) CHECK(x(r, s) == 0);
        }
      }
    }
}

TEST_CASE("build_transfer preconditions") {
  CHECK_THROWS_AS(build_transfer(1, 1), PoleError);
  CHECK_THROWS_AS(build_transfer(0, 3), ParameterError);
  CHECK_THROWS_AS(build_transfer(-2, 3), ParameterError);
}

TEST_CASE("Y blocks are the upper-left blocks and the rest vanishes") {
  const auto ev = build_transfer(Rational(7, 3), Rational(9, 4));
  for (auto kind : {ModuleKind::P, ModuleKind::C, ModuleKind::E}) {
    const RationalMatrix full = ev.S * ev.R_inv * ev.X(kind) * ev.R;
    CHECK(upper_left(full) == ev.Y(kind));
    for (std::size_t i = 2; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(full(i, j) == 0);
  }
}

TEST_CASE("printed Y blocks against the derived ones") {
  for (const Rational k : {Rational(1), Rational(3), Rational(2, 7)})
    for (const Rational t : {Rational(3), Rational(5), Rational(-2, 3)}) {
      const auto ev = build_transfer(k, t);
      const Rational u = t - 1;
      CHECK(ev.Y_E == printed_Y_E(u));
      CHECK(ev.Y_C == printed_Y_C(k, u, -1));
      CHECK_FALSE(ev.Y_C == printed_Y_C(k, u, +1));
      CHECK(ev.Y_P(0, 1) == printed_Y_P(k, u)(0, 1));
      CHECK(ev.Y_P(1, 0) == printed_Y_P(k, u)(1, 0));
      CHECK(ev.Y_P(0, 0) == printed_Y_P(k, u)(0, 0));
      // The printed bottom-right entry repeats the top-left one; the derived
      // block has a different entry there.
      CHECK_FALSE(ev.Y_P(1, 1) == printed_Y_P(k, u)(1, 1));
      CHECK(ev.Y_P(1, 1) == corrected_Y_P_bottom_right(k, u));
    }
  const auto ev = build_transfer(1, 3);
  CHECK(ev.Y_C == RationalMatrix{{Rational(77, 64), Rational(-41, 32)}, {Rational(41, 128), Rational(-21, 64)}});
}

TEST_CASE("short_part") {
  const Polynomial eee = short_part(parse_word("EEE"), 1);
  CHECK(eee == Polynomial::shifted_power(1, 3) - Rational(3, 4) * Polynomial::shifted_power(1, 1));
  const auto ev = build_transfer(1, 3);
  const RationalMatrix y3 = ev.Y_E * ev.Y_E * ev.Y_E;
  CHECK(eee.evaluate(Rational(3)) == (y3(0, 0) + y3(1, 1)) * 8);

  CHECK(short_part_via_Y(parse_word("EEE"), 1) == eee);
  CHECK(short_part_via_Y(parse_word("PCE"), 2) == short_part(parse_word("PCE"), 2));

  const auto e4 = build_transfer(1, 4);
  CHECK(reduced_trace(parse_word("PPP"), e4) == transfer_trace(parse_word("PPP"), e4));
}

TEST_CASE("short_part symmetries") {
  for (const char* s : {"PCE", "PPCE", "CCEPE", "PCCPEC"}) {
    const Word w = parse_word(s);
    const Rational k(3, 2);
    const Polynomial p = short_part(w, k);
    CHECK(p == short_part(toggle(w), k));
    CHECK(p == short_part(w.rotated(1), k));
    CHECK(p == short_part(w.reversed(), k));
  }
}

TEST_CASE("charpoly_via_transfer") {
  CHECK(charpoly_via_transfer(parse_word("EEE"), 1) == Polynomial{0, Rational(9, 4), -3, 1});
  const Polynomial left = charpoly_via_transfer(parse_word("PPCCPPPC"), 1);
  CHECK(left == charpoly_exact(assemble_ring(parse_word("PPCCPPPC"), 1).graph));
  CHECK(charpoly_via_transfer(parse_word("CCPPCCCP"), 1) == left);
}

TEST_CASE("short part equals the exact charpoly minus the long part and the oracle's short part") {
  for (const char* s : {"PCE", "CCP", "EPCC"}) {
    const Word w = parse_word(s);
    const Rational k = 2;
    const RingGraph ring = assemble_ring(w, k);
    const Polynomial sp = short_part(w, k);
    CHECK(sp == charpoly_exact(ring.graph) - long_part_closed_form(w.tau(), w.ell(), w.m(), k));
    CHECK(sp == analyze_decompositions(ring).short_part);
  }
}

TEST_CASE("U conjugation") {
  for (const auto& [k, t] : std::vector<std::pair<Rational, Rational>>{{1, 3}, {Rational(5, 2), -2}}) {
    const auto rep = verify_U_conjugation(k, t);
    CHECK(rep.identities_hold());
    CHECK(rep.intertwiner_invertible);
    CHECK(rep.warning.empty());
    CHECK(rep.checks.size() >= 3);
  }
  const auto at2 = check_u_conjugation(1, 2);
  CHECK_FALSE(at2.intertwiner_invertible);
  CHECK(at2.warning.find("InvertibilityWarning") != std::string::npos);
  CHECK_THROWS_AS(check_u_conjugation(1, 1), PoleError);

  const Rational u(4, 3);
  const auto U = toggle_intertwiner(u);
  CHECK(U(0, 0) * U(1, 1) - U(0, 1) * U(1, 0) == 144 * u * u * (1 - u * u));
}
