#pragma once

#include "cospec/matrix.hpp"
#include "cospec/polynomial.hpp"
#include "cospec/word.hpp"

#include <string>
#include <vector>

namespace cospec {

using RationalMatrix = Matrix<Rational>;

// Signed-vertex states indexing the 4x4 transfer matrices.
enum SignedState : std::size_t { kNone = 0, kPlus = 1, kMinus = 2, kBoth = 3 };

// Transition matrix between consecutive modules: a module that uses its
// "-" vertex forbids the next module from using its "+" vertex.
RationalMatrix transition_matrix();
// Q = R S R^{-1}.
RationalMatrix similarity_r();
RationalMatrix similarity_s();

// Diagonal weight matrix of local decompositions for one module kind,
// evaluated at u = t - 1 (u != 0). Each entry already divides out one
// factor of u per covered vertex.
RationalMatrix local_weight_matrix(ModuleKind kind, const Rational& k, const Rational& u);

// The 2x2 toggle-intertwining matrix
//   [[20u^2 - 2, -32u^2 - 4], [8u^2 + 1, -20u^2 + 2]].
RationalMatrix toggle_intertwiner(const Rational& u);

// All transfer matrices at one point (k, t).
struct TransferEvaluation {
  Rational k;
  Rational t;
  Rational u;
  RationalMatrix Q, R, S, R_inv;
  RationalMatrix X_P, X_C, X_E;
  RationalMatrix Y_P, Y_C, Y_E;  // upper-left 2x2 blocks of S R^{-1} X R
  RationalMatrix U;

  const RationalMatrix& X(ModuleKind kind) const;
  const RationalMatrix& Y(ModuleKind kind) const;
};

// Populates every matrix and checks Q = R S R^{-1} and that the lower-right
// 2x2 block of each S R^{-1} X R vanishes. Throws PoleError at t = 1,
// ParameterError for k <= 0 and IdentityError (with a matrix dump) when a
// check fails.
TransferEvaluation build_transfer(const Rational& k, const Rational& t);

// trace(Q X_1 Q X_2 ... Q X_tau) at one point, without the u^n factor.
Rational transfer_trace(const Word& w, const TransferEvaluation& ev);
// trace(Y_1 Y_2 ... Y_tau) at one point.
Rational reduced_trace(const Word& w, const TransferEvaluation& ev);

// u^n trace(Q X_1 ... Q X_tau) as a polynomial in t, with n = |V(G(W))|.
// Evaluated at t = 3, ..., n+3 and interpolated; one extra point t = n+4
// must agree, otherwise InterpolationError.
Polynomial short_part(const Word& w, const Rational& k);
// Same polynomial from the 2x2 blocks.
Polynomial short_part_via_Y(const Word& w, const Rational& k);

// Long part in closed form plus short_part.
Polynomial charpoly_via_transfer(const Word& w, const Rational& k);

struct IdentityCheck {
  std::string name;
  bool passed = false;
};

struct ConjugationReport {
  Rational k;
  Rational t;
  std::vector<IdentityCheck> checks;
  bool intertwiner_invertible = false;
  std::string warning;  // set when t is one of the excluded points 0, 2

  bool identities_hold() const;
};

// Checks U Y_P = Y_C U, U Y_C = Y_P U, U Y_E = Y_E U and invertibility of
// U, reporting each. Throws PoleError at t = 1.
ConjugationReport check_u_conjugation(const Rational& k, const Rational& t);
// As above but throws IdentityError if any identity fails.
ConjugationReport verify_U_conjugation(const Rational& k, const Rational& t);

std::string format_matrix(const RationalMatrix& m);

}  // namespace cospec
