#include "cospec/transfer.hpp"

#include "cospec/decomposition.hpp"
#include "cospec/errors.hpp"
#include "cospec/linalg.hpp"

#include <sstream>

namespace cospec {

RationalMatrix transition_matrix() {
  return RationalMatrix{{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 0, 1, 0}, {1, 0, 1, 0}};
}

RationalMatrix similarity_r() {
  const Rational half(1, 2);
  return RationalMatrix{{1, -1, 1, 1}, {1, -1, 0, 0}, {half, 1, 0, -1}, {half, 1, -2, 0}};
}

RationalMatrix similarity_s() {
  return RationalMatrix{{3, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
}

RationalMatrix local_weight_matrix(ModuleKind kind, const Rational& k, const Rational& u) {
  if (u == 0) throw PoleError("local weights have a pole at t = 1");
  const Rational u2 = u * u;
  const Rational kp1 = k + 1;
  RationalMatrix x(4, 4);
  switch (kind) {
    case ModuleKind::P: {
      const Rational two_kp1 = 2 * kp1;
      x(kNone, kNone) = 1;
      x(kPlus, kPlus) = -k / (u2 * two_kp1);
      x(kMinus, kMinus) = x(kPlus, kPlus);
      x(kBoth, kBoth) = (k * k - u2) / (u2 * u2 * two_kp1 * two_kp1);
      break;
    }
    case ModuleKind::C:
      x(kNone, kNone) = 1 - k * k / (u2 * kp1 * kp1);
      x(kPlus, kPlus) = -k / (2 * u2 * kp1 * kp1);
      x(kMinus, kMinus) = x(kPlus, kPlus);
      x(kBoth, kBoth) = -1 / (4 * u2 * kp1 * kp1);
      break;
    case ModuleKind::E:
      x(kNone, kNone) = 1;
      x(kBoth, kBoth) = -1 / (4 * u2);
      break;
  }
  return x;
}

RationalMatrix toggle_intertwiner(const Rational& u) {
  const Rational u2 = u * u;
  return RationalMatrix{{20 * u2 - 2, -32 * u2 - 4}, {8 * u2 + 1, -20 * u2 + 2}};
}

const RationalMatrix& TransferEvaluation::X(ModuleKind kind) const {
  switch (kind) {
    case ModuleKind::P: return X_P;
    case ModuleKind::C: return X_C;
    case ModuleKind::E: break;
  }
  return X_E;
}

const RationalMatrix& TransferEvaluation::Y(ModuleKind kind) const {
  switch (kind) {
    case ModuleKind::P: return Y_P;
    case ModuleKind::C: return Y_C;
    case ModuleKind::E: break;
  }
  return Y_E;
}

std::string format_matrix(const RationalMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << to_pretty(m(i, j));
    out << "]";
  }
  out << "]";
  return out.str();
}

namespace {

void check_point(const Rational& k, const Rational& t) {
  if (k <= 0) throw ParameterError("k must be positive, got " + to_pretty(k));
  if (t == 1) throw PoleError("t = 1 is a pole of the transfer weights");
}

RationalMatrix reduced_block(const TransferEvaluation& ev, const RationalMatrix& x,
                             const char* name) {
  const RationalMatrix full = ev.S * ev.R_inv * x * ev.R;
  const RationalMatrix lower_right = full.block(2, 2, 2, 2);
  if (!lower_right.is_zero())
    throw IdentityError(std::string("lower-right block of S R^-1 ") + name + " R is not zero at t = " +
                        to_pretty(ev.t) + ": " + format_matrix(full));
  return full.block(0, 0, 2, 2);
}

}  // namespace

TransferEvaluation build_transfer(const Rational& k, const Rational& t) {
  check_point(k, t);
  TransferEvaluation ev;
  ev.k = k;
  ev.t = t;
  ev.u = t - 1;
  ev.Q = transition_matrix();
  ev.R = similarity_r();
  ev.S = similarity_s();
  ev.R_inv = inverse(ev.R);
  const RationalMatrix rsr = ev.R * ev.S * ev.R_inv;
  if (!(rsr == ev.Q))
    throw IdentityError("Q != R S R^-1; R S R^-1 = " + format_matrix(rsr));
  ev.X_P = local_weight_matrix(ModuleKind::P, k, ev.u);
  ev.X_C = local_weight_matrix(ModuleKind::C, k, ev.u);
  ev.X_E = local_weight_matrix(ModuleKind::E, k, ev.u);
  ev.Y_P = reduced_block(ev, ev.X_P, "X_P");
  ev.Y_C = reduced_block(ev, ev.X_C, "X_C");
  ev.Y_E = reduced_block(ev, ev.X_E, "X_E");
  ev.U = toggle_intertwiner(ev.u);
  return ev;
}

Rational transfer_trace(const Word& w, const TransferEvaluation& ev) {
  RationalMatrix prod = RationalMatrix::identity(4);
  for (auto letter : w.letters()) prod = prod * ev.Q * ev.X(letter);
  return prod.trace();
}

Rational reduced_trace(const Word& w, const TransferEvaluation& ev) {
  RationalMatrix prod = RationalMatrix::identity(2);
  for (auto letter : w.letters()) prod = prod * ev.Y(letter);
  return prod.trace();
}

namespace {

std::size_t vertex_count(const Word& w) { return w.tau() + 2 * (w.ell() + w.m()); }

template <class Trace>
Polynomial interpolate_short_part(const Word& w, const Rational& k, Trace trace) {
  if (k <= 0) throw ParameterError("k must be positive, got " + to_pretty(k));
  const std::size_t n = vertex_count(w);
  std::vector<InterpolationPoint> points;
  points.reserve(n + 2);
  // t = 3 .. n+4: n+1 points determine the polynomial, the last one checks it.
  for (std::size_t p = 0; p < n + 2; ++p) {
    const Rational t = 3 + static_cast<long>(p);
    const TransferEvaluation ev = build_transfer(k, t);
    points.push_back({t, rational_pow(ev.u, unsigned(n)) * trace(w, ev)});
  }
  return interpolate(points, n);
}

}  // namespace

Polynomial short_part(const Word& w, const Rational& k) {
  return interpolate_short_part(w, k, transfer_trace);
}

Polynomial short_part_via_Y(const Word& w, const Rational& k) {
  return interpolate_short_part(w, k, reduced_trace);
}

Polynomial charpoly_via_transfer(const Word& w, const Rational& k) {
  return long_part_closed_form(w.tau(), w.ell(), w.m(), k) + short_part(w, k);
}

bool ConjugationReport::identities_hold() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

ConjugationReport check_u_conjugation(const Rational& k, const Rational& t) {
  const TransferEvaluation ev = build_transfer(k, t);
  ConjugationReport report;
  report.k = k;
  report.t = t;
  const RationalMatrix& U = ev.U;
  report.checks.push_back({"U*Y_P = Y_C*U", U * ev.Y_P == ev.Y_C * U});
  report.checks.push_back({"U*Y_C = Y_P*U", U * ev.Y_C == ev.Y_P * U});
  report.checks.push_back({"U*Y_E = Y_E*U", U * ev.Y_E == ev.Y_E * U});
  const Rational det = U(0, 0) * U(1, 1) - U(0, 1) * U(1, 0);
  report.intertwiner_invertible = det != 0;
  if (!report.intertwiner_invertible)
    report.warning = "InvertibilityWarning: U is singular at t = " + to_pretty(t) +
                     " (excluded points are t = 0, 1, 2)";
  return report;
}

ConjugationReport verify_U_conjugation(const Rational& k, const Rational& t) {
  ConjugationReport report = check_u_conjugation(k, t);
  for (const auto& c : report.checks)
    if (!c.passed) {
      const TransferEvaluation ev = build_transfer(k, t);
      throw IdentityError(c.name + " fails at k = " + to_pretty(k) + ", t = " + to_pretty(t) +
                          "; U = " + format_matrix(ev.U) + ", Y_P = " + format_matrix(ev.Y_P) +
                          ", Y_C = " + format_matrix(ev.Y_C) + ", Y_E = " + format_matrix(ev.Y_E));
    }
  return report;
}

}  // namespace cospec
