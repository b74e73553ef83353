#pragma once

#include "cospec/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace cospec {

// Dense univariate polynomial in t with exact rational coefficients.
// coeffs()[i] is the coefficient of t^i. Trailing zeros are always
// stripped, so the zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, unsigned degree);
  // (t - a)^p
  static Polynomial shifted_power(const Rational& a, unsigned p);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  // Coefficient of t^i; zero past the degree.
  Rational coeff(std::size_t i) const;

  Rational evaluate(const Rational& t) const;
  double evaluate(double t) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // "t^3 - 3*t^2 + 9/4*t"
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

// Exact coefficientwise equality.
inline bool poly_equal(const Polynomial& p, const Polynomial& q) { return p == q; }

// Coefficients as "p/q" strings, constant term first.
std::vector<std::string> to_rational_strings(const Polynomial& p);

}  // namespace cospec
