#include "cospec/linalg.hpp"

#include "cospec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cospec {

namespace {

std::size_t bit_size(const Rational& r) {
  return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

void require_square(std::size_t rows, std::size_t cols) {
  if (rows != cols) throw ShapeError("determinant of a non-square matrix");
}

}  // namespace

Rational determinant_gauss(Matrix<Rational> m) {
  require_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = col; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const std::size_t size = bit_size(m(r, col));
      if (size < best) {
        best = size;
        pivot = r;
      }
    }
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    const Rational p = m(col, col);
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / p;
      for (std::size_t j = col + 1; j < n; ++j) m(r, j) -= factor * m(col, j);
      m(r, col) = 0;
    }
  }
  return det;
}

Integer determinant_bareiss(Matrix<Integer> m) {
  require_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    const Integer& pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // m(i,j) = (m(i,j) * pivot - m(i,k) * m(k,j)) / prev, exact
        mpz_mul(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), pivot.get_mpz_t());
        mpz_mul(tmp.get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
        mpz_sub(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), tmp.get_mpz_t());
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = pivot;
  }
  return sign * m(n - 1, n - 1);
}

Rational determinant(const Matrix<Rational>& m) {
  require_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  Matrix<Integer> ints(n, n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != 0) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j)
      ints(i, j) = m(i, j).get_num() * (row_lcm / m(i, j).get_den());
    scale *= row_lcm;
  }
  Rational det(determinant_bareiss(std::move(ints)), scale);
  det.canonicalize();
  return det;
}

Matrix<Rational> inverse(Matrix<Rational> m) {
  require_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  Matrix<Rational> inv = Matrix<Rational>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) throw ShapeError("matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(pivot, j), m(col, j));
      std::swap(inv(pivot, j), inv(col, j));
    }
    const Rational p = m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Polynomial interpolate(std::span<const InterpolationPoint> points, std::size_t degree_bound) {
  const std::size_t need = degree_bound + 1;
  if (points.size() < need)
    throw InterpolationError("need " + std::to_string(need) + " points, got " +
                             std::to_string(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].t == points[j].t)
        throw InterpolationError("duplicate abscissa t = " + to_pretty(points[i].t));

  // Newton divided differences on the first degree_bound + 1 points.
  std::vector<Rational> dd(need);
  for (std::size_t i = 0; i < need; ++i) dd[i] = points[i].value;
  for (std::size_t level = 1; level < need; ++level)
    for (std::size_t i = need - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].t - points[i - level].t);

  // Expand the Newton form by Horner's scheme.
  Polynomial result = Polynomial::constant(dd[need - 1]);
  for (std::size_t i = need - 1; i-- > 0;) {
    result = result * Polynomial{-points[i].t, Rational(1)};
    result += Polynomial::constant(dd[i]);
  }

  for (std::size_t i = need; i < points.size(); ++i)
    if (result.evaluate(points[i].t) != points[i].value)
      throw InterpolationError("points are inconsistent with degree bound " +
                               std::to_string(degree_bound));
  return result;
}

namespace {

// Values of det(shift(t) I + sign * D^{-1}A) at t = first, first+1, ...,
// interpolated with degree bound n. shift(t) is t-1 for the Laplacian form
// and t for the random-walk form.
template <class Shift>
Polynomial charpoly_by_evaluation(const WeightedGraph& g, int first_point, int sign, Shift shift) {
  if (g.has_isolated_vertex()) throw DegreeError("graph has an isolated vertex");
  const std::size_t n = g.n();
  // Row i of D^{-1}A scaled by d_i is the weight row; the scale is divided
  // out at the end.
  Rational degree_product = 1;
  for (const auto& d : g.degrees()) degree_product *= d;

  std::vector<InterpolationPoint> points;
  points.reserve(n + 1);
  for (std::size_t p = 0; p <= n; ++p) {
    const Rational t = first_point + static_cast<long>(p);
    const Rational diag = shift(t);
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = diag * g.degree(int(i));
    for (const auto& e : g.edges()) {
      m(e.u, e.v) = sign * e.weight;
      m(e.v, e.u) = sign * e.weight;
    }
    points.push_back({t, determinant(m) / degree_product});
  }
  return interpolate(points, n);
}

}  // namespace

Polynomial charpoly_exact(const WeightedGraph& g) {
  return charpoly_by_evaluation(g, 2, +1, [](const Rational& t) { return Rational(t - 1); });
}

Polynomial charpoly_random_walk(const WeightedGraph& g) {
  return charpoly_by_evaluation(g, 2, -1, [](const Rational& t) { return t; });
}

std::vector<double> symmetric_eigenvalues(Matrix<double> a, const JacobiOptions& opts) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw ShapeError("eigenvalues of a non-square matrix");
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > opts.tolerance) {
    if (sweep++ >= opts.max_sweeps)
      throw NumericalError("Jacobi iteration did not converge after " +
                           std::to_string(opts.max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> eigenvalues_numeric(const WeightedGraph& g, const JacobiOptions& opts) {
  return symmetric_eigenvalues(normalized_laplacian(g), opts);
}

double spectrum_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace cospec
