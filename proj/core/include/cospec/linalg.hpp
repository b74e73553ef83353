#pragma once

#include "cospec/graph.hpp"
#include "cospec/matrix.hpp"
#include "cospec/polynomial.hpp"

#include <span>
#include <utility>
#include <vector>

namespace cospec {

// Gaussian elimination over the rationals. The pivot in each column is the
// nonzero entry with the smallest combined numerator/denominator bit length.
Rational determinant_gauss(Matrix<Rational> m);

// Fraction-free Bareiss elimination on an integer matrix.
Integer determinant_bareiss(Matrix<Integer> m);

// Clears denominators row by row and runs Bareiss. Agrees exactly with
// determinant_gauss.
Rational determinant(const Matrix<Rational>& m);

// Gauss-Jordan inverse over the rationals. Throws ShapeError when m is
// singular or not square.
Matrix<Rational> inverse(Matrix<Rational> m);

struct InterpolationPoint {
  Rational t;
  Rational value;
};

// Unique polynomial of degree <= degree_bound through the points (Newton
// divided differences). Points beyond degree_bound + 1 are used as
// consistency checks. Throws InterpolationError on too few points,
// duplicate abscissae or an inconsistent overdetermined system.
Polynomial interpolate(std::span<const InterpolationPoint> points, std::size_t degree_bound);

// det(tI - L), evaluated as det((t-1)I + D^{-1}A) at t = 2, 3, ..., n+2
// and interpolated. Monic of degree n. Throws DegreeError on isolated
// vertices.
Polynomial charpoly_exact(const WeightedGraph& g);

// det(tI - D^{-1}A), computed the same way.
Polynomial charpoly_random_walk(const WeightedGraph& g);

struct JacobiOptions {
  int max_sweeps = 100;
  double tolerance = 1e-13;  // off-diagonal Frobenius norm
};

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
// Throws NumericalError if the iteration cap is reached.
std::vector<double> symmetric_eigenvalues(Matrix<double> a, const JacobiOptions& opts = {});

// Spectrum of the normalized Laplacian, ascending.
std::vector<double> eigenvalues_numeric(const WeightedGraph& g, const JacobiOptions& opts = {});

// max_i |a_i - b_i| for equally sized sorted spectra; +inf on size mismatch.
double spectrum_distance(std::span<const double> a, std::span<const double> b);

}  // namespace cospec
