// Copyright 2026 the srsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

namespace srs {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Relative singular-value threshold used for numerical rank / null-space
/// decisions throughout the library: directions with singular value below
/// kRankTolerance * sigma_max count as null.
inline constexpr double kRankTolerance = 1e-10;

/// Result of an ordinary least-squares line fit y = slope * x + intercept.
struct RegressionFit {
    double slope = 0.0;         ///< bits per log2-power unit
    double intercept = 0.0;     ///< bits
    double residual_rms = 0.0;  ///< RMS of fit residuals, >= 0
};

/// Orthonormal basis of the numerical null space of A.
///
/// Columns are ordered by ascending singular value of A and each column is
/// phase-normalized so that its first nonzero entry is real positive, making
/// the basis deterministic for a given A. Returns a matrix with zero columns
/// when A has full column rank (a valid result, not an error).
///
/// tol is the relative singular-value threshold; tol <= 0 selects the
/// library default kRankTolerance.
ComplexMatrix null_space_basis(const ComplexMatrix& A, double tol = -1.0);

/// Numerical rank of A at relative threshold tol (default kRankTolerance).
int matrix_rank(const ComplexMatrix& A, double tol = -1.0);

/// Minimum-norm least-squares solution X of A*X = B.
///
/// When an exact solution exists the relative residual is at machine level;
/// among all minimizers the one with the smallest Frobenius norm is returned
/// (deterministic).
ComplexMatrix least_squares_solve(const ComplexMatrix& A, const ComplexMatrix& B);

/// log2 det(I + S * (T + I)^{-1}) in bits, for Hermitian PSD S and T.
///
/// Evaluated as logdet(S + T + I) - logdet(T + I) via Cholesky
/// factorizations, which avoids forming the inverse or any large product.
/// Throws std::invalid_argument on non-Hermitian or indefinite input.
double logdet_capacity(const ComplexMatrix& S, const ComplexMatrix& T);

/// Ordinary least-squares line fit of rate against log2(power).
///
/// points are (log2_power, rate_bits) pairs; requires at least 3 points with
/// strictly increasing abscissae (throws std::invalid_argument otherwise).
RegressionFit fit_rate_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace srs
