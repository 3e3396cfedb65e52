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

#include "srs/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace srs {

namespace {

double effective_tol(double tol) { return tol > 0.0 ? tol : kRankTolerance; }

// Phase convention: rotate each column so its first nonzero entry is real
// positive. Keeps bases reproducible across runs and platforms.
void normalize_column_phases(ComplexMatrix& B) {
    for (Eigen::Index c = 0; c < B.cols(); ++c) {
        const double col_scale = B.col(c).cwiseAbs().maxCoeff();
        if (col_scale <= 0.0) continue;
        for (Eigen::Index r = 0; r < B.rows(); ++r) {
            const Complex v = B(r, c);
            if (std::abs(v) > 1e-12 * col_scale) {
                B.col(c) *= std::conj(v) / std::abs(v);
                break;
            }
        }
    }
}

}  // namespace

ComplexMatrix null_space_basis(const ComplexMatrix& A, double tol) {
    if (A.rows() < 1 || A.cols() < 1) {
        throw std::invalid_argument("null_space_basis: empty matrix");
    }
    if (!A.allFinite()) {
        throw std::invalid_argument("null_space_basis: non-finite entries");
    }
    const double rel_tol = effective_tol(tol);

    Eigen::JacobiSVD<ComplexMatrix> svd(A, Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();
    const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
    const double threshold = rel_tol * sigma_max;

    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > threshold) ++rank;
    }

    const Eigen::Index n = A.cols();
    const Eigen::Index nullity = n - rank;
    ComplexMatrix basis(n, nullity);
    // V columns carry descending singular values; walking the tail backwards
    // yields ascending order, with the implicit zero directions (cols beyond
    // min(m, n)) first.
    for (Eigen::Index k = 0; k < nullity; ++k) {
        basis.col(k) = svd.matrixV().col(n - 1 - k);
    }
    normalize_column_phases(basis);
    return basis;
}

int matrix_rank(const ComplexMatrix& A, double tol) {
    if (A.rows() < 1 || A.cols() < 1) return 0;
    Eigen::JacobiSVD<ComplexMatrix> svd(A);
    const Eigen::VectorXd sv = svd.singularValues();
    const double threshold = effective_tol(tol) * (sv.size() > 0 ? sv(0) : 0.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > threshold) ++rank;
    }
    return rank;
}

ComplexMatrix least_squares_solve(const ComplexMatrix& A, const ComplexMatrix& B) {
    if (A.rows() != B.rows()) {
        throw std::invalid_argument("least_squares_solve: row mismatch");
    }
    // Complete orthogonal decomposition yields the minimum-norm minimizer.
    Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(A);
    return cod.solve(B);
}

double logdet_capacity(const ComplexMatrix& S, const ComplexMatrix& T) {
    if (S.rows() != S.cols() || T.rows() != T.cols() || S.rows() != T.rows()) {
        throw std::invalid_argument("logdet_capacity: size mismatch");
    }
    const auto check_hermitian_psd = [](const ComplexMatrix& X, const char* name) {
        const double scale = std::max(1.0, X.cwiseAbs().maxCoeff());
        if ((X - X.adjoint()).cwiseAbs().maxCoeff() > 1e-8 * scale) {
            throw std::invalid_argument(std::string("logdet_capacity: ") + name +
                                        " is not Hermitian");
        }
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(X, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-10 * scale) {
            throw std::invalid_argument(std::string("logdet_capacity: ") + name +
                                        " is indefinite");
        }
    };
    check_hermitian_psd(S, "S");
    check_hermitian_psd(T, "T");

    const Eigen::Index n = S.rows();
    const ComplexMatrix Sh = 0.5 * (S + S.adjoint());
    const ComplexMatrix Th = 0.5 * (T + T.adjoint());
    const ComplexMatrix I = ComplexMatrix::Identity(n, n);

    const auto logdet_chol = [](const ComplexMatrix& X) {
        Eigen::LLT<ComplexMatrix> llt(X);
        if (llt.info() != Eigen::Success) {
            throw std::invalid_argument("logdet_capacity: Cholesky failed (input not PD)");
        }
        double acc = 0.0;
        const auto& L = llt.matrixLLT();
        for (Eigen::Index i = 0; i < X.rows(); ++i) {
            acc += 2.0 * std::log(std::real(L(i, i)));
        }
        return acc;
    };

    const double nats = logdet_chol(Sh + Th + I) - logdet_chol(Th + I);
    return std::max(0.0, nats / std::log(2.0));
}

RegressionFit fit_rate_slope(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) {
        throw std::invalid_argument("fit_rate_slope: need at least 3 points");
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i].first > points[i - 1].first)) {
            throw std::invalid_argument("fit_rate_slope: abscissae must be strictly increasing");
        }
    }
    const double n = static_cast<double>(points.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : points) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    RegressionFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0;
    for (const auto& [x, y] : points) {
        const double r = y - (fit.slope * x + fit.intercept);
        ss += r * r;
    }
    fit.residual_rms = std::sqrt(ss / n);
    return fit;
}

}  // namespace srs
