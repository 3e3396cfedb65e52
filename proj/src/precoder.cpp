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

#include "srs/precoder.hpp"

#include <algorithm>
#include <cmath>

namespace srs {

namespace {

constexpr double kResidualLimit = 1e-8;

void check_shapes(const CsitView& csit, const ChannelRealization& real) {
    if (csit.H1_hat.rows() != real.H1.rows() || csit.H1_hat.cols() != real.H1.cols() ||
        csit.H2_hat.rows() != real.H2.rows() || csit.H2_hat.cols() != real.H2.cols()) {
        throw std::invalid_argument("precoder design: CSIT/realization shape mismatch");
    }
    if (real.G1.rows() != real.H1.rows() || real.G2.rows() != real.H2.rows()) {
        throw std::invalid_argument("precoder design: G/H row mismatch");
    }
}

// Scales each aligned pair column so the transmit-side column has unit norm;
// the jammer column takes the reciprocal factor, preserving
// Hhat * Pc = G * Wc exactly.
void normalize_aligned_pair(ComplexMatrix& Pc, ComplexMatrix& Wc) {
    for (Eigen::Index c = 0; c < Pc.cols(); ++c) {
        const double s = Pc.col(c).norm();
        if (s < 1e-14) {
            throw InfeasibleDesign("aligned common precoder column is numerically zero");
        }
        Pc.col(c) /= s;
        Wc.col(c) /= s;
    }
}

double relative_nulling_residual(const ComplexMatrix& A, const ComplexMatrix& B) {
    const double denom = A.norm() * B.norm();
    if (denom <= 0.0) return 0.0;
    return (A * B).norm() / denom;
}

}  // namespace

Regime regime_for(int tx_antennas, int rx_antennas) {
    if (tx_antennas < 1 || rx_antennas < 1) {
        throw std::invalid_argument("regime_for: antenna counts must be >= 1");
    }
    if (tx_antennas <= rx_antennas) return Regime::LowTx;
    if (tx_antennas <= 2 * rx_antennas) return Regime::MidTx;
    return Regime::HighTx;
}

PrecoderSet design_low_tx(const CsitView& csit, const ChannelRealization& real) {
    check_shapes(csit, real);
    const int N = static_cast<int>(real.H1.rows());
    const int M = static_cast<int>(real.H1.cols());
    const int J = static_cast<int>(real.G1.cols());
    if (M > N) throw std::invalid_argument("design_low_tx: requires M <= N");
    if (J < 2 * N) throw std::invalid_argument("design_low_tx: requires J >= 2N");

    PrecoderSet ps;
    ps.common_dim = M;
    ps.private_dim = 0;
    ps.P1 = ComplexMatrix::Zero(M, 0);
    ps.P2 = ComplexMatrix::Zero(M, 0);

    // For user i, one homogeneous system over z = (w, p):
    //   G_j * w = 0            (nulling at the other receiver)
    //   G_i * w - Hhat_i * p = 0   (alignment at the own receiver)
    // Its null space has dimension >= J + M - 2N >= M for J >= 2N, so M
    // independent solutions exist for generic channels.
    const auto design_user = [&](const ComplexMatrix& G_own, const ComplexMatrix& G_other,
                                 const ComplexMatrix& H_hat_own, ComplexMatrix& Wc,
                                 ComplexMatrix& Pc) {
        ComplexMatrix stacked(2 * N, J + M);
        stacked.setZero();
        stacked.topLeftCorner(N, J) = G_other;
        stacked.bottomLeftCorner(N, J) = G_own;
        stacked.bottomRightCorner(N, M) = -H_hat_own;

        const ComplexMatrix basis = null_space_basis(stacked);
        if (basis.cols() < M) {
            throw InfeasibleDesign("stacked nulling/alignment null space too small");
        }

        // Pick the M null vectors whose transmit parts are most independent
        // (pivoted QR on the p-block), then keep the original ascending
        // order for determinism.
        const ComplexMatrix p_parts = basis.bottomRows(M);
        Eigen::ColPivHouseholderQR<ComplexMatrix> qr(p_parts);
        if (qr.rank() < M) {
            throw InfeasibleDesign("transmit parts of the joint null space are rank deficient");
        }
        std::vector<Eigen::Index> selected(qr.colsPermutation().indices().data(),
                                           qr.colsPermutation().indices().data() + M);
        std::sort(selected.begin(), selected.end());

        Wc.resize(J, M);
        Pc.resize(M, M);
        for (int k = 0; k < M; ++k) {
            Wc.col(k) = basis.col(selected[k]).head(J);
            Pc.col(k) = basis.col(selected[k]).tail(M);
        }
        if (matrix_rank(Pc) < M) {
            throw InfeasibleDesign("common precoder lost rank after selection");
        }
        normalize_aligned_pair(Pc, Wc);
    };

    design_user(real.G1, real.G2, csit.H1_hat, ps.Wc1, ps.Pc1);
    design_user(real.G2, real.G1, csit.H2_hat, ps.Wc2, ps.Pc2);
    return ps;
}

PrecoderSet design_mid_tx(const CsitView& csit, const ChannelRealization& real) {
    check_shapes(csit, real);
    const int N = static_cast<int>(real.H1.rows());
    const int M = static_cast<int>(real.H1.cols());
    const int J = static_cast<int>(real.G1.cols());
    if (!(M > N && M <= 2 * N)) throw std::invalid_argument("design_mid_tx: requires N < M <= 2N");
    if (J < 2 * N) throw std::invalid_argument("design_mid_tx: requires J >= 2N");

    if (matrix_rank(csit.H1_hat) < N || matrix_rank(csit.H2_hat) < N) {
        throw InfeasibleDesign("estimated channel is rank deficient");
    }
    if (matrix_rank(real.G1) < N || matrix_rank(real.G2) < N) {
        throw InfeasibleDesign("jammer channel is rank deficient");
    }

    PrecoderSet ps;
    ps.common_dim = N;
    ps.private_dim = M - N;

    // Private streams: zero-forced through the estimated cross channel.
    ps.P1 = null_space_basis(csit.H2_hat);
    ps.P2 = null_space_basis(csit.H1_hat);
    if (ps.P1.cols() != M - N || ps.P2.cols() != M - N) {
        throw InfeasibleDesign("estimated channel null space has unexpected dimension");
    }

    // Jammer precoders: nulled at the other receiver.
    const ComplexMatrix null_G2 = null_space_basis(real.G2);
    const ComplexMatrix null_G1 = null_space_basis(real.G1);
    if (null_G2.cols() < N || null_G1.cols() < N) {
        throw InfeasibleDesign("jammer null space has dimension below N");
    }
    ps.Wc1 = null_G2.leftCols(N);
    ps.Wc2 = null_G1.leftCols(N);

    // Alignment: the estimate has full row rank N <= M, so the least-squares
    // solve is exact.
    ps.Pc1 = least_squares_solve(csit.H1_hat, real.G1 * ps.Wc1);
    ps.Pc2 = least_squares_solve(csit.H2_hat, real.G2 * ps.Wc2);
    const double r1 = (csit.H1_hat * ps.Pc1 - real.G1 * ps.Wc1).norm() / (real.G1 * ps.Wc1).norm();
    const double r2 = (csit.H2_hat * ps.Pc2 - real.G2 * ps.Wc2).norm() / (real.G2 * ps.Wc2).norm();
    if (!(r1 <= kResidualLimit) || !(r2 <= kResidualLimit)) {
        throw InfeasibleDesign("alignment solve did not reach an exact solution");
    }

    normalize_aligned_pair(ps.Pc1, ps.Wc1);
    normalize_aligned_pair(ps.Pc2, ps.Wc2);
    return ps;
}

PrecoderSet design_high_tx(const CsitView& csit, const ChannelRealization& real) {
    check_shapes(csit, real);
    const int N = static_cast<int>(real.H1.rows());
    const int M = static_cast<int>(real.H1.cols());
    if (M <= 2 * N) throw std::invalid_argument("design_high_tx: requires M > 2N");
    const int Mt = 2 * N;

    CsitView csit_t;
    csit_t.power_level = csit.power_level;
    csit_t.H1_hat = csit.H1_hat.leftCols(Mt);
    csit_t.H2_hat = csit.H2_hat.leftCols(Mt);
    csit_t.H1_err = csit.H1_err.leftCols(Mt);
    csit_t.H2_err = csit.H2_err.leftCols(Mt);

    ChannelRealization real_t;
    real_t.H1 = real.H1.leftCols(Mt);
    real_t.H2 = real.H2.leftCols(Mt);
    real_t.G1 = real.G1;
    real_t.G2 = real.G2;

    PrecoderSet truncated = design_mid_tx(csit_t, real_t);

    const auto embed = [&](const ComplexMatrix& X) {
        ComplexMatrix full = ComplexMatrix::Zero(M, X.cols());
        full.topRows(Mt) = X;
        return full;
    };
    PrecoderSet ps;
    ps.common_dim = truncated.common_dim;
    ps.private_dim = truncated.private_dim;
    ps.Pc1 = embed(truncated.Pc1);
    ps.Pc2 = embed(truncated.Pc2);
    ps.P1 = embed(truncated.P1);
    ps.P2 = embed(truncated.P2);
    ps.Wc1 = truncated.Wc1;
    ps.Wc2 = truncated.Wc2;
    return ps;
}

PrecoderSet design_srs(const CsitView& csit, const ChannelRealization& real) {
    switch (regime_for(static_cast<int>(real.H1.cols()), static_cast<int>(real.H1.rows()))) {
        case Regime::LowTx:
            return design_low_tx(csit, real);
        case Regime::MidTx:
            return design_mid_tx(csit, real);
        case Regime::HighTx:
            return design_high_tx(csit, real);
    }
    throw std::logic_error("design_srs: unreachable");
}

VerificationReport verify(const PrecoderSet& ps, const CsitView& csit,
                          const ChannelRealization& real) {
    VerificationReport report;

    report.nulling_residuals.push_back(
        {"G1 * Wc2 = 0", relative_nulling_residual(real.G1, ps.Wc2)});
    report.nulling_residuals.push_back(
        {"G2 * Wc1 = 0", relative_nulling_residual(real.G2, ps.Wc1)});
    if (ps.private_dim > 0) {
        report.nulling_residuals.push_back(
            {"Hhat2 * P1 = 0", relative_nulling_residual(csit.H2_hat, ps.P1)});
        report.nulling_residuals.push_back(
            {"Hhat1 * P2 = 0", relative_nulling_residual(csit.H1_hat, ps.P2)});
    }

    const auto alignment_residual = [&](const ComplexMatrix& H_hat, const ComplexMatrix& Pc,
                                        const ComplexMatrix& G, const ComplexMatrix& Wc) {
        const ComplexMatrix target = G * Wc;
        const double denom = target.norm();
        if (denom <= 0.0) {
            report.degenerate = true;
            return 0.0;
        }
        return (H_hat * Pc - target).norm() / denom;
    };
    report.alignment_residuals.push_back(
        {"Hhat1 * Pc1 = G1 * Wc1", alignment_residual(csit.H1_hat, ps.Pc1, real.G1, ps.Wc1)});
    report.alignment_residuals.push_back(
        {"Hhat2 * Pc2 = G2 * Wc2", alignment_residual(csit.H2_hat, ps.Pc2, real.G2, ps.Wc2)});

    double max_res = 0.0;
    for (const auto& r : report.nulling_residuals) max_res = std::max(max_res, r.value);
    for (const auto& r : report.alignment_residuals) max_res = std::max(max_res, r.value);
    report.max_residual = max_res;
    report.rank_Pc1 = ps.Pc1.cols() > 0 ? matrix_rank(ps.Pc1) : 0;
    report.rank_Pc2 = ps.Pc2.cols() > 0 ? matrix_rank(ps.Pc2) : 0;
    return report;
}

}  // namespace srs
