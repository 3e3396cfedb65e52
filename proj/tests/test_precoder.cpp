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

#include "doctest.h"
#include "srs/zf.hpp"

using srs::ComplexMatrix;

namespace {

srs::ScenarioConfig make_config(int M, int N, int J, std::uint64_t seed = 11) {
    srs::ScenarioConfig cfg;
    cfg.tx_antennas = M;
    cfg.rx_antennas = N;
    cfg.jammer_antennas = J;
    cfg.csit_quality = 0.5;
    cfg.snr_grid = {1e6, 1e8, 1e10};
    cfg.trials = 2000;
    cfg.seed = seed;
    return cfg;
}

struct Draw {
    srs::ChannelRealization real;
    srs::CsitView csit;
};

Draw draw(const srs::ScenarioConfig& cfg, int trial, double P = 1e8) {
    Draw d;
    d.real = srs::sample_realization(cfg, trial);
    srs::Rng stream(srs::derive_seed(cfg.seed, {srs::kStreamCsit,
                                                static_cast<std::uint64_t>(trial)}));
    d.csit = srs::split_csit(d.real, cfg.csit_quality, P, stream);
    return d;
}

}  // namespace

TEST_CASE("regime dispatch boundaries") {
    CHECK(srs::regime_for(1, 2) == srs::Regime::LowTx);
    CHECK(srs::regime_for(2, 2) == srs::Regime::LowTx);   // M = N belongs to the low case
    CHECK(srs::regime_for(3, 2) == srs::Regime::MidTx);
    CHECK(srs::regime_for(4, 2) == srs::Regime::MidTx);   // M = 2N belongs to the mid case
    CHECK(srs::regime_for(5, 2) == srs::Regime::HighTx);
    CHECK(srs::regime_for(8, 4) == srs::Regime::MidTx);
}

TEST_CASE("design_low_tx: generic draw satisfies all conditions") {
    const auto cfg = make_config(2, 2, 4);
    const auto d = draw(cfg, 0);
    const auto ps = srs::design_low_tx(d.csit, d.real);
    CHECK(ps.common_dim == 2);
    CHECK(ps.private_dim == 0);
    CHECK(ps.Pc1.rows() == 2);
    CHECK(ps.Pc1.cols() == 2);
    CHECK(ps.Wc1.rows() == 4);

    const auto report = srs::verify(ps, d.csit, d.real);
    CHECK(report.max_residual <= 1e-8);
    CHECK(report.rank_Pc1 == 2);
    CHECK(report.rank_Pc2 == 2);
    for (Eigen::Index c = 0; c < ps.Pc1.cols(); ++c) {
        CHECK(ps.Pc1.col(c).norm() == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("design_low_tx: coordinate jammer null space localizes Wc1") {
    const auto cfg = make_config(2, 2, 4);
    auto d = draw(cfg, 1);
    // G2 = [I | 0] makes null(G2) the last J - N coordinates, so Wc1 (which
    // must be nulled at receiver 2) lives on the last rows only.
    d.real.G2 = ComplexMatrix::Zero(2, 4);
    d.real.G2(0, 0) = 1.0;
    d.real.G2(1, 1) = 1.0;
    const auto ps = srs::design_low_tx(d.csit, d.real);
    CHECK(ps.Wc1.topRows(2).norm() <= 1e-9 * ps.Wc1.norm());
    CHECK(ps.Wc1.bottomRows(2).norm() > 0.0);
}

TEST_CASE("design_low_tx: M = 1 gives single-column precoders") {
    const auto cfg = make_config(1, 2, 4);
    const auto d = draw(cfg, 2);
    const auto ps = srs::design_low_tx(d.csit, d.real);
    CHECK(ps.common_dim == 1);
    CHECK(ps.Pc1.cols() == 1);
    CHECK(ps.Pc2.cols() == 1);
    CHECK(ps.Wc1.cols() == 1);
    CHECK(srs::verify(ps, d.csit, d.real).max_residual <= 1e-8);
}

TEST_CASE("design_mid_tx: M = 3 zero-forces the private stream") {
    const auto cfg = make_config(3, 2, 4);
    const auto d = draw(cfg, 0);
    const auto ps = srs::design_mid_tx(d.csit, d.real);
    CHECK(ps.common_dim == 2);
    CHECK(ps.private_dim == 1);
    CHECK(ps.P1.rows() == 3);
    CHECK(ps.P1.cols() == 1);
    CHECK((d.csit.H2_hat * ps.P1).norm() / d.csit.H2_hat.norm() <= 1e-8);
    CHECK(srs::verify(ps, d.csit, d.real).max_residual <= 1e-8);
}

TEST_CASE("design_mid_tx: M = 4 satisfies all six conditions") {
    const auto cfg = make_config(4, 2, 4);
    const auto d = draw(cfg, 3);
    const auto ps = srs::design_mid_tx(d.csit, d.real);
    CHECK(ps.common_dim == 2);
    CHECK(ps.private_dim == 2);
    const auto report = srs::verify(ps, d.csit, d.real);
    CHECK(report.nulling_residuals.size() == 4);
    CHECK(report.alignment_residuals.size() == 2);
    CHECK(report.max_residual <= 1e-8);
}

TEST_CASE("design_mid_tx: coordinate estimate pins the private direction") {
    const auto cfg = make_config(3, 2, 4);
    auto d = draw(cfg, 4);
    d.csit.H2_hat = ComplexMatrix::Zero(2, 3);
    d.csit.H2_hat(0, 0) = 1.0;
    d.csit.H2_hat(1, 1) = 1.0;
    const auto ps = srs::design_mid_tx(d.csit, d.real);
    REQUIRE(ps.P1.cols() == 1);
    // null([I | 0]) is the third coordinate axis.
    CHECK(std::abs(ps.P1(2, 0)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(ps.P1(0, 0)) <= 1e-10);
    CHECK(std::abs(ps.P1(1, 0)) <= 1e-10);
}

TEST_CASE("design_high_tx: deactivates antennas beyond 2N") {
    const auto cfg = make_config(6, 2, 4);
    const auto d = draw(cfg, 5);
    const auto ps = srs::design_high_tx(d.csit, d.real);
    CHECK(ps.common_dim == 2);
    CHECK(ps.private_dim == 2);
    CHECK(ps.Pc1.rows() == 6);
    CHECK(ps.Pc1.bottomRows(2).norm() == 0.0);
    CHECK(ps.P1.bottomRows(2).norm() == 0.0);
    CHECK(srs::verify(ps, d.csit, d.real).max_residual <= 1e-8);
}

TEST_CASE("design_high_tx: M = 5 degenerates to the M = 4 stream split") {
    const auto cfg = make_config(5, 2, 4);
    const auto d = draw(cfg, 6);
    const auto ps = srs::design_high_tx(d.csit, d.real);
    CHECK(ps.common_dim == 2);
    CHECK(ps.private_dim == 2);
    CHECK(ps.Pc1.bottomRows(1).norm() == 0.0);
}

TEST_CASE("design_srs dispatch matches the per-regime designers") {
    for (int M : {1, 2, 3, 4, 5, 6}) {
        const auto cfg = make_config(M, 2, 4);
        const auto d = draw(cfg, 7);
        const auto ps = srs::design_srs(d.csit, d.real);
        const auto report = srs::verify(ps, d.csit, d.real);
        CHECK(report.max_residual <= 1e-8);
        const int expected_dc = M <= 2 ? M : 2;
        const int expected_dp = M <= 2 ? 0 : std::min(M, 4) - 2;
        CHECK(ps.common_dim == expected_dc);
        CHECK(ps.private_dim == expected_dp);
    }
}

TEST_CASE("verify: residuals across 200 seeded draws per regime") {
    for (int M : {2, 3, 4, 6}) {
        const auto cfg = make_config(M, 2, 4, /*seed=*/1234 + M);
        for (int t = 0; t < 200; ++t) {
            const auto d = draw(cfg, t);
            const auto ps = srs::design_srs(d.csit, d.real);
            const auto report = srs::verify(ps, d.csit, d.real);
            REQUIRE(report.max_residual <= 1e-8);
        }
    }
}

TEST_CASE("designs stay exact when the jammer has more than 2N antennas") {
    for (const auto& [M, J] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}, {2, 7}}) {
        const auto cfg = make_config(M, 2, J, /*seed=*/88 + J);
        for (int t = 0; t < 25; ++t) {
            const auto d = draw(cfg, t);
            const auto ps = srs::design_srs(d.csit, d.real);
            CHECK(ps.Wc1.rows() == J);
            CHECK(srs::verify(ps, d.csit, d.real).max_residual <= 1e-8);
        }
    }
}

TEST_CASE("verify: sensitive to corrupted jammer precoders") {
    const auto cfg = make_config(3, 2, 4);
    const auto d = draw(cfg, 8);
    auto ps = srs::design_mid_tx(d.csit, d.real);
    srs::Rng rng(555);
    for (Eigen::Index r = 0; r < ps.Wc1.rows(); ++r) {
        for (Eigen::Index c = 0; c < ps.Wc1.cols(); ++c) {
            ps.Wc1(r, c) += 1e-2 * rng.cgaussian();
        }
    }
    CHECK(srs::verify(ps, d.csit, d.real).max_residual >= 1e-3);
}

TEST_CASE("verify: all-zero precoders raise the degenerate guard") {
    const auto cfg = make_config(3, 2, 4);
    const auto d = draw(cfg, 9);
    srs::PrecoderSet ps;
    ps.common_dim = 2;
    ps.private_dim = 1;
    ps.Pc1 = ComplexMatrix::Zero(3, 2);
    ps.Pc2 = ComplexMatrix::Zero(3, 2);
    ps.P1 = ComplexMatrix::Zero(3, 1);
    ps.P2 = ComplexMatrix::Zero(3, 1);
    ps.Wc1 = ComplexMatrix::Zero(4, 2);
    ps.Wc2 = ComplexMatrix::Zero(4, 2);
    const auto report = srs::verify(ps, d.csit, d.real);
    CHECK(report.degenerate);
    CHECK(report.max_residual == 0.0);
}

TEST_CASE("private precoders: invisible through the estimate, visible through the error") {
    const auto cfg = make_config(3, 2, 4);
    const auto d = draw(cfg, 10);
    const auto ps = srs::design_mid_tx(d.csit, d.real);
    CHECK((d.csit.H2_hat * ps.P1).norm() <= 1e-9 * d.csit.H2_hat.norm());
    CHECK((d.csit.H2_err * ps.P1).norm() > 0.0);
    // The end-to-end cross product equals the error-channel term.
    const double gap =
        ((d.real.H2 * ps.P1) - (d.csit.H2_err * ps.P1)).norm() / (d.csit.H2_err * ps.P1).norm();
    CHECK(gap <= 1e-6);
}

TEST_CASE("perfect CSIT makes private leakage vanish to machine precision") {
    const auto cfg = make_config(4, 2, 4);
    const auto real = srs::sample_realization(cfg, 11);
    const auto view = srs::perfect_csit(real);
    const auto ps = srs::design_mid_tx(view, real);
    CHECK((real.H2 * ps.P1).norm() <= 1e-9 * real.H2.norm());
    CHECK((real.H1 * ps.P2).norm() <= 1e-9 * real.H1.norm());
}

TEST_CASE("degenerate input raises InfeasibleDesign") {
    const auto cfg = make_config(3, 2, 4);
    auto d = draw(cfg, 12);
    d.csit.H1_hat.row(1) = d.csit.H1_hat.row(0);  // rank-deficient estimate
    CHECK_THROWS_AS(srs::design_mid_tx(d.csit, d.real), srs::InfeasibleDesign);

    auto d2 = draw(cfg, 13);
    d2.real.G1.row(1) = d2.real.G1.row(0);
    CHECK_THROWS_AS(srs::design_mid_tx(d2.csit, d2.real), srs::InfeasibleDesign);
}

TEST_CASE("zf_stream_dim matches min([M-N]+, N) on the antenna grid") {
    for (int M = 1; M <= 8; ++M) {
        for (int N = 1; N <= 4; ++N) {
            const int expected = std::min(std::max(M - N, 0), N);
            CHECK(srs::zf_stream_dim(M, N) == expected);
        }
    }
}

TEST_CASE("design_zf: stream counts and residuals") {
    {
        const auto cfg = make_config(3, 2, 4);
        const auto d = draw(cfg, 0);
        const auto zf = srs::design_zf(d.csit);
        CHECK(zf.stream_dim == 1);
        CHECK((d.csit.H2_hat * zf.P1).norm() / d.csit.H2_hat.norm() <= 1e-8);
        CHECK((d.csit.H1_hat * zf.P2).norm() / d.csit.H1_hat.norm() <= 1e-8);
    }
    {
        const auto cfg = make_config(2, 2, 4);
        const auto d = draw(cfg, 1);
        const auto zf = srs::design_zf(d.csit);
        CHECK(zf.stream_dim == 0);
        CHECK(zf.P1.cols() == 0);
    }
    {
        const auto cfg = make_config(6, 2, 4);
        const auto d = draw(cfg, 2);
        const auto zf = srs::design_zf(d.csit);
        CHECK(zf.stream_dim == 2);
        CHECK((d.csit.H2_hat * zf.P1).norm() / d.csit.H2_hat.norm() <= 1e-8);
        for (Eigen::Index c = 0; c < zf.P1.cols(); ++c) {
            CHECK(zf.P1.col(c).norm() == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}
