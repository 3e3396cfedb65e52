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

#include "srs/channel.hpp"

#include <cmath>

#include "doctest.h"

namespace {

srs::ScenarioConfig base_config() {
    srs::ScenarioConfig cfg;
    cfg.tx_antennas = 3;
    cfg.rx_antennas = 2;
    cfg.jammer_antennas = 4;
    cfg.csit_quality = 0.5;
    cfg.snr_grid = {1e6, 1e8, 1e10};
    cfg.trials = 20000;
    cfg.seed = 42;
    return cfg;
}

}  // namespace

TEST_CASE("sample_realization: deterministic and shaped") {
    const auto cfg = base_config();
    const auto a = srs::sample_realization(cfg, 3);
    const auto b = srs::sample_realization(cfg, 3);
    CHECK(a.H1 == b.H1);
    CHECK(a.H2 == b.H2);
    CHECK(a.G1 == b.G1);
    CHECK(a.G2 == b.G2);

    CHECK(a.H1.rows() == 2);
    CHECK(a.H1.cols() == 3);
    CHECK(a.G1.rows() == 2);
    CHECK(a.G1.cols() == 4);

    const auto c = srs::sample_realization(cfg, 4);
    CHECK(a.H1 != c.H1);
    const auto d = srs::sample_realization(cfg, 3, /*attempt=*/1);
    CHECK(a.H1 != d.H1);
}

TEST_CASE("sample_realization: unit per-entry variance") {
    auto cfg = base_config();
    cfg.tx_antennas = 2;
    double acc = 0.0;
    int count = 0;
    for (int t = 0; t < 10000; ++t) {
        const auto real = srs::sample_realization(cfg, t);
        acc += real.H1.squaredNorm();
        count += static_cast<int>(real.H1.size());
    }
    CHECK(acc / count == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("split_csit: reconstruction is exact to machine precision") {
    const auto cfg = base_config();
    const auto real = srs::sample_realization(cfg, 0);
    srs::Rng stream(99);
    const auto view = srs::split_csit(real, 0.5, 1e8, stream);
    const double err1 = (view.H1_hat + view.H1_err - real.H1).cwiseAbs().maxCoeff();
    const double err2 = (view.H2_hat + view.H2_err - real.H2).cwiseAbs().maxCoeff();
    CHECK(err1 <= 1e-15 * real.H1.cwiseAbs().maxCoeff());
    CHECK(err2 <= 1e-15 * real.H2.cwiseAbs().maxCoeff());
}

TEST_CASE("split_csit: error variance follows P^-alpha") {
    const auto cfg = base_config();

    const auto variance_at = [&](double alpha, double P) {
        double acc = 0.0;
        int count = 0;
        for (int t = 0; t < 10000; ++t) {
            const auto real = srs::sample_realization(cfg, t);
            srs::Rng stream(srs::derive_seed(cfg.seed, {srs::kStreamCsit,
                                                        static_cast<std::uint64_t>(t)}));
            const auto view = srs::split_csit(real, alpha, P, stream);
            acc += view.H1_err.squaredNorm();
            count += static_cast<int>(view.H1_err.size());
        }
        return acc / count;
    };

    CHECK(variance_at(0.0, 1e6) == doctest::Approx(1.0).epsilon(0.05));     // no-CSIT limit
    CHECK(variance_at(1.0, 1e8) == doctest::Approx(1e-8).epsilon(0.05));    // direct substitution
    CHECK(variance_at(0.5, 1e4) == doctest::Approx(1e-2).epsilon(0.05));    // P^-alpha
}

TEST_CASE("split_csit: scaling law across two power levels") {
    const auto cfg = base_config();
    const double alpha = 0.7;
    double acc_lo = 0.0, acc_hi = 0.0;
    int count = 0;
    for (int t = 0; t < 8000; ++t) {
        const auto real = srs::sample_realization(cfg, t);
        const auto seed =
            srs::derive_seed(cfg.seed, {srs::kStreamCsit, static_cast<std::uint64_t>(t)});
        srs::Rng s1(seed), s2(seed);
        acc_lo += srs::split_csit(real, alpha, 1e4, s1).H1_err.squaredNorm();
        acc_hi += srs::split_csit(real, alpha, 1e8, s2).H1_err.squaredNorm();
        count += static_cast<int>(real.H1.size());
    }
    const double ratio = (acc_hi / count) / (acc_lo / count);
    CHECK(ratio == doctest::Approx(std::pow(1e4, -alpha)).epsilon(0.05));
}

TEST_CASE("perfect_csit: zero error view") {
    const auto cfg = base_config();
    const auto real = srs::sample_realization(cfg, 1);
    const auto view = srs::perfect_csit(real);
    CHECK(view.H1_hat == real.H1);
    CHECK(view.H1_err.norm() == 0.0);
    CHECK(view.H2_err.norm() == 0.0);
}

TEST_CASE("ScenarioConfig validation") {
    auto cfg = base_config();
    CHECK_NOTHROW(cfg.validate());

    auto bad = cfg;
    bad.jammer_antennas = 3;  // J < 2N
    CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("J >= 2N"), std::invalid_argument);

    bad = cfg;
    bad.csit_quality = 1.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = cfg;
    bad.trials = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = cfg;
    bad.snr_grid = {1e6, 1e6};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = cfg;
    bad.snr_grid = {0.5, 1e6};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("derive_seed: distinct paths give distinct streams") {
    const auto s1 = srs::derive_seed(1, {1, 2, 3});
    const auto s2 = srs::derive_seed(1, {1, 2, 4});
    const auto s3 = srs::derive_seed(1, {1, 3, 2});
    const auto s4 = srs::derive_seed(2, {1, 2, 3});
    CHECK(s1 != s2);
    CHECK(s1 != s3);
    CHECK(s1 != s4);
    CHECK(s1 == srs::derive_seed(1, {1, 2, 3}));
}
