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
#include <stdexcept>
#include <string>

namespace srs {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void fill_cgaussian(ComplexMatrix& M, Rng& rng) {
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        for (Eigen::Index c = 0; c < M.cols(); ++c) {
            M(r, c) = rng.cgaussian();
        }
    }
}

}  // namespace

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = splitmix64(base);
    for (std::uint64_t p : path) {
        s = splitmix64(s ^ splitmix64(p));
    }
    return s;
}

void ScenarioConfig::validate() const {
    if (tx_antennas < 1 || rx_antennas < 1 || jammer_antennas < 1) {
        throw std::invalid_argument("config: antenna counts must be >= 1");
    }
    if (jammer_antennas < 2 * rx_antennas) {
        throw std::invalid_argument(
            "config: jammer_antennas must satisfy J >= 2N (got J=" +
            std::to_string(jammer_antennas) + ", N=" + std::to_string(rx_antennas) + ")");
    }
    if (!(csit_quality >= 0.0 && csit_quality <= 1.0)) {
        throw std::invalid_argument("config: csit_quality (alpha) must lie in [0, 1]");
    }
    if (trials < 1) {
        throw std::invalid_argument("config: trials must be >= 1");
    }
    if (snr_grid.empty()) {
        throw std::invalid_argument("config: snr_grid must be nonempty");
    }
    for (std::size_t i = 0; i < snr_grid.size(); ++i) {
        if (!(snr_grid[i] >= 1.0) || !std::isfinite(snr_grid[i])) {
            throw std::invalid_argument("config: snr_grid entries must be finite and >= 1");
        }
        if (i > 0 && !(snr_grid[i] > snr_grid[i - 1])) {
            throw std::invalid_argument("config: snr_grid must be strictly increasing");
        }
    }
    if (!noise_diag.empty()) {
        if (static_cast<int>(noise_diag.size()) != rx_antennas) {
            throw std::invalid_argument("config: noise_diag size must equal rx_antennas");
        }
        for (double d : noise_diag) {
            if (!(d > 0.0)) {
                throw std::invalid_argument("config: noise_diag entries must be positive");
            }
        }
    }
}

ChannelRealization sample_realization(const ScenarioConfig& cfg, int trial_index, int attempt) {
    if (trial_index < 0 || trial_index >= cfg.trials) {
        throw std::invalid_argument("sample_realization: trial_index out of range");
    }
    Rng rng(derive_seed(cfg.seed, {kStreamRealization, static_cast<std::uint64_t>(trial_index),
                                   static_cast<std::uint64_t>(attempt)}));
    const int M = cfg.tx_antennas;
    const int N = cfg.rx_antennas;
    const int J = cfg.jammer_antennas;

    ChannelRealization real;
    real.H1.resize(N, M);
    real.H2.resize(N, M);
    real.G1.resize(N, J);
    real.G2.resize(N, J);
    fill_cgaussian(real.H1, rng);
    fill_cgaussian(real.H2, rng);
    fill_cgaussian(real.G1, rng);
    fill_cgaussian(real.G2, rng);
    return real;
}

CsitView split_csit(const ChannelRealization& real, double alpha, double P, Rng& stream) {
    if (!(P >= 1.0)) {
        throw std::invalid_argument("split_csit: P must be >= 1");
    }
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("split_csit: alpha must lie in [0, 1]");
    }
    const double sigma = std::pow(P, -alpha / 2.0);

    CsitView v;
    v.power_level = P;
    v.H1_err.resize(real.H1.rows(), real.H1.cols());
    v.H2_err.resize(real.H2.rows(), real.H2.cols());
    fill_cgaussian(v.H1_err, stream);
    fill_cgaussian(v.H2_err, stream);
    v.H1_err *= sigma;
    v.H2_err *= sigma;
    v.H1_hat = real.H1 - v.H1_err;
    v.H2_hat = real.H2 - v.H2_err;
    return v;
}

CsitView perfect_csit(const ChannelRealization& real) {
    CsitView v;
    v.power_level = 1.0;
    v.H1_hat = real.H1;
    v.H2_hat = real.H2;
    v.H1_err = ComplexMatrix::Zero(real.H1.rows(), real.H1.cols());
    v.H2_err = ComplexMatrix::Zero(real.H2.rows(), real.H2.cols());
    return v;
}

}  // namespace srs
