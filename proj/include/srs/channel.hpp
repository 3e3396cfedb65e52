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

#include <cstdint>
#include <random>
#include <vector>

#include "srs/numerics.hpp"

namespace srs {

/// Deterministic Gaussian stream. Box-Muller on top of mt19937_64 so the
/// sequence is identical across standard library implementations.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal N(0, 1).
    double gaussian();

    /// Circularly-symmetric complex Gaussian CN(0, 1) (unit total variance).
    Complex cgaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return Complex(re * kInvSqrt2, im * kInvSqrt2);
    }

   private:
    static constexpr double kInvSqrt2 = 0.70710678118654752440;
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Splittable substream derivation: hashes a path of indices into a fresh
/// 64-bit seed (splitmix64 chain). Distinct paths give independent streams.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path);

/// Stream tags for substream derivation; keep values stable, results depend
/// on them.
enum StreamTag : std::uint64_t {
    kStreamRealization = 1,
    kStreamCsit = 2,
    kStreamSweepCell = 3,
};

/// Scenario parameters for one Monte Carlo experiment cell.
struct ScenarioConfig {
    int tx_antennas = 2;          ///< M
    int rx_antennas = 2;          ///< N, per receiver (both receivers equal)
    int jammer_antennas = 4;      ///< J, requires J >= 2N
    double csit_quality = 0.5;    ///< alpha in [0, 1]
    std::vector<double> snr_grid; ///< transmit powers, linear scale, increasing, >= 1
    int trials = 200;
    std::uint64_t seed = 1;
    std::vector<double> noise_diag;  ///< diagonal of receiver noise covariance; empty = identity

    /// Throws std::invalid_argument on any violated constraint.
    void validate() const;
};

/// True channels for one Monte Carlo draw: transmitter-to-receiver H_i
/// (N x M) and jammer-to-receiver G_i (N x J).
struct ChannelRealization {
    ComplexMatrix H1, H2;  // N x M
    ComplexMatrix G1, G2;  // N x J
};

/// Transmitter-side view of the channels at a given power level: estimates
/// plus the (to the transmitter unknown) error terms. The exact
/// reconstruction H_i = H_i_hat + H_i_err always holds. The jammer-side
/// channels G_i carry no error: the jammer has perfect CSI.
struct CsitView {
    ComplexMatrix H1_hat, H2_hat;  // N x M
    ComplexMatrix H1_err, H2_err;  // N x M
    double power_level = 1.0;
};

/// i.i.d. CN(0,1) channels from the substream derived from
/// (cfg.seed, trial_index, attempt). Identical inputs reproduce identical
/// matrices bit for bit. attempt > 0 is used to resample degenerate draws.
ChannelRealization sample_realization(const ScenarioConfig& cfg, int trial_index,
                                      int attempt = 0);

/// Splits the true channel into estimate and error at power level P: error
/// entries are i.i.d. complex Gaussian with per-entry variance P^(-alpha),
/// and the estimate is defined as H - err.
CsitView split_csit(const ChannelRealization& real, double alpha, double P, Rng& stream);

/// Zero-error view (the perfect-CSIT limit): estimate equals the true
/// channel exactly.
CsitView perfect_csit(const ChannelRealization& real);

}  // namespace srs
