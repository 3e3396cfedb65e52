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

#include <array>
#include <limits>
#include <vector>

#include "srs/channel.hpp"
#include "srs/precoder.hpp"
#include "srs/zf.hpp"

namespace srs {

/// Per-stream transmit powers after loading the budget P onto the streams.
///
/// The common stream class is loaded at order P and carries the jamming
/// with it (the jamming must mask a full-power signal to keep the leakage
/// slope at zero); private streams are loaded at order P^alpha, the largest
/// order the zero-forced protection supports under imperfect CSIT. A single
/// global factor then normalizes the total average transmit power
/// (transmitter plus jammer) to exactly P.
struct PowerPolicy {
    double total_power = 1.0;
    double common_exponent = 1.0;
    double private_exponent = 0.0;
    double jamming_exponent = 1.0;
    double common_power = 0.0;   ///< per-stream, after normalization
    double private_power = 0.0;  ///< per-stream, after normalization
    double jamming_power = 0.0;  ///< per-stream, after normalization
};

struct RateOptions {
    /// Ablation: silence the jammer (applied after normalization).
    bool zero_jamming = false;
    /// Diagnostic: leakage measured by an interference-free eavesdropper.
    bool genie_eavesdropper = false;
    /// Ablation: replace the private power exponent alpha by this value.
    double private_exponent_override = std::numeric_limits<double>::quiet_NaN();
};

PowerPolicy load_powers(const PrecoderSet& ps, double P, double alpha,
                        const RateOptions& options = {});

/// Zero-forcing baseline loading: each private stream at order P^alpha,
/// scaled down only if the raw total would exceed the budget.
PowerPolicy load_zf_powers(const ZfPrecoderSet& zf, double P, double alpha,
                           const RateOptions& options = {});

/// Hermitian PSD covariances of the signal classes arriving at one
/// receiver, all propagated through the TRUE channels and whitened by the
/// receiver noise (identity by default).
struct ReceiverModel {
    ComplexMatrix common;            ///< common stream through H_i
    ComplexMatrix aligned_jamming;   ///< own jamming, G_i * Wc_i
    ComplexMatrix own_private;       ///< H_i * P_i
    ComplexMatrix cross_private;     ///< H_i * P_j (j != i), the CSIT-error leak
    ComplexMatrix residual_jamming;  ///< G_i * Wc_j (j != i), zero by nulling
};

std::array<ReceiverModel, 2> receive_model(const PrecoderSet& ps, const PowerPolicy& policy,
                                           const ChannelRealization& real,
                                           const std::vector<double>& noise_diag = {});

/// Decodable rate of the common stream at receiver i (0 or 1). The aligned
/// jamming is excluded from the interference: the jamming codebook makes it
/// decodable together with the common message.
double common_rate(const std::array<ReceiverModel, 2>& models, int receiver);

/// Rate at which receiver i could decode the other user's common part; the
/// receiver's own aligned jamming masks it and counts as interference.
double common_leakage_rate(const std::array<ReceiverModel, 2>& models, int eavesdropper,
                           bool genie_eavesdropper = false);

/// Rate of the own private streams after the common has been decoded and
/// canceled; only the cross-private CSIT leak remains as interference.
double private_rate(const std::array<ReceiverModel, 2>& models, int receiver);

/// Rate at which receiver i could decode the other user's private streams,
/// with noise-only interference (worst case for secrecy).
double private_leakage_rate(const std::array<ReceiverModel, 2>& models, int eavesdropper,
                            bool genie_eavesdropper = false);

/// All finite-SNR rates for one realization and power point, in bits.
struct RateBreakdown {
    double common_rate_1 = 0.0, common_rate_2 = 0.0;
    double private_rate_1 = 0.0, private_rate_2 = 0.0;
    double common_leak_at_1 = 0.0, common_leak_at_2 = 0.0;    ///< other's common at receiver i
    double private_leak_at_1 = 0.0, private_leak_at_2 = 0.0;  ///< other's private at receiver i
    double sum_secure_rate = 0.0;
};

/// Per-message secrecy-rate surrogate:
///   [min common rate - both common leaks]+  +  sum_i [private_i - its leak]+
double sum_secure_rate(const RateBreakdown& rb);

RateBreakdown evaluate_rates(const PrecoderSet& ps, const PowerPolicy& policy,
                             const ChannelRealization& real, const RateOptions& options = {},
                             const std::vector<double>& noise_diag = {});

/// Adapter so the zero-forcing baseline flows through the same rate path
/// (no common streams, no jammer).
PrecoderSet as_precoder_set(const ZfPrecoderSet& zf, int jammer_antennas);

}  // namespace srs
