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

#include <stdexcept>
#include <string>
#include <vector>

#include "srs/channel.hpp"
#include "srs/numerics.hpp"

namespace srs {

/// Raised when a channel draw violates the generic rank assumptions the
/// construction needs (a measure-zero event for Gaussian channels).
struct InfeasibleDesign : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Antenna regime, dispatching on M/N with boundaries at M = N and M = 2N.
enum class Regime { LowTx, MidTx, HighTx };

Regime regime_for(int tx_antennas, int rx_antennas);

/// Full precoder set for the rate-splitting scheme.
///
/// Common precoders Pc1/Pc2 (M x d_c) steer the shared common stream; the
/// jammer precoders Wc1/Wc2 (J x d_c) satisfy, per receiver i with estimate
/// Hhat_i and true jammer channel G_i,
///
///   nulling    G_j * Wc_i = 0          (j != i)
///   alignment  Hhat_i * Pc_i = G_i * Wc_i
///
/// and the private precoders P1/P2 (M x d_p) are zero-forced through the
/// estimated cross channel (Hhat_j * P_i = 0). Pc and P columns are
/// unit-norm; each Wc column carries the scale the alignment identity
/// forces once its paired Pc column is normalized.
struct PrecoderSet {
    ComplexMatrix Pc1, Pc2;  // M x d_c
    ComplexMatrix P1, P2;    // M x d_p (zero columns when d_p = 0)
    ComplexMatrix Wc1, Wc2;  // J x d_c
    int common_dim = 0;      // d_c
    int private_dim = 0;     // d_p
};

/// M <= N: no private streams; common and jammer precoders are drawn from
/// the null space of the stacked nulling+alignment system, d_c = M.
PrecoderSet design_low_tx(const CsitView& csit, const ChannelRealization& real);

/// N < M <= 2N: d_c = N common streams (alignment via least squares on the
/// full-row-rank estimate) plus d_p = M - N zero-forced private streams.
PrecoderSet design_mid_tx(const CsitView& csit, const ChannelRealization& real);

/// M > 2N: deactivates all but the first 2N transmit antennas and runs the
/// mid-regime design on the truncation; precoder rows beyond 2N are zero.
PrecoderSet design_high_tx(const CsitView& csit, const ChannelRealization& real);

/// Regime dispatch over the three designers.
PrecoderSet design_srs(const CsitView& csit, const ChannelRealization& real);

/// Relative residuals of every applicable nulling and alignment condition.
/// Nulling uses the TRUE jammer channels (the jammer has perfect CSI);
/// transmitter-side conditions use the ESTIMATED channels.
struct VerificationReport {
    struct Residual {
        std::string condition;
        double value = 0.0;
    };
    std::vector<Residual> nulling_residuals;
    std::vector<Residual> alignment_residuals;
    double max_residual = 0.0;
    bool degenerate = false;  ///< a 0/0 alignment guard fired (all-zero precoders)
    int rank_Pc1 = 0;         ///< achieved rank of the common precoders
    int rank_Pc2 = 0;
};

VerificationReport verify(const PrecoderSet& ps, const CsitView& csit,
                          const ChannelRealization& real);

}  // namespace srs
