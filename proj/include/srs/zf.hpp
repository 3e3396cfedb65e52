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

#include "srs/channel.hpp"
#include "srs/precoder.hpp"

namespace srs {

/// Conventional zero-forcing baseline: private streams only, no common
/// message and no jammer. d_z = min([M - N]+, N) streams per user; zero
/// whenever M <= N (the baseline then transmits nothing securely).
struct ZfPrecoderSet {
    ComplexMatrix P1, P2;  // M x d_z, unit-norm columns
    int stream_dim = 0;    // d_z
};

int zf_stream_dim(int tx_antennas, int rx_antennas);

/// P1 spans null(Hhat2), P2 spans null(Hhat1), d_z columns each.
ZfPrecoderSet design_zf(const CsitView& csit);

}  // namespace srs
