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

#include "srs/zf.hpp"

#include <algorithm>

namespace srs {

int zf_stream_dim(int tx_antennas, int rx_antennas) {
    return std::min(std::max(tx_antennas - rx_antennas, 0), rx_antennas);
}

ZfPrecoderSet design_zf(const CsitView& csit) {
    const int N = static_cast<int>(csit.H1_hat.rows());
    const int M = static_cast<int>(csit.H1_hat.cols());

    ZfPrecoderSet zf;
    zf.stream_dim = zf_stream_dim(M, N);
    if (zf.stream_dim == 0) {
        zf.P1 = ComplexMatrix::Zero(M, 0);
        zf.P2 = ComplexMatrix::Zero(M, 0);
        return zf;
    }

    const ComplexMatrix null_H2 = null_space_basis(csit.H2_hat);
    const ComplexMatrix null_H1 = null_space_basis(csit.H1_hat);
    if (null_H2.cols() < zf.stream_dim || null_H1.cols() < zf.stream_dim) {
        throw InfeasibleDesign("zero-forcing: estimated channel null space too small");
    }
    zf.P1 = null_H2.leftCols(zf.stream_dim);
    zf.P2 = null_H1.leftCols(zf.stream_dim);
    return zf;
}

}  // namespace srs
