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

#include <vector>

namespace srs {

/// Closed-form sum-SDoF slopes for the two-user broadcast channel with M
/// transmit antennas, N antennas per receiver and CSIT quality alpha.
/// All functions validate M, N >= 1 and alpha in [0, 1] (std::domain_error).

/// Slope achieved by the rate-splitting scheme with jamming:
///   M                    for M/N <= 1
///   N + alpha (M - N)    for 1 < M/N <= 2
///   N (1 + alpha)        for M/N > 2
/// Continuous across both case boundaries.
double srs_sum_sdof(int M, int N, double alpha);

/// Slope of the zero-forcing baseline: 2 alpha min([M - N]+, N).
double zf_sum_sdof(int M, int N, double alpha);

/// K-user extension for M >= K N: (1 - alpha) N + K alpha N.
/// Throws std::domain_error when M < K N (outside the formula's validity).
double multiuser_sum_sdof(int K, int N, double alpha, int M);

/// One linear constraint coeff_d1 * d1 + coeff_d2 * d2 <= bound on the
/// per-user degrees of freedom.
struct DofRegionConstraint {
    double coeff_d1 = 0.0;
    double coeff_d2 = 0.0;
    double bound = 0.0;
};

/// The three-constraint outer region:
///   d1 <= min(M, N),  d2 <= min(M, N),
///   d1 + d2 <= min(M, N) + alpha (min(M, 2N) - min(M, N)).
std::vector<DofRegionConstraint> sdof_region(int M, int N, double alpha);

/// Case form of the region's sum constraint; equals the third bound of
/// sdof_region on every valid input.
double sum_sdof_upper_bound(int M, int N, double alpha);

/// sum_sdof_upper_bound - srs_sum_sdof; identically zero (the scheme is
/// sum-SDoF optimal).
double optimality_gap(int M, int N, double alpha);

}  // namespace srs
