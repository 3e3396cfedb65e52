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

#include "srs/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace srs {

namespace {

void check_domain(int M, int N, double alpha) {
    if (M < 1 || N < 1) throw std::domain_error("antenna counts must be >= 1");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must lie in [0, 1]");
}

}  // namespace

double srs_sum_sdof(int M, int N, double alpha) {
    check_domain(M, N, alpha);
    if (M <= N) return static_cast<double>(M);
    // Writing the saturated case as N + alpha * N keeps it bitwise equal to
    // the middle case at the M = 2N boundary.
    if (M <= 2 * N) return N + alpha * (M - N);
    return N + alpha * N;
}

double zf_sum_sdof(int M, int N, double alpha) {
    check_domain(M, N, alpha);
    const int d_z = std::min(std::max(M - N, 0), N);
    return 2.0 * alpha * d_z;
}

double multiuser_sum_sdof(int K, int N, double alpha, int M) {
    check_domain(M, N, alpha);
    if (K < 1) throw std::domain_error("K must be >= 1");
    if (M < K * N) {
        throw std::domain_error("multiuser_sum_sdof: formula requires M >= K*N");
    }
    return (1.0 - alpha) * N + K * alpha * N;
}

std::vector<DofRegionConstraint> sdof_region(int M, int N, double alpha) {
    check_domain(M, N, alpha);
    const double per_user = std::min(M, N);
    const double sum_bound = std::min(M, N) + alpha * (std::min(M, 2 * N) - std::min(M, N));
    return {
        {1.0, 0.0, per_user},
        {0.0, 1.0, per_user},
        {1.0, 1.0, sum_bound},
    };
}

double sum_sdof_upper_bound(int M, int N, double alpha) {
    check_domain(M, N, alpha);
    if (M <= N) return static_cast<double>(M);
    if (M <= 2 * N) return N + alpha * (M - N);
    return N + alpha * N;
}

double optimality_gap(int M, int N, double alpha) {
    return sum_sdof_upper_bound(M, N, alpha) - srs_sum_sdof(M, N, alpha);
}

}  // namespace srs
