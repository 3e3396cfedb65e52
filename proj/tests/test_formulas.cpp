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

#include <cmath>
#include <stdexcept>

#include "doctest.h"

TEST_CASE("srs_sum_sdof: pinned case values") {
    CHECK(srs::srs_sum_sdof(2, 2, 0.7) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(srs::srs_sum_sdof(3, 2, 0.5) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(srs::srs_sum_sdof(6, 2, 0.5) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("srs_sum_sdof: continuity at both case boundaries") {
    for (int N = 1; N <= 4; ++N) {
        for (int a10 = 0; a10 <= 10; ++a10) {
            const double alpha = a10 / 10.0;
            // M = N: low case value must match the middle case expression.
            CHECK(srs::srs_sum_sdof(N, N, alpha) == static_cast<double>(N));
            CHECK(srs::srs_sum_sdof(N, N, alpha) == N + alpha * (N - N));
            // M = 2N: middle case value must match the saturated expression.
            CHECK(srs::srs_sum_sdof(2 * N, N, alpha) == N + alpha * N);
        }
    }
}

TEST_CASE("zf_sum_sdof: pinned case values") {
    CHECK(srs::zf_sum_sdof(2, 2, 0.9) == 0.0);
    CHECK(srs::zf_sum_sdof(3, 2, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(srs::zf_sum_sdof(6, 2, 1.0) == doctest::Approx(4.0).epsilon(1e-15));
    // With perfect CSIT and saturated antennas the two schemes coincide.
    CHECK(srs::zf_sum_sdof(6, 2, 1.0) == srs::srs_sum_sdof(6, 2, 1.0));
}

TEST_CASE("scheme dominates the baseline; equality exactly at alpha=1, M>=2N") {
    for (int M = 1; M <= 8; ++M) {
        for (int N = 1; N <= 4; ++N) {
            for (int a10 = 0; a10 <= 10; ++a10) {
                const double alpha = a10 / 10.0;
                const double srs_v = srs::srs_sum_sdof(M, N, alpha);
                const double zf_v = srs::zf_sum_sdof(M, N, alpha);
                CHECK(srs_v >= zf_v - 1e-12);
                const bool equal = std::abs(srs_v - zf_v) <= 1e-12;
                const bool expected_equal = (alpha == 1.0 && M >= 2 * N);
                CHECK(equal == expected_equal);
            }
        }
    }
}

TEST_CASE("srs_sum_sdof: nondecreasing in alpha and in M") {
    for (int N = 1; N <= 4; ++N) {
        for (int M = 1; M <= 8; ++M) {
            for (int a10 = 0; a10 < 10; ++a10) {
                CHECK(srs::srs_sum_sdof(M, N, (a10 + 1) / 10.0) >=
                      srs::srs_sum_sdof(M, N, a10 / 10.0) - 1e-12);
            }
            if (M > 1) {
                for (int a10 = 0; a10 <= 10; ++a10) {
                    CHECK(srs::srs_sum_sdof(M, N, a10 / 10.0) >=
                          srs::srs_sum_sdof(M - 1, N, a10 / 10.0) - 1e-12);
                }
            }
        }
    }
}

TEST_CASE("multiuser_sum_sdof: pinned values and validity region") {
    CHECK(srs::multiuser_sum_sdof(3, 2, 0.5, 6) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(srs::multiuser_sum_sdof(2, 2, 1.0, 4) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(srs::multiuser_sum_sdof(2, 2, 1.0, 4) == srs::srs_sum_sdof(4, 2, 1.0));
    for (int K = 1; K <= 6; ++K) {
        CHECK(srs::multiuser_sum_sdof(K, 3, 0.0, K * 3) == 3.0);  // alpha = 0 collapses to N
    }
    CHECK_THROWS_AS(srs::multiuser_sum_sdof(3, 2, 0.5, 5), std::domain_error);
}

TEST_CASE("multiuser_sum_sdof: monotone in K and alpha, increment grows with K") {
    const int N = 2;
    for (int K = 1; K <= 6; ++K) {
        const int M = K * N;
        for (int a4 = 0; a4 < 4; ++a4) {
            const double lo = srs::multiuser_sum_sdof(K, N, a4 * 0.25, M);
            const double hi = srs::multiuser_sum_sdof(K, N, (a4 + 1) * 0.25, M);
            CHECK(hi >= lo - 1e-12);
        }
        if (K > 1) {
            for (int a4 = 0; a4 <= 4; ++a4) {
                CHECK(srs::multiuser_sum_sdof(K, N, a4 * 0.25, M) >=
                      srs::multiuser_sum_sdof(K - 1, N, a4 * 0.25, (K - 1) * N) - 1e-12);
            }
            // The alpha increment N * (K - 1) strictly grows with K.
            const double inc_K = srs::multiuser_sum_sdof(K, N, 0.5, M) -
                                 srs::multiuser_sum_sdof(K, N, 0.25, M);
            const double inc_prev = srs::multiuser_sum_sdof(K - 1, N, 0.5, (K - 1) * N) -
                                    srs::multiuser_sum_sdof(K - 1, N, 0.25, (K - 1) * N);
            CHECK(inc_K > inc_prev);
        }
    }
}

TEST_CASE("sdof_region: pinned constraint sets") {
    const auto r = srs::sdof_region(4, 2, 0.5);
    REQUIRE(r.size() == 3);
    CHECK(r[0].bound == 2.0);
    CHECK(r[1].bound == 2.0);
    CHECK(r[2].bound == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(r[2].coeff_d1 == 1.0);
    CHECK(r[2].coeff_d2 == 1.0);

    CHECK(srs::sdof_region(1, 2, 0.8)[2].bound == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(srs::sdof_region(6, 2, 1.0)[2].bound == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("sum_sdof_upper_bound: pinned values and agreement with the region") {
    CHECK(srs::sum_sdof_upper_bound(3, 2, 0.5) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(srs::sum_sdof_upper_bound(2, 2, 0.3) == 2.0);
    CHECK(srs::sum_sdof_upper_bound(2, 2, 0.9) == 2.0);
    CHECK(srs::sum_sdof_upper_bound(5, 2, 0.25) == doctest::Approx(2.5).epsilon(1e-15));

    for (int M = 1; M <= 8; ++M) {
        for (int N = 1; N <= 4; ++N) {
            for (int a10 = 0; a10 <= 10; ++a10) {
                const double alpha = a10 / 10.0;
                CHECK(srs::sum_sdof_upper_bound(M, N, alpha) ==
                      srs::sdof_region(M, N, alpha)[2].bound);
            }
        }
    }
}

TEST_CASE("optimality_gap: identically zero on the exhaustive grid") {
    CHECK(srs::optimality_gap(3, 2, 0.5) == 0.0);
    CHECK(srs::optimality_gap(7, 3, 0.9) == 0.0);
    for (int M = 1; M <= 8; ++M) {
        for (int N = 1; N <= 4; ++N) {
            for (int a10 = 0; a10 <= 10; ++a10) {
                CHECK(srs::optimality_gap(M, N, a10 / 10.0) == 0.0);
            }
        }
    }
}

TEST_CASE("formulas: domain validation") {
    CHECK_THROWS_AS(srs::srs_sum_sdof(0, 2, 0.5), std::domain_error);
    CHECK_THROWS_AS(srs::srs_sum_sdof(2, 0, 0.5), std::domain_error);
    CHECK_THROWS_AS(srs::srs_sum_sdof(2, 2, 1.5), std::domain_error);
    CHECK_THROWS_AS(srs::zf_sum_sdof(2, 2, -0.1), std::domain_error);
    CHECK_THROWS_AS(srs::multiuser_sum_sdof(0, 2, 0.5, 4), std::domain_error);
}
