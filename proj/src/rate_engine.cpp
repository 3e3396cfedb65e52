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

#include "srs/rate_engine.hpp"

#include <cmath>
#include <stdexcept>

namespace srs {

namespace {

double frob_sq(const ComplexMatrix& X) { return X.squaredNorm(); }

double private_exponent_of(double alpha, const RateOptions& options) {
    return std::isnan(options.private_exponent_override) ? alpha
                                                         : options.private_exponent_override;
}

ComplexMatrix covariance(const ComplexMatrix& effective, double power) {
    ComplexMatrix C = power * (effective * effective.adjoint());
    return 0.5 * (C + C.adjoint());
}

void check_receiver_index(int i) {
    if (i != 0 && i != 1) throw std::invalid_argument("receiver index must be 0 or 1");
}

}  // namespace

PowerPolicy load_powers(const PrecoderSet& ps, double P, double alpha,
                        const RateOptions& options) {
    if (!(P >= 1.0)) throw std::invalid_argument("load_powers: P must be >= 1");
    const double p_exp = private_exponent_of(alpha, options);

    PowerPolicy policy;
    policy.total_power = P;
    policy.common_exponent = 1.0;
    policy.private_exponent = p_exp;
    policy.jamming_exponent = 1.0;

    const double raw_common = std::pow(P, policy.common_exponent);
    const double raw_private = std::pow(P, policy.private_exponent);
    const double raw_jamming = std::pow(P, policy.jamming_exponent);

    const double weight_common = frob_sq(ps.Pc1 + ps.Pc2);
    const double weight_private = frob_sq(ps.P1) + frob_sq(ps.P2);
    const double weight_jamming = frob_sq(ps.Wc1) + frob_sq(ps.Wc2);

    const double total = raw_common * weight_common + raw_private * weight_private +
                         raw_jamming * weight_jamming;
    if (total <= 0.0) return policy;  // nothing to transmit

    const double scale = P / total;
    policy.common_power = scale * raw_common;
    policy.private_power = scale * raw_private;
    policy.jamming_power = scale * raw_jamming;
    return policy;
}

PowerPolicy load_zf_powers(const ZfPrecoderSet& zf, double P, double alpha,
                           const RateOptions& options) {
    if (!(P >= 1.0)) throw std::invalid_argument("load_zf_powers: P must be >= 1");
    const double p_exp = private_exponent_of(alpha, options);

    PowerPolicy policy;
    policy.total_power = P;
    policy.common_exponent = 0.0;
    policy.private_exponent = p_exp;
    policy.jamming_exponent = 0.0;

    const double weight = frob_sq(zf.P1) + frob_sq(zf.P2);
    if (weight <= 0.0) return policy;

    const double raw = std::pow(P, p_exp);
    const double scale = std::min(1.0, P / (raw * weight));
    policy.private_power = scale * raw;
    return policy;
}

std::array<ReceiverModel, 2> receive_model(const PrecoderSet& ps, const PowerPolicy& policy,
                                           const ChannelRealization& real,
                                           const std::vector<double>& noise_diag) {
    const Eigen::Index N = real.H1.rows();

    // Whitening by the receiver noise keeps the downstream capacity calls on
    // the identity-noise form.
    Eigen::VectorXd w = Eigen::VectorXd::Ones(N);
    if (!noise_diag.empty()) {
        if (static_cast<Eigen::Index>(noise_diag.size()) != N) {
            throw std::invalid_argument("receive_model: noise_diag size mismatch");
        }
        for (Eigen::Index i = 0; i < N; ++i) {
            if (!(noise_diag[i] > 0.0)) {
                throw std::invalid_argument("receive_model: noise_diag must be positive");
            }
            w(i) = 1.0 / std::sqrt(noise_diag[i]);
        }
    }
    const Eigen::MatrixXd W = w.asDiagonal();

    const ComplexMatrix common_sum = ps.Pc1 + ps.Pc2;

    std::array<ReceiverModel, 2> models;
    for (int i = 0; i < 2; ++i) {
        const ComplexMatrix& H = (i == 0) ? real.H1 : real.H2;
        const ComplexMatrix& G = (i == 0) ? real.G1 : real.G2;
        const ComplexMatrix& Wc_own = (i == 0) ? ps.Wc1 : ps.Wc2;
        const ComplexMatrix& Wc_other = (i == 0) ? ps.Wc2 : ps.Wc1;
        const ComplexMatrix& P_own = (i == 0) ? ps.P1 : ps.P2;
        const ComplexMatrix& P_other = (i == 0) ? ps.P2 : ps.P1;

        ReceiverModel& m = models[i];
        m.common = covariance(W * (H * common_sum), policy.common_power);
        m.aligned_jamming = covariance(W * (G * Wc_own), policy.jamming_power);
        m.own_private = covariance(W * (H * P_own), policy.private_power);
        m.cross_private = covariance(W * (H * P_other), policy.private_power);
        m.residual_jamming = covariance(W * (G * Wc_other), policy.jamming_power);
    }
    return models;
}

double common_rate(const std::array<ReceiverModel, 2>& models, int receiver) {
    check_receiver_index(receiver);
    const ReceiverModel& m = models[receiver];
    const ComplexMatrix interference = m.own_private + m.cross_private + m.residual_jamming;
    return logdet_capacity(m.common, interference);
}

double common_leakage_rate(const std::array<ReceiverModel, 2>& models, int eavesdropper,
                           bool genie_eavesdropper) {
    check_receiver_index(eavesdropper);
    const ReceiverModel& m = models[eavesdropper];
    if (genie_eavesdropper) {
        return logdet_capacity(m.common, ComplexMatrix::Zero(m.common.rows(), m.common.cols()));
    }
    const ComplexMatrix interference = m.aligned_jamming + m.own_private + m.cross_private;
    return logdet_capacity(m.common, interference);
}

double private_rate(const std::array<ReceiverModel, 2>& models, int receiver) {
    check_receiver_index(receiver);
    const ReceiverModel& m = models[receiver];
    return logdet_capacity(m.own_private, m.cross_private);
}

double private_leakage_rate(const std::array<ReceiverModel, 2>& models, int eavesdropper,
                            bool genie_eavesdropper) {
    check_receiver_index(eavesdropper);
    (void)genie_eavesdropper;  // already interference-free (worst case)
    const ReceiverModel& m = models[eavesdropper];
    const ComplexMatrix zero = ComplexMatrix::Zero(m.cross_private.rows(), m.cross_private.cols());
    return logdet_capacity(m.cross_private, zero);
}

double sum_secure_rate(const RateBreakdown& rb) {
    const auto positive = [](double x) { return x > 0.0 ? x : 0.0; };
    const double common = positive(std::min(rb.common_rate_1, rb.common_rate_2) -
                                   rb.common_leak_at_1 - rb.common_leak_at_2);
    const double private_1 = positive(rb.private_rate_1 - rb.private_leak_at_2);
    const double private_2 = positive(rb.private_rate_2 - rb.private_leak_at_1);
    return common + private_1 + private_2;
}

RateBreakdown evaluate_rates(const PrecoderSet& ps, const PowerPolicy& policy,
                             const ChannelRealization& real, const RateOptions& options,
                             const std::vector<double>& noise_diag) {
    PowerPolicy effective = policy;
    if (options.zero_jamming) effective.jamming_power = 0.0;

    const auto models = receive_model(ps, effective, real, noise_diag);

    RateBreakdown rb;
    rb.common_rate_1 = common_rate(models, 0);
    rb.common_rate_2 = common_rate(models, 1);
    rb.private_rate_1 = private_rate(models, 0);
    rb.private_rate_2 = private_rate(models, 1);
    rb.common_leak_at_1 = common_leakage_rate(models, 0, options.genie_eavesdropper);
    rb.common_leak_at_2 = common_leakage_rate(models, 1, options.genie_eavesdropper);
    rb.private_leak_at_1 = private_leakage_rate(models, 0, options.genie_eavesdropper);
    rb.private_leak_at_2 = private_leakage_rate(models, 1, options.genie_eavesdropper);
    rb.sum_secure_rate = sum_secure_rate(rb);
    return rb;
}

PrecoderSet as_precoder_set(const ZfPrecoderSet& zf, int jammer_antennas) {
    PrecoderSet ps;
    const Eigen::Index M = zf.P1.rows();
    ps.common_dim = 0;
    ps.private_dim = zf.stream_dim;
    ps.Pc1 = ComplexMatrix::Zero(M, 0);
    ps.Pc2 = ComplexMatrix::Zero(M, 0);
    ps.Wc1 = ComplexMatrix::Zero(jammer_antennas, 0);
    ps.Wc2 = ComplexMatrix::Zero(jammer_antennas, 0);
    ps.P1 = zf.P1;
    ps.P2 = zf.P2;
    return ps;
}

}  // namespace srs
