#include "wpirsa/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace wpirsa {

namespace {

constexpr double kPsdTol = 1e-10;

} // namespace

void ChannelParams::validate() const {
    if (!(carrier_frequency_hz > 0.0))
        throw std::invalid_argument("carrier_frequency_hz must be > 0");
    if (!(speed_of_light_m_s > 0.0))
        throw std::invalid_argument("speed_of_light_m_s must be > 0");
    if (!(pathloss_exponent > 0.0))
        throw std::invalid_argument("pathloss_exponent must be > 0");
    if (!(rician_kappa_linear > 0.0))
        throw std::invalid_argument("rician_kappa_linear must be > 0");
    if (antennas < 1)
        throw std::invalid_argument("antennas must be >= 1");
    if (!(pb_user_distance_m > 0.0))
        throw std::invalid_argument("pb_user_distance_m must be > 0");
    if (!(bs_user_distance_m > 0.0))
        throw std::invalid_argument("bs_user_distance_m must be > 0");
    if (scattering_covariance.size() != 0) {
        const auto& r = scattering_covariance;
        if (r.rows() != antennas || r.cols() != antennas)
            throw std::invalid_argument("scattering_covariance must be antennas x antennas");
        const double scale = std::max(1.0, r.norm());
        if ((r - r.adjoint()).norm() > kPsdTol * scale)
            throw std::invalid_argument("scattering_covariance must be Hermitian");
        Eigen::SelfAdjointEigenSolver<cmat> es(r, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -kPsdTol * scale)
            throw std::invalid_argument("scattering_covariance must be positive semidefinite");
    }
}

double pathloss_gain(double distance_m, double frequency_hz, double exponent,
                     double speed_of_light_m_s) {
    if (!(distance_m > 0.0))
        throw std::invalid_argument("pathloss_gain: distance must be > 0");
    if (!(frequency_hz > 0.0))
        throw std::invalid_argument("pathloss_gain: frequency must be > 0");
    const double c = speed_of_light_m_s;
    const double pi = std::numbers::pi;
    return (c * c) / (16.0 * pi * pi * frequency_hz * frequency_hz *
                      std::pow(distance_m, exponent));
}

cvec los_steering(double azimuth_rad, double kappa_linear, int antennas) {
    if (antennas < 1)
        throw std::invalid_argument("los_steering: antennas must be >= 1");
    if (!(kappa_linear > 0.0))
        throw std::invalid_argument("los_steering: kappa must be > 0");
    const double mag = std::sqrt(kappa_linear / (2.0 * (1.0 + kappa_linear)));
    const double pi = std::numbers::pi;
    cvec h(antennas);
    for (int m = 0; m < antennas; ++m) {
        const double phase = -static_cast<double>(m) * pi * std::sin(azimuth_rad);
        h(m) = std::polar(mag, phase);
    }
    return h;
}

ChannelSampler::ChannelSampler(ChannelParams params) : params_(std::move(params)) {
    params_.validate();
    beta_pb_ = pathloss_gain(params_.pb_user_distance_m, params_.carrier_frequency_hz,
                             params_.pathloss_exponent, params_.speed_of_light_m_s);
    beta_bs_ = pathloss_gain(params_.bs_user_distance_m, params_.carrier_frequency_hz,
                             params_.pathloss_exponent, params_.speed_of_light_m_s);
    scatter_scale_ = std::sqrt(1.0 / (1.0 + params_.rician_kappa_linear));
    los_ = los_steering(params_.azimuth_rad, params_.rician_kappa_linear, params_.antennas);

    const auto& r = params_.scattering_covariance;
    identity_cov_ = r.size() == 0 || r.isIdentity(kPsdTol);
    if (!identity_cov_) {
        // R = V diag(lambda) V^H with lambda >= 0 (validated); A = V diag(sqrt(lambda))
        Eigen::SelfAdjointEigenSolver<cmat> es(r);
        Eigen::VectorXd lambda = es.eigenvalues().cwiseMax(0.0);
        cov_factor_ = es.eigenvectors() * lambda.cwiseSqrt().asDiagonal();
    }
}

EhChannel ChannelSampler::sample_eh(RandomStream& rng) const {
    const int m = params_.antennas;
    cvec z(m);
    for (int i = 0; i < m; ++i)
        z(i) = rng.complex_normal();
    EhChannel ch;
    ch.beta = beta_pb_;
    ch.los = los_;
    ch.scatter = identity_cov_ ? cvec(scatter_scale_ * z)
                               : cvec(scatter_scale_ * (cov_factor_ * z));
    return ch;
}

DataGain ChannelSampler::sample_data(RandomStream& rng) const {
    DataGain dg;
    dg.g = rng.complex_normal();
    dg.beta_bs = beta_bs_;
    return dg;
}

EhChannel sample_eh_channel(const ChannelParams& params, RandomStream& rng) {
    return ChannelSampler(params).sample_eh(rng);
}

DataGain sample_data_gain(const ChannelParams& params, RandomStream& rng) {
    return ChannelSampler(params).sample_data(rng);
}

} // namespace wpirsa
