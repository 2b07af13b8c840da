#pragma once

// PB->user and user->BS link models: pathloss, Rician LOS steering for the
// multi-antenna power link, Rayleigh fading for the scalar data link.

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "wpirsa/random.hpp"

namespace wpirsa {

using cvec = Eigen::VectorXcd;
using cmat = Eigen::MatrixXcd;

struct ChannelParams {
    double carrier_frequency_hz = 2.5e9;
    double speed_of_light_m_s = 299792458.0;
    double pathloss_exponent = 2.7;
    double rician_kappa_linear = 1.5848931924611136; // 2 dB
    int antennas = 4;
    double pb_user_distance_m = 3.0;
    double bs_user_distance_m = 70.0;
    double azimuth_rad = 0.0;
    // Scattering covariance R, antennas x antennas Hermitian PSD.
    // Empty matrix means identity.
    cmat scattering_covariance;

    void validate() const; // throws std::invalid_argument
};

// One PB->user channel realization. `los` and `scatter` are pathloss-free;
// the large-scale gain enters once through `beta`.
struct EhChannel {
    double beta = 0.0;
    cvec los;
    cvec scatter;
};

// User->BS small-scale gain with the BS-link pathloss factored out.
struct DataGain {
    std::complex<double> g{0.0, 0.0};
    double beta_bs = 0.0;
};

// c^2 / (16 pi^2 f^2 d^alpha)
double pathloss_gain(double distance_m, double frequency_hz, double exponent,
                     double speed_of_light_m_s = 299792458.0);

// Deterministic LOS component of a half-wavelength ULA:
// element m = sqrt(kappa/(2(1+kappa))) * exp(-i m pi sin(theta)).
cvec los_steering(double azimuth_rad, double kappa_linear, int antennas);

// Validates parameters once and precomputes the steering vector and the
// covariance factor, so per-frame sampling stays cheap.
class ChannelSampler {
public:
    explicit ChannelSampler(ChannelParams params);

    EhChannel sample_eh(RandomStream& rng) const;
    DataGain sample_data(RandomStream& rng) const;

    const ChannelParams& params() const { return params_; }
    double beta_pb() const { return beta_pb_; }
    double beta_bs() const { return beta_bs_; }
    const cvec& los() const { return los_; }

private:
    ChannelParams params_;
    double beta_pb_ = 0.0;
    double beta_bs_ = 0.0;
    double scatter_scale_ = 0.0; // sqrt(1/(1+kappa))
    cvec los_;
    bool identity_cov_ = true;
    cmat cov_factor_; // A with A A^H = R
};

// Convenience one-shot forms; draw-for-draw identical to a fresh sampler.
EhChannel sample_eh_channel(const ChannelParams& params, RandomStream& rng);
DataGain sample_data_gain(const ChannelParams& params, RandomStream& rng);

} // namespace wpirsa
