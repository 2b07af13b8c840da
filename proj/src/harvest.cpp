#include "wpirsa/harvest.hpp"

#include <algorithm>
#include <cmath>

namespace wpirsa {

namespace {

// Grid tolerance for level(): one part in 1e9 of a quantum.
constexpr double kGridRelTol = 1e-9;

} // namespace

void EhCurve::validate() const {
    if (!(saturation_mw > 0.0))
        throw std::invalid_argument("eh_saturation_mw must be > 0");
    if (!(c0 > 0.0))
        throw std::invalid_argument("eh_c0 must be > 0");
}

double incident_power_mw(const EhChannel& ch, double pb_power_w, CsiMode mode) {
    if (!(pb_power_w > 0.0))
        throw std::invalid_argument("incident_power: pb power must be > 0");
    double quad = 0.0;
    if (mode == CsiMode::FullCsi) {
        quad = (ch.los + ch.scatter).squaredNorm();
    } else {
        const double los_norm = ch.los.norm();
        if (los_norm <= 0.0)
            throw DegenerateChannelError("incident_power: zero-norm LOS vector under A-CSI");
        const std::complex<double> proj = ch.los.dot(ch.scatter) / los_norm;
        quad = std::norm(los_norm + proj);
    }
    return ch.beta * pb_power_w * quad * 1e3; // W -> mW
}

double harvest_rate_mw(const EhCurve& curve, double incident_mw) {
    if (incident_mw < 0.0)
        throw std::invalid_argument("harvest_rate: incident power must be >= 0");
    const double num = 1.0 - std::exp(-curve.c0 * incident_mw);
    const double den = 1.0 + std::exp(-curve.c0 * (incident_mw - curve.c1));
    return curve.saturation_mw * num / den;
}

double transmit_cost_j(int copies, double quantum_j, CostModel model,
                       const DataGain& gain, double bs_distance_m,
                       double pathloss_exponent) {
    if (copies < 0)
        throw std::invalid_argument("transmit_cost: copies must be >= 0");
    const double base = static_cast<double>(copies) * quantum_j;
    if (model == CostModel::Fixed)
        return base;
    return base * std::norm(gain.g) / std::pow(bs_distance_m, pathloss_exponent);
}

Battery::Battery(double quantum_j, int capacity_packets, double initial_j)
    : quantum_j_(quantum_j),
      capacity_packets_(capacity_packets),
      capacity_j_(quantum_j * capacity_packets),
      stored_j_(initial_j) {
    if (!(quantum_j > 0.0))
        throw std::invalid_argument("battery quantum must be > 0");
    if (capacity_packets < 1)
        throw std::invalid_argument("battery capacity must be >= 1 packet");
    if (initial_j < 0.0 || initial_j > capacity_j_)
        throw std::invalid_argument("battery initial energy outside [0, capacity]");
}

int Battery::level() const {
    const int l = static_cast<int>(std::floor(stored_j_ / quantum_j_ + kGridRelTol));
    return std::clamp(l, 0, capacity_packets_);
}

int Battery::max_copies() const { return level(); }

int Battery::max_extra_replicas() const {
    const int l = level();
    return l >= 1 ? l - 1 : 0;
}

double Battery::charge(double rate_mw, double t_c_s) {
    if (rate_mw < 0.0)
        throw std::invalid_argument("charge: rate must be >= 0");
    if (t_c_s < 0.0)
        throw std::invalid_argument("charge: duration must be >= 0");
    const double before = stored_j_;
    stored_j_ = std::min(capacity_j_, stored_j_ + rate_mw * 1e-3 * t_c_s);
    return stored_j_ - before;
}

void Battery::spend(double cost_j) {
    if (cost_j < 0.0)
        throw std::invalid_argument("spend: cost must be >= 0");
    if (cost_j > stored_j_ + kGridRelTol * quantum_j_)
        throw InsufficientEnergyError("spend: cost exceeds stored energy");
    stored_j_ = std::max(0.0, stored_j_ - cost_j);
}

} // namespace wpirsa
