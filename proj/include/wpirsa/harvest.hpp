#pragma once

// Energy side of the link: MRT incident power under full or average CSI,
// the non-linear harvester curve, and the quantized battery.

#include <stdexcept>

#include "wpirsa/channel.hpp"

namespace wpirsa {

enum class CsiMode { FullCsi, AverageCsi };
enum class CostModel { Fixed, ChannelScaled };

struct DegenerateChannelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InsufficientEnergyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Harvester transfer curve, input and output in mW:
// G(p) = W (1 - exp(-c0 p)) / (1 + exp(-c0 (p - c1)))
struct EhCurve {
    double saturation_mw = 10.73;
    double c0 = 0.2308;
    double c1 = 5.365;

    void validate() const;
};

// Received RF power at the user in mW for a beamformed charging slot.
// FullCsi aligns with the realized channel; AverageCsi with its LOS mean.
double incident_power_mw(const EhChannel& ch, double pb_power_w, CsiMode mode);

double harvest_rate_mw(const EhCurve& curve, double incident_mw);

// Transmit-side energy for `copies` replicas. Fixed costs copies*quantum;
// ChannelScaled multiplies by |g|^2 / d_bs^alpha as printed in the energy
// recursion.
double transmit_cost_j(int copies, double quantum_j, CostModel model,
                       const DataGain& gain, double bs_distance_m,
                       double pathloss_exponent);

// Continuous stored energy clipped to [0, capacity*quantum]. The MDP side
// observes floor(E/quantum); a relative tolerance absorbs grid round-off
// from repeated charge/spend arithmetic.
class Battery {
public:
    Battery(double quantum_j, int capacity_packets, double initial_j = 0.0);

    double stored_joules() const { return stored_j_; }
    double quantum_joules() const { return quantum_j_; }
    int capacity_packets() const { return capacity_packets_; }
    double capacity_joules() const { return capacity_j_; }

    int level() const;      // floor(E/quantum), in {0,...,capacity}
    int max_copies() const; // total transmittable copies = level()
    // additional replicas beyond the mandatory first copy; 0 at level 0
    int max_extra_replicas() const;

    // E <- min(capacity, E + rate_mw * 1e-3 * t_c_s); returns credited joules
    double charge(double rate_mw, double t_c_s);
    // throws InsufficientEnergyError when cost exceeds stored energy
    void spend(double cost_j);

private:
    double quantum_j_;
    int capacity_packets_;
    double capacity_j_;
    double stored_j_;
};

} // namespace wpirsa
