#pragma once

// Frame loop orchestration: charge, observe, act, allocate slots, decode,
// reward, learn. One Simulator instance is one seeded run; distinct runs are
// independent streams derived from the master seed.

#include <cstdint>
#include <optional>
#include <vector>

#include "wpirsa/agent.hpp"
#include "wpirsa/channel.hpp"
#include "wpirsa/harvest.hpp"
#include "wpirsa/protocol.hpp"

namespace wpirsa {

enum class Scheme { QLearning, Crdsa };

struct ScenarioConfig {
    // population / scheme
    int users = 4;
    Scheme scheme = Scheme::QLearning;
    CsiMode csi_mode = CsiMode::FullCsi;
    CostModel cost_model = CostModel::Fixed;
    bool shared_reward = false;
    bool q_init_random = false;

    // channel
    double carrier_frequency_hz = 2.5e9;
    double speed_of_light_m_s = 299792458.0;
    double pathloss_exponent = 2.7;
    double kappa_db = 2.0; // converted to linear at use
    int antennas = 4;
    double pb_user_distance_m = 3.0;
    double bs_user_distance_m = 70.0;
    double azimuth_rad = 0.0;
    double scattering_corr_coeff = 0.0; // R_ij = rho^|i-j|; 0 = identity

    // harvester
    double eh_saturation_mw = 10.73;
    double eh_c0 = 0.2308;
    double eh_c1 = 5.365;
    double charge_efficiency = 1.0;

    // energy / battery (quantum = tx_power_mw * t_t_ms * packet_size, in J)
    double tx_power_mw = 10.0;
    double packet_size = 21.0;
    int capacity_packets = 10;
    double initial_energy_packets = 0.0;
    double pb_power_w = 1.0;
    double t_c_ms = 1.0;
    double t_t_ms = 1.0;

    // protocol
    int slots_per_frame = 5;
    int max_extra_replicas = 5;

    // learning
    double learning_rate = 0.1;
    double discount = 0.1;
    double epsilon0 = 0.5;
    double epsilon_min = 0.01;
    std::optional<double> epsilon_decay; // empty = reach epsilon_min at `frames`

    // experiment
    long frames = 5000;
    int runs = 10;
    std::uint64_t seed = 1;

    double quantum_j() const;
    ChannelParams channel_params() const;
    EhCurve eh_curve() const;
    LearningParams learning_params() const;
    void validate() const; // throws std::invalid_argument naming the config key

    bool operator==(const ScenarioConfig&) const = default;
};

struct FrameMetrics {
    long frame = 0;
    std::vector<int> action;        // additional replicas chosen
    std::vector<int> copies;        // total copies sent (0 = silent)
    std::vector<int> energy_level;  // observed post-charge level
    std::vector<double> energy_j;   // stored energy after spend
    std::vector<double> harvested_j; // credited this frame (after capacity clip)
    std::vector<double> spent_j;
    std::vector<double> reward;
    std::vector<char> decoded;
    int decoded_count = 0;
};

struct RunSummary {
    double mean_success_per_frame = 0.0;
    std::vector<double> success_per_frame;    // decoded count per frame
    std::vector<double> mean_level_per_frame; // mean stored energy in quanta
    std::vector<ReplicaPmf> replica_pmf;      // per user, over total copies
    long total_copies = 0;
    std::vector<QTable> qtables; // final per-user tables
};

struct AggregateSummary {
    int runs = 0;
    double mean_success = 0.0;
    double std_success = 0.0; // sample std across runs (n-1), 0 for n=1
    std::vector<double> mean_success_per_frame; // across runs, per frame
    std::vector<double> mean_level_per_frame;
};

class Simulator {
public:
    Simulator(const ScenarioConfig& cfg, std::uint64_t run_seed);

    FrameMetrics step();
    // Completes the last pending Q update with one closing charge-only step,
    // then assembles the summary. Call once, after the last step().
    RunSummary finalize();

    long frame_index() const { return frame_; }
    const Battery& battery(int user) const { return batteries_.at(user); }
    const QTable& qtable(int user) const { return qtables_.at(user); }

private:
    struct Pending {
        int state = 0;
        int action = 0;
        double reward = 0.0;
        bool valid = false;
    };

    double charge_user(int user); // samples channel, charges; returns credited J
    int pick_copies(int user, double epsilon, int* action_out);

    ScenarioConfig cfg_;
    ChannelSampler sampler_;
    EhCurve curve_;
    LearningParams learn_;
    double quantum_j_;
    double t_c_s_;
    int action_bound_; // min(max_extra_replicas, slots_per_frame - 1)
    int pmf_max_count_;
    RandomStream rng_;
    std::vector<Battery> batteries_;
    std::vector<QTable> qtables_;
    std::vector<Pending> pending_;
    std::vector<DataGain> frame_gain_; // this frame's data gains, per user
    long frame_ = 0;
    long total_copies_ = 0;
    std::vector<double> success_per_frame_;
    std::vector<double> mean_level_per_frame_;
    std::vector<std::vector<int>> copies_history_;
};

// Steps `cfg.frames` frames with the run's derived seed.
RunSummary run_scenario(const ScenarioConfig& cfg, int run_index);

// Mean and sample std across runs for every scalar series.
// Throws std::invalid_argument on an empty or shape-mismatched input.
AggregateSummary aggregate(const std::vector<RunSummary>& summaries);

} // namespace wpirsa
