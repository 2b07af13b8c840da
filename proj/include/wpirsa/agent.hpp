#pragma once

// Per-user tabular Q-learning over (battery level, replica action) with
// feasibility masking and scheduled epsilon decay. Agents are independent:
// each owns its table and never reads another's.

#include <stdexcept>
#include <vector>

#include "wpirsa/harvest.hpp"
#include "wpirsa/random.hpp"

namespace wpirsa {

// Dense action-value table: states 0..num_levels-1, actions 0..num_actions-1.
class QTable {
public:
    QTable(int num_levels, int num_actions);
    static QTable random_init(int num_levels, int num_actions, RandomStream& rng);

    int num_levels() const { return num_levels_; }
    int num_actions() const { return num_actions_; }

    double value(int state, int action) const;
    double max_value(int state) const; // max over all actions

    // Q(s,a) <- (1-mu) Q(s,a) + mu (r + delta max_a' Q(s',a'))
    void update(int state, int action, double reward, int next_state,
                double learning_rate, double discount);

    // argmax over the feasible set, lowest action index on ties
    int greedy(int state, const std::vector<int>& feasible) const;

    struct Entry {
        int state;
        int action;
        double value;
    };
    std::vector<Entry> snapshot() const;

private:
    int index(int state, int action) const;
    int num_levels_;
    int num_actions_;
    std::vector<double> values_;
};

struct LearningParams {
    double learning_rate = 0.1;
    double discount = 0.1;
    double epsilon0 = 0.5;
    double epsilon_min = 0.01;
    double decay_rate = 1.0; // per-frame geometric factor
    long horizon = 5000;

    void validate() const;
};

// Geometric rate that brings epsilon0 down to epsilon_min at the horizon.
double auto_decay_rate(double epsilon0, double epsilon_min, long horizon);

// epsilon_t = max(epsilon_min, epsilon0 * decay_rate^t)
double epsilon_at(const LearningParams& p, long frame);

// Actions are additional replicas beyond the mandatory first copy. At level 0
// the only "action" is forced silence (0). Otherwise the total-copies budget
// floor(E/quantum) and the action-space bound N both apply.
std::vector<int> feasible_actions(const Battery& b, int max_extra_replicas);

// epsilon-greedy over the feasible set; throws std::logic_error when empty.
int select_action(const QTable& q, int state, double epsilon,
                  const std::vector<int>& feasible, RandomStream& rng);

} // namespace wpirsa
