#include "wpirsa/agent.hpp"

#include <algorithm>
#include <cmath>

namespace wpirsa {

QTable::QTable(int num_levels, int num_actions)
    : num_levels_(num_levels), num_actions_(num_actions) {
    if (num_levels < 1 || num_actions < 1)
        throw std::invalid_argument("QTable: dimensions must be >= 1");
    values_.assign(static_cast<std::size_t>(num_levels) * num_actions, 0.0);
}

QTable QTable::random_init(int num_levels, int num_actions, RandomStream& rng) {
    QTable q(num_levels, num_actions);
    for (double& v : q.values_)
        v = rng.uniform01();
    return q;
}

int QTable::index(int state, int action) const {
    if (state < 0 || state >= num_levels_ || action < 0 || action >= num_actions_)
        throw std::out_of_range("QTable: (state, action) outside table");
    return state * num_actions_ + action;
}

double QTable::value(int state, int action) const {
    return values_[static_cast<std::size_t>(index(state, action))];
}

double QTable::max_value(int state) const {
    const int base = index(state, 0);
    double best = values_[static_cast<std::size_t>(base)];
    for (int a = 1; a < num_actions_; ++a)
        best = std::max(best, values_[static_cast<std::size_t>(base + a)]);
    return best;
}

void QTable::update(int state, int action, double reward, int next_state,
                    double learning_rate, double discount) {
    const double target = reward + discount * max_value(next_state);
    double& cell = values_[static_cast<std::size_t>(index(state, action))];
    cell = (1.0 - learning_rate) * cell + learning_rate * target;
}

int QTable::greedy(int state, const std::vector<int>& feasible) const {
    if (feasible.empty())
        throw std::logic_error("QTable::greedy: empty feasible set");
    int best = feasible.front();
    double best_value = value(state, best);
    for (std::size_t i = 1; i < feasible.size(); ++i) {
        const double v = value(state, feasible[i]);
        if (v > best_value) {
            best_value = v;
            best = feasible[i];
        }
    }
    return best;
}

std::vector<QTable::Entry> QTable::snapshot() const {
    std::vector<Entry> flat;
    flat.reserve(values_.size());
    for (int s = 0; s < num_levels_; ++s)
        for (int a = 0; a < num_actions_; ++a)
            flat.push_back({s, a, value(s, a)});
    return flat;
}

void LearningParams::validate() const {
    if (!(learning_rate > 0.0) || learning_rate > 1.0)
        throw std::invalid_argument("learning_rate must be in (0, 1]");
    if (discount < 0.0 || discount >= 1.0)
        throw std::invalid_argument("discount must be in [0, 1)");
    if (epsilon0 < 0.0 || epsilon0 > 1.0)
        throw std::invalid_argument("epsilon0 must be in [0, 1]");
    if (epsilon_min < 0.0 || epsilon_min > 1.0)
        throw std::invalid_argument("epsilon_min must be in [0, 1]");
    if (!(decay_rate > 0.0) || decay_rate > 1.0)
        throw std::invalid_argument("epsilon_decay must be in (0, 1]");
    if (horizon < 1)
        throw std::invalid_argument("horizon must be >= 1");
}

double auto_decay_rate(double epsilon0, double epsilon_min, long horizon) {
    if (horizon < 1 || epsilon0 <= 0.0 || epsilon_min <= 0.0 || epsilon_min >= epsilon0)
        return 1.0;
    return std::pow(epsilon_min / epsilon0, 1.0 / static_cast<double>(horizon));
}

double epsilon_at(const LearningParams& p, long frame) {
    if (frame < 0)
        throw std::invalid_argument("epsilon_at: frame must be >= 0");
    const double eps = p.epsilon0 * std::pow(p.decay_rate, static_cast<double>(frame));
    return std::max(p.epsilon_min, eps);
}

std::vector<int> feasible_actions(const Battery& b, int max_extra_replicas) {
    const int budget = b.max_copies();
    if (budget == 0)
        return {0}; // forced silence
    const int top = std::min(budget - 1, max_extra_replicas);
    std::vector<int> actions(static_cast<std::size_t>(top) + 1);
    for (int a = 0; a <= top; ++a)
        actions[static_cast<std::size_t>(a)] = a;
    return actions;
}

int select_action(const QTable& q, int state, double epsilon,
                  const std::vector<int>& feasible, RandomStream& rng) {
    if (feasible.empty())
        throw std::logic_error("select_action: empty feasible set");
    const double x = rng.uniform01();
    if (x < epsilon)
        return feasible[static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<int>(feasible.size()) - 1))];
    return q.greedy(state, feasible);
}

} // namespace wpirsa
