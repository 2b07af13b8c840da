#include "wpirsa/protocol.hpp"

#include <algorithm>
#include <numeric>

namespace wpirsa {

void FrameAlloc::validate() const {
    if (slots_per_frame < 0)
        throw std::invalid_argument("frame: slots_per_frame must be >= 0");
    for (const auto& slots : user_slots) {
        if (static_cast<int>(slots.size()) > slots_per_frame)
            throw std::invalid_argument("frame: user has more replicas than slots");
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (slots[i] < 0 || slots[i] >= slots_per_frame)
                throw std::invalid_argument("frame: slot index out of range");
            if (i > 0 && slots[i] <= slots[i - 1])
                throw std::invalid_argument("frame: duplicate or unsorted slot indices");
        }
    }
}

std::vector<int> select_slots(int copies, int slots, RandomStream& rng) {
    if (copies < 0)
        throw std::invalid_argument("select_slots: copies must be >= 0");
    if (copies > slots)
        throw std::invalid_argument("select_slots: copies exceed slots per frame");
    std::vector<int> population(slots);
    std::iota(population.begin(), population.end(), 0);
    std::vector<int> chosen;
    chosen.reserve(copies);
    std::sample(population.begin(), population.end(), std::back_inserter(chosen),
                copies, rng.engine());
    return chosen; // std::sample preserves population order, already sorted
}

namespace {

// Shared peeling loop; `pick` chooses among the current degree-1 slots.
template <typename PickFn>
DecodeResult peel(const FrameAlloc& frame, PickFn&& pick) {
    frame.validate();
    const int k = frame.slots_per_frame;
    const int u = frame.users();

    std::vector<std::vector<int>> slot_users(k);
    for (int user = 0; user < u; ++user)
        for (int slot : frame.user_slots[user])
            slot_users[slot].push_back(user);

    std::vector<int> degree(k, 0);
    std::vector<char> removed(u, 0);
    for (int slot = 0; slot < k; ++slot)
        degree[slot] = static_cast<int>(slot_users[slot].size());

    DecodeResult result;
    std::vector<int> singles;
    for (;;) {
        singles.clear();
        for (int slot = 0; slot < k; ++slot)
            if (degree[slot] == 1)
                singles.push_back(slot);
        if (singles.empty())
            break;

        const int slot = pick(singles);
        int user = -1;
        for (int cand : slot_users[slot])
            if (!removed[cand]) {
                user = cand;
                break;
            }
        // degree bookkeeping guarantees exactly one survivor in a degree-1 slot
        removed[user] = 1;
        result.decoded_users.insert(user);
        result.decode_order.push_back(user);
        for (int s : frame.user_slots[user])
            --degree[s];
    }
    result.iterations = static_cast<int>(result.decode_order.size());
    return result;
}

} // namespace

DecodeResult sic_decode(const FrameAlloc& frame) {
    return peel(frame, [](const std::vector<int>& singles) { return singles.front(); });
}

DecodeResult sic_decode_randomized(const FrameAlloc& frame, RandomStream& rng) {
    return peel(frame, [&rng](const std::vector<int>& singles) {
        return singles[rng.uniform_int(0, static_cast<int>(singles.size()) - 1)];
    });
}

int crdsa_policy(const Battery& b) {
    const int affordable = b.max_copies();
    return std::min(affordable, 2);
}

ReplicaPmf empirical_pmf(const std::vector<int>& copy_counts, int max_count) {
    if (copy_counts.empty())
        throw UndefinedPmfError("empirical_pmf: empty history");
    if (max_count < 0)
        throw std::invalid_argument("empirical_pmf: max_count must be >= 0");
    ReplicaPmf pmf;
    pmf.probabilities.assign(static_cast<std::size_t>(max_count) + 1, 0.0);
    for (int c : copy_counts) {
        if (c < 0 || c > max_count)
            throw std::invalid_argument("empirical_pmf: count outside [0, max_count]");
        pmf.probabilities[static_cast<std::size_t>(c)] += 1.0;
    }
    const double n = static_cast<double>(copy_counts.size());
    for (double& p : pmf.probabilities)
        p /= n;
    return pmf;
}

} // namespace wpirsa
