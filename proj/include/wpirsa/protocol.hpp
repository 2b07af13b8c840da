#pragma once

// Frame-level random access: per-frame user x slot bipartite graph,
// successive interference cancellation by degree-1 peeling, and the
// fixed-two-replica CRDSA baseline policy.

#include <set>
#include <stdexcept>
#include <vector>

#include "wpirsa/harvest.hpp"
#include "wpirsa/random.hpp"

namespace wpirsa {

struct UndefinedPmfError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One frame's replica placement. user_slots[u] holds user u's chosen slot
// indices, strictly increasing; an empty vector means the user was silent.
struct FrameAlloc {
    int slots_per_frame = 0;
    std::vector<std::vector<int>> user_slots;

    int users() const { return static_cast<int>(user_slots.size()); }
    void validate() const; // throws std::invalid_argument
};

struct DecodeResult {
    std::set<int> decoded_users;
    std::vector<int> decode_order; // one user per peeling iteration
    int iterations = 0;
};

// Empirical distribution of per-frame copy counts, indexed 0..max_count.
struct ReplicaPmf {
    std::vector<double> probabilities;
};

// Uniformly random subset of {0,...,slots-1} with exactly `copies` elements,
// returned sorted.
std::vector<int> select_slots(int copies, int slots, RandomStream& rng);

// Iterated peeling: decode any degree-1 slot's user, remove all of that
// user's replicas, repeat to fixpoint. Ties among degree-1 slots go to the
// lowest slot index; the decoded set is order-independent.
DecodeResult sic_decode(const FrameAlloc& frame);

// Same peeling with uniformly random choice among degree-1 slots each
// iteration; exists so confluence can be exercised from tests.
DecodeResult sic_decode_randomized(const FrameAlloc& frame, RandomStream& rng);

// 2 replicas when affordable, else 1, else silence.
int crdsa_policy(const Battery& b);

ReplicaPmf empirical_pmf(const std::vector<int>& copy_counts, int max_count);

} // namespace wpirsa
