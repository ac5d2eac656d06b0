#pragma once

#include <optional>
#include <utility>

#include "ccav/core.hpp"

namespace ccav {

enum class BundlingKind { Explicit, FullSwap };

/// Either an explicit per-voter bundle list or a full-d rule (the bundle of x
/// is every pool voter within swap distance d of x).
struct BundlingSpec {
    BundlingKind kind = BundlingKind::FullSwap;
    int full_swap_d = 0;
    // Explicit bundles in input order; ids refer to unregistered voters only.
    std::vector<std::pair<std::string, std::vector<std::string>>> explicit_bundles;

    static BundlingSpec full_swap(int d) {
        BundlingSpec s;
        s.kind = BundlingKind::FullSwap;
        s.full_swap_d = d;
        return s;
    }
    static BundlingSpec make_explicit(std::vector<std::pair<std::string, std::vector<std::string>>> bundles) {
        BundlingSpec s;
        s.kind = BundlingKind::Explicit;
        s.explicit_bundles = std::move(bundles);
        return s;
    }
};

/// Resolved bundling function over a pool: bundles[i] is the sorted index set
/// of kappa(pool[i]) and always contains i.
struct BundlingMap {
    std::vector<std::vector<int>> bundles;

    int pool_size() const { return static_cast<int>(bundles.size()); }
    int max_bundle_size() const;

    bool operator==(const BundlingMap&) const = default;
};

/// Directed graph with an arc z -> y whenever y is in kappa(z), y != z.
struct BundlingGraph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> arcs;
};

/// FullSwap: kappa(x) = { y : swap_distance(x, y) <= d }. Explicit: validated
/// identity copy. Throws ValidationError on a spec violating its invariants.
BundlingMap resolve_bundles(const std::vector<Voter>& pool, const BundlingSpec& spec);

/// One-level union of the leaders' bundles (never transitive). Sorted result.
std::vector<int> closure(const BundlingMap& map, const std::vector<int>& leaders);

BundlingGraph bundling_graph(const BundlingMap& map);

bool is_leader_anonymous(const BundlingMap& map, const std::vector<Voter>& pool);
bool is_follower_anonymous(const BundlingMap& map, const std::vector<Voter>& pool);
bool is_anonymous(const BundlingMap& map, const std::vector<Voter>& pool);

/// Smallest d with map == resolve_bundles(pool, FullSwap(d)), if any. Only the
/// realized pairwise distances (and 0) can change the map, so only those are tried.
std::optional<int> infer_full_d(const BundlingMap& map, const std::vector<Voter>& pool);

} // namespace ccav
