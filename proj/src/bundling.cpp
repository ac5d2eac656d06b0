#include "ccav/bundling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace ccav {

int BundlingMap::max_bundle_size() const {
    int b = bundles.empty() ? 0 : 1;
    for (const auto& bundle : bundles) b = std::max(b, static_cast<int>(bundle.size()));
    return b;
}

namespace {

std::vector<std::vector<int>> pairwise_distances(const std::vector<Voter>& pool) {
    const int n = static_cast<int>(pool.size());
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            dist[i][j] = dist[j][i] = swap_distance(pool[i].order, pool[j].order);
    return dist;
}

BundlingMap full_swap_map(const std::vector<std::vector<int>>& dist, int n, int d) {
    BundlingMap map;
    map.bundles.resize(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dist[i][j] <= d) map.bundles[i].push_back(j);
    return map;
}

} // namespace

BundlingMap resolve_bundles(const std::vector<Voter>& pool, const BundlingSpec& spec) {
    const int n = static_cast<int>(pool.size());
    if (spec.kind == BundlingKind::FullSwap) {
        if (spec.full_swap_d < 0) throw ValidationError("full_swap d must be nonnegative");
        return full_swap_map(pairwise_distances(pool), n, spec.full_swap_d);
    }

    std::unordered_map<std::string, int> index_of;
    for (int i = 0; i < n; ++i) index_of[pool[i].id] = i;

    BundlingMap map;
    map.bundles.resize(n);
    std::vector<char> has_entry(n, 0);
    for (const auto& [leader, members] : spec.explicit_bundles) {
        auto it = index_of.find(leader);
        if (it == index_of.end())
            throw ValidationError("bundle leader '" + leader + "' is not an unregistered voter");
        const int li = it->second;
        if (has_entry[li]) throw ValidationError("duplicate bundle entry for voter '" + leader + "'");
        has_entry[li] = 1;
        std::set<int> bundle;
        for (const std::string& member : members) {
            auto mit = index_of.find(member);
            if (mit == index_of.end())
                throw ValidationError("bundle of '" + leader + "' references unknown voter '" + member + "'");
            bundle.insert(mit->second);
        }
        if (!bundle.count(li))
            throw ValidationError("leader not in own bundle: '" + leader + "'");
        map.bundles[li].assign(bundle.begin(), bundle.end());
    }
    for (int i = 0; i < n; ++i)
        if (!has_entry[i])
            throw ValidationError("bundling is missing an entry for voter '" + pool[i].id + "'");
    return map;
}

std::vector<int> closure(const BundlingMap& map, const std::vector<int>& leaders) {
    std::set<int> result;
    for (int leader : leaders) {
        if (leader < 0 || leader >= map.pool_size())
            throw ValidationError("closure: unknown leader index");
        result.insert(map.bundles[leader].begin(), map.bundles[leader].end());
    }
    return {result.begin(), result.end()};
}

BundlingGraph bundling_graph(const BundlingMap& map) {
    BundlingGraph g;
    g.num_vertices = map.pool_size();
    for (int z = 0; z < map.pool_size(); ++z)
        for (int y : map.bundles[z])
            if (y != z) g.arcs.emplace_back(z, y);
    return g;
}

bool is_leader_anonymous(const BundlingMap& map, const std::vector<Voter>& pool) {
    const int n = static_cast<int>(pool.size());
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (pool[x].order == pool[y].order && map.bundles[x] != map.bundles[y]) return false;
    return true;
}

bool is_follower_anonymous(const BundlingMap& map, const std::vector<Voter>& pool) {
    const int n = static_cast<int>(pool.size());
    for (int z = 0; z < n; ++z) {
        const auto& bundle = map.bundles[z];
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                if (!(pool[x].order == pool[y].order)) continue;
                const bool in_x = std::binary_search(bundle.begin(), bundle.end(), x);
                const bool in_y = std::binary_search(bundle.begin(), bundle.end(), y);
                if (in_x != in_y) return false;
            }
    }
    return true;
}

bool is_anonymous(const BundlingMap& map, const std::vector<Voter>& pool) {
    return is_leader_anonymous(map, pool) && is_follower_anonymous(map, pool);
}

std::optional<int> infer_full_d(const BundlingMap& map, const std::vector<Voter>& pool) {
    const int n = static_cast<int>(pool.size());
    const auto dist = pairwise_distances(pool);
    std::set<int> candidates{0};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) candidates.insert(dist[i][j]);
    for (int d : candidates)
        if (full_swap_map(dist, n, d) == map) return d;
    return std::nullopt;
}

} // namespace ccav
