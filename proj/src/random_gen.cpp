#include "ccav/random_gen.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ccav/domains.hpp"

namespace ccav {

int Rng::uniform(int n) {
    if (n <= 0) throw ValidationError("uniform() needs a positive bound");
    const std::uint64_t span = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw >= limit);
    return static_cast<int>(draw % span);
}

RandomKind random_kind_from_name(const std::string& name) {
    if (name == "general") return RandomKind::General;
    if (name == "single_peaked") return RandomKind::SinglePeaked;
    if (name == "single_crossing") return RandomKind::SingleCrossing;
    if (name == "anonymous") return RandomKind::Anonymous;
    throw ValidationError("unknown random instance kind '" + name + "'");
}

namespace {

PreferenceOrder random_order(Rng& rng, int m) {
    PreferenceOrder o;
    o.ranking.resize(m);
    std::iota(o.ranking.begin(), o.ranking.end(), 0);
    rng.shuffle(o.ranking);
    return o;
}

PreferenceOrder peaked_order(Rng& rng, const std::vector<int>& axis) {
    const int m = static_cast<int>(axis.size());
    PreferenceOrder o;
    int lo = rng.uniform(m), hi = lo;
    o.ranking.push_back(axis[lo]);
    while (static_cast<int>(o.ranking.size()) < m) {
        const bool can_left = lo > 0, can_right = hi < m - 1;
        const bool go_left = can_left && (!can_right || rng.uniform(2) == 0);
        if (go_left) o.ranking.push_back(axis[--lo]);
        else o.ranking.push_back(axis[++hi]);
    }
    return o;
}

std::vector<PreferenceOrder> swap_path(Rng& rng, int m) {
    PreferenceOrder cur = random_order(rng, m);
    const PreferenceOrder target = random_order(rng, m);
    const std::vector<int> target_pos = target.positions();
    std::vector<PreferenceOrder> path{cur};
    while (!(cur == target)) {
        std::vector<int> inverted;
        for (int i = 0; i + 1 < m; ++i)
            if (target_pos[cur.ranking[i]] > target_pos[cur.ranking[i + 1]]) inverted.push_back(i);
        const int i = inverted[rng.uniform(static_cast<int>(inverted.size()))];
        std::swap(cur.ranking[i], cur.ranking[i + 1]);
        path.push_back(cur);
    }
    return path;
}

} // namespace

ControlInstance make_random_instance(RandomKind kind, const RandomParams& params, std::uint64_t seed) {
    if (params.alternatives < 1 || params.alternatives > 8)
        throw ValidationError("random instances support 1..8 alternatives");
    if (params.registered < 0 || params.registered > 60 || params.unregistered < 0 ||
        params.unregistered > 40)
        throw ValidationError("random instance voter counts outside the configured caps");
    if (params.budget < 0 || params.full_d < 0)
        throw ValidationError("random instance budget and d must be nonnegative");

    Rng rng(seed);
    const int m = params.alternatives;
    std::vector<Voter> registered, pool;
    const auto fill = [&](auto make) {
        for (int i = 0; i < params.registered; ++i)
            registered.push_back({"v" + std::to_string(i + 1), make()});
        for (int i = 0; i < params.unregistered; ++i)
            pool.push_back({"w" + std::to_string(i + 1), make()});
    };

    switch (kind) {
    case RandomKind::General:
    case RandomKind::Anonymous:
        fill([&] { return random_order(rng, m); });
        break;
    case RandomKind::SinglePeaked: {
        std::vector<int> axis(m);
        std::iota(axis.begin(), axis.end(), 0);
        rng.shuffle(axis);
        fill([&] { return peaked_order(rng, axis); });
        break;
    }
    case RandomKind::SingleCrossing: {
        const std::vector<PreferenceOrder> path = swap_path(rng, m);
        const int len = static_cast<int>(path.size());
        fill([&] { return path[rng.uniform(len)]; });
        break;
    }
    }

    BundlingSpec spec;
    if (kind == RandomKind::General) {
        std::vector<std::pair<std::string, std::vector<std::string>>> bundles;
        for (int i = 0; i < params.unregistered; ++i) {
            std::vector<std::string> members{pool[i].id};
            for (int j = 0; j < params.unregistered; ++j)
                if (j != i && rng.uniform(4) == 0) members.push_back(pool[j].id);
            bundles.push_back({pool[i].id, std::move(members)});
        }
        spec = BundlingSpec::make_explicit(std::move(bundles));
    } else {
        spec = BundlingSpec::full_swap(params.full_d);
    }

    std::vector<std::string> names;
    for (int a = 0; a < m; ++a) names.push_back(std::string(1, static_cast<char>('A' + a)));
    const std::string preferred = names[rng.uniform(m)];
    ControlInstance inst = make_control_instance(std::move(names), preferred, params.budget,
                                                 std::move(registered), std::move(pool), spec);

    if (kind == RandomKind::SingleCrossing) {
        Election combined{inst.alternatives, inst.registered};
        combined.voters.insert(combined.voters.end(), inst.pool.begin(), inst.pool.end());
        if (!find_single_crossing_order(combined))
            throw std::logic_error("single-crossing sampler produced a non-single-crossing election");
    }
    return inst;
}

} // namespace ccav
