#pragma once

#include <string>
#include <vector>

#include "ccav/core.hpp"
#include "ccav/instance.hpp"
#include "ccav/random_gen.hpp"

namespace test_helpers {

inline ccav::PreferenceOrder order(std::vector<int> ranking) {
    return ccav::PreferenceOrder{std::move(ranking)};
}

inline std::vector<std::string> alt_names(int m) {
    std::vector<std::string> names;
    for (int a = 0; a < m; ++a) names.push_back(std::string(1, static_cast<char>('a' + a)));
    return names;
}

inline ccav::Election election(int m, const std::vector<std::vector<int>>& rankings,
                               const std::string& id_prefix = "v") {
    ccav::Election e;
    e.alternatives = alt_names(m);
    for (size_t i = 0; i < rankings.size(); ++i)
        e.voters.push_back({id_prefix + std::to_string(i + 1), order(rankings[i])});
    return e;
}

inline std::vector<ccav::Voter> voters(const std::vector<std::vector<int>>& rankings,
                                       const std::string& id_prefix) {
    ccav::Election e = election(rankings.empty() ? 1 : static_cast<int>(rankings.front().size()),
                                rankings, id_prefix);
    return e.voters;
}

/// Instance over alternatives a,b,c,... with preferred given as an index.
inline ccav::ControlInstance instance(int m, int preferred, long long budget,
                                      const std::vector<std::vector<int>>& registered,
                                      const std::vector<std::vector<int>>& pool,
                                      ccav::BundlingSpec spec) {
    return ccav::make_control_instance(alt_names(m), std::string(1, static_cast<char>('a' + preferred)),
                                       budget, voters(registered, "v"), voters(pool, "w"),
                                       std::move(spec));
}

/// Explicit one-voter bundles for pool ids w1..wn (full_swap(0) would merge
/// duplicate orders instead).
inline ccav::BundlingSpec singleton_spec(int n, const std::string& prefix = "w") {
    std::vector<std::pair<std::string, std::vector<std::string>>> bundles;
    for (int i = 1; i <= n; ++i) {
        const std::string id = prefix + std::to_string(i);
        bundles.push_back({id, {id}});
    }
    return ccav::BundlingSpec::make_explicit(std::move(bundles));
}

inline ccav::PreferenceOrder random_order(ccav::Rng& rng, int m) {
    std::vector<int> r(m);
    for (int i = 0; i < m; ++i) r[i] = i;
    rng.shuffle(r);
    return order(r);
}

} // namespace test_helpers
