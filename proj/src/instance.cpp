#include "ccav/instance.hpp"

#include <algorithm>
#include <unordered_set>

namespace ccav {

std::string rule_name(Rule rule) {
    return rule == Rule::Plurality ? "plurality" : "condorcet";
}

Rule rule_from_name(const std::string& name) {
    if (name == "plurality") return Rule::Plurality;
    if (name == "condorcet") return Rule::Condorcet;
    throw ValidationError("unknown rule '" + name + "'");
}

Election ControlInstance::registered_election() const {
    return Election{alternatives, registered};
}

Election ControlInstance::election_with(const std::vector<int>& added_pool) const {
    Election e{alternatives, registered};
    e.voters.reserve(registered.size() + added_pool.size());
    for (int i : added_pool) e.voters.push_back(pool.at(i));
    return e;
}

std::optional<int> ControlInstance::pool_index_of(const std::string& id) const {
    for (int i = 0; i < pool_size(); ++i)
        if (pool[i].id == id) return i;
    return std::nullopt;
}

std::vector<int> ControlInstance::pool_indices_of(const std::vector<std::string>& ids) const {
    std::vector<int> out;
    out.reserve(ids.size());
    for (const std::string& id : ids) {
        const auto idx = pool_index_of(id);
        if (!idx) throw ValidationError("unknown unregistered voter id '" + id + "'");
        out.push_back(*idx);
    }
    return out;
}

std::vector<std::string> ControlInstance::pool_ids_of(std::vector<int> indices) const {
    std::vector<std::string> ids;
    ids.reserve(indices.size());
    for (int i : indices) ids.push_back(pool.at(i).id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

ControlInstance make_control_instance(std::vector<std::string> alternatives,
                                      const std::string& preferred,
                                      long long budget,
                                      std::vector<Voter> registered,
                                      std::vector<Voter> pool,
                                      BundlingSpec spec) {
    ControlInstance inst;
    inst.alternatives = std::move(alternatives);
    inst.registered = std::move(registered);
    inst.pool = std::move(pool);
    inst.spec = std::move(spec);
    inst.budget = budget;

    const auto it = std::find(inst.alternatives.begin(), inst.alternatives.end(), preferred);
    if (it == inst.alternatives.end())
        throw ValidationError("preferred alternative '" + preferred + "' is not in the alternative set");
    inst.preferred = static_cast<int>(it - inst.alternatives.begin());
    if (budget < 0) throw ValidationError("budget must be nonnegative");

    // Joint id-disjointness and per-election well-formedness.
    Election combined{inst.alternatives, inst.registered};
    combined.voters.insert(combined.voters.end(), inst.pool.begin(), inst.pool.end());
    validate_election(combined);

    inst.bundles = resolve_bundles(inst.pool, inst.spec);
    return inst;
}

} // namespace ccav
