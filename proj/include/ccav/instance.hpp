#pragma once

#include "ccav/bundling.hpp"
#include "ccav/core.hpp"

namespace ccav {

enum class Rule { Plurality, Condorcet };

std::string rule_name(Rule rule);
Rule rule_from_name(const std::string& name);

/// A control instance: registered election (C, V), unregistered pool W with a
/// bundling function over it, preferred alternative p and budget k.
struct ControlInstance {
    std::vector<std::string> alternatives;
    int preferred = 0;
    long long budget = 0;
    std::vector<Voter> registered;
    std::vector<Voter> pool;
    BundlingSpec spec;
    BundlingMap bundles; // resolved over pool indices

    int num_alternatives() const { return static_cast<int>(alternatives.size()); }
    int pool_size() const { return static_cast<int>(pool.size()); }

    Election registered_election() const;
    /// Election (C, V union pool[added...]).
    Election election_with(const std::vector<int>& added_pool) const;

    std::optional<int> pool_index_of(const std::string& id) const;
    std::vector<int> pool_indices_of(const std::vector<std::string>& ids) const; // throws on unknown
    std::vector<std::string> pool_ids_of(std::vector<int> indices) const;        // sorted by id
};

/// Validates all invariants and resolves the bundling spec.
ControlInstance make_control_instance(std::vector<std::string> alternatives,
                                      const std::string& preferred,
                                      long long budget,
                                      std::vector<Voter> registered,
                                      std::vector<Voter> pool,
                                      BundlingSpec spec);

struct Solution {
    bool feasible = false;
    std::vector<std::string> selected; // leader ids, ascending
    std::vector<std::string> added;    // closure of the leaders, ascending
    ScoreTable final_scores;           // plurality scores of the final election
    std::string solver;
    bool optimal = false;

    int size() const { return static_cast<int>(selected.size()); }
};

} // namespace ccav
