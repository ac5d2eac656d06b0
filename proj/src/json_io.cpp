#include "ccav/json_io.hpp"

#include <algorithm>
#include <unordered_map>

#include "ccav/bundling.hpp"
#include "ccav/domains.hpp"

namespace ccav {

using nlohmann::json;

namespace {

const json& require(const json& doc, const std::string& key, const std::string& path) {
    if (!doc.is_object()) throw ValidationError(path + ": expected an object");
    const auto it = doc.find(key);
    if (it == doc.end()) throw ValidationError(path + ": missing field '" + key + "'");
    return *it;
}

std::string as_string(const json& v, const std::string& path) {
    if (!v.is_string()) throw ValidationError(path + ": expected a string");
    return v.get<std::string>();
}

long long as_integer(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw ValidationError(path + ": expected an integer");
    return v.get<long long>();
}

std::vector<Voter> parse_voters(const json& arr, const std::string& path,
                                const std::unordered_map<std::string, int>& alt_index, int m) {
    if (!arr.is_array()) throw ValidationError(path + ": expected an array");
    std::vector<Voter> voters;
    for (size_t i = 0; i < arr.size(); ++i) {
        const std::string vpath = path + "[" + std::to_string(i) + "]";
        Voter v;
        v.id = as_string(require(arr[i], "id", vpath), vpath + ".id");
        const json& order = require(arr[i], "order", vpath);
        if (!order.is_array()) throw ValidationError(vpath + ".order: expected an array");
        std::vector<char> seen(m, 0);
        for (const json& name : order) {
            const auto it = alt_index.find(as_string(name, vpath + ".order"));
            if (it == alt_index.end() || seen[it->second])
                throw ValidationError(vpath + ".order: not a permutation of the alternatives");
            seen[it->second] = 1;
            v.order.ranking.push_back(it->second);
        }
        if (static_cast<int>(v.order.ranking.size()) != m)
            throw ValidationError(vpath + ".order: not a permutation of the alternatives");
        voters.push_back(std::move(v));
    }
    return voters;
}

} // namespace

ControlInstance instance_from_json(const json& doc) {
    const json& alts = require(doc, "alternatives", "$");
    if (!alts.is_array() || alts.empty())
        throw ValidationError("$.alternatives: expected a nonempty array");
    std::vector<std::string> alternatives;
    std::unordered_map<std::string, int> alt_index;
    for (size_t i = 0; i < alts.size(); ++i) {
        alternatives.push_back(as_string(alts[i], "$.alternatives[" + std::to_string(i) + "]"));
        if (!alt_index.emplace(alternatives.back(), static_cast<int>(i)).second)
            throw ValidationError("$.alternatives: ids are not distinct");
    }
    const int m = static_cast<int>(alternatives.size());

    const std::string preferred = as_string(require(doc, "preferred", "$"), "$.preferred");
    const long long budget = as_integer(require(doc, "budget", "$"), "$.budget");
    std::vector<Voter> registered = parse_voters(require(doc, "registered", "$"), "$.registered", alt_index, m);
    std::vector<Voter> pool = parse_voters(require(doc, "unregistered", "$"), "$.unregistered", alt_index, m);

    const json& bundling = require(doc, "bundling", "$");
    const std::string kind = as_string(require(bundling, "kind", "$.bundling"), "$.bundling.kind");
    BundlingSpec spec;
    if (kind == "full_swap") {
        spec = BundlingSpec::full_swap(
            static_cast<int>(as_integer(require(bundling, "d", "$.bundling"), "$.bundling.d")));
    } else if (kind == "explicit") {
        const json& bundles = require(bundling, "bundles", "$.bundling");
        if (!bundles.is_object()) throw ValidationError("$.bundling.bundles: expected an object");
        std::vector<std::pair<std::string, std::vector<std::string>>> entries;
        for (const auto& [leader, members] : bundles.items()) {
            if (!members.is_array())
                throw ValidationError("$.bundling.bundles." + leader + ": expected an array");
            std::vector<std::string> ids;
            for (const json& v : members)
                ids.push_back(as_string(v, "$.bundling.bundles." + leader));
            entries.emplace_back(leader, std::move(ids));
        }
        spec = BundlingSpec::make_explicit(std::move(entries));
    } else {
        throw ValidationError("$.bundling.kind: must be 'explicit' or 'full_swap'");
    }

    return make_control_instance(std::move(alternatives), preferred, budget, std::move(registered),
                                 std::move(pool), std::move(spec));
}

ControlInstance parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    return instance_from_json(doc);
}

json instance_to_json(const ControlInstance& inst) {
    json doc;
    doc["alternatives"] = inst.alternatives;
    doc["preferred"] = inst.alternatives[inst.preferred];
    doc["budget"] = inst.budget;
    const auto voters_json = [&](const std::vector<Voter>& voters) {
        json arr = json::array();
        for (const Voter& v : voters) {
            json names = json::array();
            for (int a : v.order.ranking) names.push_back(inst.alternatives[a]);
            arr.push_back({{"id", v.id}, {"order", names}});
        }
        return arr;
    };
    doc["registered"] = voters_json(inst.registered);
    doc["unregistered"] = voters_json(inst.pool);
    if (inst.spec.kind == BundlingKind::FullSwap) {
        doc["bundling"] = {{"kind", "full_swap"}, {"d", inst.spec.full_swap_d}};
    } else {
        json bundles = json::object();
        for (const auto& [leader, members] : inst.spec.explicit_bundles) bundles[leader] = members;
        doc["bundling"] = {{"kind", "explicit"}, {"bundles", bundles}};
    }
    return doc;
}

json solution_to_json(const Solution& solution, Rule rule) {
    json doc;
    doc["feasible"] = solution.feasible;
    doc["selected"] = solution.selected;
    doc["added"] = solution.added;
    doc["rule"] = rule_name(rule);
    doc["solver"] = solution.solver;
    doc["optimal"] = solution.optimal;
    doc["size"] = solution.size();
    return doc;
}

std::vector<std::string> solution_selected_from_json(const json& doc) {
    const json& selected = require(doc, "selected", "$");
    if (!selected.is_array()) throw ValidationError("$.selected: expected an array");
    std::vector<std::string> ids;
    for (const json& v : selected) ids.push_back(as_string(v, "$.selected"));
    return ids;
}

SetCoverInput set_cover_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    SetCoverInput input;
    const json& universe = require(doc, "universe", "$");
    if (!universe.is_array()) throw ValidationError("$.universe: expected an array");
    std::unordered_map<std::string, int> index;
    for (const json& name : universe) {
        input.universe.push_back(as_string(name, "$.universe"));
        if (!index.emplace(input.universe.back(), static_cast<int>(input.universe.size()) - 1).second)
            throw ValidationError("$.universe: element names are not distinct");
    }
    const json& sets = require(doc, "sets", "$");
    if (!sets.is_array()) throw ValidationError("$.sets: expected an array");
    for (size_t j = 0; j < sets.size(); ++j) {
        if (!sets[j].is_array())
            throw ValidationError("$.sets[" + std::to_string(j) + "]: expected an array");
        std::vector<int> s;
        for (const json& name : sets[j]) {
            const auto it = index.find(as_string(name, "$.sets[" + std::to_string(j) + "]"));
            if (it == index.end())
                throw ValidationError("$.sets[" + std::to_string(j) + "]: unknown element");
            s.push_back(it->second);
        }
        input.sets.push_back(std::move(s));
    }
    input.target = static_cast<int>(as_integer(require(doc, "target", "$"), "$.target"));
    return input;
}

json analyze_report(const ControlInstance& inst) {
    json report;
    report["num_alternatives"] = inst.num_alternatives();
    report["num_registered"] = static_cast<int>(inst.registered.size());
    report["num_unregistered"] = inst.pool_size();
    report["budget"] = inst.budget;
    report["preferred"] = inst.alternatives[inst.preferred];

    const ScoreTable scores = plurality_scores(inst.registered_election());
    json score_obj = json::object();
    for (int a = 0; a < inst.num_alternatives(); ++a) score_obj[inst.alternatives[a]] = scores[a];
    report["scores"] = score_obj;

    report["b"] = inst.bundles.max_bundle_size();
    const auto d = infer_full_d(inst.bundles, inst.pool);
    report["full_d"] = d ? json(*d) : json(nullptr);
    const bool leader_anon = is_leader_anonymous(inst.bundles, inst.pool);
    const bool follower_anon = is_follower_anonymous(inst.bundles, inst.pool);
    report["leader_anonymous"] = leader_anon;
    report["follower_anonymous"] = follower_anon;
    report["anonymous"] = leader_anon && follower_anon;

    Election combined{inst.alternatives, inst.registered};
    combined.voters.insert(combined.voters.end(), inst.pool.begin(), inst.pool.end());
    const auto axis = find_single_peaked_axis(combined);
    report["single_peaked"] = axis.has_value();
    if (axis) {
        if (!is_single_peaked_wrt(combined, *axis))
            throw std::logic_error("single-peaked certificate failed re-verification");
        json names = json::array();
        for (int a : *axis) names.push_back(inst.alternatives[a]);
        report["single_peaked_axis"] = names;
    } else {
        report["single_peaked_axis"] = nullptr;
    }
    const auto order = find_single_crossing_order(combined);
    report["single_crossing"] = order.has_value();
    if (order) {
        if (!is_single_crossing_wrt(combined, *order))
            throw std::logic_error("single-crossing certificate failed re-verification");
        json ids = json::array();
        for (int v : *order) ids.push_back(combined.voters[v].id);
        report["single_crossing_order"] = ids;
    } else {
        report["single_crossing_order"] = nullptr;
    }
    return report;
}

} // namespace ccav
