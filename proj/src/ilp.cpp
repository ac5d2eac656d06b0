#include "ccav/ilp.hpp"

#include <algorithm>
#include <map>

namespace ccav {

IlpModel build_anonymous_ilp(const ControlInstance& inst, Rule rule) {
    if (!is_anonymous(inst.bundles, inst.pool))
        throw PreconditionError("bundling is not anonymous");

    IlpModel model;
    model.budget = inst.budget;

    // Group pool voters by preference order, classes in first-occurrence order.
    std::map<std::vector<int>, int> class_of_order;
    std::vector<int> voter_class(inst.pool_size());
    for (int i = 0; i < inst.pool_size(); ++i) {
        const auto& ranking = inst.pool[i].order.ranking;
        auto it = class_of_order.find(ranking);
        if (it == class_of_order.end()) {
            it = class_of_order.emplace(ranking, model.num_classes++).first;
            model.multiplicity.push_back(0);
            model.class_top.push_back(inst.pool[i].order.top());
            model.class_representative.push_back(i);
        }
        voter_class[i] = it->second;
        ++model.multiplicity[it->second];
    }

    // Bundle membership per class, via any representative (leader-anonymity
    // makes them all equal; follower-anonymity makes membership class-closed).
    model.bundle_classes.resize(model.num_classes);
    for (int c = 0; c < model.num_classes; ++c) {
        std::vector<char> reached(model.num_classes, 0);
        for (int member : inst.bundles.bundles[model.class_representative[c]])
            reached[voter_class[member]] = 1;
        for (int j = 0; j < model.num_classes; ++j)
            if (reached[j]) model.bundle_classes[c].push_back(j);
    }

    const int m = inst.num_alternatives();
    const int p = inst.preferred;
    const Election base = inst.registered_election();

    if (rule == Rule::Plurality) {
        const ScoreTable scores = plurality_scores(base);
        for (int a = 0; a < m; ++a) {
            if (a == p) continue;
            IlpModel::Row row;
            row.label = "score:" + inst.alternatives[a];
            row.y_coeff.resize(model.num_classes, 0);
            for (int j = 0; j < model.num_classes; ++j) {
                const int top = model.class_top[j];
                row.y_coeff[j] = model.multiplicity[j] * ((top == a ? 1 : 0) - (top == p ? 1 : 0));
            }
            row.rhs = scores[p] - scores[a];
            model.rows.push_back(std::move(row));
        }
    } else {
        const PairwiseMatrix mat = pairwise_matrix(base);
        for (int a = 0; a < m; ++a) {
            if (a == p) continue;
            IlpModel::Row row;
            row.label = "pairwise:" + inst.alternatives[a];
            row.y_coeff.resize(model.num_classes, 0);
            for (int j = 0; j < model.num_classes; ++j) {
                const bool p_over_a = inst.pool[model.class_representative[j]].order.prefers(p, a);
                row.y_coeff[j] = model.multiplicity[j] * (p_over_a ? -1 : 1);
            }
            row.rhs = mat.at(p, a) - mat.at(a, p) - 1;
            model.rows.push_back(std::move(row));
        }
        if (m == 1) {
            // Sole alternative: a Condorcet winner exists iff anyone votes.
            IlpModel::Row row;
            row.label = "nonempty";
            row.y_coeff.assign(model.num_classes, 0);
            for (int j = 0; j < model.num_classes; ++j) row.y_coeff[j] = -model.multiplicity[j];
            row.rhs = static_cast<long long>(base.voters.size()) - 1;
            model.rows.push_back(std::move(row));
        }
    }
    return model;
}

long long ilp_row_lhs(const IlpModel& model, const IlpModel::Row& row,
                      const std::vector<std::uint8_t>& x) {
    std::vector<char> y(model.num_classes, 0);
    for (int i = 0; i < model.num_classes; ++i)
        if (x[i])
            for (int j : model.bundle_classes[i]) y[j] = 1;
    long long lhs = 0;
    for (int j = 0; j < model.num_classes; ++j)
        if (y[j]) lhs += row.y_coeff[j];
    return lhs;
}

namespace {

struct BranchState {
    const IlpModel& model;
    std::vector<std::uint8_t> x;
    std::vector<int> y_support;         // per class: how many selected classes reach it
    long long chosen = 0;
    std::optional<std::vector<std::uint8_t>> best;
    long long best_size = 0;

    explicit BranchState(const IlpModel& m)
        : model(m), x(m.num_classes, 0), y_support(m.num_classes, 0) {}

    bool rows_satisfiable(int next_var) const {
        // Optimistic bound per row: forced y contribute their coefficient;
        // classes still reachable through an undecided x may contribute
        // negative coefficients.
        std::vector<char> reachable(model.num_classes, 0);
        for (int i = next_var; i < model.num_classes; ++i)
            for (int j : model.bundle_classes[i]) reachable[j] = 1;
        for (const auto& row : model.rows) {
            long long lo = 0;
            for (int j = 0; j < model.num_classes; ++j) {
                if (y_support[j] > 0) lo += row.y_coeff[j];
                else if (reachable[j] && row.y_coeff[j] < 0) lo += row.y_coeff[j];
            }
            if (lo > row.rhs) return false;
        }
        return true;
    }

    void search(int var) {
        if (best && chosen >= best_size) return;
        if (chosen > model.budget) return;
        if (!rows_satisfiable(var)) return;
        if (var == model.num_classes) {
            for (const auto& row : model.rows) {
                long long lhs = 0;
                for (int j = 0; j < model.num_classes; ++j)
                    if (y_support[j] > 0) lhs += row.y_coeff[j];
                if (lhs > row.rhs) return;
            }
            best = x;
            best_size = chosen;
            return;
        }
        search(var + 1);
        x[var] = 1;
        ++chosen;
        for (int j : model.bundle_classes[var]) ++y_support[j];
        search(var + 1);
        for (int j : model.bundle_classes[var]) --y_support[j];
        --chosen;
        x[var] = 0;
    }
};

} // namespace

std::optional<std::vector<std::uint8_t>> solve_ilp(const IlpModel& model) {
    BranchState state(model);
    state.search(0);
    return state.best;
}

} // namespace ccav
