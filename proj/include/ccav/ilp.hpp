#pragma once

#include <cstdint>

#include "ccav/instance.hpp"

namespace ccav {

/// 0/1 program over order classes of the pool. One leader variable x_i and one
/// inclusion indicator y_j per distinct preference order present in W. y_j is
/// the OR of the x_i whose bundle reaches class j, which keeps the score rows
/// exact under overlapping bundles (the closure is a union, so each class may
/// count only once).
struct IlpModel {
    struct Row {
        std::vector<long long> y_coeff; // one per class
        long long rhs = 0;              // sum_j y_coeff[j] * y_j <= rhs
        std::string label;
    };

    int num_classes = 0;
    long long budget = 0;                         // sum_i x_i <= budget
    std::vector<long long> multiplicity;          // N_i, voters of class i in W
    std::vector<int> class_top;                   // top alternative per class
    std::vector<std::vector<int>> bundle_classes; // M_i: classes reached by class i's bundle
    std::vector<Row> rows;                        // score rows (and the m=1 Condorcet floor)
    std::vector<int> class_representative;        // first pool index with the class order

    /// Budget row + one linking row per class (y_j bounded by the x's reaching
    /// it) + the score rows. The x=1 => y=1 direction is structural.
    int constraint_count() const { return 1 + num_classes + static_cast<int>(rows.size()); }
    int variable_count() const { return 2 * num_classes; }
};

/// Builds the model for an anonymous bundling function (PreconditionError
/// otherwise). Plurality uses ties-allowed score rows; Condorcet uses strict
/// pairwise-majority rows per rival.
IlpModel build_anonymous_ilp(const ControlInstance& inst, Rule rule);

/// Minimizes sum x_i by depth-first branch and bound: variables in model
/// order, value 0 explored before 1, first strictly better incumbent kept, so
/// the result is the lexicographically smallest minimum assignment.
std::optional<std::vector<std::uint8_t>> solve_ilp(const IlpModel& model);

/// Evaluates a score row's left side under an x assignment (y_j derived as the
/// OR of the selected classes reaching j).
long long ilp_row_lhs(const IlpModel& model, const IlpModel::Row& row,
                      const std::vector<std::uint8_t>& x);

} // namespace ccav
