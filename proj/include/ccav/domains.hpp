#pragma once

#include "ccav/core.hpp"

namespace ccav {

/// A societal axis: permutation of the alternative indices.
using Axis = std::vector<int>;

/// A voter order witnessing the single-crossing property: permutation of the
/// election's voter indices.
using CrossingOrder = std::vector<int>;

/// True iff every voter's prefix sets are intervals of the axis (equivalent to
/// the triple condition on the axis).
bool is_single_peaked_wrt(const Election& election, const Axis& axis);

/// Some axis accepted by is_single_peaked_wrt, or nullopt if none exists.
/// Recognition places alternatives that some voter ranks last at the free axis
/// ends, backtracking over the at most two end choices per step.
std::optional<Axis> find_single_peaked_axis(const Election& election);

/// True iff for every alternative pair the voters preferring one over the
/// other form a prefix or a suffix of the order.
bool is_single_crossing_wrt(const Election& election, const CrossingOrder& order);

/// Some order accepted by is_single_crossing_wrt, or nullopt. Tries each voter
/// as the first and sorts the rest by swap distance to it (stable by input
/// index); falls back to exhaustive permutation search for up to 8 voters.
std::optional<CrossingOrder> find_single_crossing_order(const Election& election);

} // namespace ccav
