#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ccav/core.hpp"

namespace ccav {

/// Inclusive range of positions along an order.
struct Interval {
    int lo = 0;
    int hi = 0;

    int length() const { return hi - lo + 1; }
    bool operator==(const Interval&) const = default;
};

struct CoverChoice {
    std::vector<int> chosen; // indices into the input interval list, ascending
    int coverage = 0;        // size of the union of the chosen intervals
};

/// Picks at most `budget` intervals maximizing the size of their union.
/// Deterministic: maximum coverage, then fewest intervals, then the
/// lexicographically smallest index list.
CoverChoice max_interval_cover(const std::vector<Interval>& intervals, Interval ground, int budget);

/// Minimum number of intervals whose union has size exactly `target`, with the
/// chosen indices; nullopt if no subset realizes that union size. Same
/// tie-breaking as max_interval_cover.
std::optional<std::pair<std::vector<int>, int>>
min_intervals_exact_cover(const std::vector<Interval>& intervals, Interval ground, int target);

/// One DP pass answering every target at once; backs both public operations
/// and the per-side scans of the single-crossing solvers.
class ExactCoverTable {
public:
    ExactCoverTable(const std::vector<Interval>& intervals, Interval ground);

    int ground_size() const;
    /// Minimum interval count for union size exactly `target`, or -1.
    int min_count(int target) const;
    /// Chosen original indices (ascending) realizing min_count(target).
    std::vector<int> choice(int target) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

} // namespace ccav
