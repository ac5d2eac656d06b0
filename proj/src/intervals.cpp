#include "ccav/intervals.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <numeric>

namespace ccav {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

struct Normalized {
    int n = 0;                    // ground length
    std::vector<Interval> sorted; // 1-based positions, sorted by (hi, lo, orig)
    std::vector<int> orig;        // sorted slot -> original index
};

Normalized normalize(const std::vector<Interval>& intervals, Interval ground) {
    if (ground.hi < ground.lo - 1) throw ValidationError("invalid ground interval");
    Normalized out;
    out.n = ground.hi - ground.lo + 1;
    std::vector<int> idx(intervals.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (intervals[a].hi != intervals[b].hi) return intervals[a].hi < intervals[b].hi;
        if (intervals[a].lo != intervals[b].lo) return intervals[a].lo < intervals[b].lo;
        return a < b;
    });
    for (int i : idx) {
        const Interval& iv = intervals[i];
        if (iv.lo > iv.hi) throw ValidationError("interval with lo > hi");
        if (iv.lo < ground.lo || iv.hi > ground.hi)
            throw ValidationError("interval outside the ground interval");
        out.sorted.push_back({iv.lo - ground.lo + 1, iv.hi - ground.lo + 1});
        out.orig.push_back(i);
    }
    return out;
}

} // namespace

// Chains considered by the DP have strictly increasing lo and hi, which rules
// out containment; every realizable union size is realizable by such a chain
// (dropping a contained interval never changes the union), and for such chains
// the running-rightmost sweep counts the union exactly.
//
// suffix table i: (r, lastlo, extra) -> min number of intervals among
// sorted[i..] adding exactly `extra` new positions from rightmost r, last
// taken lo `lastlo` (0 = none yet).
struct ExactCoverTable::Impl {
    Normalized norm;
    int n = 0;
    int count = 0;
    std::vector<std::vector<int>> tables;

    int idx(int r, int lastlo, int extra) const {
        return (r * (n + 1) + lastlo) * (n + 1) + extra;
    }
    int get(int i, int r, int lastlo, int extra) const { return tables[i][idx(r, lastlo, extra)]; }

    explicit Impl(Normalized nrm) : norm(std::move(nrm)), n(norm.n), count(static_cast<int>(norm.sorted.size())) {
        const size_t cell = static_cast<size_t>(n + 1) * (n + 1) * (n + 1);
        tables.assign(count + 1, std::vector<int>(cell, kInf));
        for (int r = 0; r <= n; ++r)
            for (int lastlo = 0; lastlo <= n; ++lastlo)
                tables[count][idx(r, lastlo, 0)] = 0;
        for (int i = count - 1; i >= 0; --i) {
            const Interval iv = norm.sorted[i];
            for (int r = 0; r <= n; ++r) {
                for (int lastlo = 0; lastlo <= n; ++lastlo) {
                    for (int extra = 0; extra <= n; ++extra) {
                        int best = get(i + 1, r, lastlo, extra); // skip
                        if (iv.hi > r && iv.lo > lastlo) {
                            const int contrib = iv.hi - std::max(iv.lo - 1, r);
                            if (contrib <= extra) {
                                const int rest = get(i + 1, iv.hi, iv.lo, extra - contrib);
                                if (rest < kInf) best = std::min(best, 1 + rest);
                            }
                        }
                        tables[i][idx(r, lastlo, extra)] = best;
                    }
                }
            }
        }
    }
};

ExactCoverTable::ExactCoverTable(const std::vector<Interval>& intervals, Interval ground)
    : impl_(std::make_shared<const Impl>(normalize(intervals, ground))) {}

int ExactCoverTable::ground_size() const { return impl_->n; }

int ExactCoverTable::min_count(int target) const {
    if (target < 0) throw ValidationError("target must be nonnegative");
    if (target > impl_->n) return -1;
    const int c = impl_->get(0, 0, 0, target);
    return c >= kInf ? -1 : c;
}

std::vector<int> ExactCoverTable::choice(int target) const {
    if (min_count(target) < 0) throw ValidationError("choice() called for an unreachable target");
    std::vector<int> chosen;
    int r = 0, lastlo = 0, need = target;
    for (int i = 0; i < impl_->count && need > 0; ++i) {
        const Interval iv = impl_->norm.sorted[i];
        if (iv.hi > r && iv.lo > lastlo) {
            const int contrib = iv.hi - std::max(iv.lo - 1, r);
            if (contrib <= need) {
                const int rest = impl_->get(i + 1, iv.hi, iv.lo, need - contrib);
                if (rest < kInf && 1 + rest == impl_->get(i, r, lastlo, need)) {
                    chosen.push_back(impl_->norm.orig[i]);
                    r = iv.hi;
                    lastlo = iv.lo;
                    need -= contrib;
                }
            }
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

CoverChoice max_interval_cover(const std::vector<Interval>& intervals, Interval ground, int budget) {
    if (budget < 0) throw ValidationError("budget must be nonnegative");
    const ExactCoverTable table(intervals, ground);
    int best_size = 0;
    for (int size = table.ground_size(); size > 0; --size) {
        const int c = table.min_count(size);
        if (c >= 0 && c <= budget) {
            best_size = size;
            break;
        }
    }
    CoverChoice choice;
    choice.coverage = best_size;
    choice.chosen = best_size > 0 ? table.choice(best_size) : std::vector<int>{};
    return choice;
}

std::optional<std::pair<std::vector<int>, int>>
min_intervals_exact_cover(const std::vector<Interval>& intervals, Interval ground, int target) {
    if (target < 0) throw ValidationError("target must be nonnegative");
    const ExactCoverTable table(intervals, ground);
    const int count = table.min_count(target);
    if (count < 0) return std::nullopt;
    return std::make_pair(table.choice(target), count);
}

} // namespace ccav
