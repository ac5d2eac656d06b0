#include "ccav/domains.hpp"

#include <algorithm>
#include <numeric>

namespace ccav {

bool is_single_peaked_wrt(const Election& election, const Axis& axis) {
    const int m = election.num_alternatives();
    if (!is_permutation_of(axis, m))
        throw ValidationError("axis is not a permutation of the alternatives");
    std::vector<int> axis_pos(m);
    for (int i = 0; i < m; ++i) axis_pos[axis[i]] = i;
    for (const Voter& v : election.voters) {
        int lo = axis_pos[v.order.top()];
        int hi = lo;
        for (int r = 1; r < m; ++r) {
            const int q = axis_pos[v.order.ranking[r]];
            if (q == lo - 1) --lo;
            else if (q == hi + 1) ++hi;
            else return false;
        }
    }
    return true;
}

namespace {

// Outside-in axis construction. Alternatives ranked last by some voter (among
// the remaining ones) must occupy the outermost free slots; each step places
// them, branching over the at most two left/right assignments.
struct AxisSearch {
    const Election& election;
    int m;
    std::vector<std::vector<int>> pos;      // per voter: alternative -> rank
    std::vector<std::vector<int>> rankings; // per voter
    std::vector<int> left;                  // outermost first
    std::vector<int> right;                 // outermost first
    std::vector<char> remaining;
    int remaining_count;
    std::optional<Axis> result;

    explicit AxisSearch(const Election& e)
        : election(e), m(e.num_alternatives()), remaining(e.num_alternatives(), 1), remaining_count(m) {
        for (const Voter& v : e.voters) {
            rankings.push_back(v.order.ranking);
            pos.push_back(v.order.positions());
        }
    }

    // Appending `next` to a side is consistent only if, for every voter, the
    // preference along the side (outer to inner) ascends until the voter's top
    // and descends afterwards.
    bool side_ok(const std::vector<int>& side, int next) const {
        for (size_t v = 0; v < rankings.size(); ++v) {
            const std::vector<int>& p = pos[v];
            const int top = rankings[v][0];
            bool descending = false;
            int prev = -1;
            bool ok = true;
            auto step = [&](int alt) {
                if (prev >= 0) {
                    const bool better = p[alt] < p[prev];
                    if (descending) {
                        if (better) return false;
                    } else if (!better) {
                        if (prev != top) return false;
                        descending = true;
                    }
                }
                prev = alt;
                return true;
            };
            for (int alt : side)
                if (!step(alt)) { ok = false; break; }
            if (ok) ok = step(next);
            if (!ok) return false;
        }
        return true;
    }

    std::vector<int> last_ranked() const {
        std::vector<char> is_last(m, 0);
        for (const auto& r : rankings) {
            for (int i = m - 1; i >= 0; --i) {
                if (remaining[r[i]]) {
                    is_last[r[i]] = 1;
                    break;
                }
            }
        }
        std::vector<int> result_set;
        for (int a = 0; a < m; ++a)
            if (is_last[a]) result_set.push_back(a);
        return result_set;
    }

    bool try_assign(const std::vector<std::pair<int, bool>>& placements) {
        size_t pushed = 0;
        bool ok = true;
        for (const auto& [alt, to_left] : placements) {
            auto& side = to_left ? left : right;
            if (!side_ok(side, alt)) {
                ok = false;
                break;
            }
            side.push_back(alt);
            remaining[alt] = 0;
            --remaining_count;
            ++pushed;
        }
        const bool found = ok && search();
        for (size_t i = pushed; i > 0; --i) {
            const auto& [alt, to_left] = placements[i - 1];
            (to_left ? left : right).pop_back();
            remaining[alt] = 1;
            ++remaining_count;
        }
        return found;
    }

    bool search() {
        if (remaining_count == 0) {
            Axis axis = left;
            for (auto it = right.rbegin(); it != right.rend(); ++it) axis.push_back(*it);
            if (is_single_peaked_wrt(election, axis)) {
                result = axis;
                return true;
            }
            return false;
        }
        const std::vector<int> last = last_ranked();
        if (last.size() > 2) return false;
        if (last.size() == 1)
            return try_assign({{last[0], true}}) || try_assign({{last[0], false}});
        return try_assign({{last[0], true}, {last[1], false}}) ||
               try_assign({{last[1], true}, {last[0], false}});
    }
};

} // namespace

std::optional<Axis> find_single_peaked_axis(const Election& election) {
    const int m = election.num_alternatives();
    if (election.voters.empty() || m <= 2) {
        Axis axis(m);
        std::iota(axis.begin(), axis.end(), 0);
        return axis;
    }
    AxisSearch search(election);
    search.search();
    return search.result;
}

bool is_single_crossing_wrt(const Election& election, const CrossingOrder& order) {
    const int n = election.num_voters();
    if (static_cast<int>(order.size()) != n)
        throw ValidationError("crossing order is not a permutation of the voters");
    {
        std::vector<char> seen(n, 0);
        for (int v : order) {
            if (v < 0 || v >= n || seen[v])
                throw ValidationError("crossing order is not a permutation of the voters");
            seen[v] = 1;
        }
    }
    const int m = election.num_alternatives();
    std::vector<std::vector<int>> pos;
    pos.reserve(n);
    for (int v : order) pos.push_back(election.voters[v].order.positions());
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            int flips = 0;
            for (int i = 1; i < n; ++i) {
                const bool prev = pos[i - 1][a] < pos[i - 1][b];
                const bool cur = pos[i][a] < pos[i][b];
                if (prev != cur) ++flips;
            }
            if (flips > 1) return false;
        }
    }
    return true;
}

std::optional<CrossingOrder> find_single_crossing_order(const Election& election) {
    const int n = election.num_voters();
    if (n <= 1) {
        CrossingOrder order(n);
        std::iota(order.begin(), order.end(), 0);
        return order;
    }
    // Along a valid order, the distance to the first voter is nondecreasing,
    // with ties only between identical orders. Sorting by distance to a
    // correctly guessed first voter therefore recovers a certificate.
    for (int first = 0; first < n; ++first) {
        std::vector<int> dist(n);
        for (int v = 0; v < n; ++v)
            dist[v] = swap_distance(election.voters[first].order, election.voters[v].order);
        CrossingOrder order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] < dist[b]; });
        if (is_single_crossing_wrt(election, order)) return order;
    }
    if (n <= 8) {
        CrossingOrder order(n);
        std::iota(order.begin(), order.end(), 0);
        do {
            if (is_single_crossing_wrt(election, order)) return order;
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return std::nullopt;
}

} // namespace ccav
