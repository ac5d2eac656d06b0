#include "ccav/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <numeric>
#include <set>

#include "ccav/domains.hpp"

namespace ccav {

namespace {

Solution infeasible_solution(const ControlInstance& inst, const std::string& solver, bool optimal) {
    Solution s;
    s.feasible = false;
    s.final_scores = plurality_scores(inst.registered_election());
    s.solver = solver;
    s.optimal = optimal;
    return s;
}

Solution feasible_solution(const ControlInstance& inst, const std::vector<int>& leaders,
                           const std::string& solver, bool optimal) {
    Solution s;
    s.feasible = true;
    const std::vector<int> added = closure(inst.bundles, leaders);
    s.selected = inst.pool_ids_of(leaders);
    s.added = inst.pool_ids_of(added);
    s.final_scores = plurality_scores(inst.election_with(added));
    s.solver = solver;
    s.optimal = optimal;
    return s;
}

// (count, sorted ids) order used to pick canonical witnesses.
bool better_witness(const ControlInstance& inst, const std::vector<int>& a,
                    const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return inst.pool_ids_of(a) < inst.pool_ids_of(b);
}

Solution checked_feasible(const ControlInstance& inst, Rule rule, const std::vector<int>& leaders,
                          const std::string& solver) {
    if (!verify_selection(inst, rule, leaders))
        throw std::logic_error("solver '" + solver + "' produced a selection that does not verify");
    return feasible_solution(inst, leaders, solver, true);
}

} // namespace

bool verify_selection(const ControlInstance& inst, Rule rule, const std::vector<int>& selected) {
    const std::vector<int> added = closure(inst.bundles, selected);
    const Election e = inst.election_with(added);
    if (rule == Rule::Plurality) {
        const std::vector<int> winners = plurality_winners(e);
        return std::find(winners.begin(), winners.end(), inst.preferred) != winners.end();
    }
    const std::optional<int> winner = condorcet_winner(e);
    return winner && *winner == inst.preferred;
}

bool verify_solution(const ControlInstance& inst, Rule rule, const std::vector<std::string>& selected) {
    return verify_selection(inst, rule, inst.pool_indices_of(selected));
}

long long subset_count_clamped(int n, long long k, long long clamp) {
    long long total = 0;
    long long binom = 1;
    for (long long t = 0; t <= std::min<long long>(k, n); ++t) {
        if (t > 0) {
            if (binom > clamp) return clamp + 1;
            binom = binom * (n - t + 1) / t;
        }
        total += binom;
        if (total > clamp) return clamp + 1;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Brute force
// ---------------------------------------------------------------------------

namespace {

struct MaskSet {
    int words;
    std::vector<uint64_t> bits;

    explicit MaskSet(int n) : words((n + 63) / 64), bits(words, 0) {}
    void set(int i) { bits[i >> 6] |= uint64_t{1} << (i & 63); }
    void clear() { std::fill(bits.begin(), bits.end(), 0); }
    void or_with(const MaskSet& other) {
        for (int w = 0; w < words; ++w) bits[w] |= other.bits[w];
    }
    template <typename F>
    void for_each(F f) const {
        for (int w = 0; w < words; ++w) {
            uint64_t word = bits[w];
            while (word) {
                const int b = std::countr_zero(word);
                f(w * 64 + b);
                word &= word - 1;
            }
        }
    }
};

} // namespace

Solution solve_brute_force(const ControlInstance& inst, Rule rule, const SolveOptions& opt) {
    const int n = inst.pool_size();
    const long long k = std::min<long long>(inst.budget, n);
    const int m = inst.num_alternatives();
    const int p = inst.preferred;

    if (subset_count_clamped(n, k, opt.enumeration_limit) > opt.enumeration_limit)
        std::fprintf(stderr,
                     "warning: brute force will enumerate more than %lld subsets (n=%d, k=%lld)\n",
                     opt.enumeration_limit, n, k);

    // Pool reordered by id so that combinations come out in lexicographic
    // order of their sorted id lists.
    std::vector<int> by_id(n);
    std::iota(by_id.begin(), by_id.end(), 0);
    std::sort(by_id.begin(), by_id.end(),
              [&](int a, int b) { return inst.pool[a].id < inst.pool[b].id; });

    std::vector<MaskSet> bundle_mask(n, MaskSet(n));
    for (int i = 0; i < n; ++i)
        for (int j : inst.bundles.bundles[i]) bundle_mask[i].set(j);
    std::vector<int> top(n);
    for (int i = 0; i < n; ++i) top[i] = inst.pool[i].order.top();

    const Election base = inst.registered_election();
    const ScoreTable base_scores = plurality_scores(base);
    // For Condorcet: per alternative, how many registered voters put p above it
    // (p is the unique winner iff 2 * beats[a] > total for every rival).
    std::vector<long long> base_beats(m, 0);
    std::vector<std::vector<char>> pool_p_over(n, std::vector<char>(m, 0));
    if (rule == Rule::Condorcet) {
        for (const Voter& v : base.voters) {
            const std::vector<int> pos = v.order.positions();
            for (int a = 0; a < m; ++a)
                if (pos[p] < pos[a]) ++base_beats[a];
        }
        for (int i = 0; i < n; ++i) {
            const std::vector<int> pos = inst.pool[i].order.positions();
            for (int a = 0; a < m; ++a) pool_p_over[i][a] = pos[p] < pos[a] ? 1 : 0;
        }
    }

    std::vector<long long> delta(m, 0);
    MaskSet added(n);
    const auto evaluate = [&](const std::vector<int>& combo) -> bool {
        added.clear();
        for (int c : combo) added.or_with(bundle_mask[by_id[c]]);
        if (rule == Rule::Plurality) {
            std::fill(delta.begin(), delta.end(), 0);
            added.for_each([&](int v) { ++delta[top[v]]; });
            const long long sp = base_scores[p] + delta[p];
            for (int a = 0; a < m; ++a)
                if (base_scores[a] + delta[a] > sp) return false;
            return true;
        }
        std::fill(delta.begin(), delta.end(), 0);
        long long added_count = 0;
        added.for_each([&](int v) {
            ++added_count;
            for (int a = 0; a < m; ++a) delta[a] += pool_p_over[v][a];
        });
        const long long total = static_cast<long long>(base.voters.size()) + added_count;
        if (total == 0) return false;
        for (int a = 0; a < m; ++a)
            if (a != p && 2 * (base_beats[a] + delta[a]) <= total) return false;
        return true;
    };

    std::vector<int> combo;
    for (long long t = 0; t <= k; ++t) {
        combo.assign(t, 0);
        std::iota(combo.begin(), combo.end(), 0);
        while (true) {
            if (evaluate(combo)) {
                std::vector<int> leaders;
                leaders.reserve(combo.size());
                for (int c : combo) leaders.push_back(by_id[c]);
                return feasible_solution(inst, leaders, "brute", true);
            }
            if (t == 0) break;
            // next combination of size t over 0..n-1
            int i = static_cast<int>(t) - 1;
            while (i >= 0 && combo[i] == n - static_cast<int>(t) + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < static_cast<int>(t); ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return infeasible_solution(inst, "brute", true);
}

// ---------------------------------------------------------------------------
// b = 1 greedy (Plurality)
// ---------------------------------------------------------------------------

Solution solve_plurality_b1(const ControlInstance& inst) {
    if (inst.bundles.max_bundle_size() > 1)
        throw PreconditionError("maximum bundle size exceeds 1");
    const int p = inst.preferred;
    const ScoreTable scores = plurality_scores(inst.registered_election());
    long long rival_max = 0;
    for (int a = 0; a < inst.num_alternatives(); ++a)
        if (a != p) rival_max = std::max(rival_max, scores[a]);
    const long long deficit = std::max<long long>(0, rival_max - scores[p]);

    std::vector<int> leaders;
    for (int i = 0; i < inst.pool_size() && static_cast<long long>(leaders.size()) < deficit; ++i)
        if (inst.pool[i].order.top() == p) leaders.push_back(i);
    if (static_cast<long long>(leaders.size()) < deficit || deficit > inst.budget)
        return infeasible_solution(inst, "b1", true);
    return feasible_solution(inst, leaders, "b1", true);
}

// ---------------------------------------------------------------------------
// full-d, b <= 2 greedy (Plurality)
// ---------------------------------------------------------------------------

namespace {

std::optional<int> full_d_of(const ControlInstance& inst) {
    if (inst.spec.kind == BundlingKind::FullSwap) return inst.spec.full_swap_d;
    return infer_full_d(inst.bundles, inst.pool);
}

} // namespace

Solution solve_plurality_full_d_b2(const ControlInstance& inst) {
    if (!full_d_of(inst)) throw PreconditionError("bundling is not full-d");
    if (inst.bundles.max_bundle_size() > 2)
        throw PreconditionError("maximum bundle size exceeds 2");
    const int p = inst.preferred;
    const int m = inst.num_alternatives();

    // The bundling graph is a matching: units are singletons and mutual pairs.
    struct Unit {
        int leader;          // canonical leader (smaller index of a pair)
        std::vector<int> members;
        int p_count;
        int other_top = -1;  // top of the non-p member of a mixed pair
    };
    std::vector<Unit> both_p, single_p, mixed;
    for (int i = 0; i < inst.pool_size(); ++i) {
        const auto& bundle = inst.bundles.bundles[i];
        if (bundle.size() == 2 && bundle[0] != i) continue; // pair handled at its smaller member
        Unit u;
        u.leader = i;
        u.members = bundle;
        u.p_count = 0;
        for (int v : bundle) {
            if (inst.pool[v].order.top() == p) ++u.p_count;
            else u.other_top = inst.pool[v].order.top();
        }
        if (bundle.size() == 1) {
            if (u.p_count == 1) single_p.push_back(u);
        } else if (u.p_count == 2) {
            both_p.push_back(u);
        } else if (u.p_count == 1) {
            mixed.push_back(u);
        }
    }

    ScoreTable scores = plurality_scores(inst.registered_election());
    const auto wins = [&] {
        for (int a = 0; a < m; ++a)
            if (scores[a] > scores[p]) return false;
        return true;
    };

    std::vector<int> leaders;
    const auto budget_left = [&] { return inst.budget - static_cast<long long>(leaders.size()); };
    if (wins()) return feasible_solution(inst, leaders, "b2full", true);

    for (const Unit& u : both_p) {
        if (budget_left() <= 0) return infeasible_solution(inst, "b2full", true);
        leaders.push_back(u.leader);
        scores[p] += 2;
        if (wins()) return feasible_solution(inst, leaders, "b2full", true);
    }
    for (const Unit& u : single_p) {
        if (budget_left() <= 0) return infeasible_solution(inst, "b2full", true);
        leaders.push_back(u.leader);
        scores[p] += 1;
        if (wins()) return feasible_solution(inst, leaders, "b2full", true);
    }
    std::vector<char> used(mixed.size(), 0);
    for (size_t step = 0; step < mixed.size(); ++step) {
        if (budget_left() <= 0) return infeasible_solution(inst, "b2full", true);
        int pick = -1;
        for (size_t i = 0; i < mixed.size(); ++i) {
            if (used[i]) continue;
            if (pick < 0 || scores[mixed[i].other_top] < scores[mixed[pick].other_top]) pick = static_cast<int>(i);
        }
        used[pick] = 1;
        leaders.push_back(mixed[pick].leader);
        scores[p] += 1;
        scores[mixed[pick].other_top] += 1;
        if (wins()) return feasible_solution(inst, leaders, "b2full", true);
    }
    return infeasible_solution(inst, "b2full", true);
}

// ---------------------------------------------------------------------------
// Single-crossing solvers
// ---------------------------------------------------------------------------

namespace {

struct ScSetup {
    std::vector<int> beta;  // combined voter indices in crossing order (0..|V|-1 = registered)
    std::vector<int> pos;   // combined index -> position in beta
    std::vector<int> wline; // pool indices in crossing order
};

ScSetup sc_setup(const ControlInstance& inst) {
    if (!full_d_of(inst)) throw PreconditionError("bundling is not full-d");
    Election combined{inst.alternatives, inst.registered};
    combined.voters.insert(combined.voters.end(), inst.pool.begin(), inst.pool.end());
    const auto order = find_single_crossing_order(combined);
    if (!order) throw PreconditionError("election (V union W) is not single-crossing");
    ScSetup s;
    s.beta = *order;
    s.pos.resize(s.beta.size());
    for (int q = 0; q < static_cast<int>(s.beta.size()); ++q) s.pos[s.beta[q]] = q;
    const int nv = static_cast<int>(inst.registered.size());
    for (int v : s.beta)
        if (v >= nv) s.wline.push_back(v - nv);
    return s;
}

} // namespace

Solution solve_sc_plurality(const ControlInstance& inst) {
    const ScSetup sc = sc_setup(inst);
    const int p = inst.preferred;
    const int n = inst.pool_size();
    const int m = inst.num_alternatives();

    // p-voters occupy consecutive slots of the pool crossing order.
    int block_lo = n, block_hi = -1;
    for (int slot = 0; slot < n; ++slot) {
        if (inst.pool[sc.wline[slot]].order.top() == p) {
            block_lo = std::min(block_lo, slot);
            block_hi = std::max(block_hi, slot);
        }
    }
    for (int slot = block_lo; slot <= block_hi; ++slot)
        if (inst.pool[sc.wline[slot]].order.top() != p)
            throw PreconditionError("p-voters do not form a contiguous block of the crossing order");

    const ScoreTable base = plurality_scores(inst.registered_election());

    std::optional<std::vector<int>> best;
    const auto consider = [&](std::vector<int> leaders) {
        if (static_cast<long long>(leaders.size()) > inst.budget) return;
        std::sort(leaders.begin(), leaders.end());
        if (!best || better_witness(inst, leaders, *best)) best = std::move(leaders);
    };

    // Guess the <= 2 bundles allowed to contain non-p-voters (any pair of
    // leaders is enumerated; pure-p guesses are simply redundant).
    std::vector<std::vector<int>> guesses{{}};
    for (int w = 0; w < n; ++w) guesses.push_back({w});
    for (int w1 = 0; w1 < n; ++w1)
        for (int w2 = w1 + 1; w2 < n; ++w2) guesses.push_back({w1, w2});

    for (const auto& guess : guesses) {
        if (static_cast<long long>(guess.size()) > inst.budget) continue;
        const std::vector<int> added0 = closure(inst.bundles, guess);
        ScoreTable scores = base;
        for (int v : added0) ++scores[inst.pool[v].order.top()];
        long long need = 0;
        for (int a = 0; a < m; ++a)
            if (a != p) need = std::max(need, scores[a] - scores[p]);
        if (need <= 0) {
            consider(guess);
            continue;
        }

        // Remaining p-block slots, compressed; pure-p bundles become intervals.
        std::vector<char> in_added(n, 0);
        for (int v : added0) in_added[v] = 1;
        std::vector<int> compressed(n, -1);
        int ground_size = 0;
        for (int slot = block_lo; slot >= 0 && slot <= block_hi; ++slot)
            if (!in_added[sc.wline[slot]]) compressed[sc.wline[slot]] = ++ground_size;
        if (ground_size == 0) continue;

        std::vector<Interval> intervals;
        std::vector<int> interval_leader;
        for (int w = 0; w < n; ++w) {
            if (std::find(guess.begin(), guess.end(), w) != guess.end()) continue;
            bool pure_p = true;
            int lo = ground_size + 1, hi = 0;
            bool nonempty = false;
            for (int v : inst.bundles.bundles[w]) {
                if (inst.pool[v].order.top() != p) {
                    pure_p = false;
                    break;
                }
                if (compressed[v] >= 0) {
                    nonempty = true;
                    lo = std::min(lo, compressed[v]);
                    hi = std::max(hi, compressed[v]);
                }
            }
            if (!pure_p || !nonempty) continue;
            intervals.push_back({lo, hi});
            interval_leader.push_back(w);
        }
        const long long max_extra = inst.budget - static_cast<long long>(guess.size());
        for (long long extra = 1; extra <= std::min<long long>(max_extra, intervals.size()); ++extra) {
            const CoverChoice cover =
                max_interval_cover(intervals, {1, ground_size}, static_cast<int>(extra));
            if (cover.coverage >= need) {
                std::vector<int> leaders = guess;
                for (int ci : cover.chosen) leaders.push_back(interval_leader[ci]);
                consider(std::move(leaders));
                break;
            }
        }
    }

    if (!best) return infeasible_solution(inst, "sc", true);
    return checked_feasible(inst, Rule::Plurality, *best, "sc");
}

namespace {

// Median slots (1-based) of a z-voter crossing order.
std::vector<long long> median_positions(long long z) {
    if (z <= 0) return {};
    if (z % 2 == 1) return {(z + 1) / 2};
    return {z / 2, z / 2 + 1};
}

struct GuessEntity {
    bool is_pool = false;
    int index = 0; // registered index or pool index
};

} // namespace

Solution solve_sc_condorcet(const ControlInstance& inst) {
    const ScSetup sc = sc_setup(inst);
    const int p = inst.preferred;
    const int n = inst.pool_size();
    const int nv = static_cast<int>(inst.registered.size());

    std::optional<std::vector<int>> best;
    const auto consider = [&](std::vector<int> leaders) {
        if (static_cast<long long>(leaders.size()) > inst.budget) return;
        std::sort(leaders.begin(), leaders.end());
        leaders.erase(std::unique(leaders.begin(), leaders.end()), leaders.end());
        if (!best || better_witness(inst, leaders, *best)) best = std::move(leaders);
    };

    if (verify_selection(inst, Rule::Condorcet, {})) consider({});

    std::vector<GuessEntity> entities;
    for (int v = 0; v < nv; ++v) entities.push_back({false, v});
    for (int w = 0; w < n; ++w) entities.push_back({true, w});

    for (size_t e1 = 0; e1 < entities.size(); ++e1) {
        for (size_t e2 = e1; e2 < entities.size(); ++e2) {
            std::vector<int> guess_leaders;
            for (const GuessEntity& e : {entities[e1], entities[e2]})
                if (e.is_pool) guess_leaders.push_back(e.index);
            std::sort(guess_leaders.begin(), guess_leaders.end());
            guess_leaders.erase(std::unique(guess_leaders.begin(), guess_leaders.end()),
                                guess_leaders.end());
            if (static_cast<long long>(guess_leaders.size()) > inst.budget) continue;

            const std::vector<int> b_pool = closure(inst.bundles, guess_leaders);
            std::vector<char> in_b(n, 0);
            for (int v : b_pool) in_b[v] = 1;

            // Span of the guessed bundles (plus guessed registered voters).
            int lo = static_cast<int>(sc.beta.size()), hi = -1;
            for (int v : b_pool) {
                lo = std::min(lo, sc.pos[nv + v]);
                hi = std::max(hi, sc.pos[nv + v]);
            }
            for (const GuessEntity& e : {entities[e1], entities[e2]})
                if (!e.is_pool) {
                    lo = std::min(lo, sc.pos[e.index]);
                    hi = std::max(hi, sc.pos[e.index]);
                }
            if (hi < 0) continue;

            // Final-election voters inside the span are exactly V plus the
            // guessed bundles; pool voters in the gap can never be added.
            std::vector<char> forbidden(n, 0);
            std::vector<int> content; // combined indices, in crossing order
            int v_before = 0, v_after = 0;
            for (int q = 0; q < static_cast<int>(sc.beta.size()); ++q) {
                const int cv = sc.beta[q];
                if (q < lo) {
                    if (cv < nv) ++v_before;
                } else if (q > hi) {
                    if (cv < nv) ++v_after;
                } else if (cv < nv || in_b[cv - nv]) {
                    content.push_back(cv);
                } else {
                    forbidden[cv - nv] = 1;
                }
            }
            std::vector<char> content_top_p;
            for (int cv : content) {
                const PreferenceOrder& o = cv < nv ? inst.registered[cv].order : inst.pool[cv - nv].order;
                content_top_p.push_back(o.top() == p ? 1 : 0);
            }

            // Side lines: pool voters strictly before / after the span.
            std::vector<int> left_line, right_line;
            for (int w : sc.wline) {
                const int q = sc.pos[nv + w];
                if (q < lo) left_line.push_back(w);
                else if (q > hi) right_line.push_back(w);
            }
            std::vector<int> left_slot(n, -1), right_slot(n, -1);
            for (size_t i = 0; i < left_line.size(); ++i) left_slot[left_line[i]] = static_cast<int>(i);
            for (size_t i = 0; i < right_line.size(); ++i) right_slot[right_line[i]] = static_cast<int>(i);

            // Candidate bundles: effective members (outside the guessed
            // bundles) must avoid the gap; they fall left, right, or straddle.
            struct Candidate {
                int leader;
                int l_lo = -1, l_hi = -1; // left-line slots
                int r_lo = -1, r_hi = -1; // right-line slots
            };
            std::vector<Candidate> lefts, rights, straddlers;
            for (int w = 0; w < n; ++w) {
                if (std::find(guess_leaders.begin(), guess_leaders.end(), w) != guess_leaders.end())
                    continue;
                Candidate c;
                c.leader = w;
                bool usable = true, any = false;
                for (int v : inst.bundles.bundles[w]) {
                    if (in_b[v]) continue;
                    if (forbidden[v]) {
                        usable = false;
                        break;
                    }
                    any = true;
                    if (left_slot[v] >= 0) {
                        c.l_lo = c.l_lo < 0 ? left_slot[v] : std::min(c.l_lo, left_slot[v]);
                        c.l_hi = std::max(c.l_hi, left_slot[v]);
                    } else {
                        c.r_lo = c.r_lo < 0 ? right_slot[v] : std::min(c.r_lo, right_slot[v]);
                        c.r_hi = std::max(c.r_hi, right_slot[v]);
                    }
                }
                if (!usable || !any) continue;
                if (c.l_lo >= 0 && c.r_lo >= 0) straddlers.push_back(c);
                else if (c.l_lo >= 0) lefts.push_back(c);
                else rights.push_back(c);
            }

            // Straddler choices: only the farthest-reaching suffix/prefix
            // matter, so at most two straddlers are ever selected. Straddlers
            // with identical reach are interchangeable; keep the first.
            {
                std::vector<Candidate> kept;
                for (const Candidate& c : straddlers) {
                    bool dup = false;
                    for (const Candidate& k : kept)
                        if (k.l_lo == c.l_lo && k.r_hi == c.r_hi) dup = true;
                    if (!dup) kept.push_back(c);
                }
                straddlers = std::move(kept);
            }
            std::vector<std::vector<int>> straddle_sets{{}};
            for (size_t i = 0; i < straddlers.size(); ++i) {
                straddle_sets.push_back({static_cast<int>(i)});
                for (size_t j = i + 1; j < straddlers.size(); ++j)
                    straddle_sets.push_back({static_cast<int>(i), static_cast<int>(j)});
            }

            for (const auto& t_set : straddle_sets) {
                const long long fixed_leaders =
                    static_cast<long long>(guess_leaders.size() + t_set.size());
                if (fixed_leaders > inst.budget) continue;
                std::vector<char> suf_cover(left_line.size(), 0), pre_cover(right_line.size(), 0);
                for (int ti : t_set) {
                    const Candidate& c = straddlers[ti];
                    for (int s = c.l_lo; s <= c.l_hi; ++s) suf_cover[s] = 1;
                    for (int s = c.r_lo; s <= c.r_hi; ++s) pre_cover[s] = 1;
                }
                const int suf_size = static_cast<int>(std::count(suf_cover.begin(), suf_cover.end(), 1));
                const int pre_size = static_cast<int>(std::count(pre_cover.begin(), pre_cover.end(), 1));

                // Compress the uncovered side slots and clip candidates.
                const auto side_setup = [](const std::vector<Candidate>& cands,
                                           const std::vector<char>& covered, bool left_side) {
                    std::vector<int> comp(covered.size(), -1);
                    int sz = 0;
                    for (size_t s = 0; s < covered.size(); ++s)
                        if (!covered[s]) comp[s] = ++sz;
                    std::vector<Interval> ivs;
                    std::vector<int> leaders;
                    for (const Candidate& c : cands) {
                        const int a = left_side ? c.l_lo : c.r_lo;
                        const int b = left_side ? c.l_hi : c.r_hi;
                        int lo2 = sz + 1, hi2 = 0;
                        for (int s = a; s <= b; ++s)
                            if (comp[s] >= 0) {
                                lo2 = std::min(lo2, comp[s]);
                                hi2 = std::max(hi2, comp[s]);
                            }
                        if (hi2 == 0) continue;
                        ivs.push_back({lo2, hi2});
                        leaders.push_back(c.leader);
                    }
                    return std::make_tuple(sz, ivs, leaders);
                };
                const auto [lsz, l_ivs, l_leaders] = side_setup(lefts, suf_cover, true);
                const auto [rsz, r_ivs, r_leaders] = side_setup(rights, pre_cover, false);
                const ExactCoverTable left_table(l_ivs, {1, lsz});
                const ExactCoverTable right_table(r_ivs, {1, rsz});

                for (int z1 = suf_size; z1 <= suf_size + lsz; ++z1) {
                    const int lcount = left_table.min_count(z1 - suf_size);
                    if (lcount < 0) continue;
                    for (int z2 = pre_size; z2 <= pre_size + rsz; ++z2) {
                        const int rcount = right_table.min_count(z2 - pre_size);
                        if (rcount < 0) continue;
                        const long long count = fixed_leaders + lcount + rcount;
                        if (count > inst.budget) continue;
                        if (best && count > static_cast<long long>(best->size())) continue;
                        const long long total =
                            nv + static_cast<long long>(b_pool.size()) + z1 + z2;
                        const long long n_before = v_before + z1;
                        bool ok = total > 0;
                        for (long long q : median_positions(total)) {
                            if (q <= n_before || q > n_before + static_cast<long long>(content.size()) ||
                                !content_top_p[q - n_before - 1]) {
                                ok = false;
                                break;
                            }
                        }
                        if (!ok) continue;
                        std::vector<int> leaders = guess_leaders;
                        for (int ti : t_set) leaders.push_back(straddlers[ti].leader);
                        for (int ci : left_table.choice(z1 - suf_size)) leaders.push_back(l_leaders[ci]);
                        for (int ci : right_table.choice(z2 - pre_size)) leaders.push_back(r_leaders[ci]);
                        consider(std::move(leaders));
                    }
                }
            }
        }
    }

    if (!best) return infeasible_solution(inst, "sc", true);
    return checked_feasible(inst, Rule::Condorcet, *best, "sc");
}

// ---------------------------------------------------------------------------
// Anonymous ILP route and dispatch
// ---------------------------------------------------------------------------

Solution solve_anonymous(const ControlInstance& inst, Rule rule) {
    const IlpModel model = build_anonymous_ilp(inst, rule);
    const auto assignment = solve_ilp(model);
    if (!assignment) return infeasible_solution(inst, "ilp", true);
    std::vector<int> leaders;
    for (int c = 0; c < model.num_classes; ++c)
        if ((*assignment)[c]) leaders.push_back(model.class_representative[c]);
    return checked_feasible(inst, rule, leaders, "ilp");
}

Solution dispatch(const ControlInstance& inst, Rule rule, const SolveOptions& opt) {
    const int b = inst.bundles.max_bundle_size();
    if (rule == Rule::Plurality && b <= 1) return solve_plurality_b1(inst);
    const std::optional<int> d = full_d_of(inst);
    if (rule == Rule::Plurality && d && b <= 2) return solve_plurality_full_d_b2(inst);
    if (d) {
        Election combined{inst.alternatives, inst.registered};
        combined.voters.insert(combined.voters.end(), inst.pool.begin(), inst.pool.end());
        if (find_single_crossing_order(combined))
            return rule == Rule::Plurality ? solve_sc_plurality(inst) : solve_sc_condorcet(inst);
    }
    if (inst.num_alternatives() <= opt.ilp_max_alternatives && is_anonymous(inst.bundles, inst.pool))
        return solve_anonymous(inst, rule);
    if (subset_count_clamped(inst.pool_size(), inst.budget, opt.enumeration_limit) <=
        opt.enumeration_limit)
        return solve_brute_force(inst, rule, opt);
    throw PreconditionError("no exact solver applicable at configured scale");
}

} // namespace ccav
