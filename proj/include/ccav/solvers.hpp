#pragma once

#include "ccav/ilp.hpp"
#include "ccav/instance.hpp"
#include "ccav/intervals.hpp"

namespace ccav {

struct SolveOptions {
    long long enumeration_limit = 10'000'000; // max subsets brute force will visit quietly
    int ilp_max_alternatives = 5;             // dispatch cap for the anonymous solver
};

/// Budget-agnostic success check: does adding the closure of `selected` make p
/// win under the rule? Throws on unknown leader ids.
bool verify_solution(const ControlInstance& inst, Rule rule, const std::vector<std::string>& selected);
bool verify_selection(const ControlInstance& inst, Rule rule, const std::vector<int>& selected);

/// Exhaustive search over leader subsets by ascending cardinality; returns the
/// minimum-cardinality witness that is lexicographically first by sorted
/// leader ids. Warns on stderr when the subset count exceeds the limit.
Solution solve_brute_force(const ControlInstance& inst, Rule rule, const SolveOptions& opt = {});

/// Greedy for singleton bundles under Plurality: add p-voters (input order)
/// until the deficit is met.
Solution solve_plurality_b1(const ControlInstance& inst);

/// Greedy for full-d bundling with b <= 2 under Plurality. The bundling graph
/// is a matching: add both-p pairs, then singleton p-voters, then mixed pairs
/// picking the pair whose non-p member tops the currently lowest-scoring
/// alternative (re-evaluated after every addition, ties by input order).
Solution solve_plurality_full_d_b2(const ControlInstance& inst);

/// Polynomial solver for single-crossing (V union W) with full-d bundling,
/// Plurality: guesses the at most two boundary bundles that may contain
/// non-p-voters, then maximizes p's remaining gain with pure-p interval
/// bundles via max_interval_cover.
Solution solve_sc_plurality(const ControlInstance& inst);

/// Polynomial solver for single-crossing (V union W) with full-d bundling,
/// Condorcet: guesses the at most two bundles spanning the median block of the
/// final crossing order, then picks minimum leader sets adding exact voter
/// counts on each side via min_intervals_exact_cover (bundles spanning both
/// sides are enumerated separately).
Solution solve_sc_condorcet(const ControlInstance& inst);

/// ILP route for anonymous bundling functions (both rules).
Solution solve_anonymous(const ControlInstance& inst, Rule rule);

/// Auto-selection: b1 greedy, then b2 full-d greedy, then the single-crossing
/// solvers, then the anonymous ILP (small m), then brute force within the
/// enumeration limit. Throws PreconditionError when nothing applies.
Solution dispatch(const ControlInstance& inst, Rule rule, const SolveOptions& opt = {});

/// Number of leader subsets of size <= k, clamped to `clamp`.
long long subset_count_clamped(int n, long long k, long long clamp);

} // namespace ccav
