#pragma once

#include "ccav/domains.hpp"
#include "ccav/instance.hpp"

namespace ccav {

/// Simple undirected graph with 0-based vertices.
struct Graph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges; // normalized u < v

    int num_edges() const { return static_cast<int>(edges.size()); }
};

/// Parses "u v" edge lines (0-based); vertex count is max index + 1.
/// Rejects loops and duplicate edges.
Graph parse_edge_list(const std::string& text);

struct SetCoverInput {
    std::vector<std::string> universe;  // element names
    std::vector<std::vector<int>> sets; // element indices into universe
    int target = 0;                     // cover size bound h
};

/// CNF over variables 1..num_vars; clauses are DIMACS-style signed literals.
/// Clauses may repeat literals; empty clauses are invalid.
struct Cnf {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

Cnf parse_dimacs(const std::string& text);

/// Rewrites a formula with clause sizes 2-3, at most 3 occurrences per
/// variable and at most one negative, into an equisatisfiable formula in
/// which every variable occurs exactly four times. Variables left with only
/// one polarity are fixed and removed first; three-occurrence variables gain
/// a companion variable, two-occurrence variables gain a tautological clause.
/// Original variables end up with two positive and two negative occurrences;
/// companions occur four times negatively.
Cnf sat_to_sat22(const Cnf& cnf);

/// Clique(G, h) instance, Plurality. Requires G connected, h >= 3, minimum
/// degree >= h - 1. Vertex voters are singleton g-voters, edge voters are
/// p-voters bundled with their endpoints; the bundling is anonymous with b=3.
ControlInstance gen_from_clique(const Graph& graph, int h);

/// Set Cover instance over two alternatives. Requires target <= |S|, the sets
/// jointly covering the universe, and registered counts to be nonnegative.
/// `verbatim_condorcet_counts` switches the Condorcet registered g-count to
/// the uncorrected value (kept for comparison; it fails oracle equivalence).
ControlInstance gen_from_set_cover(const SetCoverInput& input, Rule rule,
                                   bool verbatim_condorcet_counts = false);

/// (2,2)-3SAT instance, Plurality. Each variable contributes four p-voters
/// and its four literal-occurrence clause voters wired into one 8-cycle.
ControlInstance gen_from_sat22(const Cnf& cnf22);

/// Partial Vertex Cover instance, single-peaked with full-1 bundling.
/// Requires h <= |V(G)|, ell <= |E(G)| (and h + ell >= 1 for Condorcet).
ControlInstance gen_from_pvc(const Graph& graph, int h, int ell, Rule rule);

/// The societal axis the PVC construction is single-peaked with respect to.
Axis pvc_axis(const Graph& graph);

// Exhaustive deciders for the source problems, used as test referees.
// Desk-scale caps: graphs <= 7 vertices, universes <= 6 elements,
// formulas <= 12 variables; beyond them they throw PreconditionError.
bool source_oracle_clique(const Graph& graph, int h);
bool source_oracle_set_cover(const SetCoverInput& input);
bool source_oracle_sat(const Cnf& cnf);
bool source_oracle_pvc(const Graph& graph, int h, int ell);
bool source_oracle_vertex_cover(const Graph& graph, int h);

} // namespace ccav
