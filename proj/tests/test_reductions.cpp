#include <doctest.h>

#include <algorithm>
#include <set>

#include "ccav/json_io.hpp"
#include "ccav/reductions.hpp"
#include "ccav/solvers.hpp"
#include "helpers.hpp"

using namespace ccav;

namespace {

Graph triangle() {
    Graph g;
    g.num_vertices = 3;
    g.edges = {{0, 1}, {0, 2}, {1, 2}};
    return g;
}

Graph path(int n) {
    Graph g;
    g.num_vertices = n;
    for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

int occurrences(const Cnf& cnf, int var, bool positive) {
    int count = 0;
    for (const auto& clause : cnf.clauses)
        for (int lit : clause)
            if (std::abs(lit) == var && (lit > 0) == positive) ++count;
    return count;
}

} // namespace

TEST_CASE("edge list parsing") {
    const Graph g = parse_edge_list("0 1\n0 2\n1 2\n");
    CHECK(g.num_vertices == 3);
    CHECK(g.num_edges() == 3);
    CHECK_THROWS_AS(parse_edge_list("0 0\n"), ValidationError);
    CHECK_THROWS_AS(parse_edge_list("0 1\n1 0\n"), ValidationError);
}

TEST_CASE("dimacs parsing") {
    const Cnf cnf = parse_dimacs("c comment\np cnf 3 2\n1 -2 0\n2 3 0\n");
    CHECK(cnf.num_vars == 3);
    CHECK(cnf.clauses == std::vector<std::vector<int>>{{1, -2}, {2, 3}});
    CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), ValidationError);
}

TEST_CASE("sat_to_sat22 gadgets") {
    // x1 with two positive and one negative occurrence gains a companion
    // variable and its two clauses; x2 with one occurrence each way gains the
    // tautological clause.
    const Cnf three{2, {{1, 1}, {-1, 2}, {-2, 2}}};
    // x1 and x2 both occur three times (2 positive, 1 negative)
    const Cnf out3 = sat_to_sat22(three);
    REQUIRE(out3.num_vars == 4); // x1, x2 plus their companions
    for (int v = 1; v <= out3.num_vars; ++v)
        CHECK(occurrences(out3, v, true) + occurrences(out3, v, false) == 4);
    CHECK(occurrences(out3, 1, true) == 2);
    CHECK(occurrences(out3, 1, false) == 2);
    CHECK(occurrences(out3, 3, true) == 0);
    CHECK(occurrences(out3, 3, false) == 4);
    CHECK(std::count(out3.clauses.begin(), out3.clauses.end(), std::vector<int>{-1, -3, -3}) == 1);
    CHECK(std::count(out3.clauses.begin(), out3.clauses.end(), std::vector<int>{-3, -3}) == 1);
    CHECK(std::count(out3.clauses.begin(), out3.clauses.end(), std::vector<int>{-2, -4, -4}) == 1);
    CHECK(source_oracle_sat(out3) == source_oracle_sat(three));

    const Cnf two{2, {{1, 2}, {-1, -2}}}; // both variables occur once each way
    const Cnf out2 = sat_to_sat22(two);
    REQUIRE(out2.num_vars == 2);
    CHECK(std::count(out2.clauses.begin(), out2.clauses.end(), std::vector<int>{-1, 1}) == 1);
    CHECK(std::count(out2.clauses.begin(), out2.clauses.end(), std::vector<int>{-2, 2}) == 1);
    for (int v = 1; v <= out2.num_vars; ++v) {
        CHECK(occurrences(out2, v, true) == 2);
        CHECK(occurrences(out2, v, false) == 2);
    }
}

TEST_CASE("sat_to_sat22 drops pure variables first") {
    // x2 appears only positively: fixing it true removes both clauses, which
    // strips x1 of all occurrences, so the output formula is empty.
    const Cnf input{2, {{1, 2}, {-1, 2}}};
    const Cnf out = sat_to_sat22(input);
    CHECK(out.num_vars == 0);
    CHECK(out.clauses.empty());
    for (int v = 1; v <= out.num_vars; ++v)
        CHECK(occurrences(out, v, true) + occurrences(out, v, false) == 4);
    CHECK(source_oracle_sat(out) == source_oracle_sat(input));
}

TEST_CASE("sat_to_sat22 preserves satisfiability") {
    Rng rng(7001);
    int built = 0;
    while (built < 60) {
        // random Tovey-style formula: clause sizes 2-3, <= 3 occurrences per
        // variable, at most one negative
        const int nvars = 2 + rng.uniform(3);
        Cnf cnf{nvars, {}};
        std::vector<int> pos(nvars + 1, 0), neg(nvars + 1, 0);
        const int nclauses = 1 + rng.uniform(4);
        bool ok = true;
        for (int c = 0; c < nclauses && ok; ++c) {
            const int size = 2 + rng.uniform(2);
            std::vector<int> clause;
            for (int t = 0; t < size; ++t) {
                const int v = 1 + rng.uniform(nvars);
                const bool negative = neg[v] == 0 && rng.uniform(3) == 0;
                if (pos[v] + neg[v] >= 3) {
                    ok = false;
                    break;
                }
                ++(negative ? neg[v] : pos[v]);
                clause.push_back(negative ? -v : v);
            }
            if (ok) cnf.clauses.push_back(std::move(clause));
        }
        if (!ok || cnf.clauses.empty()) continue;
        ++built;
        const Cnf out = sat_to_sat22(cnf);
        for (int v = 1; v <= out.num_vars; ++v)
            CHECK(occurrences(out, v, true) + occurrences(out, v, false) == 4);
        CHECK(source_oracle_sat(out) == source_oracle_sat(cnf));
    }
}

TEST_CASE("clique generator structure on K3") {
    const ControlInstance inst = gen_from_clique(triangle(), 3);
    CHECK(inst.budget == 3);
    CHECK(inst.num_alternatives() == 6);
    const ScoreTable scores = plurality_scores(inst.registered_election());
    CHECK(scores[0] == 3); // p
    CHECK(scores[1] == 6); // w
    CHECK(scores[2] == 3); // g
    CHECK(plurality_winners(inst.registered_election()) == std::vector<int>{1});
    CHECK(inst.bundles.max_bundle_size() == 3);
    CHECK(is_anonymous(inst.bundles, inst.pool));

    // the three edge voters tie p, w, g at binom(h,2) + h = 6
    const std::vector<std::string> edge_voters{"we0_1", "we0_2", "we1_2"};
    CHECK(verify_solution(inst, Rule::Plurality, edge_voters));
    const std::vector<int> added = closure(inst.bundles, inst.pool_indices_of(edge_voters));
    const ScoreTable final_scores = plurality_scores(inst.election_with(added));
    CHECK(final_scores[0] == 6);
    CHECK(final_scores[1] == 6);
    CHECK(final_scores[2] == 6);

    CHECK_THROWS_AS(gen_from_clique(path(4), 3), PreconditionError); // degree too low
    CHECK_THROWS_AS(gen_from_clique(triangle(), 2), PreconditionError);
}

TEST_CASE("clique generator feasibility equals clique existence (small graphs)") {
    // K4 minus an edge has a triangle but no K4; K4 has both.
    Graph k4 = triangle();
    k4.num_vertices = 4;
    k4.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    Graph k4_minus = k4;
    k4_minus.edges.pop_back();

    for (const Graph& g : {triangle(), k4, k4_minus}) {
        for (int h = 3; h <= 4; ++h) {
            ControlInstance inst;
            try {
                inst = gen_from_clique(g, h);
            } catch (const PreconditionError&) {
                continue;
            }
            CHECK(solve_brute_force(inst, Rule::Plurality).feasible == source_oracle_clique(g, h));
        }
    }
}

TEST_CASE("set cover generator structure") {
    const SetCoverInput input{{"x1", "x2"}, {{0}, {0, 1}}, 1};
    const ControlInstance inst = gen_from_set_cover(input, Rule::Plurality);
    CHECK(inst.num_alternatives() == 2);
    // element bundle chain: the element voter pulls its two dummies
    const auto wx0 = inst.pool_index_of("wx0");
    REQUIRE(wx0.has_value());
    CHECK(inst.pool_ids_of(inst.bundles.bundles[*wx0]) ==
          std::vector<std::string>{"wd0_1", "wd0_2", "wx0"});
    // set bundle contains the element voters but not their dummies
    const auto ws1 = inst.pool_index_of("wS1");
    REQUIRE(ws1.has_value());
    CHECK(inst.pool_ids_of(inst.bundles.bundles[*ws1]) ==
          std::vector<std::string>{"wS1", "wx0", "wx1"});
    CHECK(inst.pool_ids_of(closure(inst.bundles, {*ws1})) ==
          std::vector<std::string>{"wS1", "wx0", "wx1"});

    CHECK_THROWS_AS(gen_from_set_cover({{"x1", "x2"}, {{0}}, 1}, Rule::Plurality),
                    PreconditionError); // x2 not coverable
}

TEST_CASE("set cover equivalence on small instances, both rules") {
    const std::vector<SetCoverInput> inputs{
        {{"x1", "x2"}, {{0}, {0, 1}}, 1},
        {{"x1", "x2"}, {{0}, {1}}, 1},
        {{"x1", "x2", "x3"}, {{0, 1}, {1, 2}, {2}}, 2},
        {{"x1", "x2", "x3", "x4"}, {{0, 1, 2}, {0, 3}, {3}}, 2},
        {{"x1", "x2", "x3", "x4"}, {{0, 1, 2}, {3}, {0}}, 2},
    };
    for (const auto& input : inputs) {
        const bool expected = source_oracle_set_cover(input);
        CHECK(solve_brute_force(gen_from_set_cover(input, Rule::Plurality), Rule::Plurality).feasible ==
              expected);
        CHECK(
            solve_brute_force(gen_from_set_cover(input, Rule::Condorcet), Rule::Condorcet).feasible ==
            expected);
    }
}

TEST_CASE("verbatim Condorcet set-cover counts break equivalence on a yes-instance") {
    const SetCoverInput yes{{"x1", "x2"}, {{0, 1}, {0}}, 1};
    REQUIRE(source_oracle_set_cover(yes));
    const ControlInstance fixed = gen_from_set_cover(yes, Rule::Condorcet, false);
    const ControlInstance verbatim = gen_from_set_cover(yes, Rule::Condorcet, true);
    CHECK(solve_brute_force(fixed, Rule::Condorcet).feasible);
    CHECK_FALSE(solve_brute_force(verbatim, Rule::Condorcet).feasible);
}

TEST_CASE("sat22 generator structure") {
    // one variable, pattern (2,2): clauses {x,x}, {-x,-x}
    const Cnf cnf{1, {{1, 1}, {-1, -1}}};
    const ControlInstance inst = gen_from_sat22(cnf);
    CHECK(inst.budget == 4);
    CHECK(inst.bundles.max_bundle_size() == 2);
    const BundlingGraph g = bundling_graph(inst.bundles);
    CHECK(g.num_vertices == 8);
    CHECK(g.arcs.size() == 8);
    // one directed 8-cycle: every vertex has out-degree and in-degree one
    std::vector<int> out(g.num_vertices, 0), in(g.num_vertices, 0);
    for (auto [z, y] : g.arcs) {
        ++out[z];
        ++in[y];
    }
    CHECK(std::count(out.begin(), out.end(), 1) == 8);
    CHECK(std::count(in.begin(), in.end(), 1) == 8);

    CHECK_THROWS_AS(gen_from_sat22(Cnf{1, {{1, -1}}}), PreconditionError);
}

TEST_CASE("sat22 generator feasibility equals satisfiability (small formulas)") {
    const std::vector<Cnf> formulas{
        {1, {{1, -1}, {1, -1}}},                   // satisfiable (tautologies)
        {1, {{1, 1}, {-1, -1}}},                   // unsatisfiable
        {2, {{1, 2}, {1, 2}, {-1, -2}, {-1, -2}}}, // satisfiable
        {2, {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}}}, // unsatisfiable
    };
    for (const Cnf& cnf : formulas) {
        const ControlInstance inst = gen_from_sat22(cnf);
        CHECK(solve_brute_force(inst, Rule::Plurality).feasible == source_oracle_sat(cnf));
    }
}

TEST_CASE("pvc generator structure") {
    const Graph g = path(3); // edges {0,1}, {1,2}
    const ControlInstance inst = gen_from_pvc(g, 1, 2, Rule::Plurality);
    CHECK(inst.num_alternatives() == 2 + 4 * 3);
    CHECK(inst.budget == 1);
    CHECK(static_cast<int>(inst.registered.size()) == 3); // h + ell

    // resolved full-1 bundles: kappa(w_e) = {w_e, both endpoints' vertex voters, d_e}
    const auto we = inst.pool_index_of("we0_1");
    REQUIRE(we.has_value());
    CHECK(inst.pool_ids_of(inst.bundles.bundles[*we]) ==
          std::vector<std::string>{"de0_1", "we0_1", "wu0", "wu1"});
    const auto de = inst.pool_index_of("de0_1");
    REQUIRE(de.has_value());
    CHECK(inst.pool_ids_of(inst.bundles.bundles[*de]) ==
          std::vector<std::string>{"de0_1", "we0_1"});
    const auto wu1 = inst.pool_index_of("wu1");
    REQUIRE(wu1.has_value());
    CHECK(inst.pool_ids_of(inst.bundles.bundles[*wu1]) ==
          std::vector<std::string>{"we0_1", "we1_2", "wu1"});

    CHECK(infer_full_d(inst.bundles, inst.pool) == 1);
    CHECK(is_anonymous(inst.bundles, inst.pool));

    Election combined{inst.alternatives, inst.registered};
    combined.voters.insert(combined.voters.end(), inst.pool.begin(), inst.pool.end());
    CHECK(is_single_peaked_wrt(combined, pvc_axis(g)));
}

TEST_CASE("pvc pairwise distance table") {
    const Graph g = path(3);
    const ControlInstance inst = gen_from_pvc(g, 1, 2, Rule::Plurality);
    const auto dist = [&](const std::string& a, const std::string& b) {
        return swap_distance(inst.pool[*inst.pool_index_of(a)].order,
                             inst.pool[*inst.pool_index_of(b)].order);
    };
    CHECK(dist("we0_1", "we1_2") >= 2);                   // (a) two edge voters
    CHECK(dist("we0_1", "de0_1") == 1);                   // (b) same edge
    CHECK(dist("we0_1", "de1_2") >= 3);                   // (b) different edges
    CHECK(dist("we0_1", "wu0") == 1);                     // (c) incident vertex
    CHECK(dist("we0_1", "wu2") == 3);                     // (c) non-incident vertex
    CHECK(dist("de0_1", "de1_2") >= 2);                   // (d)
    CHECK(dist("de0_1", "wu0") >= 2);                     // (e)
    CHECK(dist("wu0", "wu1") == 2);                       // (f)
}

TEST_CASE("pvc equivalence on small graphs, both rules") {
    Graph k3 = triangle();
    Graph p4 = path(4);
    Graph star;
    star.num_vertices = 4;
    star.edges = {{0, 1}, {0, 2}, {0, 3}};
    for (const Graph& g : {k3, p4, star}) {
        for (int h = 0; h <= 2; ++h) {
            for (int ell = 0; ell <= g.num_edges(); ++ell) {
                const bool expected = source_oracle_pvc(g, h, ell);
                CHECK(solve_brute_force(gen_from_pvc(g, h, ell, Rule::Plurality), Rule::Plurality)
                          .feasible == expected);
                if (h + ell >= 1)
                    CHECK(solve_brute_force(gen_from_pvc(g, h, ell, Rule::Condorcet), Rule::Condorcet)
                              .feasible == expected);
            }
        }
    }
}

TEST_CASE("pvc with ell = |E| on a max-degree-3 graph decides vertex cover with b <= 4") {
    const Graph g = path(4);
    for (int h = 0; h <= 3; ++h) {
        const ControlInstance inst = gen_from_pvc(g, h, g.num_edges(), Rule::Plurality);
        CHECK(inst.bundles.max_bundle_size() <= 4);
        CHECK(infer_full_d(inst.bundles, inst.pool) == 1);
        CHECK(solve_brute_force(inst, Rule::Plurality).feasible == source_oracle_vertex_cover(g, h));
    }
}

TEST_CASE("source oracles") {
    CHECK(source_oracle_clique(triangle(), 3));
    CHECK_FALSE(source_oracle_clique(path(4), 3));
    CHECK_FALSE(source_oracle_set_cover({{"x1", "x2"}, {{0}}, 1}));
    CHECK(source_oracle_sat(Cnf{1, {{1, -1}}}));
    CHECK_FALSE(source_oracle_sat(Cnf{1, {{1}, {-1}}}));
    CHECK(source_oracle_pvc(path(3), 1, 2));
    CHECK_FALSE(source_oracle_pvc(path(4), 1, 3));
    CHECK(source_oracle_vertex_cover(path(4), 2));

    Graph big;
    big.num_vertices = 9;
    big.edges = {{0, 1}};
    CHECK_THROWS_WITH_AS(source_oracle_clique(big, 3), "scale cap exceeded for a source oracle",
                         PreconditionError);
}
