#include "ccav/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ccav {

// ---------------------------------------------------------------------------
// Input formats
// ---------------------------------------------------------------------------

Graph parse_edge_list(const std::string& text) {
    Graph g;
    std::set<std::pair<int, int>> seen;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u)) continue; // blank line
        if (!(ls >> v)) throw ValidationError("edge line with a single endpoint: '" + line + "'");
        if (u < 0 || v < 0) throw ValidationError("negative vertex index");
        if (u == v) throw ValidationError("loop edge " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw ValidationError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.edges.emplace_back(u, v);
        g.num_vertices = std::max(g.num_vertices, v + 1);
    }
    return g;
}

Cnf parse_dimacs(const std::string& text) {
    Cnf cnf;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    int declared_clauses = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            ls >> p >> fmt >> cnf.num_vars >> declared_clauses;
            if (fmt != "cnf") throw ValidationError("DIMACS header is not 'p cnf'");
            header_seen = true;
            continue;
        }
        if (!header_seen) throw ValidationError("clause before DIMACS header");
        int lit;
        std::vector<int> clause;
        while (ls >> lit) {
            if (lit == 0) break;
            clause.push_back(lit);
        }
        if (clause.empty()) continue;
        cnf.clauses.push_back(std::move(clause));
    }
    if (!header_seen) throw ValidationError("missing DIMACS header");
    for (const auto& clause : cnf.clauses)
        for (int lit : clause)
            if (lit == 0 || std::abs(lit) > cnf.num_vars)
                throw ValidationError("literal out of range in DIMACS clause");
    return cnf;
}

namespace {

void validate_cnf(const Cnf& cnf) {
    if (cnf.num_vars < 0) throw ValidationError("negative variable count");
    for (const auto& clause : cnf.clauses) {
        if (clause.empty()) throw ValidationError("empty clause");
        for (int lit : clause)
            if (lit == 0 || std::abs(lit) > cnf.num_vars)
                throw ValidationError("literal references an undeclared variable");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// 3SAT -> (2,2)-3SAT
// ---------------------------------------------------------------------------

Cnf sat_to_sat22(const Cnf& input) {
    validate_cnf(input);
    for (const auto& clause : input.clauses)
        if (clause.size() < 2 || clause.size() > 3)
            throw ValidationError("clause size outside 2..3");
    {
        std::vector<int> pos(input.num_vars + 1, 0), neg(input.num_vars + 1, 0);
        for (const auto& clause : input.clauses)
            for (int lit : clause) ++(lit > 0 ? pos[lit] : neg[-lit]);
        for (int v = 1; v <= input.num_vars; ++v) {
            if (pos[v] + neg[v] > 3) throw ValidationError("variable with more than three occurrences");
            if (neg[v] > 1) throw ValidationError("variable with more than one negative occurrence");
        }
    }

    // Fix one-polarity variables and drop their satisfied clauses until stable.
    std::vector<std::vector<int>> clauses = input.clauses;
    std::vector<char> removed_var(input.num_vars + 1, 0);
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<int> pos(input.num_vars + 1, 0), neg(input.num_vars + 1, 0);
        for (const auto& clause : clauses)
            for (int lit : clause) ++(lit > 0 ? pos[lit] : neg[-lit]);
        for (int v = 1; v <= input.num_vars; ++v) {
            if (removed_var[v] || pos[v] + neg[v] == 0) {
                removed_var[v] = 1;
                continue;
            }
            if (pos[v] > 0 && neg[v] > 0) continue;
            const int satisfied = pos[v] > 0 ? v : -v;
            std::erase_if(clauses, [&](const std::vector<int>& clause) {
                return std::find(clause.begin(), clause.end(), satisfied) != clause.end();
            });
            removed_var[v] = 1;
            changed = true;
        }
    }

    // Compact the surviving variables.
    std::vector<int> new_id(input.num_vars + 1, 0);
    int next_id = 0;
    for (int v = 1; v <= input.num_vars; ++v)
        if (!removed_var[v]) new_id[v] = ++next_id;

    Cnf out;
    for (const auto& clause : clauses) {
        std::vector<int> mapped;
        for (int lit : clause) mapped.push_back(lit > 0 ? new_id[lit] : -new_id[-lit]);
        out.clauses.push_back(std::move(mapped));
    }

    std::vector<int> pos(next_id + 1, 0), neg(next_id + 1, 0);
    for (const auto& clause : out.clauses)
        for (int lit : clause) ++(lit > 0 ? pos[lit] : neg[-lit]);
    int extra = 0;
    for (int v = 1; v <= next_id; ++v) {
        if (pos[v] == 2 && neg[v] == 1) {
            const int y = next_id + ++extra;
            out.clauses.push_back({-v, -y, -y});
            out.clauses.push_back({-y, -y});
        } else if (pos[v] == 1 && neg[v] == 1) {
            out.clauses.push_back({-v, v});
        } else {
            throw ValidationError("unexpected occurrence pattern after fixing one-polarity variables");
        }
    }
    out.num_vars = next_id + extra;
    return out;
}

// ---------------------------------------------------------------------------
// Shared construction helpers
// ---------------------------------------------------------------------------

namespace {

PreferenceOrder top_then_canonical(int m, std::initializer_list<int> front) {
    PreferenceOrder o;
    std::vector<char> used(m, 0);
    for (int a : front) {
        o.ranking.push_back(a);
        used[a] = 1;
    }
    for (int a = 0; a < m; ++a)
        if (!used[a]) o.ranking.push_back(a);
    return o;
}

PreferenceOrder prefix_then_canonical(int m, const std::vector<int>& front) {
    PreferenceOrder o;
    std::vector<char> used(m, 0);
    for (int a : front) {
        o.ranking.push_back(a);
        used[a] = 1;
    }
    for (int a = 0; a < m; ++a)
        if (!used[a]) o.ranking.push_back(a);
    return o;
}

void append_copies(std::vector<Voter>& voters, const std::string& prefix, int count,
                   const PreferenceOrder& order) {
    for (int i = 1; i <= count; ++i) voters.push_back({prefix + std::to_string(i), order});
}

bool graph_connected(const Graph& g) {
    if (g.num_vertices == 0) return true;
    std::vector<std::vector<int>> adj(g.num_vertices);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(g.num_vertices, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
    }
    return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

std::string edge_tag(std::pair<int, int> e) {
    return std::to_string(e.first) + "_" + std::to_string(e.second);
}

} // namespace

// ---------------------------------------------------------------------------
// Clique generator
// ---------------------------------------------------------------------------

ControlInstance gen_from_clique(const Graph& graph, int h) {
    if (h < 3) throw PreconditionError("clique generator requires h >= 3");
    if (!graph_connected(graph)) throw PreconditionError("clique generator requires a connected graph");
    {
        std::vector<int> degree(graph.num_vertices, 0);
        for (auto [u, v] : graph.edges) {
            ++degree[u];
            ++degree[v];
        }
        for (int d : degree)
            if (d < h - 1) throw PreconditionError("clique generator requires minimum degree h - 1");
    }

    const int m = 3 + graph.num_edges();
    std::vector<std::string> alternatives{"p", "w", "g"};
    for (auto e : graph.edges) alternatives.push_back("c" + edge_tag(e));
    const int P = 0, W = 1, G = 2;
    const auto edge_alt = [&](int idx) { return 3 + idx; };

    const long long pairs = static_cast<long long>(h) * (h - 1) / 2;
    std::vector<Voter> registered;
    append_copies(registered, "vw", static_cast<int>(pairs) + h, top_then_canonical(m, {W}));
    append_copies(registered, "vg", static_cast<int>(pairs), top_then_canonical(m, {G}));
    append_copies(registered, "vp", h, top_then_canonical(m, {P}));

    std::vector<Voter> pool;
    std::vector<std::pair<std::string, std::vector<std::string>>> bundles;
    std::vector<std::vector<int>> incident(graph.num_vertices);
    for (int e = 0; e < graph.num_edges(); ++e) {
        incident[graph.edges[e].first].push_back(e);
        incident[graph.edges[e].second].push_back(e);
    }
    for (int u = 0; u < graph.num_vertices; ++u) {
        std::vector<int> front{G};
        for (int e : incident[u]) front.push_back(edge_alt(e));
        const std::string id = "wu" + std::to_string(u);
        pool.push_back({id, prefix_then_canonical(m, front)});
        bundles.push_back({id, {id}});
    }
    for (int e = 0; e < graph.num_edges(); ++e) {
        const auto [u, v] = graph.edges[e];
        const std::string id = "we" + edge_tag(graph.edges[e]);
        pool.push_back({id, top_then_canonical(m, {P, edge_alt(e)})});
        bundles.push_back({id, {"wu" + std::to_string(u), "wu" + std::to_string(v), id}});
    }

    return make_control_instance(std::move(alternatives), "p", pairs, std::move(registered),
                                 std::move(pool), BundlingSpec::make_explicit(std::move(bundles)));
}

// ---------------------------------------------------------------------------
// Set Cover generator
// ---------------------------------------------------------------------------

ControlInstance gen_from_set_cover(const SetCoverInput& input, Rule rule,
                                   bool verbatim_condorcet_counts) {
    const int n = static_cast<int>(input.universe.size());
    const int k = input.target;
    if (k < 0) throw PreconditionError("set cover target must be nonnegative");
    if (k > static_cast<int>(input.sets.size()))
        throw PreconditionError("set cover target exceeds the number of sets");
    {
        std::vector<char> covered(n, 0);
        for (const auto& s : input.sets)
            for (int x : s) {
                if (x < 0 || x >= n) throw ValidationError("set element outside the universe");
                covered[x] = 1;
            }
        // Without joint coverage, partially covering selections can win with
        // leftover budget even though no cover exists.
        if (std::find(covered.begin(), covered.end(), 0) != covered.end())
            throw PreconditionError("set cover generator requires the sets to cover the universe");
    }
    const long long g_count = rule == Rule::Plurality
                                  ? n - k
                                  : (verbatim_condorcet_counts ? 2LL * n - k - 1 : 2LL * n - 2 * k - 1);
    const long long p_count = rule == Rule::Plurality ? 0 : n - k;
    if (g_count < 0 || p_count < 0)
        throw PreconditionError("set cover target too large for the registered voter counts");

    std::vector<std::string> alternatives{"p", "g"};
    const PreferenceOrder p_top{{0, 1}};
    const PreferenceOrder g_top{{1, 0}};

    std::vector<Voter> registered;
    append_copies(registered, "vg", static_cast<int>(g_count), g_top);
    append_copies(registered, "vp", static_cast<int>(p_count), p_top);

    std::vector<Voter> pool;
    std::vector<std::pair<std::string, std::vector<std::string>>> bundles;
    for (int i = 0; i < n; ++i) {
        const std::string xe = "wx" + std::to_string(i);
        const std::string d1 = "wd" + std::to_string(i) + "_1";
        const std::string d2 = "wd" + std::to_string(i) + "_2";
        pool.push_back({xe, p_top});
        pool.push_back({d1, g_top});
        pool.push_back({d2, g_top});
        bundles.push_back({xe, {xe, d1, d2}});
        bundles.push_back({d1, {d1, d2}});
        bundles.push_back({d2, {d1, d2}});
    }
    for (size_t j = 0; j < input.sets.size(); ++j) {
        const std::string id = "wS" + std::to_string(j);
        pool.push_back({id, g_top});
        std::vector<std::string> members{id};
        for (int x : input.sets[j]) members.push_back("wx" + std::to_string(x));
        bundles.push_back({id, std::move(members)});
    }

    return make_control_instance(std::move(alternatives), "p", k, std::move(registered),
                                 std::move(pool), BundlingSpec::make_explicit(std::move(bundles)));
}

// ---------------------------------------------------------------------------
// (2,2)-3SAT generator
// ---------------------------------------------------------------------------

ControlInstance gen_from_sat22(const Cnf& cnf) {
    validate_cnf(cnf);
    const int nvars = cnf.num_vars;
    const int nclauses = static_cast<int>(cnf.clauses.size());
    // Occurrences per variable, split by polarity, in clause order.
    struct Occ {
        int clause;
        int slot;
    };
    std::vector<std::vector<Occ>> pos_occ(nvars + 1), neg_occ(nvars + 1);
    for (int i = 0; i < nclauses; ++i) {
        if (cnf.clauses[i].size() < 2 || cnf.clauses[i].size() > 3)
            throw PreconditionError("clause size outside 2..3");
        for (int t = 0; t < static_cast<int>(cnf.clauses[i].size()); ++t) {
            const int lit = cnf.clauses[i][t];
            (lit > 0 ? pos_occ[lit] : neg_occ[-lit]).push_back({i, t});
        }
    }
    for (int v = 1; v <= nvars; ++v) {
        const size_t np = pos_occ[v].size(), nn = neg_occ[v].size();
        const bool ok = (np == 2 && nn == 2) || (np == 0 && nn == 4) || (np == 4 && nn == 0);
        if (!ok)
            throw PreconditionError("variable x" + std::to_string(v) +
                                    " does not occur four times with an admissible polarity split");
    }

    const int m = 2 + nclauses;
    std::vector<std::string> alternatives{"p", "w"};
    for (int i = 1; i <= nclauses; ++i) alternatives.push_back("c" + std::to_string(i));
    const int P = 0, W = 1;
    const long long k = 4LL * nvars;

    std::vector<Voter> registered;
    append_copies(registered, "vw", static_cast<int>(k), top_then_canonical(m, {W}));
    for (int i = 0; i < nclauses; ++i)
        append_copies(registered, "vc" + std::to_string(i + 1) + "_",
                      static_cast<int>(k) - static_cast<int>(cnf.clauses[i].size()) + 1,
                      top_then_canonical(m, {2 + i}));

    std::vector<Voter> pool;
    std::vector<std::pair<std::string, std::vector<std::string>>> bundles;
    const auto occ_voter_id = [](Occ o) {
        return "cv" + std::to_string(o.clause + 1) + "_" + std::to_string(o.slot + 1);
    };
    for (int v = 1; v <= nvars; ++v) {
        // Cycle order alternates polarities where both are present.
        std::vector<Occ> ring;
        if (!pos_occ[v].empty() && !neg_occ[v].empty())
            ring = {neg_occ[v][0], pos_occ[v][0], neg_occ[v][1], pos_occ[v][1]};
        else
            ring = pos_occ[v].empty() ? neg_occ[v] : pos_occ[v];

        std::vector<std::string> pv_ids, cv_ids;
        for (int a = 0; a < 4; ++a) {
            pv_ids.push_back("pv" + std::to_string(v) + "_" + std::to_string(a + 1));
            cv_ids.push_back(occ_voter_id(ring[a]));
            pool.push_back({pv_ids.back(), top_then_canonical(m, {P})});
            pool.push_back({cv_ids.back(), top_then_canonical(m, {2 + ring[a].clause})});
        }
        for (int a = 0; a < 4; ++a) {
            bundles.push_back({pv_ids[a], {pv_ids[a], cv_ids[a]}});
            bundles.push_back({cv_ids[a], {cv_ids[a], pv_ids[(a + 1) % 4]}});
        }
    }

    return make_control_instance(std::move(alternatives), "p", k, std::move(registered),
                                 std::move(pool), BundlingSpec::make_explicit(std::move(bundles)));
}

// ---------------------------------------------------------------------------
// Partial Vertex Cover generator
// ---------------------------------------------------------------------------

namespace {

struct PvcLayout {
    int nv;
    int m;
    int alt_a(int i) const { return 2 + 2 * i; }        // a_i, 0-based vertex
    int alt_abar(int i) const { return 3 + 2 * i; }
    int alt_b(int i) const { return 2 + 2 * nv + 2 * i; }
    int alt_bbar(int i) const { return 3 + 2 * nv + 2 * i; }
};

PreferenceOrder diff_order(const PvcLayout& lay, bool swap_pw, const std::vector<int>& vertices) {
    PreferenceOrder o;
    o.ranking.resize(lay.m);
    std::iota(o.ranking.begin(), o.ranking.end(), 0);
    if (swap_pw) std::swap(o.ranking[0], o.ranking[1]);
    for (int i : vertices) std::swap(o.ranking[lay.alt_a(i)], o.ranking[lay.alt_abar(i)]);
    return o;
}

} // namespace

Axis pvc_axis(const Graph& graph) {
    const PvcLayout lay{graph.num_vertices, 2 + 4 * graph.num_vertices};
    Axis axis;
    for (int i = lay.nv - 1; i >= 0; --i) axis.push_back(lay.alt_bbar(i));
    for (int i = lay.nv - 1; i >= 0; --i) axis.push_back(lay.alt_abar(i));
    axis.push_back(0);
    axis.push_back(1);
    for (int i = 0; i < lay.nv; ++i) axis.push_back(lay.alt_a(i));
    for (int i = 0; i < lay.nv; ++i) axis.push_back(lay.alt_b(i));
    return axis;
}

ControlInstance gen_from_pvc(const Graph& graph, int h, int ell, Rule rule) {
    if (h < 0 || h > graph.num_vertices)
        throw PreconditionError("pvc generator requires 0 <= h <= |V(G)|");
    if (ell < 0 || ell > graph.num_edges())
        throw PreconditionError("pvc generator requires 0 <= ell <= |E(G)|");
    const long long registered_count = rule == Rule::Plurality ? h + ell : h + ell - 1;
    if (registered_count < 0)
        throw PreconditionError("pvc Condorcet variant requires h + ell >= 1");

    const PvcLayout lay{graph.num_vertices, 2 + 4 * graph.num_vertices};
    std::vector<std::string> alternatives{"p", "w"};
    for (int i = 0; i < lay.nv; ++i) {
        alternatives.push_back("a" + std::to_string(i));
        alternatives.push_back("abar" + std::to_string(i));
    }
    for (int i = 0; i < lay.nv; ++i) {
        alternatives.push_back("b" + std::to_string(i));
        alternatives.push_back("bbar" + std::to_string(i));
    }

    std::vector<Voter> registered;
    append_copies(registered, "v", static_cast<int>(registered_count), diff_order(lay, true, {}));

    std::vector<Voter> pool;
    for (auto e : graph.edges)
        pool.push_back({"we" + edge_tag(e), diff_order(lay, false, {e.first, e.second})});
    for (auto e : graph.edges)
        pool.push_back({"de" + edge_tag(e), diff_order(lay, true, {e.first, e.second})});
    for (int i = 0; i < lay.nv; ++i)
        pool.push_back({"wu" + std::to_string(i), diff_order(lay, false, {i})});

    return make_control_instance(std::move(alternatives), "p", h, std::move(registered),
                                 std::move(pool), BundlingSpec::full_swap(1));
}

// ---------------------------------------------------------------------------
// Source-problem oracles
// ---------------------------------------------------------------------------

namespace {

void check_cap(bool ok) {
    if (!ok) throw PreconditionError("scale cap exceeded for a source oracle");
}

template <typename F>
bool any_subset_of_size(int n, int size, F accepts) {
    std::vector<int> combo(size);
    std::iota(combo.begin(), combo.end(), 0);
    if (size > n) return false;
    while (true) {
        if (accepts(combo)) return true;
        int i = size - 1;
        while (i >= 0 && combo[i] == n - size + i) --i;
        if (i < 0) return false;
        ++combo[i];
        for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
}

} // namespace

bool source_oracle_clique(const Graph& graph, int h) {
    check_cap(graph.num_vertices <= 7);
    if (h <= 0) return true;
    if (h > graph.num_vertices) return false;
    std::vector<std::vector<char>> adj(graph.num_vertices,
                                       std::vector<char>(graph.num_vertices, 0));
    for (auto [u, v] : graph.edges) adj[u][v] = adj[v][u] = 1;
    return any_subset_of_size(graph.num_vertices, h, [&](const std::vector<int>& combo) {
        for (size_t i = 0; i < combo.size(); ++i)
            for (size_t j = i + 1; j < combo.size(); ++j)
                if (!adj[combo[i]][combo[j]]) return false;
        return true;
    });
}

bool source_oracle_set_cover(const SetCoverInput& input) {
    check_cap(input.universe.size() <= 6);
    const int n = static_cast<int>(input.universe.size());
    const int s = static_cast<int>(input.sets.size());
    for (int size = 0; size <= std::min(input.target, s); ++size) {
        if (any_subset_of_size(s, size, [&](const std::vector<int>& combo) {
                std::vector<char> covered(n, 0);
                for (int j : combo)
                    for (int x : input.sets[j]) covered[x] = 1;
                return std::find(covered.begin(), covered.end(), 0) == covered.end();
            }))
            return true;
    }
    return false;
}

bool source_oracle_sat(const Cnf& cnf) {
    validate_cnf(cnf);
    check_cap(cnf.num_vars <= 12);
    for (uint64_t mask = 0; mask < (uint64_t{1} << cnf.num_vars); ++mask) {
        bool all = true;
        for (const auto& clause : cnf.clauses) {
            bool sat = false;
            for (int lit : clause) {
                const bool value = (mask >> (std::abs(lit) - 1)) & 1;
                if ((lit > 0) == value) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

bool source_oracle_pvc(const Graph& graph, int h, int ell) {
    check_cap(graph.num_vertices <= 7);
    const int size = std::min(h, graph.num_vertices);
    if (ell <= 0) return true;
    return any_subset_of_size(graph.num_vertices, size, [&](const std::vector<int>& combo) {
        std::vector<char> in(graph.num_vertices, 0);
        for (int u : combo) in[u] = 1;
        int covered = 0;
        for (auto [u, v] : graph.edges)
            if (in[u] || in[v]) ++covered;
        return covered >= ell;
    });
}

bool source_oracle_vertex_cover(const Graph& graph, int h) {
    return source_oracle_pvc(graph, h, graph.num_edges());
}

} // namespace ccav
