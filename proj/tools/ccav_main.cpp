#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ccav/json_io.hpp"
#include "ccav/random_gen.hpp"
#include "ccav/solvers.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ccav::ValidationError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_solve(const std::string& instance_path, const std::string& rule_name,
              const std::string& solver, long long limit) {
    const ccav::ControlInstance inst = ccav::parse_instance(read_file(instance_path));
    const ccav::Rule rule = ccav::rule_from_name(rule_name);
    ccav::SolveOptions opt;
    opt.enumeration_limit = limit;

    if ((solver == "b1" || solver == "b2full") && rule != ccav::Rule::Plurality)
        throw ccav::PreconditionError("solver '" + solver + "' supports the plurality rule only");

    ccav::Solution solution;
    if (solver == "auto") solution = ccav::dispatch(inst, rule, opt);
    else if (solver == "brute") solution = ccav::solve_brute_force(inst, rule, opt);
    else if (solver == "b1") solution = ccav::solve_plurality_b1(inst);
    else if (solver == "b2full") solution = ccav::solve_plurality_full_d_b2(inst);
    else if (solver == "sc")
        solution = rule == ccav::Rule::Plurality ? ccav::solve_sc_plurality(inst)
                                                 : ccav::solve_sc_condorcet(inst);
    else if (solver == "ilp") solution = ccav::solve_anonymous(inst, rule);
    else throw ccav::ValidationError("unknown solver '" + solver + "'");

    json doc = ccav::solution_to_json(solution, rule);
    json scores = json::object();
    for (int a = 0; a < inst.num_alternatives(); ++a)
        scores[inst.alternatives[a]] = solution.final_scores[a];
    doc["final_scores"] = scores;
    emit(doc);
    return solution.feasible ? 0 : 1;
}

int run_verify(const std::string& instance_path, const std::string& solution_path,
               const std::string& rule_name) {
    const ccav::ControlInstance inst = ccav::parse_instance(read_file(instance_path));
    const ccav::Rule rule = ccav::rule_from_name(rule_name);
    json doc;
    try {
        doc = json::parse(read_file(solution_path));
    } catch (const json::parse_error& e) {
        throw ccav::ValidationError(std::string("malformed JSON: ") + e.what());
    }
    const std::vector<std::string> selected = ccav::solution_selected_from_json(doc);
    const bool ok = static_cast<long long>(selected.size()) <= inst.budget &&
                    ccav::verify_solution(inst, rule, selected);
    return ok ? 0 : 1;
}

int run_generate(const std::string& kind, const std::string& source_path,
                 const std::string& rule_name, int h, int ell, bool verbatim_counts) {
    const ccav::Rule rule = ccav::rule_from_name(rule_name);
    const std::string source = read_file(source_path);
    ccav::ControlInstance inst;
    json meta{{"generator", kind}};
    json verdict = nullptr;

    if ((kind == "clique" || kind == "sat22") && rule != ccav::Rule::Plurality)
        throw ccav::PreconditionError("generator '" + kind + "' supports the plurality rule only");

    if (kind == "clique") {
        const ccav::Graph graph = ccav::parse_edge_list(source);
        inst = ccav::gen_from_clique(graph, h);
        meta["params"] = {{"h", h}};
        meta["expected_tie_score"] = static_cast<long long>(h) * (h - 1) / 2 + h;
        try {
            verdict = ccav::source_oracle_clique(graph, h);
        } catch (const ccav::PreconditionError&) {}
    } else if (kind == "setcover") {
        const ccav::SetCoverInput input = ccav::set_cover_from_json(source);
        inst = ccav::gen_from_set_cover(input, rule, verbatim_counts);
        meta["params"] = {{"target", input.target}, {"verbatim_counts", verbatim_counts}};
        try {
            verdict = ccav::source_oracle_set_cover(input);
        } catch (const ccav::PreconditionError&) {}
    } else if (kind == "sat22") {
        ccav::Cnf cnf = ccav::parse_dimacs(source);
        bool transformed = false;
        try {
            inst = ccav::gen_from_sat22(cnf);
        } catch (const ccav::PreconditionError&) {
            cnf = ccav::sat_to_sat22(cnf);
            inst = ccav::gen_from_sat22(cnf);
            transformed = true;
        }
        meta["params"] = {{"variables", cnf.num_vars}, {"transformed", transformed}};
        try {
            verdict = ccav::source_oracle_sat(cnf);
        } catch (const ccav::PreconditionError&) {}
    } else if (kind == "pvc") {
        const ccav::Graph graph = ccav::parse_edge_list(source);
        inst = ccav::gen_from_pvc(graph, h, ell, rule);
        meta["params"] = {{"h", h}, {"ell", ell}};
        try {
            verdict = ccav::source_oracle_pvc(graph, h, ell);
        } catch (const ccav::PreconditionError&) {}
    } else {
        throw ccav::ValidationError("unknown generator kind '" + kind + "'");
    }

    meta["rule"] = rule_name;
    meta["source_verdict"] = verdict;
    meta["expected"] = verdict.is_null() ? json(nullptr)
                                         : json(verdict.get<bool>() ? "feasible" : "infeasible");
    json doc = ccav::instance_to_json(inst);
    doc["meta"] = meta;
    emit(doc);
    return 0;
}

int run_analyze(const std::string& instance_path) {
    const ccav::ControlInstance inst = ccav::parse_instance(read_file(instance_path));
    emit(ccav::analyze_report(inst));
    return 0;
}

int run_random(const std::string& kind_name, std::uint64_t seed, const ccav::RandomParams& params) {
    const ccav::RandomKind kind = ccav::random_kind_from_name(kind_name);
    const ccav::ControlInstance inst = ccav::make_random_instance(kind, params, seed);
    json doc = ccav::instance_to_json(inst);
    doc["meta"] = {{"generator", "random"},
                   {"kind", kind_name},
                   {"seed", seed},
                   {"prng", "mt19937_64 with rejection-sampled bounded draws"}};
    emit(doc);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers and instance tooling for combinatorial control by adding voters"};
    app.require_subcommand(1);

    std::string instance_path, solution_path, source_path, rule = "plurality";
    std::string solver = "auto", kind;
    long long limit = 10'000'000;
    int h = 0, ell = 0;
    bool verbatim_counts = false;
    std::uint64_t seed = 0;
    ccav::RandomParams params;

    CLI::App* solve = app.add_subcommand("solve", "solve an instance");
    solve->add_option("instance", instance_path, "instance JSON file")->required();
    solve->add_option("--rule", rule, "plurality|condorcet");
    solve->add_option("--solver", solver, "auto|brute|b1|b2full|sc|ilp");
    solve->add_option("--limit", limit, "brute-force enumeration limit");

    CLI::App* verify = app.add_subcommand("verify", "verify a solution document");
    verify->add_option("instance", instance_path, "instance JSON file")->required();
    verify->add_option("solution", solution_path, "solution JSON file")->required();
    verify->add_option("--rule", rule, "plurality|condorcet");

    CLI::App* generate = app.add_subcommand("generate", "generate an instance from a source problem");
    generate->set_help_flag("--help", "print help");
    generate->add_option("kind", kind, "clique|setcover|sat22|pvc")->required();
    generate->add_option("source", source_path, "source problem file")->required();
    generate->add_option("--rule", rule, "plurality|condorcet");
    generate->add_option("--h", h, "parameter h (clique, pvc)");
    generate->add_option("--ell", ell, "parameter ell (pvc)");
    generate->add_flag("--verbatim-counts", verbatim_counts,
                       "use the uncorrected Condorcet set-cover registered counts");

    CLI::App* analyze = app.add_subcommand("analyze", "report structural properties of an instance");
    analyze->add_option("instance", instance_path, "instance JSON file")->required();

    CLI::App* random = app.add_subcommand("random", "emit a seeded random instance");
    random->add_option("kind", kind, "general|single_peaked|single_crossing|anonymous")->required();
    random->add_option("--seed", seed, "PRNG seed")->required();
    random->add_option("--alternatives", params.alternatives, "number of alternatives");
    random->add_option("--registered", params.registered, "registered voter count");
    random->add_option("--unregistered", params.unregistered, "unregistered voter count");
    random->add_option("--budget", params.budget, "budget k");
    random->add_option("--d", params.full_d, "full-swap distance d");

    try {
        app.parse(argc, argv);
        if (solve->parsed()) return run_solve(instance_path, rule, solver, limit);
        if (verify->parsed()) return run_verify(instance_path, solution_path, rule);
        if (generate->parsed()) return run_generate(kind, source_path, rule, h, ell, verbatim_counts);
        if (analyze->parsed()) return run_analyze(instance_path);
        if (random->parsed()) return run_random(kind, seed, params);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
