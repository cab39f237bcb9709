// Command-line front end: solve/compose/transform/turing-kernel/partition/
// budget/verify/accept over the shared instance file format.
// Exit codes: 0 ok, 1 operational failure, 2 parse error, 3 invalid witness.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "xcomp/acceptance.hpp"
#include "xcomp/compose.hpp"
#include "xcomp/fpt.hpp"
#include "xcomp/gadgets.hpp"
#include "xcomp/harness.hpp"
#include "xcomp/instance.hpp"
#include "xcomp/oracles.hpp"
#include "xcomp/transform.hpp"

namespace {

namespace fs = std::filesystem;
using namespace xcomp;

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << file.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + path);
    file << text;
}

ProblemInstance load_instance(const std::string& path) {
    return parse_instance(read_file(path));
}

int exit_code_for_current_exception() {
    try {
        throw;
    } catch (const ParseError& error) {
        std::cerr << "parse error: " << error.what() << "\n";
        return 2;
    } catch (const WitnessError& error) {
        std::cerr << "witness invalid:\n";
        for (const auto& violation : error.violations()) std::cerr << "  " << violation << "\n";
        return 3;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
}

void print_verdict(const Verdict& verdict) {
    std::cout << (verdict.yes ? "YES" : "NO") << "\n";
    if (verdict.value) std::cout << "value " << *verdict.value << "\n";
    if (verdict.witness_set) {
        std::cout << "witness";
        for (Vertex v : *verdict.witness_set) std::cout << " " << v;
        std::cout << "\n";
    }
    if (verdict.witness_coloring) {
        std::cout << "coloring";
        for (size_t v = 1; v < verdict.witness_coloring->size(); ++v)
            std::cout << " " << v << "=" << (*verdict.witness_coloring)[v];
        std::cout << "\n";
    }
}

int cmd_solve(const std::string& engine, const std::string& path) {
    const ProblemInstance inst = load_instance(path);
    if (engine == "oracle") {
        print_verdict(decide(inst));
        return 0;
    }
    switch (inst.kind) {
        case Kind::CliqueByVc:
            print_verdict(fpt_clique_by_vc(inst));
            return 0;
        case Kind::ChromaticByVc:
            print_verdict(fpt_chromatic_by_vc(inst));
            return 0;
        case Kind::FvsByCliqueDeletion:
            print_verdict(fpt_transversal_by_clique_deletion(inst, TransversalMode::Fvs));
            return 0;
        case Kind::OctByCliqueDeletion:
            print_verdict(fpt_transversal_by_clique_deletion(inst, TransversalMode::Oct));
            return 0;
        default:
            throw std::runtime_error("no fpt solver for kind '" +
                                     std::string(kind_token(inst.kind)) + "'");
    }
}

int cmd_compose(const std::string& construction_id, const std::vector<std::string>& files,
                const std::string& out_path) {
    const auto construction = construction_from_token(construction_id);
    if (!construction) throw std::runtime_error("unknown construction " + construction_id);
    std::vector<ProblemInstance> batch;
    for (const auto& file : files) batch.push_back(load_instance(file));
    auto partition = partition_instances(batch, *construction);
    if (partition.classes.size() != 1)
        throw std::runtime_error("inputs span " + std::to_string(partition.classes.size()) +
                                 " equivalence classes; compose one class at a time "
                                 "(see the partition subcommand)");
    const auto report = compose_class(*construction, partition.classes[0].first, std::move(batch));
    write_file(out_path, serialize_instance(report.instance));
    write_file(out_path + ".audit", audit_to_text(report.audit));
    std::cout << "wrote " << out_path << " and " << out_path << ".audit\n";
    return 0;
}

ProblemInstance inflate_to_instance(const ProblemInstance& source) {
    // The inflated graph carries the input's target as a unit-weight
    // transversal budget; the per-edge scaffold slots {mid1, mid2, tri,
    // ta1, tb1} cover every edge, so they serve as the supplied cover.
    const InflationResult inflated = inflate(source.graph);
    ProblemInstance out;
    out.kind = Kind::WeightedFvsByVc;
    out.graph = inflated.graph;
    out.target = source.target;
    VertexSet cover;
    for (const auto& unit : inflated.scaffold) {
        cover.push_back(unit.mid1);
        cover.push_back(unit.mid2);
        cover.push_back(unit.tri);
        cover.push_back(unit.ta1);
        cover.push_back(unit.tb1);
    }
    out.witness = normalized(std::move(cover));
    std::vector<long long> weights(static_cast<size_t>(out.graph.vertex_count()) + 1, 1);
    weights[0] = 0;
    out.weights = std::move(weights);
    return out;
}

int cmd_transform(const std::string& rule, const std::string& in_path,
                  const std::string& out_path) {
    const ProblemInstance source = load_instance(in_path);
    ProblemInstance result;
    if (rule == "lemma2") {
        result = triangle_split_reduction(source.graph);
    } else if (rule == "inflate") {
        result = inflate_to_instance(source);
    } else if (rule == "cor4-is") {
        result = complement_chain(source).independent_set;
    } else if (rule == "cor4-vc") {
        result = complement_chain(source).vertex_cover;
    } else if (rule == "thm9-fvs") {
        result = apexify(source, TransversalMode::Fvs);
    } else if (rule == "thm9-oct") {
        result = apexify(source, TransversalMode::Oct);
    } else {
        throw std::runtime_error("unknown rule " + rule);
    }
    write_file(out_path, serialize_instance(result));
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_turing_kernel(const std::string& in_path, const std::string& out_dir) {
    const ProblemInstance inst = load_instance(in_path);
    const auto list = turing_kernel_clique_by_vc(inst);
    fs::create_directories(out_dir);
    for (size_t i = 0; i < list.size(); ++i) {
        std::ostringstream name;
        name << "kernel_" << std::setw(3) << std::setfill('0') << i << ".inst";
        write_file((fs::path(out_dir) / name.str()).string(), serialize_instance(list[i]));
    }
    std::cout << "wrote " << list.size() << " instances to " << out_dir << "\n";
    return 0;
}

int cmd_partition(const std::string& construction_id, const std::vector<std::string>& files) {
    const auto construction = construction_from_token(construction_id);
    if (!construction) throw std::runtime_error("unknown construction " + construction_id);
    std::vector<ProblemInstance> batch;
    for (const auto& file : files) batch.push_back(load_instance(file));
    const auto partition = partition_instances(batch, *construction);
    for (const auto& [key, members] : partition.classes) {
        std::cout << "class " << key.to_string() << ":";
        for (size_t index : members) std::cout << " " << files[index];
        std::cout << "\n";
    }
    return 0;
}

int cmd_budget(double b, double c, double d, double eps, long long s) {
    const BudgetResult result = distillation_budget({b, c, d, eps, s});
    std::cout << "t " << result.t << "\n";
    std::cout << "delta " << result.delta << "\n";
    std::cout << "identity_lhs " << result.identity_lhs << "\n";
    std::cout << "identity_rhs " << result.identity_rhs << "\n";
    return 0;
}

int cmd_verify(const std::string& construction_id, int trials, uint64_t seed,
               const std::string& out_dir) {
    const auto construction = construction_from_token(construction_id);
    if (!construction) throw std::runtime_error("unknown construction " + construction_id);
    const auto report = run_verification(*construction, trials, seed, out_dir);
    std::cout << report_to_text(report);
    return report.failures.empty() && report.formula_violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gadget constructions, or-compositions, and exact oracles "
                 "for parameterized graph problems"};
    app.require_subcommand(1);

    std::string engine = "oracle";
    std::string file;
    auto* solve = app.add_subcommand("solve", "decide an instance and print the verdict");
    solve->add_option("--engine", engine, "oracle or fpt")->check(CLI::IsMember({"oracle", "fpt"}));
    solve->add_option("file", file, "instance file")->required();

    std::string construction_id;
    std::vector<std::string> files;
    std::string out_path;
    auto* compose = app.add_subcommand("compose", "compose one equivalence class of instances");
    compose->add_option("--construction", construction_id, "thm7|thm8|thm10-fvs|thm10-oct")
        ->required();
    compose->add_option("files", files, "input instance files")->required();
    compose->add_option("-o,--out", out_path, "output instance path")->required();

    std::string rule;
    std::string transform_in;
    std::string transform_out;
    auto* transform = app.add_subcommand("transform", "apply a single-instance transformation");
    transform->add_option("--rule", rule, "lemma2|inflate|cor4-is|cor4-vc|thm9-fvs|thm9-oct")
        ->required();
    transform->add_option("file", transform_in, "input instance file")->required();
    transform->add_option("-o,--out", transform_out, "output instance path")->required();

    std::string kernel_in;
    std::string kernel_dir;
    auto* kernel = app.add_subcommand("turing-kernel",
                                      "write the clique-by-vc instance list for a clique-by-vc "
                                      "input");
    kernel->add_option("file", kernel_in, "input instance file")->required();
    kernel->add_option("-o,--out", kernel_dir, "output directory")->required();

    std::string partition_id;
    std::vector<std::string> partition_files;
    auto* partition = app.add_subcommand("partition", "print equivalence classes of instances");
    partition->add_option("--construction", partition_id, "thm7|thm8|thm10-fvs|thm10-oct")
        ->required();
    partition->add_option("files", partition_files, "input instance files")->required();

    double budget_b = 0, budget_c = 0, budget_d = 1, budget_eps = 1;
    long long budget_s = 1;
    auto* budget = app.add_subcommand("budget", "instance-count budget and exponent slack");
    budget->add_option("--b", budget_b, "class-count exponent")->required();
    budget->add_option("--c", budget_c, "parameter exponent")->required();
    budget->add_option("--d", budget_d, "compression degree")->required();
    budget->add_option("--eps", budget_eps, "slack")->required();
    budget->add_option("--s", budget_s, "maximum instance size")->required();

    std::string verify_id;
    int verify_trials = 100;
    uint64_t verify_seed = 1;
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "seeded or-equivalence verification");
    verify->add_option("--construction", verify_id, "thm7|thm8|thm10-fvs|thm10-oct")->required();
    verify->add_option("--trials", verify_trials, "number of seeded batches");
    verify->add_option("--seed", verify_seed, "base seed (batch i uses seed+i)")->required();
    verify->add_option("--out", verify_out, "directory for failure artifacts");

    std::string accept_config_path;
    auto* accept = app.add_subcommand("accept", "run the acceptance suite");
    accept->add_option("--config", accept_config_path, "key=value config file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) return cmd_solve(engine, file);
        if (*compose) return cmd_compose(construction_id, files, out_path);
        if (*transform) return cmd_transform(rule, transform_in, transform_out);
        if (*kernel) return cmd_turing_kernel(kernel_in, kernel_dir);
        if (*partition) return cmd_partition(partition_id, partition_files);
        if (*budget) return cmd_budget(budget_b, budget_c, budget_d, budget_eps, budget_s);
        if (*verify) return cmd_verify(verify_id, verify_trials, verify_seed, verify_out);
        if (*accept) {
            AcceptConfig config;
            if (!accept_config_path.empty()) config = load_accept_config(accept_config_path);
            return run_acceptance_suite(config, std::cout);
        }
    } catch (...) {
        return exit_code_for_current_exception();
    }
    return 1;
}
