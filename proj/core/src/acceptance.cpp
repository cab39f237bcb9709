#include "xcomp/acceptance.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "xcomp/compose.hpp"
#include "xcomp/fpt.hpp"
#include "xcomp/gadgets.hpp"
#include "xcomp/harness.hpp"
#include "xcomp/oracles.hpp"
#include "xcomp/transform.hpp"

namespace xcomp {

namespace {

struct Criterion {
    std::string id;
    std::string title;
    double budget_seconds = 0;  // 0 = no time gate
    bool gating = true;
};

struct Outcome {
    bool pass = false;
    std::string detail;
};

// All graphs on n labeled vertices, encoded as edge bitmasks over the
// pairs of the complete graph in lexicographic order.
Graph graph_from_mask(int n, uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            if (mask & (uint64_t{1} << bit)) edges.emplace_back(u, v);
            ++bit;
        }
    return Graph(n, edges);
}

ProblemInstance vertex_cover_instance(const Graph& g, int target) {
    ProblemInstance inst;
    inst.kind = Kind::VertexCover;
    inst.graph = g;
    inst.target = target;
    return inst;
}

Outcome criterion_inflation_sanity() {
    const InflationResult inflated = inflate(Graph::complete(2));
    Outcome out;
    out.pass = inflated.graph.vertex_count() == 9 && inflated.graph.edge_count() == 9 &&
               are_isomorphic(inflated.graph, Graph::cycle(9));
    out.detail = "inflate(K2) has 9 vertices, 9 edges, isomorphic to the 9-cycle";
    return out;
}

Outcome criterion_box_transversals() {
    const K4BoxResult box = k4_in_a_box();
    const Graph& g = box.graph;
    std::vector<std::array<Vertex, 3>> triangles;
    for (Vertex a = 1; a <= 8; ++a)
        for (Vertex b = a + 1; b <= 8; ++b)
            for (Vertex c = b + 1; c <= 8; ++c)
                if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))
                    triangles.push_back({a, b, c});

    int min_size = 9;
    std::vector<VertexSet> minimum_covers;
    for (uint32_t mask = 0; mask < 256; ++mask) {
        VertexSet subset;
        for (int v = 1; v <= 8; ++v)
            if (mask & (1u << (v - 1))) subset.push_back(v);
        bool covers = true;
        for (const auto& tri : triangles) {
            if (!set_contains(subset, tri[0]) && !set_contains(subset, tri[1]) &&
                !set_contains(subset, tri[2])) {
                covers = false;
                break;
            }
        }
        if (!covers) continue;
        const int size = static_cast<int>(subset.size());
        if (size < min_size) {
            min_size = size;
            minimum_covers.assign(1, subset);
        } else if (size == min_size) {
            minimum_covers.push_back(subset);
        }
    }
    const VertexSet zero{box.zero_terminals.first, box.zero_terminals.second};
    const VertexSet one{box.one_terminals.first, box.one_terminals.second};
    Outcome out;
    out.pass = min_size == 2 && minimum_covers.size() == 2 && minimum_covers[0] == zero &&
               minimum_covers[1] == one;
    out.detail = "minimum triangle transversal of the selector gadget is exactly {a,c} / {b,d}";
    return out;
}

Outcome criterion_inflation_equivalence() {
    int checked = 0;
    for (int n = 0; n <= 4; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (uint64_t mask = 0; mask < (uint64_t{1} << pairs); ++mask) {
            if (std::popcount(mask) > 4) continue;
            const Graph g = graph_from_mask(n, mask);
            const Graph inflated = inflate(g).graph;
            const int vc = min_vertex_cover(g).size;
            const long long fvs = min_transversal(inflated, TransversalMode::Fvs).weight;
            const long long oct = min_transversal(inflated, TransversalMode::Oct).weight;
            for (int l = 0; l <= 4; ++l) {
                const bool a = vc <= l;
                const bool b = fvs <= l;
                const bool c = oct <= l;
                if (a != b || a != c)
                    return {false, "disagreement on n=" + std::to_string(n) +
                                       " mask=" + std::to_string(mask) +
                                       " l=" + std::to_string(l)};
            }
            ++checked;
        }
    }
    return {true, "vc/fvs/oct thresholds agree on all " + std::to_string(checked) +
                      " graphs with <=4 vertices and <=4 edges"};
}

Outcome criterion_triangle_split_equivalence() {
    int checked = 0;
    for (int n = 0; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (uint64_t mask = 0; mask < (uint64_t{1} << pairs); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            const ProblemInstance reduced = triangle_split_reduction(g);
            if (!validate_witness(reduced).empty())
                return {false, "reduction output fails validation at n=" + std::to_string(n) +
                                   " mask=" + std::to_string(mask)};
            const bool base = is_k_colorable(g, 3);
            const bool image = decide(reduced).yes;
            if (base != image)
                return {false, "3-colorability disagreement at n=" + std::to_string(n) +
                                   " mask=" + std::to_string(mask)};
            ++checked;
        }
    }
    return {true, "3-colorability preserved on all " + std::to_string(checked) +
                      " graphs with <=5 vertices, outputs validate"};
}

Outcome verification_outcome(const VerificationReport& report, int min_batches) {
    Outcome out;
    out.pass = report.failures.empty() && report.formula_violations.empty() &&
               report.trials >= min_batches;
    std::ostringstream detail;
    detail << report.trials << " class compositions, " << report.agreements << " agreements, "
           << report.failures.size() << " failures, " << report.formula_violations.size()
           << " formula violations";
    out.detail = detail.str();
    return out;
}

Outcome criterion_thm10_fixed(bool include_stretch, std::string* stretch_detail,
                              double* stretch_seconds) {
    for (int l : {0, 1}) {
        std::vector<ProblemInstance> batch{vertex_cover_instance(Graph::complete(2), l),
                                           vertex_cover_instance(Graph::complete(2), l)};
        const bool expected = l == 1;  // vc(K2) = 1
        for (Construction c : {Construction::Thm10Fvs, Construction::Thm10Oct}) {
            VerificationReport report;
            check_or_equivalence(c, batch, 0, report);
            if (!report.failures.empty() || !report.formula_violations.empty())
                return {false, "t=2 K2 batch failed at l=" + std::to_string(l)};
            auto partition = partition_instances(batch, c);
            auto composed = compose_class(c, partition.classes[0].first,
                                          std::move(batch));
            if (composed.instance.graph.vertex_count() != 19)
                return {false, "composed K2 batch is not 19 vertices"};
            const long long expect_l = 2LL * 1 * 2 * 2 + 2 + l;
            if (composed.audit.l_prime != expect_l)
                return {false, "l' audit mismatch on K2 batch"};
            if (decide(composed.instance).yes != expected)
                return {false, "verdict mismatch on K2 batch at l=" + std::to_string(l)};
            batch = {vertex_cover_instance(Graph::complete(2), l),
                     vertex_cover_instance(Graph::complete(2), l)};
        }
    }

    if (include_stretch && stretch_detail) {
        const auto start = std::chrono::steady_clock::now();
        const Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
        const Graph path = Graph::path(4);
        std::vector<ProblemInstance> batch{vertex_cover_instance(star, 1),
                                           vertex_cover_instance(path, 1)};
        VerificationReport report;
        check_or_equivalence(Construction::Thm10Fvs, batch, 0, report);
        check_or_equivalence(Construction::Thm10Oct, batch, 0, report);
        *stretch_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream detail;
        detail << "37-vertex mixed batch (star + path, l=1): " << report.agreements << "/"
               << report.trials << " agreements, both modes";
        *stretch_detail = detail.str();
        if (report.failures.size() + report.formula_violations.size() > 0)
            *stretch_detail += " [DISAGREEMENT]";
    }
    return {true, "t=2 K2 batches, l in {0,1}, both modes: verdicts and l' exact"};
}

Outcome criterion_thm10_structure(bool include_stretch) {
    struct Case {
        std::vector<ProblemInstance> batch;
    };
    std::vector<Case> cases;
    for (int l : {0, 1})
        cases.push_back({{vertex_cover_instance(Graph::complete(2), l),
                          vertex_cover_instance(Graph::complete(2), l)}});
    if (include_stretch) {
        const Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
        cases.push_back(
            {{vertex_cover_instance(star, 1), vertex_cover_instance(Graph::path(4), 1)}});
    }

    int checked = 0;
    for (const Case& item : cases) {
        for (Construction c : {Construction::Thm10Fvs, Construction::Thm10Oct}) {
            auto partition = partition_instances(item.batch, c);
            if (partition.classes.size() != 1) return {false, "unexpected class split"};
            auto group = item.batch;
            const auto composed = compose_class(c, partition.classes[0].first, group);
            if (!validate_witness(composed.instance).empty())
                return {false, "composed witness invalid"};
            const int n = composed.audit.n;
            const int t = composed.audit.t;
            const BlockSpan* a_span = nullptr;
            for (const auto& span : composed.audit.layout)
                if (span.label == "A'") a_span = &span;
            if (!a_span) return {false, "missing A' layout span"};
            for (int i = 1; i <= t; ++i) {
                VertexSet keep;
                for (int v = (i - 1) * n + 1; v <= i * n; ++v) keep.push_back(v);
                for (int v = a_span->lo; v <= a_span->hi; ++v) keep.push_back(v);
                const Graph induced = induced_subgraph(composed.instance.graph, keep).graph;
                const Graph reference = inflate(item.batch[static_cast<size_t>(i) - 1].graph).graph;
                if (!are_isomorphic(induced, reference))
                    return {false, "induced block " + std::to_string(i) +
                                       " is not isomorphic to the inflated input"};
                ++checked;
            }
        }
    }
    return {true, "all " + std::to_string(checked) +
                      " induced block+scaffold subgraphs isomorphic to their inflations"};
}

Outcome criterion_thm9(const AcceptConfig& config) {
    for (int i = 0; i < config.thm9_instances; ++i) {
        InstanceSpec spec;
        spec.kind = Kind::VcByCliqueDeletion;
        spec.n_lo = 2;
        spec.n_hi = 7;
        spec.density = 0.25 + 0.1 * (i % 6);
        spec.policy = TargetPolicy::NearOptimum;
        const ProblemInstance inst = random_instance(spec, config.seed + 900 + static_cast<uint64_t>(i));

        const auto family = clique_cover(inst.graph, *inst.witness);
        const ProblemInstance fvs_inst = apexify(inst, TransversalMode::Fvs);
        const ProblemInstance oct_inst = apexify(inst, TransversalMode::Oct);
        const int expected_k =
            static_cast<int>(inst.witness->size()) + static_cast<int>(family.size());
        if (fvs_inst.parameter() != expected_k || oct_inst.parameter() != expected_k)
            return {false, "k' != |Z| + |family| at seed offset " + std::to_string(i)};
        if (!validate_witness(fvs_inst).empty() || !validate_witness(oct_inst).empty())
            return {false, "apexified instance fails validation at seed offset " +
                               std::to_string(i)};
        const bool base = decide(inst).yes;
        if (base != decide(fvs_inst).yes || base != decide(oct_inst).yes)
            return {false, "verdict differs after apexify at seed offset " + std::to_string(i)};
    }
    return {true, std::to_string(config.thm9_instances) +
                      " instances: vc/fvs/oct verdicts agree, k' audits exact"};
}

Outcome criterion_fpt(const AcceptConfig& config) {
    const int count = config.fpt_instances;
    // clique-by-vc: solver agreement plus the instance-list kernel.
    for (int i = 0; i < count; ++i) {
        InstanceSpec spec;
        spec.kind = Kind::CliqueByVc;
        spec.n_lo = 1;
        spec.n_hi = 8;
        spec.density = 0.2 + 0.1 * (i % 7);
        const ProblemInstance inst = random_instance(spec, config.seed + 1000 + static_cast<uint64_t>(i));
        const bool oracle = decide(inst).yes;
        if (fpt_clique_by_vc(inst).yes != oracle)
            return {false, "clique solver disagreement at offset " + std::to_string(i)};
        const auto list = turing_kernel_clique_by_vc(inst);
        const int k = inst.parameter();
        bool any = false;
        for (const auto& small : list) {
            if (small.graph.vertex_count() > k + 1)
                return {false, "kernel output exceeds k+1 vertices at offset " +
                                   std::to_string(i)};
            any = any || decide(small).yes;
        }
        if (any != oracle)
            return {false, "kernel OR differs from input verdict at offset " + std::to_string(i)};
        if (static_cast<int>(list.size()) !=
            inst.graph.vertex_count() - k + 1)
            return {false, "kernel list size is not |V-Z|+1 at offset " + std::to_string(i)};
    }
    for (int i = 0; i < count; ++i) {
        InstanceSpec spec;
        spec.kind = Kind::ChromaticByVc;
        spec.n_lo = 1;
        spec.n_hi = 8;
        spec.density = 0.2 + 0.1 * (i % 7);
        const ProblemInstance inst = random_instance(spec, config.seed + 2000 + static_cast<uint64_t>(i));
        if (fpt_chromatic_by_vc(inst).yes != decide(inst).yes)
            return {false, "coloring solver disagreement at offset " + std::to_string(i)};
    }
    for (int i = 0; i < count; ++i) {
        InstanceSpec spec;
        spec.kind = i % 2 == 0 ? Kind::FvsByCliqueDeletion : Kind::OctByCliqueDeletion;
        spec.n_lo = 1;
        spec.n_hi = 8;
        spec.density = 0.2 + 0.1 * (i % 7);
        const ProblemInstance inst = random_instance(spec, config.seed + 3000 + static_cast<uint64_t>(i));
        const TransversalMode mode =
            inst.kind == Kind::FvsByCliqueDeletion ? TransversalMode::Fvs : TransversalMode::Oct;
        if (fpt_transversal_by_clique_deletion(inst, mode).yes != decide(inst).yes)
            return {false, "transversal solver disagreement at offset " + std::to_string(i)};
    }
    return {true, "all four solvers agree with the oracles on " + std::to_string(count) +
                      " seeded instances each; kernel outputs stay within k+1 vertices"};
}

Outcome criterion_complement_chain(const AcceptConfig& config) {
    for (int i = 0; i < config.cor4_instances; ++i) {
        InstanceSpec spec;
        spec.kind = Kind::CliqueByVc;
        spec.n_lo = 1;
        spec.n_hi = 7;
        spec.density = 0.2 + 0.1 * (i % 7);
        ProblemInstance inst = random_instance(spec, config.seed + 4000 + static_cast<uint64_t>(i));
        inst.target = std::min(inst.target, inst.graph.vertex_count());
        const ComplementChain chain = complement_chain(inst);
        const bool base = decide(inst).yes;
        if (base != decide(chain.independent_set).yes || base != decide(chain.vertex_cover).yes)
            return {false, "chain verdict differs at offset " + std::to_string(i)};
        if (!validate_witness(chain.independent_set).empty() ||
            !validate_witness(chain.vertex_cover).empty())
            return {false, "chain output fails validation at offset " + std::to_string(i)};
    }
    return {true, std::to_string(config.cor4_instances) +
                      " instances: verdicts preserved across the whole chain"};
}

Outcome criterion_conventions() {
    if (encode_index(1, 2) != "01") return {false, "encode_index(1,2) != 01"};
    if (encode_index(4, 2) != "00") return {false, "encode_index(4,2) != 00"};
    const BudgetResult budget = distillation_budget({2, 1, 1, 1, 2});
    if (budget.t != 8) return {false, "budget t != 8"};
    if (std::abs(budget.delta - 1.0 / 3.0) > 1e-12) return {false, "budget delta != 1/3"};
    if (std::abs(budget.identity_lhs - budget.identity_rhs) > 1e-9)
        return {false, "budget exponent identity violated"};
    return {true, "index convention and budget formulas exact"};
}

Outcome criterion_determinism() {
    struct Case {
        Construction construction;
        std::vector<ProblemInstance> batch;
    };
    ProblemInstance clique_a;
    clique_a.kind = Kind::Clique;
    clique_a.graph = Graph::path(3);
    clique_a.target = 2;
    ProblemInstance clique_b;
    clique_b.kind = Kind::Clique;
    clique_b.graph = Graph(3);
    clique_b.target = 2;

    std::vector<Case> cases;
    cases.push_back({Construction::Thm7, {clique_a, clique_b}});
    cases.push_back({Construction::Thm8,
                     {triangle_split_reduction(Graph::complete(2)),
                      triangle_split_reduction(Graph::complete(2))}});
    cases.push_back({Construction::Thm10Fvs,
                     {vertex_cover_instance(Graph::complete(2), 1),
                      vertex_cover_instance(Graph::complete(2), 1)}});

    for (const Case& item : cases) {
        std::vector<std::string> texts;
        for (const auto& inst : item.batch) texts.push_back(serialize_instance(inst));
        std::string first_instance, first_audit;
        for (int round = 0; round < 2; ++round) {
            std::vector<ProblemInstance> batch;
            for (const std::string& text : texts) batch.push_back(parse_instance(text));
            auto partition = partition_instances(batch, item.construction);
            if (partition.classes.size() != 1) return {false, "unexpected class split"};
            auto composed =
                compose_class(item.construction, partition.classes[0].first, std::move(batch));
            const std::string instance_text = serialize_instance(composed.instance);
            const std::string audit_text = audit_to_text(composed.audit);
            if (round == 0) {
                first_instance = instance_text;
                first_audit = audit_text;
            } else if (instance_text != first_instance || audit_text != first_audit) {
                return {false, "repeat composition differs for " +
                                   std::string(construction_token(item.construction))};
            }
        }
    }
    return {true, "repeat compositions byte-identical (instances and audit records)"};
}

}  // namespace

AcceptConfig load_accept_config(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open config file: " + path);
    AcceptConfig config;
    std::string line;
    int line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        const auto eq = line.find('=');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected key=value");
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "seed")
            config.seed = std::stoull(value);
        else if (key == "thm7_batches")
            config.thm7_batches = std::stoi(value);
        else if (key == "thm8_batches")
            config.thm8_batches = std::stoi(value);
        else if (key == "thm9_instances")
            config.thm9_instances = std::stoi(value);
        else if (key == "cor4_instances")
            config.cor4_instances = std::stoi(value);
        else if (key == "fpt_instances")
            config.fpt_instances = std::stoi(value);
        else if (key == "stretch")
            config.stretch = value != "0";
        else if (key == "artifact_dir")
            config.artifact_dir = value;
        else
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": unknown key '" + key + "'");
    }
    return config;
}

int run_acceptance_suite(const AcceptConfig& config, std::ostream& out) {
    int failed = 0;
    std::string stretch_detail;
    double stretch_seconds = 0;

    auto run = [&](const Criterion& criterion, auto&& body) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = body();
        } catch (const std::exception& error) {
            outcome = {false, std::string("exception: ") + error.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool pass = outcome.pass;
        std::string note;
        if (pass && criterion.budget_seconds > 0 && seconds > criterion.budget_seconds) {
            pass = false;
            note = " [exceeded " + std::to_string(criterion.budget_seconds) + "s budget]";
        }
        if (!pass && criterion.gating) ++failed;
        out << "[" << std::setw(2) << criterion.id << "] " << (pass ? "PASS" : "FAIL") << "  "
            << std::fixed << std::setprecision(2) << std::setw(8) << seconds << "s  "
            << criterion.title << ": " << outcome.detail << note << "\n";
        out.flush();
    };

    run({"1", "inflation sanity", 1}, [] { return criterion_inflation_sanity(); });
    run({"2", "selector gadget transversals by brute force", 1},
        [] { return criterion_box_transversals(); });
    run({"3", "inflation threshold equivalence", 60},
        [] { return criterion_inflation_equivalence(); });
    run({"4", "triangle-split reduction equivalence", 120},
        [] { return criterion_triangle_split_equivalence(); });
    run({"5", "thm7 or-equivalence and formula audit", 600}, [&] {
        return verification_outcome(
            run_verification(Construction::Thm7, config.thm7_batches, config.seed,
                             config.artifact_dir),
            config.thm7_batches);
    });
    run({"6", "thm8 or-equivalence and formula audit", 600}, [&] {
        return verification_outcome(
            run_verification(Construction::Thm8, config.thm8_batches, config.seed + 100000,
                             config.artifact_dir),
            config.thm8_batches);
    });
    run({"7", "apex transform verdict equivalence", 300}, [&] { return criterion_thm9(config); });
    run({"8", "thm10 fixed batches, both modes", 60},
        [&] { return criterion_thm10_fixed(false, nullptr, nullptr); });
    run({"9", "thm10 block structure isomorphism", 0},
        [&] { return criterion_thm10_structure(config.stretch); });
    run({"10", "fpt solvers against oracles", 300}, [&] { return criterion_fpt(config); });
    run({"11", "complement chain verdict preservation", 0},
        [&] { return criterion_complement_chain(config); });
    run({"12", "index and budget conventions", 0}, [] { return criterion_conventions(); });
    run({"13", "composition determinism", 0}, [] { return criterion_determinism(); });

    if (config.stretch) {
        criterion_thm10_fixed(true, &stretch_detail, &stretch_seconds);
        out << "[8s] REPORT  " << std::fixed << std::setprecision(2) << std::setw(6)
            << stretch_seconds << "s  thm10 stretch (non-gating): " << stretch_detail << "\n";
    }

    out << (failed == 0 ? "RESULT: all gating criteria passed"
                        : "RESULT: " + std::to_string(failed) + " gating criteria FAILED")
        << "\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace xcomp
