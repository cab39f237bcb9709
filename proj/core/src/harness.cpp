#include "xcomp/harness.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "xcomp/gadgets.hpp"
#include "xcomp/oracles.hpp"

namespace xcomp {

namespace {

Graph random_graph(Rng& rng, int n, double density) {
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.chance(density)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Planted clique K; Z = V \ K is then a clique deletion set by construction.
Graph random_graph_with_clique(Rng& rng, int n, double density, VertexSet& z_out) {
    if (n == 0) {
        z_out.clear();
        return Graph(0);
    }
    const int clique_size = rng.uniform(1, n);
    VertexSet pool;
    for (int v = 1; v <= n; ++v) pool.push_back(v);
    VertexSet planted;
    for (int i = 0; i < clique_size; ++i) {
        const int pick = rng.uniform(0, static_cast<int>(pool.size()) - 1);
        planted.push_back(pool[static_cast<size_t>(pick)]);
        pool.erase(pool.begin() + pick);
    }
    planted = normalized(std::move(planted));
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            if (set_contains(planted, u) && set_contains(planted, v))
                edges.emplace_back(u, v);
            else if (rng.chance(density))
                edges.emplace_back(u, v);
        }
    z_out.clear();
    for (int v = 1; v <= n; ++v)
        if (!set_contains(planted, v)) z_out.push_back(v);
    return Graph(n, edges);
}

VertexSet greedy_vertex_cover(const Graph& g) {
    VertexSet cover;
    std::vector<char> in(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (;;) {
        // Highest uncovered degree, ties to the smallest id.
        int best = 0, best_count = 0;
        std::vector<int> open(static_cast<size_t>(g.vertex_count()) + 1, 0);
        for (auto [u, v] : g.edges())
            if (!in[u] && !in[v]) {
                ++open[u];
                ++open[v];
            }
        for (int v = 1; v <= g.vertex_count(); ++v)
            if (open[v] > best_count) {
                best = v;
                best_count = open[v];
            }
        if (!best) break;
        in[best] = 1;
        cover.push_back(best);
    }
    cover = normalized(std::move(cover));
    // Local minimization: drop vertices that are not needed.
    for (size_t i = 0; i < cover.size();) {
        VertexSet trial = cover;
        trial.erase(trial.begin() + static_cast<long>(i));
        bool still_cover = true;
        for (auto [u, v] : g.edges())
            if (!set_contains(trial, u) && !set_contains(trial, v)) {
                still_cover = false;
                break;
            }
        if (still_cover)
            cover = std::move(trial);
        else
            ++i;
    }
    return cover;
}

long long optimum_of(const ProblemInstance& inst) {
    return *decide(inst).value;
}

int pick_target(Rng& rng, const InstanceSpec& spec, const ProblemInstance& shape, int n) {
    if (spec.policy == TargetPolicy::Uniform) {
        const int hi = spec.kind == Kind::Clique ? n + 1 : n;
        return rng.uniform(0, std::max(0, hi));
    }
    const long long opt = optimum_of(shape);
    const long long target = opt + rng.uniform(-1, 1);
    return static_cast<int>(std::max(0LL, target));
}

}  // namespace

ProblemInstance random_instance(const InstanceSpec& spec, uint64_t seed) {
    Rng rng(seed);
    return random_instance(spec, rng);
}

ProblemInstance random_instance(const InstanceSpec& spec, Rng& rng) {
    const int n = rng.uniform(spec.n_lo, spec.n_hi);

    if (spec.kind == Kind::TriangleSplit3Coloring) {
        ProblemInstance inst = triangle_split_reduction(random_graph(rng, n, spec.density));
        return inst;
    }

    ProblemInstance inst;
    inst.kind = spec.kind;
    if (kind_witness_is_clique_deletion(spec.kind)) {
        VertexSet z;
        inst.graph = random_graph_with_clique(rng, n, spec.density, z);
        inst.witness = std::move(z);
    } else {
        inst.graph = random_graph(rng, n, spec.density);
        if (kind_has_witness(spec.kind)) inst.witness = greedy_vertex_cover(inst.graph);
    }
    if (kind_is_weighted(spec.kind)) {
        std::vector<long long> w(static_cast<size_t>(n) + 1, 1);
        for (int v = 1; v <= n; ++v)
            w[static_cast<size_t>(v)] =
                rng.uniform(1, static_cast<int>(std::max(1LL, spec.max_weight)));
        inst.weights = std::move(w);
    }
    // The target draw needs the finished shape (graph, weights) for the
    // near-optimum policy.
    inst.target = 0;
    inst.target = pick_target(rng, spec, inst, n);
    return inst;
}

namespace {

struct Formulas {
    long long l_prime = 0;
    int k_prime = 0;
};

int log2_exact(int t) {
    int log = 0;
    while ((1 << log) < t) ++log;
    return log;
}

Formulas expected_formulas(Construction c, const ClassKey& key, int t) {
    Formulas out;
    const int log_t = log2_exact(t);
    switch (c) {
        case Construction::Thm7: {
            const int pairs = key.n * (key.n - 1) / 2;
            out.l_prime = key.l + 1 + pairs;
            out.k_prime = key.l * key.n + 3 * pairs;
            break;
        }
        case Construction::Thm8:
            out.l_prime = log_t + 4;
            out.k_prime = 3 * log_t + 4 + 3 * key.m;
            break;
        case Construction::Thm10Fvs:
        case Construction::Thm10Oct:
            out.l_prime = 2LL * log_t * t * key.n + static_cast<long long>(t - 1) * key.n + key.l;
            out.k_prime = 7 * key.m + 8 * log_t;
            break;
    }
    return out;
}

std::string serialize_batch(const std::vector<ProblemInstance>& batch) {
    std::ostringstream out;
    for (const auto& inst : batch) out << serialize_instance(inst) << "---\n";
    return out.str();
}

}  // namespace

void check_or_equivalence(Construction c, const std::vector<ProblemInstance>& batch,
                          uint64_t seed, VerificationReport& report) {
    report.construction = std::string(construction_token(c));
    auto partition = partition_instances(batch, c);
    for (const auto& [key, members] : partition.classes) {
        std::vector<ProblemInstance> group;
        for (size_t index : members) group.push_back(batch[index]);

        CompositionReport composed = compose_class(c, key, group);
        ++report.trials;

        bool any_yes = false;
        for (const auto& inst : group) any_yes = any_yes || decide(inst).yes;
        const bool got = decide(composed.instance).yes;

        if (any_yes == got) {
            ++report.agreements;
        } else {
            TrialFailure failure;
            failure.seed = seed;
            failure.class_key = key.to_string();
            failure.batch_text = serialize_batch(group);
            failure.expected = any_yes ? "YES" : "NO";
            failure.got = got ? "YES" : "NO";
            report.failures.push_back(std::move(failure));
        }

        auto violation = [&](const std::string& what) {
            report.formula_violations.push_back("seed " + std::to_string(seed) + " class " +
                                                key.to_string() + ": " + what);
        };
        if (composed.audit.t_raw != static_cast<int>(group.size()))
            violation("t_raw mismatch");
        if (key.tag == ClassKey::Tag::WellFormed) {
            const Formulas expect = expected_formulas(c, key, composed.audit.t);
            if (composed.audit.l_prime != expect.l_prime)
                violation("l' audit " + std::to_string(composed.audit.l_prime) + " != formula " +
                          std::to_string(expect.l_prime));
            if (composed.audit.k_prime != expect.k_prime)
                violation("k' audit " + std::to_string(composed.audit.k_prime) + " != formula " +
                          std::to_string(expect.k_prime));
            if (composed.instance.target != expect.l_prime) violation("target != l' formula");
            if (composed.instance.parameter() != expect.k_prime)
                violation("|Z'| != k' formula");
        }
        for (const std::string& v : validate_witness(composed.instance))
            violation("composed witness invalid: " + v);
    }
}

std::vector<ProblemInstance> random_batch(Construction c, uint64_t seed) {
    Rng rng(seed);
    std::vector<ProblemInstance> batch;
    switch (c) {
        case Construction::Thm7: {
            const int t = rng.uniform(1, 4);
            const bool mixed_n = rng.chance(0.2);
            const int shared_n = rng.uniform(3, 4);
            const double density = 0.3 + 0.15 * rng.uniform(0, 4);
            for (int i = 0; i < t; ++i) {
                ProblemInstance inst;
                inst.kind = Kind::Clique;
                inst.graph = random_graph(rng, mixed_n ? rng.uniform(3, 4) : shared_n, density);
                batch.push_back(std::move(inst));
            }
            const size_t anchor = static_cast<size_t>(rng.uniform(0, t - 1));
            const long long opt = max_clique(batch[anchor].graph).size;
            const int target = static_cast<int>(std::max(0LL, opt + rng.uniform(-1, 1)));
            for (auto& inst : batch) inst.target = target;
            break;
        }
        case Construction::Thm8: {
            const int t = rng.uniform(1, 2);
            const int n = rng.uniform(1, 3);
            const double density = 0.3 + 0.15 * rng.uniform(0, 4);
            Graph first = random_graph(rng, n, density);
            batch.push_back(triangle_split_reduction(first));
            if (t == 2) {
                Graph second = random_graph(rng, n, density);
                for (int tries = 0; tries < 20 && second.edge_count() != first.edge_count();
                     ++tries)
                    second = random_graph(rng, n, density);
                batch.push_back(triangle_split_reduction(second));
            }
            break;
        }
        case Construction::Thm10Fvs:
        case Construction::Thm10Oct: {
            const int t = rng.uniform(1, 2);
            const int n = rng.uniform(2, 3);
            const double density = 0.3 + 0.15 * rng.uniform(0, 4);
            std::vector<Graph> graphs{random_graph(rng, n, density)};
            if (t == 2) {
                Graph second = random_graph(rng, n, density);
                for (int tries = 0;
                     tries < 20 && second.edge_count() != graphs[0].edge_count(); ++tries)
                    second = random_graph(rng, n, density);
                graphs.push_back(std::move(second));
            }
            const size_t anchor = static_cast<size_t>(rng.uniform(0, t - 1));
            const long long opt = min_vertex_cover(graphs[anchor]).size;
            const int target = static_cast<int>(std::max(0LL, opt + rng.uniform(-1, 1)));
            for (Graph& g : graphs) {
                ProblemInstance inst;
                inst.kind = Kind::VertexCover;
                inst.graph = std::move(g);
                inst.target = target;
                batch.push_back(std::move(inst));
            }
            break;
        }
    }
    return batch;
}

VerificationReport run_verification(Construction c, int trials, uint64_t seed,
                                    const std::string& artifact_dir) {
    VerificationReport report;
    report.construction = std::string(construction_token(c));
    for (int i = 0; i < trials; ++i) {
        const uint64_t batch_seed = seed + static_cast<uint64_t>(i);
        const auto batch = random_batch(c, batch_seed);
        const size_t failures_before = report.failures.size();
        check_or_equivalence(c, batch, batch_seed, report);
        if (!artifact_dir.empty() && report.failures.size() > failures_before) {
            namespace fs = std::filesystem;
            const fs::path dir =
                fs::path(artifact_dir) / ("fail_" + std::to_string(batch_seed));
            fs::create_directories(dir);
            for (size_t j = 0; j < batch.size(); ++j) {
                std::ofstream file(dir / ("input_" + std::to_string(j) + ".inst"));
                file << serialize_instance(batch[j]);
            }
            std::ofstream info(dir / "info.txt");
            for (size_t j = failures_before; j < report.failures.size(); ++j) {
                const auto& f = report.failures[j];
                info << "class " << f.class_key << ": expected " << f.expected << ", got "
                     << f.got << "\n";
            }
            info << "replay: xcomp verify --construction " << report.construction
                 << " --trials 1 --seed " << batch_seed << "\n";
        }
    }
    return report;
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream out;
    out << "construction " << report.construction << "\n";
    out << "trials " << report.trials << "\n";
    out << "agreements " << report.agreements << "\n";
    out << "failures " << report.failures.size() << "\n";
    for (const auto& f : report.failures)
        out << "  seed " << f.seed << " class " << f.class_key << ": expected " << f.expected
            << ", got " << f.got << "\n";
    out << "formula_violations " << report.formula_violations.size() << "\n";
    for (const auto& v : report.formula_violations) out << "  " << v << "\n";
    return out.str();
}

}  // namespace xcomp
