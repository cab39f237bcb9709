// Throughput of the solvers and constructions on composition-scale inputs.

#include <benchmark/benchmark.h>

#include "xcomp/compose.hpp"
#include "xcomp/gadgets.hpp"
#include "xcomp/harness.hpp"
#include "xcomp/oracles.hpp"

namespace {

using namespace xcomp;

ProblemInstance clique_instance(Graph g, int target) {
    ProblemInstance inst;
    inst.kind = Kind::Clique;
    inst.graph = std::move(g);
    inst.target = target;
    return inst;
}

ProblemInstance cover_instance(Graph g, int target) {
    ProblemInstance inst;
    inst.kind = Kind::VertexCover;
    inst.graph = std::move(g);
    inst.target = target;
    return inst;
}

void BM_max_clique_composed(benchmark::State& state) {
    Rng rng(7);
    std::vector<ProblemInstance> batch;
    for (int i = 0; i < 4; ++i) {
        std::vector<Edge> edges;
        for (int u = 1; u <= 4; ++u)
            for (int v = u + 1; v <= 4; ++v)
                if (rng.chance(0.6)) edges.emplace_back(u, v);
        batch.push_back(clique_instance(Graph(4, edges), 3));
    }
    const Graph g = compose_clique(batch).instance.graph;
    for (auto _ : state) benchmark::DoNotOptimize(max_clique(g).size);
}

void BM_chromatic_composed(benchmark::State& state) {
    const ProblemInstance ts = triangle_split_reduction(Graph::complete(3));
    const Graph g = compose_chromatic({ts, ts}).instance.graph;
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g).value);
}

void BM_weighted_transversal_composed(benchmark::State& state) {
    const auto report = compose_weighted_transversal(
        {cover_instance(Graph::complete(2), 1), cover_instance(Graph::complete(2), 1)},
        TransversalMode::Fvs);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            min_transversal(report.instance.graph, TransversalMode::Fvs,
                            &*report.instance.weights)
                .weight);
}

void BM_inflate(benchmark::State& state) {
    const Graph g = Graph::complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(inflate(g).graph.edge_count());
}

void BM_compose_thm7(benchmark::State& state) {
    std::vector<ProblemInstance> batch;
    for (int i = 0; i < 4; ++i) batch.push_back(clique_instance(Graph::complete(4), 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(compose_clique(batch).instance.graph.edge_count());
}

void BM_verification_batch(benchmark::State& state) {
    for (auto _ : state) {
        VerificationReport report;
        check_or_equivalence(Construction::Thm7, random_batch(Construction::Thm7, 11), 11,
                             report);
        benchmark::DoNotOptimize(report.agreements);
    }
}

BENCHMARK(BM_max_clique_composed);
BENCHMARK(BM_chromatic_composed);
BENCHMARK(BM_weighted_transversal_composed);
BENCHMARK(BM_inflate)->Arg(4)->Arg(8);
BENCHMARK(BM_compose_thm7);
BENCHMARK(BM_verification_batch);

}  // namespace

BENCHMARK_MAIN();
