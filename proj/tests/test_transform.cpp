#include <doctest.h>

#include "xcomp/harness.hpp"
#include "xcomp/oracles.hpp"
#include "xcomp/transform.hpp"

using namespace xcomp;

namespace {

ProblemInstance clique_by_vc(Graph g, int target, VertexSet z) {
    ProblemInstance inst;
    inst.kind = Kind::CliqueByVc;
    inst.graph = std::move(g);
    inst.target = target;
    inst.witness = std::move(z);
    return inst;
}

}  // namespace

TEST_CASE("complement chain examples") {
    const auto k4 = complement_chain(clique_by_vc(Graph::complete(4), 4, {1, 2, 3}));
    CHECK(k4.independent_set.kind == Kind::IsByCliqueDeletion);
    CHECK(k4.independent_set.graph == Graph(4));
    CHECK(k4.independent_set.target == 4);
    CHECK(decide(k4.independent_set).yes);
    CHECK(k4.vertex_cover.target == 0);
    CHECK(decide(k4.vertex_cover).yes);
    CHECK(validate_witness(k4.independent_set).empty());
    CHECK(validate_witness(k4.vertex_cover).empty());

    const auto c5 = complement_chain(clique_by_vc(Graph::cycle(5), 3, {1, 2, 4}));
    CHECK_FALSE(decide(clique_by_vc(Graph::cycle(5), 3, {1, 2, 4})).yes);
    CHECK_FALSE(decide(c5.independent_set).yes);
    CHECK_FALSE(decide(c5.vertex_cover).yes);

    CHECK_THROWS_AS(complement_chain(clique_by_vc(Graph(2), 3, {})), std::invalid_argument);
}

TEST_CASE("complement chain preserves verdicts on a seeded corpus") {
    for (uint64_t seed = 1; seed <= 100; ++seed) {
        InstanceSpec spec;
        spec.kind = Kind::CliqueByVc;
        spec.n_lo = 1;
        spec.n_hi = 7;
        spec.density = 0.2 + 0.1 * (seed % 7);
        ProblemInstance inst = random_instance(spec, 500 + seed);
        inst.target = std::min(inst.target, inst.graph.vertex_count());
        const auto chain = complement_chain(inst);
        const bool base = decide(inst).yes;
        CHECK(base == decide(chain.independent_set).yes);
        CHECK(base == decide(chain.vertex_cover).yes);
    }
}

TEST_CASE("clique cover families") {
    const auto k4 = clique_cover(Graph::complete(4), {1});
    REQUIRE(k4.size() == 2);
    CHECK(k4[0] == VertexSet{2, 3, 4});
    CHECK(k4[1] == VertexSet{1, 2, 3, 4});

    const auto k3 = clique_cover(Graph::complete(3), {});
    REQUIRE(k3.size() == 1);
    CHECK(k3[0] == VertexSet{1, 2, 3});

    // Z covering the whole graph: the outside member vanishes.
    const auto all_z = clique_cover(Graph::complete(2), {1, 2});
    for (const auto& member : all_z) CHECK_FALSE(member.empty());

    CHECK_THROWS_AS(clique_cover(Graph::cycle(4), {1}), std::invalid_argument);
}

TEST_CASE("clique cover covers every edge with cliques, within the size bound") {
    for (uint64_t seed = 1; seed <= 100; ++seed) {
        InstanceSpec spec;
        spec.kind = Kind::VcByCliqueDeletion;
        spec.n_lo = 1;
        spec.n_hi = 7;
        spec.density = 0.2 + 0.1 * (seed % 7);
        const ProblemInstance inst = random_instance(spec, 700 + seed);
        const auto family = clique_cover(inst.graph, *inst.witness);
        const size_t z = inst.witness->size();
        CHECK(family.size() <= z * (z - 1) / 2 + 1 + z);
        for (const auto& member : family) CHECK(is_clique(inst.graph, member));
        for (auto [u, v] : inst.graph.edges()) {
            bool covered = false;
            for (const auto& member : family)
                if (set_contains(member, u) && set_contains(member, v)) {
                    covered = true;
                    break;
                }
            CHECK(covered);
        }
    }
}

TEST_CASE("apexify examples") {
    ProblemInstance inst;
    inst.kind = Kind::VcByCliqueDeletion;
    inst.graph = Graph::complete(4);
    inst.target = 3;
    inst.witness = VertexSet{1};

    const ProblemInstance fvs = apexify(inst, TransversalMode::Fvs);
    CHECK(fvs.kind == Kind::FvsByCliqueDeletion);
    CHECK(fvs.graph.vertex_count() == 6);
    CHECK(fvs.parameter() == 3);  // |Z| + |family|
    CHECK(validate_witness(fvs).empty());
    CHECK(decide(fvs).yes);
    CHECK(decide(apexify(inst, TransversalMode::Oct)).yes);

    inst.target = 2;  // vc(K4) = 3
    CHECK_FALSE(decide(apexify(inst, TransversalMode::Fvs)).yes);
    CHECK_FALSE(decide(apexify(inst, TransversalMode::Oct)).yes);
}

TEST_CASE("apexify preserves verdicts on a seeded corpus") {
    for (uint64_t seed = 1; seed <= 100; ++seed) {
        InstanceSpec spec;
        spec.kind = Kind::VcByCliqueDeletion;
        spec.n_lo = 2;
        spec.n_hi = 7;
        spec.density = 0.2 + 0.1 * (seed % 7);
        const ProblemInstance inst = random_instance(spec, 800 + seed);
        const auto family = clique_cover(inst.graph, *inst.witness);
        const ProblemInstance fvs = apexify(inst, TransversalMode::Fvs);
        const ProblemInstance oct = apexify(inst, TransversalMode::Oct);
        CHECK(fvs.parameter() ==
              static_cast<int>(inst.witness->size() + family.size()));
        const bool base = decide(inst).yes;
        CHECK(base == decide(fvs).yes);
        CHECK(base == decide(oct).yes);
        CHECK(validate_witness(fvs).empty());
        CHECK(validate_witness(oct).empty());
    }
}
