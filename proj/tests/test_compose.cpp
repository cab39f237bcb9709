#include <doctest.h>

#include <cmath>
#include <set>

#include "xcomp/compose.hpp"
#include "xcomp/gadgets.hpp"
#include "xcomp/harness.hpp"
#include "xcomp/oracles.hpp"

using namespace xcomp;

namespace {

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

}  // namespace

TEST_CASE("partition keys") {
    std::vector<ProblemInstance> batch{
        clique_instance(Graph::complete(3), 2), clique_instance(Graph::path(3), 2),
        clique_instance(Graph::complete(4), 2), clique_instance(Graph::complete(3), 3)};
    const auto classes = partition_instances(batch, Construction::Thm7).classes;
    REQUIRE(classes.size() == 3);
    CHECK(classes[0].first.to_string() == "n=3 l=2");
    CHECK(classes[0].second == std::vector<size_t>{0, 1});
    CHECK(classes[1].first.to_string() == "n=3 l=3");
    CHECK(classes[2].first.to_string() == "n=4 l=2");

    const auto malformed =
        partition_instances({clique_instance(Graph::complete(3), 5)}, Construction::Thm7);
    CHECK(malformed.classes[0].first.tag == ClassKey::Tag::Malformed);

    const auto trivial =
        partition_instances({cover_instance(Graph::complete(3), 3)}, Construction::Thm10Fvs);
    CHECK(trivial.classes[0].first.tag == ClassKey::Tag::TrivialYes);

    CHECK_THROWS_AS(partition_instances(batch, Construction::Thm8), std::invalid_argument);
}

TEST_CASE("partition class counts stay polynomial") {
    std::vector<ProblemInstance> clique_batch;
    std::vector<ProblemInstance> cover_batch;
    Rng rng(99);
    int s = 0;
    for (int i = 0; i < 60; ++i) {
        const int n = rng.uniform(1, 4);
        s = std::max(s, n);
        std::vector<Edge> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng.chance(0.5)) edges.emplace_back(u, v);
        clique_batch.push_back(clique_instance(Graph(n, edges), rng.uniform(0, n + 1)));
        cover_batch.push_back(cover_instance(Graph(n, edges), rng.uniform(0, n)));
        s = std::max(s, clique_batch.back().graph.edge_count());
    }
    const auto thm7 = partition_instances(clique_batch, Construction::Thm7);
    CHECK(thm7.classes.size() <= static_cast<size_t>((s + 1) * (s + 1) + 1));
    const auto thm10 = partition_instances(cover_batch, Construction::Thm10Oct);
    CHECK(thm10.classes.size() <= static_cast<size_t>((s + 1) * (s + 1) * (s + 1) + 2));
}

TEST_CASE("padding duplicates the first instance") {
    std::vector<ProblemInstance> three{clique_instance(Graph::complete(3), 1),
                                       clique_instance(Graph::path(3), 1),
                                       clique_instance(Graph(3), 1)};
    const auto padded = pad_to_power_of_two(three);
    REQUIRE(padded.size() == 4);
    CHECK(padded[3] == three[0]);
    CHECK(pad_to_power_of_two(padded).size() == 4);
    CHECK(pad_to_power_of_two({clique_instance(Graph(1), 0)}).size() == 1);
    CHECK_THROWS_AS(pad_to_power_of_two({}), std::invalid_argument);
}

TEST_CASE("index encoding") {
    CHECK(encode_index(1, 2) == "01");
    CHECK(encode_index(3, 2) == "11");
    CHECK(encode_index(4, 2) == "00");
    CHECK(encode_index(1, 0) == "");
    CHECK(encode_index(5, 3) == "101");
    CHECK_THROWS_AS(encode_index(0, 2), std::out_of_range);
    CHECK_THROWS_AS(encode_index(5, 2), std::out_of_range);
}

TEST_CASE("clique composition formulas and verdicts") {
    // n=4, l=2: l' = 2+1+6 and k' = 8+18, independent of t.
    const auto report =
        compose_clique({clique_instance(Graph::complete(4), 2), clique_instance(Graph(4), 2)});
    CHECK(report.audit.l_prime == 9);
    CHECK(report.audit.k_prime == 26);
    CHECK(report.instance.parameter() == 26);
    CHECK(validate_witness(report.instance).empty());

    // P3 holds an edge, the edgeless graph does not; the OR is YES.
    const auto mixed =
        compose_clique({clique_instance(Graph::path(3), 2), clique_instance(Graph(3), 2)});
    CHECK(mixed.instance.graph.vertex_count() == 17);
    CHECK(decide(mixed.instance).yes);
    CHECK(*decide(mixed.instance).value == mixed.audit.l_prime);

    const auto all_no =
        compose_clique({clique_instance(Graph(3), 2), clique_instance(Graph(3), 2)});
    CHECK_FALSE(decide(all_no.instance).yes);

    // The B block is an independent set.
    const int b_lo = mixed.audit.layout[2].lo;
    const int b_hi = mixed.audit.layout[2].hi;
    VertexSet b_block;
    for (int v = b_lo; v <= b_hi; ++v) b_block.push_back(v);
    CHECK(is_independent_set(mixed.instance.graph, b_block));

    CHECK_THROWS_AS(
        compose_clique({clique_instance(Graph(3), 2), clique_instance(Graph(4), 2)}),
        std::invalid_argument);
    CHECK_THROWS_AS(compose_clique({clique_instance(Graph(3), 4)}), std::invalid_argument);
}

TEST_CASE("clique composition is sensitive to the pair-gadget adjacency") {
    // A single instance whose only maximum clique contains the smaller
    // endpoint of every non-edge: inverting the q-hat adjacency must turn
    // the composed YES into a NO.
    const std::vector<ProblemInstance> batch{clique_instance(Graph(3, {{1, 2}}), 2)};
    const auto report = compose_clique(batch);
    REQUIRE(decide(report.instance).yes);

    const int n = 3, l = 2;
    const int c_size = l * n;
    std::vector<std::pair<int, int>> pairs{{1, 2}, {1, 3}, {2, 3}};
    std::set<Edge> edges(report.instance.graph.edges().begin(),
                         report.instance.graph.edges().end());
    for (size_t a = 0; a < pairs.size(); ++a) {
        const int hat_q = c_size + 3 * static_cast<int>(a) + 2;  // w_{p,q-hat}
        const int q = pairs[a].second;
        for (int i = 1; i <= l; ++i)
            for (int j = 1; j <= n; ++j) {
                const int cv = (i - 1) * n + j;
                const Edge e{std::min(cv, hat_q), std::max(cv, hat_q)};
                if (j == q)
                    edges.insert(e);
                else
                    edges.erase(e);
            }
    }
    ProblemInstance mutated = report.instance;
    mutated.graph =
        Graph(report.instance.graph.vertex_count(), {edges.begin(), edges.end()});
    CHECK_FALSE(decide(mutated).yes);
}

TEST_CASE("triangle merge composition formulas and verdicts") {
    const ProblemInstance a = triangle_split_reduction(Graph::complete(2));
    const auto report = compose_chromatic({a, a});
    CHECK(report.audit.l_prime == 5);        // log t + 4
    CHECK(report.audit.k_prime == 10);       // 3 log t + 4 + 3m
    CHECK(report.instance.graph.vertex_count() == 14);  // t*n + 3m + (L+4) + 2L
    CHECK(validate_witness(report.instance).empty());
    CHECK(decide(report.instance).yes);

    const auto single = compose_chromatic({triangle_split_reduction(Graph::complete(4))});
    CHECK(single.audit.l_prime == 4);
    CHECK_FALSE(decide(single.instance).yes);

    // X blocks stay independent.
    VertexSet x_block;
    for (int v = report.audit.layout[0].lo; v <= report.audit.layout[0].hi; ++v)
        x_block.push_back(v);
    CHECK(is_independent_set(report.instance.graph, x_block));

    std::vector<ProblemInstance> three{a, a, a};
    CHECK_THROWS_AS(compose_chromatic(three), std::invalid_argument);  // not a power of two
    CHECK_THROWS_AS(
        compose_chromatic({a, triangle_split_reduction(Graph::path(3))}),
        std::invalid_argument);
}

TEST_CASE("triangle merge respects the or over mixed inputs") {
    // One 3-colorable input, one not; the other order too.
    const ProblemInstance good = triangle_split_reduction(Graph::complete(3));
    const ProblemInstance bad = triangle_split_reduction(Graph::complete(4));
    // Different m, so compose each padded class separately via the driver.
    std::vector<ProblemInstance> batch{good, bad};
    VerificationReport report;
    check_or_equivalence(Construction::Thm8, batch, 0, report);
    CHECK(report.trials == 2);
    CHECK(report.agreements == 2);
    CHECK(report.failures.empty());
    CHECK(report.formula_violations.empty());
}

TEST_CASE("weighted composition formulas and verdicts") {
    const auto yes_report = compose_weighted_transversal(
        {cover_instance(Graph::complete(2), 1), cover_instance(Graph::complete(2), 1)},
        TransversalMode::Fvs);
    CHECK(yes_report.audit.l_prime == 11);  // 2*1*4 + 2 + 1
    CHECK(yes_report.audit.k_prime == 7 + 8);
    CHECK(yes_report.instance.graph.vertex_count() == 19);
    CHECK(validate_witness(yes_report.instance).empty());
    CHECK(decide(yes_report.instance).yes);

    for (auto mode : {TransversalMode::Fvs, TransversalMode::Oct}) {
        const auto no_report = compose_weighted_transversal(
            {cover_instance(Graph::complete(2), 0), cover_instance(Graph::complete(2), 0)},
            mode);
        CHECK_FALSE(decide(no_report.instance).yes);
    }

    // t = 1 degenerates to the plain inflation with the same budget.
    const auto single = compose_weighted_transversal({cover_instance(Graph::complete(2), 1)},
                                                     TransversalMode::Oct);
    CHECK(single.audit.l_prime == 1);
    CHECK(single.audit.k_prime == 7);
    CHECK(are_isomorphic(single.instance.graph, inflate(Graph::complete(2)).graph));
    CHECK(decide(single.instance).yes);

    // Original blocks stay independent, and both modes share the graph.
    const auto oct_report = compose_weighted_transversal(
        {cover_instance(Graph::complete(2), 1), cover_instance(Graph::complete(2), 1)},
        TransversalMode::Oct);
    CHECK(oct_report.instance.graph == yes_report.instance.graph);
    CHECK(oct_report.instance.weights == yes_report.instance.weights);
    VertexSet blocks;
    for (int v = yes_report.audit.layout[0].lo; v <= yes_report.audit.layout[0].hi; ++v)
        blocks.push_back(v);
    CHECK(is_independent_set(yes_report.instance.graph, blocks));

    CHECK_THROWS_AS(compose_weighted_transversal({cover_instance(Graph::complete(2), 2)},
                                                 TransversalMode::Fvs),
                    std::invalid_argument);  // l >= n belongs to the trivial class
}

TEST_CASE("block plus scaffold is isomorphic to each input's inflation") {
    const std::vector<ProblemInstance> batch{cover_instance(Graph::path(3), 1),
                                             cover_instance(Graph(3, {{1, 3}, {2, 3}}), 1)};
    const auto report = compose_weighted_transversal(batch, TransversalMode::Fvs);
    const int n = report.audit.n;
    const auto& a_span = report.audit.layout[1];
    for (int i = 1; i <= 2; ++i) {
        VertexSet keep;
        for (int v = (i - 1) * n + 1; v <= i * n; ++v) keep.push_back(v);
        for (int v = a_span.lo; v <= a_span.hi; ++v) keep.push_back(v);
        const Graph induced = induced_subgraph(report.instance.graph, keep).graph;
        CHECK(are_isomorphic(induced,
                             inflate(batch[static_cast<size_t>(i) - 1].graph).graph));
    }
}

TEST_CASE("canonical constant instances decide as labeled") {
    CHECK_FALSE(decide(canonical_no_clique_by_vc()).yes);
    CHECK_FALSE(decide(canonical_no_chromatic_by_vc()).yes);
    for (auto mode : {TransversalMode::Fvs, TransversalMode::Oct}) {
        CHECK_FALSE(decide(canonical_no_weighted(mode)).yes);
        CHECK(decide(canonical_yes_weighted(mode)).yes);
        CHECK(validate_witness(canonical_no_weighted(mode)).empty());
        CHECK(validate_witness(canonical_yes_weighted(mode)).empty());
    }
    CHECK(validate_witness(canonical_no_clique_by_vc()).empty());
    CHECK(validate_witness(canonical_no_chromatic_by_vc()).empty());
}

TEST_CASE("dispatcher routes degenerate classes to constants") {
    const std::vector<ProblemInstance> malformed{clique_instance(Graph::complete(3), 5)};
    const auto partition = partition_instances(malformed, Construction::Thm7);
    const auto report =
        compose_class(Construction::Thm7, partition.classes[0].first, malformed);
    CHECK(report.instance == canonical_no_clique_by_vc());
    CHECK(report.audit.t_raw == 1);

    const std::vector<ProblemInstance> trivial{cover_instance(Graph::complete(3), 3)};
    const auto p10 = partition_instances(trivial, Construction::Thm10Oct);
    const auto r10 = compose_class(Construction::Thm10Oct, p10.classes[0].first, trivial);
    CHECK(r10.instance == canonical_yes_weighted(TransversalMode::Oct));
    CHECK(decide(r10.instance).yes);

    // Padding happens inside the dispatcher for the power-of-two builds.
    const ProblemInstance ts = triangle_split_reduction(Graph::complete(2));
    const std::vector<ProblemInstance> odd_group{ts, ts, ts};
    const auto p8 = partition_instances(odd_group, Construction::Thm8);
    const auto r8 = compose_class(Construction::Thm8, p8.classes[0].first, odd_group);
    CHECK(r8.audit.t_raw == 3);
    CHECK(r8.audit.t == 4);
    CHECK(r8.audit.l_prime == 6);
}

TEST_CASE("four-input merges use two bit positions correctly") {
    // thm8 with t=4: L=2, six palette vertices, two selector pairs.
    const ProblemInstance colorable = triangle_split_reduction(Graph::complete(2));
    const auto all_yes = compose_chromatic({colorable, colorable, colorable, colorable});
    CHECK(all_yes.audit.l_prime == 6);
    CHECK(all_yes.audit.k_prime == 3 * 2 + 4 + 3);
    CHECK(decide(all_yes.instance).yes);
    CHECK(validate_witness(all_yes.instance).empty());

    // thm10 with t=4: two selector gadgets, budget 2*2*8*2 + 3*2 + l.
    std::vector<ProblemInstance> covers;
    for (int i = 0; i < 4; ++i) covers.push_back(cover_instance(Graph::complete(2), 1));
    const auto yes10 = compose_weighted_transversal(covers, TransversalMode::Fvs);
    CHECK(yes10.audit.l_prime == 2LL * 2 * 4 * 2 + 3 * 2 + 1);
    CHECK(yes10.audit.k_prime == 7 + 16);
    CHECK(yes10.instance.graph.vertex_count() == 4 * 2 + 7 + 16);
    CHECK(decide(yes10.instance).yes);
    CHECK(*decide(yes10.instance).value == yes10.audit.l_prime);

    for (auto& inst : covers) inst.target = 0;
    const auto no10 = compose_weighted_transversal(covers, TransversalMode::Oct);
    CHECK_FALSE(decide(no10.instance).yes);
}

TEST_CASE("degenerate shapes stay or-correct") {
    // target 0 clique instances are always YES (the empty clique).
    VerificationReport report;
    check_or_equivalence(Construction::Thm7,
                         {clique_instance(Graph(2), 0), clique_instance(Graph(2), 0)}, 0,
                         report);
    // So is the empty graph with target 0.
    check_or_equivalence(Construction::Thm7, {clique_instance(Graph(0), 0)}, 0, report);
    // Triangle-free triangle-split inputs (m = 0), and an empty X.
    check_or_equivalence(Construction::Thm8,
                         {triangle_split_reduction(Graph(2)),
                          triangle_split_reduction(Graph(2))},
                         0, report);
    check_or_equivalence(Construction::Thm8, {triangle_split_reduction(Graph(0))}, 0, report);
    // Single-vertex cover instances: l = 0 < n = 1 composes, m = 0.
    for (Construction c : {Construction::Thm10Fvs, Construction::Thm10Oct})
        check_or_equivalence(c, {cover_instance(Graph(1), 0), cover_instance(Graph(1), 0)}, 0,
                             report);
    CHECK(report.trials == 6);
    CHECK(report.agreements == 6);
    CHECK(report.failures.empty());
    CHECK(report.formula_violations.empty());
}

TEST_CASE("budget calculator") {
    const BudgetResult basic = distillation_budget({2, 1, 1, 1, 2});
    CHECK(basic.t == 8);
    CHECK(basic.delta == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(basic.identity_lhs == doctest::Approx(basic.identity_rhs).epsilon(1e-9));

    CHECK(distillation_budget({1, 0, 1, 1, 5}).delta == 0.0);

    const BudgetResult larger = distillation_budget({0, 1, 2, 1, 3});
    CHECK(larger.t == 81);
    CHECK(larger.delta == doctest::Approx(0.25).epsilon(1e-12));

    CHECK_THROWS_AS(distillation_budget({0, 0, 1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(distillation_budget({1, 1, 0, 1, 2}), std::invalid_argument);
}

TEST_CASE("composition output is deterministic") {
    const std::vector<ProblemInstance> batch{clique_instance(Graph::path(3), 2),
                                             clique_instance(Graph(3), 2)};
    const auto first = compose_clique(batch);
    const auto second = compose_clique(batch);
    CHECK(serialize_instance(first.instance) == serialize_instance(second.instance));
    CHECK(audit_to_text(first.audit) == audit_to_text(second.audit));
    CHECK(audit_to_text(first.audit) ==
          "construction=thm7\nt_raw=2\nt=2\nn=3\nm=0\nl_prime=6\nk_prime=15\n");
}
