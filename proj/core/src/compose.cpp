#include "xcomp/compose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace xcomp {

std::string_view construction_token(Construction c) {
    switch (c) {
        case Construction::Thm7: return "thm7";
        case Construction::Thm8: return "thm8";
        case Construction::Thm10Fvs: return "thm10-fvs";
        case Construction::Thm10Oct: return "thm10-oct";
    }
    return "?";
}

std::optional<Construction> construction_from_token(std::string_view token) {
    if (token == "thm7") return Construction::Thm7;
    if (token == "thm8") return Construction::Thm8;
    if (token == "thm10-fvs") return Construction::Thm10Fvs;
    if (token == "thm10-oct") return Construction::Thm10Oct;
    return std::nullopt;
}

Kind construction_source_kind(Construction c) {
    switch (c) {
        case Construction::Thm7: return Kind::Clique;
        case Construction::Thm8: return Kind::TriangleSplit3Coloring;
        default: return Kind::VertexCover;
    }
}

std::string ClassKey::to_string() const {
    if (tag == Tag::Malformed) return "malformed";
    if (tag == Tag::TrivialYes) return "trivial-yes";
    std::string out;
    auto append = [&](const char* name, int value) {
        if (value < 0) return;
        if (!out.empty()) out += ' ';
        out += name;
        out += '=';
        out += std::to_string(value);
    };
    append("n", n);
    append("m", m);
    append("l", l);
    return out;
}

PartitionResult partition_instances(const std::vector<ProblemInstance>& instances,
                                    Construction c) {
    const Kind source = construction_source_kind(c);
    std::map<ClassKey, std::vector<size_t>> groups;
    for (size_t i = 0; i < instances.size(); ++i) {
        const ProblemInstance& inst = instances[i];
        if (inst.kind != source)
            throw std::invalid_argument("mixed source kinds in partition input");
        ClassKey key;
        switch (c) {
            case Construction::Thm7:
                if (inst.target > inst.graph.vertex_count()) {
                    key.tag = ClassKey::Tag::Malformed;
                } else {
                    key.n = inst.graph.vertex_count();
                    key.l = inst.target;
                }
                break;
            case Construction::Thm8:
                key.n = static_cast<int>(inst.partition->x.size());
                key.m = static_cast<int>(inst.partition->triangles.size());
                break;
            case Construction::Thm10Fvs:
            case Construction::Thm10Oct:
                if (inst.target >= inst.graph.vertex_count()) {
                    key.tag = ClassKey::Tag::TrivialYes;
                } else {
                    key.n = inst.graph.vertex_count();
                    key.m = inst.graph.edge_count();
                    key.l = inst.target;
                }
                break;
        }
        groups[key].push_back(i);
    }
    PartitionResult out;
    out.classes.assign(groups.begin(), groups.end());
    return out;
}

std::vector<ProblemInstance> pad_to_power_of_two(std::vector<ProblemInstance> list) {
    if (list.empty()) throw std::invalid_argument("cannot pad an empty list");
    size_t target = 1;
    while (target < list.size()) target *= 2;
    const ProblemInstance first = list.front();
    while (list.size() < target) list.push_back(first);
    return list;
}

std::string encode_index(long long i, int bits) {
    if (bits < 0 || bits > 62) throw std::out_of_range("bit length out of range");
    const long long top = 1LL << bits;
    if (i < 1 || i > top) throw std::out_of_range("index out of range");
    std::string out(static_cast<size_t>(bits), '0');
    if (i == top) return out;
    for (int pos = bits - 1; pos >= 0; --pos) {
        if (i & 1) out[static_cast<size_t>(pos)] = '1';
        i >>= 1;
    }
    return out;
}

std::string audit_to_text(const CompositionAudit& audit) {
    std::ostringstream out;
    out << "construction=" << audit.construction << "\n";
    out << "t_raw=" << audit.t_raw << "\n";
    out << "t=" << audit.t << "\n";
    out << "n=" << audit.n << "\n";
    out << "m=" << audit.m << "\n";
    out << "l_prime=" << audit.l_prime << "\n";
    out << "k_prime=" << audit.k_prime << "\n";
    return out.str();
}

namespace {

int log2_of_power(size_t t) {
    int log = 0;
    while ((size_t{1} << log) < t) ++log;
    if ((size_t{1} << log) != t) throw std::invalid_argument("group size is not a power of two");
    return log;
}

VertexSet range_set(int lo, int hi) {
    VertexSet out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

}  // namespace

CompositionReport compose_clique(const std::vector<ProblemInstance>& group) {
    if (group.empty()) throw std::invalid_argument("empty group");
    const int n = group.front().graph.vertex_count();
    const int l = group.front().target;
    for (const auto& inst : group) {
        if (inst.kind != Kind::Clique) throw std::invalid_argument("class mismatch: kind");
        if (inst.graph.vertex_count() != n || inst.target != l)
            throw std::invalid_argument("class mismatch: key");
    }
    if (l > n) throw std::invalid_argument("class mismatch: malformed instance");

    const int t = static_cast<int>(group.size());
    const int pairs = n * (n - 1) / 2;
    const int c_size = l * n;
    const int d_size = 3 * pairs;
    const int total = c_size + d_size + t;

    auto c_vertex = [&](int i, int j) { return (i - 1) * n + j; };  // i in [l], j in [n]
    // Pair (p,q), p < q; role 0 = w_pq, 1 = w_p(q-hat), 2 = w_(p-hat)q.
    std::vector<std::pair<int, int>> pair_list;
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) pair_list.emplace_back(p, q);
    auto d_vertex = [&](int pair_index, int role) { return c_size + 3 * pair_index + role + 1; };
    auto b_vertex = [&](int i) { return c_size + d_size + i; };  // i in [t]

    std::vector<Edge> edges;
    // C internal: distinct row and distinct column.
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= n; ++j)
            for (int i2 = i + 1; i2 <= l; ++i2)
                for (int j2 = 1; j2 <= n; ++j2)
                    if (j2 != j) edges.emplace_back(std::min(c_vertex(i, j), c_vertex(i2, j2)),
                                                    std::max(c_vertex(i, j), c_vertex(i2, j2)));
    // D internal: complete between distinct pairs, empty inside one pair.
    for (size_t a = 0; a < pair_list.size(); ++a)
        for (size_t b = a + 1; b < pair_list.size(); ++b)
            for (int ra = 0; ra < 3; ++ra)
                for (int rb = 0; rb < 3; ++rb)
                    edges.emplace_back(d_vertex(static_cast<int>(a), ra),
                                       d_vertex(static_cast<int>(b), rb));
    // C-D adjacency: w_pq sees everything; the hatted vertices miss one column.
    for (size_t a = 0; a < pair_list.size(); ++a) {
        auto [p, q] = pair_list[a];
        for (int i = 1; i <= l; ++i)
            for (int j = 1; j <= n; ++j) {
                edges.emplace_back(c_vertex(i, j), d_vertex(static_cast<int>(a), 0));
                if (j != q) edges.emplace_back(c_vertex(i, j), d_vertex(static_cast<int>(a), 1));
                if (j != p) edges.emplace_back(c_vertex(i, j), d_vertex(static_cast<int>(a), 2));
            }
    }
    // B: adjacent to all of C; pair vertices chosen by the input's edges.
    for (int i = 1; i <= t; ++i) {
        const Graph& gi = group[static_cast<size_t>(i) - 1].graph;
        for (int cv = 1; cv <= c_size; ++cv) edges.emplace_back(cv, b_vertex(i));
        for (size_t a = 0; a < pair_list.size(); ++a) {
            auto [p, q] = pair_list[a];
            if (gi.has_edge(p, q)) {
                edges.emplace_back(d_vertex(static_cast<int>(a), 0), b_vertex(i));
            } else {
                edges.emplace_back(d_vertex(static_cast<int>(a), 1), b_vertex(i));
                edges.emplace_back(d_vertex(static_cast<int>(a), 2), b_vertex(i));
            }
        }
    }

    CompositionReport out;
    out.instance.kind = Kind::CliqueByVc;
    out.instance.graph = Graph(total, edges);
    out.instance.target = l + 1 + pairs;
    out.instance.witness = range_set(1, c_size + d_size);
    out.audit.construction = std::string(construction_token(Construction::Thm7));
    out.audit.t_raw = t;
    out.audit.t = t;
    out.audit.n = n;
    out.audit.m = 0;
    out.audit.l_prime = out.instance.target;
    out.audit.k_prime = c_size + d_size;
    out.audit.layout = {{"C", 1, c_size},
                        {"D", c_size + 1, c_size + d_size},
                        {"B", c_size + d_size + 1, total}};
    return out;
}

CompositionReport compose_chromatic(const std::vector<ProblemInstance>& group) {
    if (group.empty()) throw std::invalid_argument("empty group");
    const int t = static_cast<int>(group.size());
    const int log_t = log2_of_power(group.size());
    const int nx = static_cast<int>(group.front().partition->x.size());
    const int m = static_cast<int>(group.front().partition->triangles.size());
    for (const auto& inst : group) {
        if (inst.kind != Kind::TriangleSplit3Coloring)
            throw std::invalid_argument("class mismatch: kind");
        if (static_cast<int>(inst.partition->x.size()) != nx ||
            static_cast<int>(inst.partition->triangles.size()) != m)
            throw std::invalid_argument("class mismatch: key");
        if (!validate_witness(inst).empty())
            throw std::invalid_argument("invalid triangle-split instance");
    }

    const int x_total = t * nx;
    const int t_base = x_total;           // 3m triangle vertices
    const int p_base = t_base + 3 * m;    // palette: p_1..p_logt, w, x, y, z
    const int q_base = p_base + log_t + 4;  // selector pairs
    const int total = q_base + 2 * log_t;

    auto x_vertex = [&](int i, int slot) { return (i - 1) * nx + slot; };  // slot in [nx]
    auto tri_vertex = [&](int j, int role) { return t_base + 3 * (j - 1) + role + 1; };
    auto palette_p = [&](int i) { return p_base + i; };
    const int pal_w = p_base + log_t + 1;
    const int pal_x = p_base + log_t + 2;
    const int pal_y = p_base + log_t + 3;
    const int pal_z = p_base + log_t + 4;
    auto selector = [&](int i, int bit) { return q_base + 2 * (i - 1) + bit + 1; };

    std::vector<Edge> edges;
    // Merged triangles.
    for (int j = 1; j <= m; ++j) {
        edges.emplace_back(tri_vertex(j, 0), tri_vertex(j, 1));
        edges.emplace_back(tri_vertex(j, 1), tri_vertex(j, 2));
        edges.emplace_back(tri_vertex(j, 0), tri_vertex(j, 2));
    }
    // Per-instance X-to-triangle edges through the canonical label maps.
    for (int i = 1; i <= t; ++i) {
        const ProblemInstance& inst = group[static_cast<size_t>(i) - 1];
        std::map<Vertex, int> x_slot;
        for (size_t s = 0; s < inst.partition->x.size(); ++s)
            x_slot[inst.partition->x[s]] = static_cast<int>(s) + 1;
        std::map<Vertex, std::pair<int, int>> y_role;  // vertex -> (triangle, role)
        for (int j = 1; j <= m; ++j) {
            const auto& tri = inst.partition->triangles[static_cast<size_t>(j) - 1];
            for (int role = 0; role < 3; ++role) y_role[tri[static_cast<size_t>(role)]] = {j, role};
        }
        for (auto [u, v] : inst.graph.edges()) {
            const bool u_in_x = x_slot.count(u) > 0;
            const bool v_in_x = x_slot.count(v) > 0;
            if (!u_in_x && !v_in_x) continue;  // a triangle edge, already shared
            if (u_in_x && v_in_x)
                throw std::invalid_argument("invalid triangle-split instance: edge inside X");
            const Vertex xv = u_in_x ? u : v;
            const Vertex yv = u_in_x ? v : u;
            auto [j, role] = y_role.at(yv);
            edges.emplace_back(x_vertex(i, x_slot.at(xv)), tri_vertex(j, role));
        }
    }
    // Palette clique.
    for (int a = p_base + 1; a <= p_base + log_t + 4; ++a)
        for (int b = a + 1; b <= p_base + log_t + 4; ++b) edges.emplace_back(a, b);
    // Triangle vertices see the palette minus {x, y, z}.
    for (int j = 1; j <= m; ++j)
        for (int role = 0; role < 3; ++role) {
            for (int i = 1; i <= log_t; ++i) edges.emplace_back(tri_vertex(j, role), palette_p(i));
            edges.emplace_back(tri_vertex(j, role), pal_w);
        }
    // Every X vertex sees w.
    for (int v = 1; v <= x_total; ++v) edges.emplace_back(v, pal_w);
    // Selector pairs: adjacent to each other and to the palette minus
    // {p_i, w}.
    for (int i = 1; i <= log_t; ++i) {
        edges.emplace_back(selector(i, 0), selector(i, 1));
        for (int bit = 0; bit < 2; ++bit) {
            for (int j = 1; j <= log_t; ++j)
                if (j != i) edges.emplace_back(selector(i, bit), palette_p(j));
            edges.emplace_back(selector(i, bit), pal_x);
            edges.emplace_back(selector(i, bit), pal_y);
            edges.emplace_back(selector(i, bit), pal_z);
        }
    }
    // Instance-number wiring.
    for (int i = 1; i <= t; ++i) {
        const std::string bits = encode_index(i, log_t);
        for (int j = 1; j <= log_t; ++j) {
            const int bit = bits[static_cast<size_t>(j) - 1] == '1' ? 1 : 0;
            for (int slot = 1; slot <= nx; ++slot)
                edges.emplace_back(x_vertex(i, slot), selector(j, bit));
        }
    }

    CompositionReport out;
    out.instance.kind = Kind::ChromaticByVc;
    out.instance.graph = Graph(total, edges);
    out.instance.target = log_t + 4;
    out.instance.witness = range_set(x_total + 1, total);
    out.audit.construction = std::string(construction_token(Construction::Thm8));
    out.audit.t_raw = t;
    out.audit.t = t;
    out.audit.n = nx;
    out.audit.m = m;
    out.audit.l_prime = out.instance.target;
    out.audit.k_prime = 3 * log_t + 4 + 3 * m;
    out.audit.layout = {{"X", 1, x_total},
                        {"T'", t_base + 1, t_base + 3 * m},
                        {"palette", p_base + 1, p_base + log_t + 4},
                        {"selectors", q_base + 1, total}};
    return out;
}

CompositionReport compose_weighted_transversal(const std::vector<ProblemInstance>& group,
                                               TransversalMode mode) {
    if (group.empty()) throw std::invalid_argument("empty group");
    const int t = static_cast<int>(group.size());
    const int log_t = log2_of_power(group.size());
    const int n = group.front().graph.vertex_count();
    const int m = group.front().graph.edge_count();
    const int l = group.front().target;
    for (const auto& inst : group) {
        if (inst.kind != Kind::VertexCover) throw std::invalid_argument("class mismatch: kind");
        if (inst.graph.vertex_count() != n || inst.graph.edge_count() != m ||
            inst.target != l)
            throw std::invalid_argument("class mismatch: key");
    }
    if (l >= n) throw std::invalid_argument("class mismatch: trivial instance");

    const int a_base = t * n;          // 7m merged scaffold vertices
    const int g_base = a_base + 7 * m; // log t gadget copies of 8 vertices
    const int total = g_base + 8 * log_t;

    auto block_vertex = [&](int i, Vertex v) { return (i - 1) * n + v; };
    // Scaffold unit j, slots: mid1, mid2, tri, ta1, ta2, tb1, tb2.
    auto scaffold = [&](int j, int slot) { return a_base + 7 * (j - 1) + slot + 1; };
    auto gadget = [&](int j, int slot) { return g_base + 8 * (j - 1) + slot + 1; };
    // Gadget slots: 0=a, 1=b, 2=c, 3=d, 4..7 = subdivision vertices.

    std::vector<Edge> edges;
    // Shared scaffold interiors.
    for (int j = 1; j <= m; ++j) {
        edges.emplace_back(scaffold(j, 0), scaffold(j, 1));  // mid1-mid2
        edges.emplace_back(scaffold(j, 3), scaffold(j, 4));  // ta1-ta2
        edges.emplace_back(scaffold(j, 4), scaffold(j, 2));  // ta2-tri
        edges.emplace_back(scaffold(j, 5), scaffold(j, 6));  // tb1-tb2
        edges.emplace_back(scaffold(j, 6), scaffold(j, 2));  // tb2-tri
    }
    // Per-instance boundary edges of the inflation, merged by edge index.
    for (int i = 1; i <= t; ++i) {
        const Graph& gi = group[static_cast<size_t>(i) - 1].graph;
        int j = 0;
        for (auto [u, v] : gi.edges()) {
            ++j;
            edges.emplace_back(block_vertex(i, u), scaffold(j, 0));  // u-mid1
            edges.emplace_back(block_vertex(i, v), scaffold(j, 1));  // v-mid2
            edges.emplace_back(block_vertex(i, u), scaffold(j, 3));  // u-ta1
            edges.emplace_back(block_vertex(i, v), scaffold(j, 5));  // v-tb1
        }
    }
    // Bit-selector gadgets.
    for (int j = 1; j <= log_t; ++j) {
        const int a = gadget(j, 0), b = gadget(j, 1), c = gadget(j, 2), d = gadget(j, 3);
        edges.emplace_back(a, b);
        edges.emplace_back(a, c);
        edges.emplace_back(a, d);
        edges.emplace_back(b, c);
        edges.emplace_back(b, d);
        edges.emplace_back(c, d);
        edges.emplace_back(a, gadget(j, 4));
        edges.emplace_back(b, gadget(j, 4));
        edges.emplace_back(b, gadget(j, 5));
        edges.emplace_back(c, gadget(j, 5));
        edges.emplace_back(c, gadget(j, 6));
        edges.emplace_back(d, gadget(j, 6));
        edges.emplace_back(d, gadget(j, 7));
        edges.emplace_back(a, gadget(j, 7));
    }
    // Instance-number wiring: every block vertex sees the matching terminal
    // pair of each gadget copy.
    for (int i = 1; i <= t; ++i) {
        const std::string bits = encode_index(i, log_t);
        for (int j = 1; j <= log_t; ++j) {
            const bool one = bits[static_cast<size_t>(j) - 1] == '1';
            const int t1 = one ? gadget(j, 1) : gadget(j, 0);  // b : a
            const int t2 = one ? gadget(j, 3) : gadget(j, 2);  // d : c
            for (Vertex v = 1; v <= n; ++v) {
                edges.emplace_back(block_vertex(i, v), t1);
                edges.emplace_back(block_vertex(i, v), t2);
            }
        }
    }

    CompositionReport out;
    out.instance.kind =
        mode == TransversalMode::Fvs ? Kind::WeightedFvsByVc : Kind::WeightedOctByVc;
    out.instance.graph = Graph(total, edges);
    const long long budget = 2LL * log_t * t * n + static_cast<long long>(t - 1) * n + l;
    if (budget > std::numeric_limits<int>::max())
        throw std::overflow_error("composed budget exceeds the instance target range");
    out.instance.target = static_cast<int>(budget);
    out.instance.witness = range_set(a_base + 1, total);
    std::vector<long long> weights(static_cast<size_t>(total) + 1, 1);
    weights[0] = 0;
    for (int v = g_base + 1; v <= total; ++v)
        weights[static_cast<size_t>(v)] = static_cast<long long>(t) * n;
    out.instance.weights = std::move(weights);
    out.audit.construction = std::string(construction_token(
        mode == TransversalMode::Fvs ? Construction::Thm10Fvs : Construction::Thm10Oct));
    out.audit.t_raw = t;
    out.audit.t = t;
    out.audit.n = n;
    out.audit.m = m;
    out.audit.l_prime = out.instance.target;
    out.audit.k_prime = 7 * m + 8 * log_t;
    out.audit.layout = {{"blocks", 1, a_base},
                        {"A'", a_base + 1, g_base},
                        {"gadgets", g_base + 1, total}};
    return out;
}

namespace {

ProblemInstance with_unit_weights(ProblemInstance inst) {
    std::vector<long long> w(static_cast<size_t>(inst.graph.vertex_count()) + 1, 1);
    w[0] = 0;
    inst.weights = std::move(w);
    return inst;
}

}  // namespace

ProblemInstance canonical_no_clique_by_vc() {
    ProblemInstance inst;
    inst.kind = Kind::CliqueByVc;
    inst.graph = Graph(1);
    inst.target = 2;
    inst.witness = VertexSet{};
    return inst;
}

ProblemInstance canonical_no_chromatic_by_vc() {
    ProblemInstance inst;
    inst.kind = Kind::ChromaticByVc;
    inst.graph = Graph::complete(2);
    inst.target = 1;
    inst.witness = VertexSet{1};
    return inst;
}

ProblemInstance canonical_no_weighted(TransversalMode mode) {
    ProblemInstance inst;
    inst.kind = mode == TransversalMode::Fvs ? Kind::WeightedFvsByVc : Kind::WeightedOctByVc;
    inst.graph = Graph::complete(3);
    inst.target = 0;
    inst.witness = VertexSet{1, 2};
    return with_unit_weights(std::move(inst));
}

ProblemInstance canonical_yes_weighted(TransversalMode mode) {
    ProblemInstance inst;
    inst.kind = mode == TransversalMode::Fvs ? Kind::WeightedFvsByVc : Kind::WeightedOctByVc;
    inst.graph = Graph(1);
    inst.target = 0;
    inst.witness = VertexSet{};
    return with_unit_weights(std::move(inst));
}

CompositionReport compose_class(Construction c, const ClassKey& key,
                                std::vector<ProblemInstance> group) {
    CompositionReport out;
    const int t_raw = static_cast<int>(group.size());
    if (key.tag == ClassKey::Tag::Malformed || key.tag == ClassKey::Tag::TrivialYes) {
        switch (c) {
            case Construction::Thm7:
                out.instance = canonical_no_clique_by_vc();
                break;
            case Construction::Thm8:
                out.instance = canonical_no_chromatic_by_vc();
                break;
            case Construction::Thm10Fvs:
            case Construction::Thm10Oct: {
                const TransversalMode mode = c == Construction::Thm10Fvs ? TransversalMode::Fvs
                                                                         : TransversalMode::Oct;
                out.instance = key.tag == ClassKey::Tag::TrivialYes ? canonical_yes_weighted(mode)
                                                                    : canonical_no_weighted(mode);
                break;
            }
        }
        out.audit.construction = std::string(construction_token(c));
        out.audit.t_raw = t_raw;
        out.audit.t = t_raw;
        out.audit.n = 0;
        out.audit.m = 0;
        out.audit.l_prime = out.instance.target;
        out.audit.k_prime = out.instance.parameter();
        out.audit.layout = {{"constant", 1, out.instance.graph.vertex_count()}};
        return out;
    }

    switch (c) {
        case Construction::Thm7:
            out = compose_clique(group);
            break;
        case Construction::Thm8:
            out = compose_chromatic(pad_to_power_of_two(std::move(group)));
            break;
        case Construction::Thm10Fvs:
            out = compose_weighted_transversal(pad_to_power_of_two(std::move(group)),
                                               TransversalMode::Fvs);
            break;
        case Construction::Thm10Oct:
            out = compose_weighted_transversal(pad_to_power_of_two(std::move(group)),
                                               TransversalMode::Oct);
            break;
    }
    out.audit.t_raw = t_raw;
    return out;
}

BudgetResult distillation_budget(const BudgetParameters& p) {
    if (p.d <= 0 || p.eps <= 0 || p.b < 0 || p.c < 0 || p.s < 1)
        throw std::invalid_argument("budget parameters out of range");
    const double denom = (p.b + p.c * p.d) * p.d;
    if (denom == 0) throw std::invalid_argument("division by zero: b + c*d must be positive");

    BudgetResult out;
    const double exponent = (p.b + p.c * p.d) * p.d / p.eps;
    const long double t_real = std::pow(static_cast<long double>(p.s), exponent);
    if (t_real > 9.0e18L) throw std::overflow_error("instance budget exceeds 64-bit range");
    out.t = static_cast<long long>(std::ceil(t_real - 1e-9L));
    out.delta = p.c * p.eps * p.eps / denom;
    out.identity_lhs = std::pow(static_cast<double>(p.s), p.b + p.c * (p.d - p.eps));
    out.identity_rhs =
        static_cast<double>(std::pow(t_real, static_cast<long double>(p.eps / p.d - out.delta)));
    return out;
}

}  // namespace xcomp
