#include "xcomp/instance.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace xcomp {

namespace {

struct KindEntry {
    Kind kind;
    std::string_view token;
};

constexpr KindEntry kKinds[] = {
    {Kind::Clique, "clique"},
    {Kind::VertexCover, "vertex-cover"},
    {Kind::TriangleSplit3Coloring, "triangle-split-3-coloring"},
    {Kind::CliqueByVc, "clique-by-vc"},
    {Kind::VcByCliqueDeletion, "vc-by-clique-deletion"},
    {Kind::IsByCliqueDeletion, "is-by-clique-deletion"},
    {Kind::ChromaticByVc, "chromatic-by-vc"},
    {Kind::FvsByCliqueDeletion, "fvs-by-clique-deletion"},
    {Kind::OctByCliqueDeletion, "oct-by-clique-deletion"},
    {Kind::WeightedFvsByVc, "weighted-fvs-by-vc"},
    {Kind::WeightedOctByVc, "weighted-oct-by-vc"},
};

}  // namespace

std::string_view kind_token(Kind kind) {
    for (const auto& entry : kKinds)
        if (entry.kind == kind) return entry.token;
    return "?";
}

std::optional<Kind> kind_from_token(std::string_view token) {
    for (const auto& entry : kKinds)
        if (entry.token == token) return entry.kind;
    return std::nullopt;
}

bool kind_has_witness(Kind kind) {
    switch (kind) {
        case Kind::Clique:
        case Kind::VertexCover:
        case Kind::TriangleSplit3Coloring:
            return false;
        default:
            return true;
    }
}

bool kind_witness_is_vertex_cover(Kind kind) {
    switch (kind) {
        case Kind::CliqueByVc:
        case Kind::ChromaticByVc:
        case Kind::WeightedFvsByVc:
        case Kind::WeightedOctByVc:
            return true;
        default:
            return false;
    }
}

bool kind_witness_is_clique_deletion(Kind kind) {
    switch (kind) {
        case Kind::VcByCliqueDeletion:
        case Kind::IsByCliqueDeletion:
        case Kind::FvsByCliqueDeletion:
        case Kind::OctByCliqueDeletion:
            return true;
        default:
            return false;
    }
}

bool kind_is_weighted(Kind kind) {
    return kind == Kind::WeightedFvsByVc || kind == Kind::WeightedOctByVc;
}

WitnessError::WitnessError(std::vector<std::string> violations)
    : std::runtime_error(violations.empty() ? "witness invalid"
                                            : "witness invalid: " + violations.front()),
      violations_(std::move(violations)) {}

std::vector<std::string> validate_witness(const ProblemInstance& inst) {
    std::vector<std::string> out;
    const int n = inst.graph.vertex_count();

    auto in_range = [&](const VertexSet& s) {
        return std::all_of(s.begin(), s.end(), [&](Vertex v) { return v >= 1 && v <= n; });
    };

    if (inst.witness) {
        if (!kind_has_witness(inst.kind)) {
            out.push_back("kind does not take a witness");
        } else if (!in_range(*inst.witness)) {
            out.push_back("witness vertex out of range");
        } else if (kind_witness_is_vertex_cover(inst.kind)) {
            for (auto [u, v] : inst.graph.edges()) {
                if (!set_contains(*inst.witness, u) && !set_contains(*inst.witness, v)) {
                    out.push_back("Z is not a vertex cover (edge " + std::to_string(u) + " " +
                                  std::to_string(v) + " uncovered)");
                    break;
                }
            }
        } else if (kind_witness_is_clique_deletion(inst.kind)) {
            VertexSet rest = set_difference(inst.graph.vertices(), *inst.witness);
            if (!is_clique(inst.graph, rest)) out.push_back("G - Z is not a clique");
        }
    } else if (kind_has_witness(inst.kind)) {
        out.push_back("missing witness set");
    }

    if (inst.kind == Kind::TriangleSplit3Coloring) {
        if (!inst.partition) {
            out.push_back("missing triangle split partition");
        } else {
            const auto& part = *inst.partition;
            VertexSet y;
            for (const auto& tri : part.triangles)
                for (Vertex v : tri) y.push_back(v);
            const size_t raw_y = y.size();
            y = normalized(std::move(y));
            if (y.size() != raw_y) out.push_back("triangles are not vertex-disjoint");
            if (!in_range(part.x) || !in_range(y)) out.push_back("partition vertex out of range");
            VertexSet all = set_union(part.x, y);
            if (static_cast<int>(all.size()) != n ||
                all.size() != part.x.size() + y.size()) {
                out.push_back("X and Y do not partition the vertex set");
            }
            if (!is_independent_set(inst.graph, part.x)) out.push_back("G[X] is not edgeless");
            // G[Y] must consist of exactly the listed triangles.
            int edges_inside_y = 0;
            for (auto [u, v] : inst.graph.edges())
                if (set_contains(y, u) && set_contains(y, v)) ++edges_inside_y;
            bool triangles_ok = true;
            for (const auto& tri : part.triangles) {
                if (!inst.graph.has_edge(tri[0], tri[1]) || !inst.graph.has_edge(tri[1], tri[2]) ||
                    !inst.graph.has_edge(tri[0], tri[2]))
                    triangles_ok = false;
            }
            if (!triangles_ok)
                out.push_back("a listed triple does not induce a triangle");
            else if (edges_inside_y != 3 * static_cast<int>(part.triangles.size()))
                out.push_back("G[Y] has edges outside the listed triangles");
        }
    } else if (inst.partition) {
        out.push_back("kind does not take a triangle split partition");
    }

    if (kind_is_weighted(inst.kind)) {
        if (!inst.weights) {
            out.push_back("missing weights");
        } else if (static_cast<int>(inst.weights->size()) != n + 1) {
            out.push_back("weight table size mismatch");
        } else {
            for (int v = 1; v <= n; ++v)
                if ((*inst.weights)[static_cast<size_t>(v)] < 1) {
                    out.push_back("weight of vertex " + std::to_string(v) + " is not positive");
                    break;
                }
        }
    } else if (inst.weights) {
        out.push_back("kind does not take weights");
    }

    if (inst.target < 0) out.push_back("negative target");
    return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view tok, int line, const std::string& what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected integer for " + what);
    return value;
}

}  // namespace

ProblemInstance parse_instance(std::string_view text) {
    std::optional<Kind> kind;
    std::optional<int> n;
    std::optional<int> target;
    std::optional<VertexSet> witness;
    std::optional<VertexSet> part_x;
    std::vector<std::array<Vertex, 3>> triangles;
    std::vector<Edge> edges;
    std::set<Edge> seen_edges;
    std::map<Vertex, long long> weight_lines;

    int line_no = 0;
    std::istringstream stream{std::string(text)};
    std::string raw;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string_view dir = toks[0];
        auto expect_args = [&](size_t count) {
            if (toks.size() != count + 1)
                throw ParseError(line_no, std::string(dir) + " needs " + std::to_string(count) +
                                              " argument(s)");
        };
        auto vertex_arg = [&](std::string_view tok) {
            long long v = parse_int(tok, line_no, "vertex id");
            if (!n) throw ParseError(line_no, "vertices must come before vertex references");
            if (v < 1 || v > *n) throw ParseError(line_no, "vertex id out of range");
            return static_cast<Vertex>(v);
        };

        if (dir == "problem") {
            expect_args(1);
            if (kind) throw ParseError(line_no, "duplicate problem line");
            kind = kind_from_token(toks[1]);
            if (!kind) throw ParseError(line_no, "unknown problem kind");
        } else if (dir == "vertices") {
            expect_args(1);
            if (n) throw ParseError(line_no, "duplicate vertices line");
            long long value = parse_int(toks[1], line_no, "vertex count");
            if (value < 0 || value > 100000) throw ParseError(line_no, "vertex count out of range");
            n = static_cast<int>(value);
        } else if (dir == "edge") {
            expect_args(2);
            Vertex u = vertex_arg(toks[1]);
            Vertex v = vertex_arg(toks[2]);
            if (u == v) throw ParseError(line_no, "self-loop");
            Edge e{std::min(u, v), std::max(u, v)};
            if (!seen_edges.insert(e).second) throw ParseError(line_no, "duplicate edge");
            edges.push_back(e);
        } else if (dir == "target") {
            expect_args(1);
            if (target) throw ParseError(line_no, "duplicate target line");
            long long value = parse_int(toks[1], line_no, "target");
            if (value < 0) throw ParseError(line_no, "target must be non-negative");
            target = static_cast<int>(value);
        } else if (dir == "witness") {
            if (witness) throw ParseError(line_no, "duplicate witness line");
            VertexSet z;
            for (size_t i = 1; i < toks.size(); ++i) z.push_back(vertex_arg(toks[i]));
            const size_t raw = z.size();
            z = normalized(std::move(z));
            if (z.size() != raw) throw ParseError(line_no, "duplicate vertex in witness");
            witness = std::move(z);
        } else if (dir == "part_x") {
            if (part_x) throw ParseError(line_no, "duplicate part_x line");
            VertexSet x;
            for (size_t i = 1; i < toks.size(); ++i) x.push_back(vertex_arg(toks[i]));
            const size_t raw = x.size();
            x = normalized(std::move(x));
            if (x.size() != raw) throw ParseError(line_no, "duplicate vertex in part_x");
            part_x = std::move(x);
        } else if (dir == "triangle") {
            expect_args(3);
            std::array<Vertex, 3> tri{vertex_arg(toks[1]), vertex_arg(toks[2]),
                                      vertex_arg(toks[3])};
            if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
                throw ParseError(line_no, "triangle vertices must be distinct");
            triangles.push_back(tri);
        } else if (dir == "weight") {
            expect_args(2);
            Vertex v = vertex_arg(toks[1]);
            long long w = parse_int(toks[2], line_no, "weight");
            if (w < 1) throw ParseError(line_no, "weight must be positive");
            if (!weight_lines.emplace(v, w).second)
                throw ParseError(line_no, "duplicate weight line for vertex");
        } else {
            throw ParseError(line_no, "unknown directive '" + std::string(dir) + "'");
        }
    }

    if (!kind) throw ParseError(line_no, "missing problem line");
    if (!n) throw ParseError(line_no, "missing vertices line");
    if (!target) {
        if (*kind == Kind::TriangleSplit3Coloring)
            target = 3;
        else
            throw ParseError(line_no, "missing target line");
    }
    if (*kind == Kind::TriangleSplit3Coloring && *target != 3)
        throw ParseError(line_no, "target must be 3 for triangle-split-3-coloring");

    ProblemInstance inst;
    inst.kind = *kind;
    inst.graph = Graph(*n, edges);
    inst.target = *target;
    if (witness) {
        if (!kind_has_witness(*kind)) throw ParseError(line_no, "kind does not take a witness");
        inst.witness = std::move(witness);
    } else if (kind_has_witness(*kind)) {
        throw ParseError(line_no, "missing witness line");
    }
    if (*kind == Kind::TriangleSplit3Coloring) {
        TrianglePartition part;
        part.x = part_x ? *part_x : VertexSet{};
        part.triangles = std::move(triangles);
        inst.partition = std::move(part);
    } else {
        if (part_x) throw ParseError(line_no, "part_x only valid for triangle-split-3-coloring");
        if (!triangles.empty())
            throw ParseError(line_no, "triangle only valid for triangle-split-3-coloring");
    }
    if (kind_is_weighted(*kind)) {
        std::vector<long long> w(static_cast<size_t>(*n) + 1, 0);
        for (int v = 1; v <= *n; ++v) {
            auto it = weight_lines.find(v);
            if (it == weight_lines.end())
                throw ParseError(line_no, "missing weight for vertex " + std::to_string(v));
            w[static_cast<size_t>(v)] = it->second;
        }
        inst.weights = std::move(w);
    } else if (!weight_lines.empty()) {
        throw ParseError(line_no, "weight lines only valid for weighted kinds");
    }

    auto violations = validate_witness(inst);
    if (!violations.empty()) throw WitnessError(std::move(violations));
    return inst;
}

std::string serialize_instance(const ProblemInstance& inst) {
    std::ostringstream out;
    out << "problem " << kind_token(inst.kind) << "\n";
    out << "vertices " << inst.graph.vertex_count() << "\n";
    for (auto [u, v] : inst.graph.edges()) out << "edge " << u << " " << v << "\n";
    out << "target " << inst.target << "\n";
    if (inst.witness) {
        out << "witness";
        for (Vertex v : *inst.witness) out << " " << v;
        out << "\n";
    }
    if (inst.partition) {
        out << "part_x";
        for (Vertex v : inst.partition->x) out << " " << v;
        out << "\n";
        for (const auto& tri : inst.partition->triangles)
            out << "triangle " << tri[0] << " " << tri[1] << " " << tri[2] << "\n";
    }
    if (inst.weights) {
        for (int v = 1; v <= inst.graph.vertex_count(); ++v)
            out << "weight " << v << " " << (*inst.weights)[static_cast<size_t>(v)] << "\n";
    }
    return out.str();
}

}  // namespace xcomp
