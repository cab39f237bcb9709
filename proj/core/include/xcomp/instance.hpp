#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xcomp/graph.hpp"

namespace xcomp {

enum class Kind {
    Clique,
    VertexCover,
    TriangleSplit3Coloring,
    CliqueByVc,
    VcByCliqueDeletion,
    IsByCliqueDeletion,
    ChromaticByVc,
    FvsByCliqueDeletion,
    OctByCliqueDeletion,
    WeightedFvsByVc,
    WeightedOctByVc,
};

std::string_view kind_token(Kind kind);
std::optional<Kind> kind_from_token(std::string_view token);

// Kinds whose instances carry a structural witness set Z.
bool kind_has_witness(Kind kind);
// Witnessed kinds where Z must be a vertex cover.
bool kind_witness_is_vertex_cover(Kind kind);
// Witnessed kinds where G - Z must be a clique.
bool kind_witness_is_clique_deletion(Kind kind);
bool kind_is_weighted(Kind kind);

struct TrianglePartition {
    VertexSet x;
    // Ordered triples (a, b, c); the order is part of the instance and
    // drives canonical triangle merges downstream.
    std::vector<std::array<Vertex, 3>> triangles;

    bool operator==(const TrianglePartition&) const = default;
};

struct ProblemInstance {
    Kind kind = Kind::Clique;
    Graph graph;
    int target = 0;  // the bound l of the instance's question
    std::optional<VertexSet> witness;
    std::optional<TrianglePartition> partition;
    std::optional<std::vector<long long>> weights;  // 1-based, slot 0 unused

    // k = |Z| when a witness is present, otherwise 0.
    int parameter() const { return witness ? static_cast<int>(witness->size()) : 0; }

    bool operator==(const ProblemInstance&) const = default;
};

struct Verdict {
    bool yes = false;
    std::optional<VertexSet> witness_set;
    std::optional<std::vector<int>> witness_coloring;  // 1-based vertex -> color
    std::optional<long long> value;                    // optimum found, when computed
};

enum class TransversalMode { Fvs, Oct };

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class WitnessError : public std::runtime_error {
public:
    explicit WitnessError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

// Parses the one-directive-per-line text format and fully validates the
// result, including the witness invariants. Throws ParseError or
// WitnessError.
ProblemInstance parse_instance(std::string_view text);

// Canonical text form: fixed line order, edges sorted ascending.
// parse_instance(serialize_instance(x)) == x for every valid instance.
std::string serialize_instance(const ProblemInstance& inst);

// Structural invariant check; returns the list of violated invariants
// (empty means ok). Never throws on violations.
std::vector<std::string> validate_witness(const ProblemInstance& inst);

}  // namespace xcomp
