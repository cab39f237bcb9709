#pragma once

#include <string>
#include <vector>

#include "xcomp/instance.hpp"

namespace xcomp {

enum class Construction { Thm7, Thm8, Thm10Fvs, Thm10Oct };

std::string_view construction_token(Construction c);
std::optional<Construction> construction_from_token(std::string_view token);
// The instance kind each construction consumes.
Kind construction_source_kind(Construction c);

struct ClassKey {
    enum class Tag { Malformed, TrivialYes, WellFormed };
    Tag tag = Tag::WellFormed;
    // Unused dimensions stay at -1 (thm7 keys on (n,l), thm8 on (n,m),
    // thm10 on (n,m,l)).
    int n = -1;
    int m = -1;
    int l = -1;

    friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
    std::string to_string() const;
};

struct PartitionResult {
    // Classes sorted by key; members keep input order (indices into the
    // original list).
    std::vector<std::pair<ClassKey, std::vector<size_t>>> classes;
};

PartitionResult partition_instances(const std::vector<ProblemInstance>& instances,
                                    Construction c);

// Appends copies of the first instance up to the next power of two.
std::vector<ProblemInstance> pad_to_power_of_two(std::vector<ProblemInstance> list);

// L-bit binary of i, most significant bit first; i = 2^L maps to all zeros.
std::string encode_index(long long i, int bits);

struct BlockSpan {
    std::string label;
    int lo = 0;
    int hi = 0;  // inclusive; lo > hi means empty

    friend bool operator==(const BlockSpan&, const BlockSpan&) = default;
};

struct CompositionAudit {
    std::string construction;
    int t_raw = 0;  // group size before padding
    int t = 0;      // group size actually composed
    int n = 0;      // shared input vertex count (|X| for thm8); 0 for constants
    int m = 0;      // shared edge/triangle count where the key carries one
    long long l_prime = 0;
    int k_prime = 0;
    std::vector<BlockSpan> layout;
};

// The seven fixed sidecar lines (construction, t_raw, t, n, m, l_prime,
// k_prime), one key=value per line.
std::string audit_to_text(const CompositionAudit& audit);

struct CompositionReport {
    ProblemInstance instance;
    CompositionAudit audit;
};

// Composes one well-formed class of clique instances sharing (n, l), l <= n,
// into a clique-by-vc instance with l' = l + 1 + C(n,2), k' = l*n + 3*C(n,2).
CompositionReport compose_clique(const std::vector<ProblemInstance>& group);

// Composes one class of triangle-split instances sharing (|X|, m); t must be
// a power of two. Output is chromatic-by-vc with l' = log t + 4 and
// k' = 3 log t + 4 + 3m.
CompositionReport compose_chromatic(const std::vector<ProblemInstance>& group);

// Composes one class of vertex-cover instances sharing (n, m, l), l < n; t
// must be a power of two. Output is weighted-fvs-by-vc or weighted-oct-by-vc
// with l' = 2(log t)tn + (t-1)n + l and k' = 7m + 8 log t; the graph and
// weights are identical for both modes.
CompositionReport compose_weighted_transversal(const std::vector<ProblemInstance>& group,
                                               TransversalMode mode);

// Dispatcher: routes malformed/trivial classes to the canonical constant
// instances and pads where the construction needs a power of two.
CompositionReport compose_class(Construction c, const ClassKey& key,
                                std::vector<ProblemInstance> group);

// Canonical constant instances used for degenerate classes.
ProblemInstance canonical_no_clique_by_vc();
ProblemInstance canonical_no_chromatic_by_vc();
ProblemInstance canonical_no_weighted(TransversalMode mode);
ProblemInstance canonical_yes_weighted(TransversalMode mode);

struct BudgetParameters {
    double b = 0;    // equivalence-class count exponent
    double c = 0;    // parameter exponent
    double d = 1;    // compression degree
    double eps = 1;  // slack, > 0
    long long s = 1; // maximum instance size
};

struct BudgetResult {
    long long t = 0;  // ceil(s^((b+cd)*d/eps))
    double delta = 0; // c*eps^2 / ((b+cd)*d)
    // Exponent identity s^(b+c(d-eps)) = t^(eps/d - delta), evaluated with
    // the unrounded t.
    double identity_lhs = 0;
    double identity_rhs = 0;
};

BudgetResult distillation_budget(const BudgetParameters& p);

}  // namespace xcomp
