#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "xcomp/compose.hpp"
#include "xcomp/instance.hpp"

namespace xcomp {

// Thin deterministic RNG front end. Draws go through the raw mt19937_64
// stream only, so identical seeds give identical instances everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}
    uint64_t next() { return engine_(); }
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
    bool chance(double p) {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }

private:
    std::mt19937_64 engine_;
};

enum class TargetPolicy { Uniform, NearOptimum };

struct InstanceSpec {
    Kind kind = Kind::Clique;
    int n_lo = 1;
    int n_hi = 4;
    double density = 0.5;
    TargetPolicy policy = TargetPolicy::NearOptimum;
    long long max_weight = 3;
};

// Deterministic for a fixed seed; generated witnesses are always valid
// (greedy locally-minimized vertex covers, planted cliques for the
// deletion-set kinds). Near-optimum targets draw from {opt-1, opt, opt+1}.
ProblemInstance random_instance(const InstanceSpec& spec, uint64_t seed);
ProblemInstance random_instance(const InstanceSpec& spec, Rng& rng);

struct TrialFailure {
    uint64_t seed = 0;
    std::string class_key;
    std::string batch_text;
    std::string expected;
    std::string got;
};

struct VerificationReport {
    std::string construction;
    int trials = 0;
    int agreements = 0;
    std::vector<TrialFailure> failures;
    std::vector<std::string> formula_violations;
};

// Partition -> pad -> compose per class, then decide() on every input and
// every composed output: one trial per class, agreeing when the composed
// verdict equals the OR of the class members. Formula and witness audits
// land in formula_violations. Constructions never run oracles themselves.
void check_or_equivalence(Construction c, const std::vector<ProblemInstance>& batch,
                          uint64_t seed, VerificationReport& report);

// Default seeded batch shapes, sized to keep composed graphs within the
// solver limits. Batch i of a run draws from seed + i, so one CLI call with
// --trials 1 --seed <value> replays a failure.
std::vector<ProblemInstance> random_batch(Construction c, uint64_t seed);

// Runs `trials` seeded batches; when artifact_dir is non-empty, failing
// batches are serialized there for offline replay.
VerificationReport run_verification(Construction c, int trials, uint64_t seed,
                                    const std::string& artifact_dir = "");

std::string report_to_text(const VerificationReport& report);

}  // namespace xcomp
