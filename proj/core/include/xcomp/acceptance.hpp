#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace xcomp {

struct AcceptConfig {
    uint64_t seed = 7002025;
    int thm7_batches = 100;
    int thm8_batches = 60;
    int thm9_instances = 100;
    int cor4_instances = 100;
    int fpt_instances = 100;
    bool stretch = true;
    std::string artifact_dir;
};

// key=value lines, '#' comments. Unknown keys are rejected.
AcceptConfig load_accept_config(const std::string& path);

// Runs every acceptance criterion with one timed pass/fail line each;
// returns 0 when all gating criteria pass. The stretch batch is reported
// but never gates.
int run_acceptance_suite(const AcceptConfig& config, std::ostream& out);

}  // namespace xcomp
