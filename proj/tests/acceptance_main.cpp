// Dedicated acceptance binary: runs every acceptance criterion at full size
// and exits nonzero if any gating criterion fails. An optional argument
// names a key=value config file (same format as `xcomp accept --config`).

#include <iostream>

#include "xcomp/acceptance.hpp"

int main(int argc, char** argv) {
    xcomp::AcceptConfig config;
    if (argc > 1) {
        try {
            config = xcomp::load_accept_config(argv[1]);
        } catch (const std::exception& error) {
            std::cerr << "error: " << error.what() << "\n";
            return 1;
        }
    }
    return xcomp::run_acceptance_suite(config, std::cout);
}
