#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "sandrank/acceptance.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = sandrank::kDefaultSeed;
    if (argc > 1) seed = std::stoull(argv[1]);
    int failed = 0;
    for (const auto& r : sandrank::run_acceptance(seed)) {
        std::cout << sandrank::format_result(r) << std::endl;
        failed += !r.pass;
    }
    std::cout << (failed ? "FAILED " + std::to_string(failed) + " of 11" : "all 11 criteria pass") << std::endl;
    return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
