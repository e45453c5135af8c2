#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nscat {

struct VerifyOptions {
    int ell = 3;
    long trials = 200;
    std::uint64_t seed = 42;
    int maxmu = 5;    // bound on |mu| for partition-indexed suites
    int maxsize = 6;  // bound on |gamma|, |alpha|, word content
};

struct VerifyReport {
    std::string suite;
    long trials = 0;
    long failures = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> counterexamples;
};

const std::vector<std::string>& suite_names();

// Runs a named suite; throws std::invalid_argument for unknown names.
VerifyReport run_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace nscat
