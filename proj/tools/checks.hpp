#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace operadkit::cli {

struct CheckOptions {
    int gamma = 2;
    std::uint64_t seed = 0xD1A5;
    int budget = 1000;
};

std::vector<std::string> check_suite_names();

/// Runs one suite (or "all"); prints one line per sub-check. Returns true
/// when everything passed.
bool run_check_suite(const std::string& name, const CheckOptions& opts, std::ostream& out);

}  // namespace operadkit::cli
