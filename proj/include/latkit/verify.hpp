#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace latkit {

// One named check of the verification suite. The claim states the fact the
// check establishes; details carry the measured numbers. Output is fully
// deterministic for a fixed seed.
struct CheckResult {
    std::string name;
    std::string claim;
    bool pass = false;
    std::string details;
};

std::vector<CheckResult> run_verification_suite(std::uint64_t seed);

}  // namespace latkit
