#ifndef STEENROD2_VERIFY_HPP
#define STEENROD2_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace st2 {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // short summary of what was compared
};

// The full verification suite: twelve independent checks, each an exact
// GF(2) comparison against an independent oracle. Every check runs even if
// earlier ones fail.
std::vector<CheckResult> run_acceptance(std::uint64_t seed = 12345);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace st2

#endif
