#include <cstdio>

#include "steenrod2/verify.hpp"

int main() {
    auto results = st2::run_acceptance();
    for (const auto& r : results)
        std::printf("%s %-24s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
    return st2::all_passed(results) ? 0 : 1;
}
