// Acceptance suite: runs every check of the verification suite and prints
// one pass/fail line per criterion. Exits nonzero if any check fails.
#include <cstdio>

#include "latkit/verify.hpp"

int main() {
    std::vector<latkit::CheckResult> report = latkit::run_verification_suite(12345);
    bool all_pass = true;
    int i = 0;
    for (const latkit::CheckResult& c : report) {
        ++i;
        std::printf("%s  %02d %-32s %s\n", c.pass ? "PASS" : "FAIL", i, c.name.c_str(),
                    c.details.c_str());
        all_pass = all_pass && c.pass;
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria satisfied"
                                 : "acceptance: FAILURES PRESENT");
    return all_pass ? 0 : 1;
}
