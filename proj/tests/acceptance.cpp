// Acceptance gate: runs the twelve headline checks and prints one line each.
// Reported (observation-only) checks never fail the run.

#include <cstdio>

#include "mira/verify.hpp"

int main() {
    bool failed = false;
    int k = 0;
    for (const auto& c : mira::acceptance_checks()) {
        ++k;
        const char* word = c.status == mira::CheckStatus::Pass     ? "PASS"
                           : c.status == mira::CheckStatus::Fail   ? "FAIL"
                                                                   : "REPORT";
        std::printf("%s [%02d] %s (%.0f ms)\n", word, k, c.name.c_str(), c.seconds * 1000.0);
        if (!c.detail.empty()) std::printf("      %s\n", c.detail.c_str());
        if (c.status == mira::CheckStatus::Fail) failed = true;
    }
    return failed ? 1 : 0;
}
