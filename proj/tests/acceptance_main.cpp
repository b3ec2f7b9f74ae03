// Acceptance gate: runs every numbered claim check once with the default
// configuration and prints one line per check. Exit code 0 only when all of
// them pass.
#include <cstdio>
#include <string>

#include "thetaloc/verify.hpp"

int main(int argc, char** argv) {
    thetaloc::VerifyConfig config;
    if (argc > 1) config.seed = std::stoull(argv[1]);

    thetaloc::VerifyReport report = thetaloc::run_verify(config);

    int passed = 0;
    for (const auto& check : report.checks) {
        std::printf("[%s] %-28s (%8.1f ms)  %s\n",
                    to_string(check.status).c_str(), check.name.c_str(),
                    check.wall_ms, check.claim.c_str());
        if (check.status == thetaloc::CheckStatus::Pass) {
            ++passed;
        } else {
            for (const auto& [key, value] : check.measured)
                std::printf("         %s = %.6e\n", key.c_str(), value);
            if (!check.detail.empty())
                std::printf("         %s\n", check.detail.c_str());
        }
    }
    std::printf("overall: %s (%d/%zu)\n", report.overall_pass ? "PASS" : "FAIL",
                passed, report.checks.size());
    if (!report.note.empty()) std::printf("note: %s\n", report.note.c_str());
    return report.overall_pass ? 0 : 1;
}
