// Runs acceptance criteria at full scale and prints one pass/fail line per
// criterion with the measured values. With no arguments all fifteen run;
// numeric arguments select individual criteria (the ctest registration runs
// one per test so failures are named).
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "modphi/acceptance.hpp"

int main(int argc, char** argv) {
    modphi::acceptance::SuiteOptions opt;
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--fast") == 0)
            opt.fast = true;
        else
            ids.push_back(std::stoi(argv[i]));
    }
    if (ids.empty())
        for (int i = 1; i <= 15; ++i) ids.push_back(i);

    int failed = 0;
    for (int id : ids) {
        auto r = modphi::acceptance::run_criterion(id, opt);
        std::printf("[%s] %2d %-42s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds);
        for (const auto& line : r.details) std::printf("%s\n", line.c_str());
        if (!r.passed) ++failed;
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    return failed == 0 ? 0 : 1;
}
