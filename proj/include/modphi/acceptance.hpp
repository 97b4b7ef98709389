#ifndef MODPHI_ACCEPTANCE_HPP
#define MODPHI_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace modphi::acceptance {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    double seconds;
    std::vector<std::string> details;
};

struct SuiteOptions {
    bool fast = false; // reduced Monte Carlo trial counts, tolerances doubled
    bool parallel = true;
    std::uint64_t seed = 20240901;
};

// ids 1..15; throws validation_error on unknown id
CriterionResult run_criterion(int id, const SuiteOptions& opt);
std::vector<CriterionResult> run_all(const SuiteOptions& opt);

} // namespace modphi::acceptance

#endif
