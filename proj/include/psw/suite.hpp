#ifndef PSW_SUITE_HPP
#define PSW_SUITE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace psw {

struct SuiteOptions {
    int height = 20;       // tallest family member exercised
    std::uint64_t seed = 7;
    int jobs = 1;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// The paper-checks battery: ten independent criteria, each pass/fail with a
// short detail line. Used by both the acceptance tests and `psw suite`.
std::vector<CriterionResult> run_paper_checks(const SuiteOptions& opt,
                                              std::ostream* progress = nullptr);

} // namespace psw

#endif
