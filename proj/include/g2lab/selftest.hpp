#ifndef G2LAB_SELFTEST_HPP
#define G2LAB_SELFTEST_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace g2lab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail; // first failure, or a short summary of what ran
    double seconds = 0.0;
};

/// Run the full acceptance suite, printing one PASS/FAIL line per criterion.
std::vector<CriterionResult> run_acceptance(std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace g2lab

#endif
