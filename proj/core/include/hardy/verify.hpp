#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hardy::verify {

// fast trims the long n-sweeps; full runs every criterion at its stated
// range. Both levels execute all twelve criteria.
enum class Level { fast, full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;  // achieved values, so every tolerance is auditable
};

std::vector<CriterionResult> run_acceptance(Level level);

bool all_passed(const std::vector<CriterionResult>& results);

void print_table(const std::vector<CriterionResult>& results, std::ostream& os);

} // namespace hardy::verify
