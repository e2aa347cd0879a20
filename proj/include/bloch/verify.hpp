#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bloch {

struct check_result {
    std::string name;
    bool pass;
    std::string detail;
};

// property suites: "invariants", "switching", "synthesis", "appendix", or "all";
// seed drives every randomized grid so runs are reproducible
std::vector<check_result> run_suite(const std::string& suite, uint64_t seed);

bool all_passed(const std::vector<check_result>& checks);

}
