#include <iostream>

#include "verma/acceptance.hpp"

int main()
{
    using namespace verma;
    AcceptanceConfig cfg;
    auto criteria = all_criteria();
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        CriterionResult r = run_criterion(criteria[i], static_cast<int>(i + 1), cfg);
        std::cout << format_line(r) << std::endl;
        failed += !r.pass;
    }
    return failed ? 1 : 0;
}
