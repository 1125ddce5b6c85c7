// Acceptance battery: one criterion per line, every one must pass. The same
// checks back `psw suite paper-checks`.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "psw/suite.hpp"

TEST_CASE("paper-checks battery") {
    psw::SuiteOptions opt;
    opt.height = 20;
    opt.seed = 7;
    auto results = psw::run_paper_checks(opt, &std::cout);
    REQUIRE(results.size() == 10);
    for (const auto& r : results) {
        CAPTURE(r.id);
        CAPTURE(r.name);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
}
