#include "latab/verify.hpp"

#include <doctest.h>

using namespace latab;

TEST_CASE("verify-theorems is clean below four boxes") {
    TheoremOptions opt;
    opt.max_boxes = 3;
    VerificationSummary s = verify_theorems(opt);
    CHECK(s.ok());
    CHECK(s.skipped.empty());
    CHECK(s.checks_run > 0);
}

TEST_CASE("the 2x2 square is the only offender up to six boxes") {
    TheoremOptions opt;
    opt.max_boxes = 6;
    VerificationSummary s = verify_theorems(opt);
    CHECK_FALSE(s.ok());
    for (const VerificationFailure& f : s.failures) {
        CHECK(f.shape == "2,2");
        CHECK((f.check == "degree-formula" || f.check == "cube-criterion"));
    }
    // Two fillings, each failing the degree formula and the cube criterion.
    CHECK(s.failures.size() == 4);
}

TEST_CASE("all checks except degree and cube are clean up to six boxes") {
    TheoremOptions opt;
    opt.max_boxes = 6;
    opt.checks.degree = false;
    opt.checks.cube = false;
    VerificationSummary s = verify_theorems(opt);
    CHECK(s.ok());
}

TEST_CASE("squareable-only filter") {
    TheoremOptions opt;
    opt.max_boxes = 6;
    opt.squareable_only = true;
    opt.checks = TheoremChecks::none();
    opt.checks.regular = true;
    VerificationSummary s = verify_theorems(opt);
    bool saw_filtered = false;
    for (const ShapeOutcome& out : s.shapes) {
        if (out.filtered) saw_filtered = true;
        if (out.shape == Partition({3, 3, 3})) CHECK(out.filtered);
    }
    CHECK(saw_filtered);
    CHECK(s.ok());
}

TEST_CASE("cap exceedances are reported as skips, not failures") {
    TheoremOptions opt;
    opt.max_boxes = 4;
    opt.component_cap = 8;  // forces (4) and (4,4)-sized orbits over the cap
    VerificationSummary s = verify_theorems(opt);
    CHECK_FALSE(s.skipped.empty());
    for (const std::string& reason : s.skipped) CHECK(reason.find("cap") != std::string::npos);
}

TEST_CASE("results are deterministic across thread counts") {
    TheoremOptions one;
    one.max_boxes = 5;
    one.jobs = 1;
    TheoremOptions four = one;
    four.jobs = 4;
    VerificationSummary a = verify_theorems(one);
    VerificationSummary b = verify_theorems(four);
    CHECK(a.checks_run == b.checks_run);
    REQUIRE(a.failures.size() == b.failures.size());
    for (std::size_t i = 0; i < a.failures.size(); ++i) {
        CHECK(a.failures[i].check == b.failures[i].check);
        CHECK(a.failures[i].shape == b.failures[i].shape);
        CHECK(a.failures[i].tableau == b.failures[i].tableau);
    }
}
