#pragma once

#include "latab/isotopy_graph.hpp"
#include "latab/partition.hpp"

#include <string>
#include <vector>

namespace latab {

struct TheoremChecks {
    bool degree = true;    // a + 2b - p against the breadth-first degree
    bool clique = true;    // clique number in {1,2,4}, cross-checked exactly
    bool triangle = true;  // triangle presence against rc(T) = s(T) witnesses
    bool cube = true;      // cube criterion against cube recognition
    bool orbit = true;     // component size times stabilizer order equals |S|
    bool regular = true;   // all vertices of a component share one degree

    static TheoremChecks none() { return TheoremChecks{false, false, false, false, false, false}; }
};

struct TheoremOptions {
    int max_boxes = 8;
    std::size_t component_cap = kDefaultComponentCap;
    TheoremChecks checks;
    bool squareable_only = false;
    int jobs = 0;
};

struct VerificationFailure {
    std::string check;
    std::string shape;
    std::string tableau;
    std::string detail;
};

struct ShapeOutcome {
    Partition shape;
    bool filtered = false;  // excluded by the squareable_only filter
    bool skipped = false;   // component cap exceeded
    std::string skip_reason;
    std::uint64_t components = 0;
    std::uint64_t fillings = 0;
    long checks_run = 0;
    std::vector<VerificationFailure> failures;
};

struct VerificationSummary {
    std::string range;
    long checks_run = 0;
    std::vector<ShapeOutcome> shapes;
    std::vector<VerificationFailure> failures;  // concatenated in shape order
    std::vector<std::string> skipped;
    bool ok() const { return failures.empty(); }
};

/// Runs the selected structural checks on every filling of every partition
/// with at most max_boxes boxes. Shapes whose components exceed the cap are
/// skipped and reported, never silently dropped.
VerificationSummary verify_theorems(const TheoremOptions& options);

/// All checks for a single already-built component; used by verify_theorems
/// and directly by the catalog checker.
void verify_component(const IsotopyGraph& g, const TheoremChecks& checks, ShapeOutcome& out);

}  // namespace latab
