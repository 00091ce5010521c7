#pragma once

// Verification-suite orchestration shared by the CLI and the test binaries.

#include <cstdint>

#include "aqg/algebra.hpp"
#include "aqg/report.hpp"

namespace aqg {

// Suites: "axioms", "lemmas", "gns", "generator", "compact", "all".
// The generator suite uses `seed` for its random representations and
// `n_random` of them.
Report run_suite(const QuantumGroup& q, const std::string& suite, double tol,
                 std::uint64_t seed = 1, int n_random = 3);

// Derived-data summary lines for the CLI report.
struct DerivedSummary {
    Covector haar;
    Element delta_elt;
    Complex mu;
    bool tracial = false;
    double gram_min_eig = 0.0;
    std::vector<std::pair<Eigen::Index, double>> qdim_rows;  // (n_alpha, d_alpha)
};
DerivedSummary derived_summary(const QuantumGroup& q);

}  // namespace aqg
