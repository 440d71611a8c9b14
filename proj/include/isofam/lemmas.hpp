#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace isofam {

/// Outcome of one exhaustive check at one scope (a value of d, a table, ...).
struct CheckResult {
    std::string name;
    std::string scope;
    std::size_t violations = 0;
    std::vector<std::string> samples;  // first few violation messages

    bool passed() const noexcept { return violations == 0; }
    /// "name: PASS, scope, 0 violations"
    std::string line() const;
};

struct SuiteOptions {
    int d_max = 5;
    int roundtrip_functions = 100;  // random integer functions per d
    int roundtrip_max_d = 4;
    int induction_max_d = 3;        // constructive generation check bound
    std::uint64_t seed = 20170213;
    unsigned workers = 1;
};

/// Structural checks on every member of F(V) for one d.
std::vector<CheckResult> check_family(int d);

/// Phi, tilde V and reachability checks for one d.
std::vector<CheckResult> check_phi(int d);

/// Determinant certificate and Smith form cross-check for one d.
CheckResult check_characteristic_basis(int d, bool with_smith);

/// decompose followed by recompose on random functions with coefficients in [-5, 5].
CheckResult check_decomposition_roundtrip(int d, int functions, std::uint64_t seed);

/// For every x in tilde V with N(x) >= 1, finds x' and j with x + x' = e_j,
/// N(x') = N(x) - 1 and psi_x + psi_x' generated by preimages of the child
/// family.
CheckResult check_induction_step(int d);

/// Kostka agreement, unique bijections, and cx normalization for m = 3, 4, 5.
std::vector<CheckResult> check_symmetric();

/// verify_table on every stored table, plus cx and printed-sum cross-checks.
std::vector<CheckResult> check_exceptional();

/// Everything above for d = 0..d_max, in a fixed order regardless of workers.
std::vector<CheckResult> run_suite(const SuiteOptions& options);

} // namespace isofam
