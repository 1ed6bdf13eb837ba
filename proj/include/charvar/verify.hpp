#pragma once

#include "charvar/golden.hpp"
#include "charvar/invariants.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace charvar {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail; // empty on pass, diagnostic on failure
};

bool all_passed(const std::vector<CheckResult>& checks);

// Printed low-genus rows: truncated Betti IE, full IP, IP minus ordinary P.
// The genus window is intersected with the stored rows (2..5); each IE row
// is additionally checked to extend palindromically to the full polynomial.
std::vector<CheckResult> suite_tables(int gmin = 2, int gmax = 5);

// Palindromicity of the Betti intersection E-polynomials for all three
// groups and of the desingularization E-polynomial.
std::vector<CheckResult> suite_palindromy(int gmin = 2, int gmax = 10);

// t^{2 dim} IE_Dol(-1/t, -1/t) == IP for all three groups.
std::vector<CheckResult> suite_purity(int gmin = 2, int gmax = 6);

// Stratification bookkeeping: multiplicity sums, b-coefficient symmetry
// and positivity, the deepest-stratum stalk identity, the blown-up
// deepest-stratum route, the exceptional-fibre identity, and the
// two-route intersection E-polynomial computations on both sides.
std::vector<CheckResult> suite_identities(int gmin = 2, int gmax = 8);

// Closed-form intersection Euler characteristics (throws inside also
// cross-check the q=1, (u,v)=(1,1) and t=-1 specializations agree).
std::vector<CheckResult> suite_euler(int gmin = 2, int gmax = 12);

// Torsion-action split: SL2 minus variant equals PGL2, and PGL2 times the
// Jacobian factor equals GL2.
std::vector<CheckResult> suite_gamma_split(int gmin = 2, int gmax = 10);

// Low-order expansions: the classifying-space series defect at order
// 4g-5, and the four displayed low-order terms of IP minus P (the latter
// holds from genus 6 on; genus below defect_min is skipped).
std::vector<CheckResult> suite_expansion(int taylor_min = 2, int taylor_max = 6,
                                         int defect_min = 6, int defect_max = 10);

// Randomized kernel property checks with a fixed seed: exact division
// round trips, substitution is a ring homomorphism, the palindrome
// predicate, and series/polynomial truncation compatibility.
std::vector<CheckResult> suite_kernel_properties(int cases_per_property = 250,
                                                 unsigned seed = 0x5eed5u);

// Dispatch by suite name {tables, palindromy, purity, identities,
// expansion, all}; "identities" includes the Euler and split suites.
// Explicit bounds override the per-suite defaults. Unknown names yield
// nullopt.
std::optional<std::vector<CheckResult>> run_suite(std::string_view name,
                                                  std::optional<int> gmin,
                                                  std::optional<int> gmax);

} // namespace charvar
