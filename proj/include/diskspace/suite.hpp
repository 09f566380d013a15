#pragma once

#include <string>
#include <vector>

#include "diskspace/disk_function.hpp"
#include "diskspace/norms.hpp"
#include "diskspace/quadrature.hpp"
#include "diskspace/report.hpp"

namespace diskspace {

struct SuiteOptions {
    QuadratureConfig quad;
    SupSearchConfig search;
};

// Desk-scale battery functions shared by the verification suite, the CLI
// and the tests.
namespace battery {
DiskFunction identity_fn();
DiskFunction square_fn();
DiskFunction constant_fn(Complex c);
// Partial sum of -log(1 - rho z) = sum rho^n z^n / n.
DiskFunction log_series(double rho, int terms);
// Partial sum of -log(1 - z); resolvable out to roughly 1 - 1/terms.
DiskFunction truncated_log(int terms);
DiskFunction re_z();
DiskFunction re_z3();
DiskFunction z_plus_half_conj();
DiskFunction abs2_numeric();
DiskFunction abs4_numeric();
} // namespace battery

// Named checks of the verification suite; every theorem and lemma in scope
// has one.
std::vector<std::string> suite_check_names();

// Runs one named check; unknown names raise MalformedSpec.
std::vector<CheckReport> run_suite_check(const std::string& name,
                                         const SuiteOptions& opts);

// Runs every check (checks are independent; they may run in parallel) and
// merges the reports in name order.
std::vector<CheckReport> run_full_suite(const SuiteOptions& opts);

} // namespace diskspace
