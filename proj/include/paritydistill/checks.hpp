#pragma once

#include <string>
#include <vector>

// Verification suites: per-module invariant checks plus the acceptance
// criteria. Shared by the `verify` CLI subcommand and the acceptance test
// binary so that both report the same table.
namespace paritydistill::checks {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<CheckResult> fock_invariants();
std::vector<CheckResult> elements_invariants();
std::vector<CheckResult> channels_invariants();
std::vector<CheckResult> detector_invariants();
std::vector<CheckResult> protocol_invariants();
std::vector<CheckResult> po_equiv_invariants();
std::vector<CheckResult> oracle_invariants();

std::vector<CheckResult> run_invariant_suites();

/// The acceptance criteria. cli_path, when non-empty, points at the CLI
/// binary and enables the subprocess byte-determinism check; the in-process
/// determinism check always runs.
std::vector<CheckResult> run_acceptance_criteria(const std::string& cli_path = "");

std::vector<CheckResult> run_all(const std::string& cli_path = "");

}  // namespace paritydistill::checks
