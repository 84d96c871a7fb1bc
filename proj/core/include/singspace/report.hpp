#pragma once

#include <optional>
#include <string>

#include "singspace/document.hpp"

namespace singspace {

// Outcome of one CLI command: a machine-readable JSON report, a
// human-readable summary, and the exit status (0 success/all-pass,
// 1 verification failure). Input and precondition errors are thrown as
// Error instead and mapped to 2 and 3 by the front end.
struct RunResult {
    std::string json;
    std::string human;
    int exit_code;
};

// Overrides carried from command-line flags into a run.
struct RunOverrides {
    std::optional<FieldSpec> field;
    std::optional<DegreeWindow> window;
    std::optional<long long> g_tilde;
};

// Hilbert data of S/I over the window: per-degree dimensions, the
// interpolated polynomial, and the curve invariants d and p_a.
RunResult run_hilbert(const InputDocument& doc, const RunOverrides& overrides);

// Dimension and canonical basis of the singular space at one degree.
RunResult run_wspace(const InputDocument& doc, int degree, const RunOverrides& overrides);

// The verification suite: nesting, lci comparison, the codimension
// formula, the plane-curve theorem (n=2 only), and optionally a
// cross-check of all dimensions against the other arithmetic backend.
RunResult run_verify(const InputDocument& doc, const RunOverrides& overrides, bool crosscheck);

// Closed-form beta value with optional brute-force comparison.
RunResult run_beta(const FieldSpec& field, int n, int b, int d, long long l,
                   const std::optional<std::string>& brute_expr);

// Exit status for an error escaping a run, per the CLI contract.
int exit_code_for(Errc code);

}  // namespace singspace
