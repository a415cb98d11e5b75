#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lapbound/bounds.hpp"
#include "lapbound/generators.hpp"

namespace lb {

/// Configuration of one suite run. k_spec is "paper-valid" (each id's own
/// range), "A..B" (B may be the literal n, meaning f_{r-1} of the operator
/// level), or an explicit comma list.
struct SuiteConfig {
    std::string stream;                // instance stream descriptor
    std::vector<std::string> bounds;   // empty = every applicable registry id
    std::string k_spec = "paper-valid";
    int r_lo = 1;
    int r_hi = -1;                     // -1: all valid r
    double tol = 1e-7;
    int jobs = 1;
    bool strict = false;               // inapplicable combinations become errors
    bool connected_only = false;
    bool dedup = false;
    int leaderboard_size = 10;
    Assumptions assumptions;
    std::optional<std::string> out_reports;     // JSON Lines, one BoundReport per line
    std::optional<std::string> out_violations;  // JSON Lines, violations only
    std::optional<std::string> out_csv;         // per-bound summary table
};

/// Per-bound aggregate for the summary CSV.
struct BoundAggregate {
    uint64_t instances = 0;  // instances contributing at least one report
    uint64_t reports = 0;
    double min_slack = 0.0;
    std::string argmin_instance;
    int argmin_r = 0, argmin_k = 0;
    uint64_t violations = 0;
    bool any = false;
};

struct RunSummary {
    uint64_t instances = 0;  // instances evaluated after filters
    uint64_t reports = 0;
    uint64_t theorem_violations = 0;
    uint64_t conjecture_violations = 0;
    std::vector<BoundReport> violations;  // with witnesses
    std::map<std::string, BoundAggregate> per_bound;
    std::map<std::string, std::vector<BoundReport>> leaderboards;  // ascending slack
    double wall_seconds = 0.0;
};

/// Evaluates every requested (instance, id, r, k) tuple. Theorem-tier
/// violations are recorded and the run continues; aggregation order is the
/// instance index order regardless of the parallelism degree, so report
/// files are byte-identical across runs and across --jobs values.
RunSummary run_suite(const SuiteConfig& cfg);

/// Smallest-slack leaderboard for one bound id (the counterexample-search
/// and near-equality study entry point).
std::vector<BoundReport> min_slack_search(const SuiteConfig& cfg, const std::string& id,
                                          bool connected_only);

/// All reports for one instance under cfg's bounds/k/r specs (no stream,
/// no filters); the single-file `check` path.
std::vector<BoundReport> evaluate_all(const SuiteConfig& cfg, const Instance& inst);

/// 0 clean; 1 theorem-tier violation; 3 conjecture-tier violation only.
/// (2 is reserved for usage/config errors, mapped by the CLI.)
int exit_code(const RunSummary& summary);

/// CSV rows: bound_id, instances, min_slack, argmin_instance, violations.
std::string summary_csv(const RunSummary& summary);

struct IdentityReport {
    std::string name;
    double residual = 0.0;
    double tol = 1e-7;
    bool ok = true;
};

/// Residuals of the classical spectral identities on one instance:
/// component union, complement pair, L+/L- and Q+/Q- nonzero spectra,
/// coning shift, and the cone equality for eps_k. Graph-only identities are
/// skipped on higher-dimensional complexes and vice versa.
std::vector<IdentityReport> check_identities(const Instance& inst, double tol = 1e-7);

}  // namespace lb
