#include "lapbound/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "lapbound/errors.hpp"
#include "lapbound/io.hpp"
#include "lapbound/operators.hpp"

namespace lb {

namespace {

std::vector<int> resolve_k_values(const std::string& spec, const KRange& valid, int level_size,
                                  bool strict, const std::string& bound_id) {
    std::vector<int> out;
    if (valid.empty()) return out;
    if (spec == "paper-valid") {
        for (int k = valid.lo; k <= valid.hi; ++k) out.push_back(k);
        return out;
    }
    auto dots = spec.find("..");
    if (dots != std::string::npos) {
        // Ranges express "all valid k in this window" and clamp silently.
        int lo = std::stoi(spec.substr(0, dots));
        std::string hi_text = spec.substr(dots + 2);
        int hi = (hi_text == "n") ? level_size : std::stoi(hi_text);
        for (int k = std::max(lo, valid.lo); k <= std::min(hi, valid.hi); ++k) out.push_back(k);
        return out;
    }
    // Explicit lists are precise requests; out-of-range entries are errors
    // under --strict.
    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t next = spec.find(',', pos);
        if (next == std::string::npos) next = spec.size();
        if (next > pos) {
            int k = std::stoi(spec.substr(pos, next - pos));
            if (valid.contains(k)) out.push_back(k);
            else if (strict)
                throw inapplicable_bound_error(bound_id + ": requested k = " + std::to_string(k) +
                                               " outside its valid range");
        }
        pos = next + 1;
    }
    return out;
}

void validate_k_spec(const std::string& spec) {
    if (spec == "paper-valid") return;
    auto dots = spec.find("..");
    try {
        if (dots != std::string::npos) {
            (void)std::stoi(spec.substr(0, dots));
            std::string hi = spec.substr(dots + 2);
            if (hi != "n") (void)std::stoi(hi);
            return;
        }
        size_t pos = 0;
        bool any = false;
        while (pos <= spec.size()) {
            size_t next = spec.find(',', pos);
            if (next == std::string::npos) next = spec.size();
            if (next > pos) {
                (void)std::stoi(spec.substr(pos, next - pos));
                any = true;
            }
            pos = next + 1;
        }
        if (!any) throw malformed_input_error("empty k spec");
    } catch (const malformed_input_error&) {
        throw;
    } catch (const std::exception&) {
        throw malformed_input_error("bad k spec: " + spec);
    }
}

struct InstanceResult {
    bool skipped = false;
    std::string invariant;  // filled when dedup is on
    std::vector<BoundReport> reports;
};

// Evaluates all requested bounds on one instance. Pure; safe to run from
// worker threads.
InstanceResult evaluate_instance(const SuiteConfig& cfg, const std::vector<const BoundMeta*>& metas,
                                 const Instance& inst) {
    InstanceResult res;
    if (cfg.connected_only && !is_connected(inst.complex)) {
        res.skipped = true;
        return res;
    }
    if (cfg.dedup) res.invariant = invariant_key(inst.complex);

    Assumptions merged = cfg.assumptions;
    for (HereditaryFamily fam : inst.assumptions.hereditary)
        if (!merged.has(fam)) merged.hereditary.push_back(fam);
    merged.triangle_free = merged.triangle_free || inst.assumptions.triangle_free;
    if (inst.assumptions.no_path_t > 0) merged.no_path_t = inst.assumptions.no_path_t;
    if (inst.assumptions.no_long_cycle_t > 0) merged.no_long_cycle_t = inst.assumptions.no_long_cycle_t;

    EvalContext ctx(inst.complex, inst.id, inst.partition ? &*inst.partition : nullptr, merged,
                    cfg.tol);
    // Witness construction is skipped on aggregate-only runs (no output
    // files, no leaderboard); violations are re-evaluated with the witness.
    const bool want_witness =
        cfg.out_reports.has_value() || cfg.out_violations.has_value() || cfg.leaderboard_size > 0;
    const int dim = inst.complex.dim();
    for (const BoundMeta* meta : metas) {
        const int r_first = meta->graph_only ? 1 : std::max(1, cfg.r_lo);
        const int r_last = meta->graph_only ? 1 : (cfg.r_hi < 0 ? std::max(dim, 0) : cfg.r_hi);
        for (int r = r_first; r <= r_last; ++r) {
            KRange valid = paper_valid_k_range(*meta, ctx, r);
            if (valid.empty()) {
                if (cfg.strict)
                    throw inapplicable_bound_error(meta->id + " does not apply to " + inst.id +
                                                   " at r=" + std::to_string(r));
                continue;
            }
            std::vector<int> ks =
                resolve_k_values(cfg.k_spec, valid, inst.complex.f(r - 1), cfg.strict, meta->id);
            for (int k : ks) {
                try {
                    BoundReport rep = evaluate_bound(meta->id, ctx, r, k, want_witness);
                    if (!rep.holds && !want_witness) rep = evaluate_bound(meta->id, ctx, r, k, true);
                    res.reports.push_back(std::move(rep));
                } catch (const inapplicable_bound_error&) {
                    if (cfg.strict) throw;
                } catch (const family_assumption_error&) {
                    if (cfg.strict) throw;
                }
            }
        }
    }
    return res;
}

}  // namespace

namespace {

std::vector<const BoundMeta*> resolve_bounds(const std::vector<std::string>& ids,
                                             const Assumptions& assumptions) {
    std::vector<const BoundMeta*> metas;
    if (ids.empty()) {
        // "all-applicable": family schemas join only when a family is asserted.
        const bool have_family = !assumptions.hereditary.empty();
        for (const BoundMeta& m : bound_registry())
            if (!m.needs_family || have_family) metas.push_back(&m);
    } else {
        for (const std::string& id : ids) {
            const BoundMeta* m = find_bound(id);
            if (m == nullptr) throw malformed_input_error("unknown bound id: " + id);
            metas.push_back(m);
        }
    }
    return metas;
}

}  // namespace

std::vector<BoundReport> evaluate_all(const SuiteConfig& cfg, const Instance& inst) {
    validate_k_spec(cfg.k_spec);
    SuiteConfig local = cfg;
    local.connected_only = false;
    local.dedup = false;
    return evaluate_instance(local, resolve_bounds(cfg.bounds, cfg.assumptions), inst).reports;
}

RunSummary run_suite(const SuiteConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    validate_k_spec(cfg.k_spec);
    InstanceStream stream = InstanceStream::parse(cfg.stream);
    std::vector<const BoundMeta*> metas = resolve_bounds(cfg.bounds, cfg.assumptions);

    RunSummary summary;
    std::ofstream reports_out, violations_out;
    if (cfg.out_reports) {
        reports_out.open(*cfg.out_reports);
        if (!reports_out) throw malformed_input_error("cannot write " + *cfg.out_reports);
    }
    if (cfg.out_violations) {
        violations_out.open(*cfg.out_violations);
        if (!violations_out) throw malformed_input_error("cannot write " + *cfg.out_violations);
    }

    std::set<std::string> seen_invariants;

    auto aggregate = [&](InstanceResult& res) {
        if (res.skipped) return;
        if (cfg.dedup && !seen_invariants.insert(res.invariant).second) return;
        ++summary.instances;
        std::set<std::string> ids_this_instance;
        for (BoundReport& rep : res.reports) {
            ++summary.reports;
            BoundAggregate& agg = summary.per_bound[rep.bound_id];
            ++agg.reports;
            if (ids_this_instance.insert(rep.bound_id).second) ++agg.instances;
            if (!agg.any || rep.slack < agg.min_slack) {
                agg.any = true;
                agg.min_slack = rep.slack;
                agg.argmin_instance = rep.instance_id;
                agg.argmin_r = rep.r;
                agg.argmin_k = rep.k;
            }
            if (!rep.holds) {
                ++agg.violations;
                if (rep.tier == Tier::conjecture) ++summary.conjecture_violations;
                else ++summary.theorem_violations;
                summary.violations.push_back(rep);
                if (violations_out.is_open()) violations_out << report_to_jsonl(rep) << "\n";
            }
            if (cfg.leaderboard_size > 0) {
                auto& board = summary.leaderboards[rep.bound_id];
                auto pos = std::upper_bound(
                    board.begin(), board.end(), rep.slack,
                    [](double s, const BoundReport& b) { return s < b.slack; });
                if (pos != board.end() ||
                    static_cast<int>(board.size()) < cfg.leaderboard_size)
                    board.insert(pos, rep);
                if (static_cast<int>(board.size()) > cfg.leaderboard_size) board.pop_back();
            }
            if (reports_out.is_open()) reports_out << report_to_jsonl(rep) << "\n";
        }
    };

    const uint64_t total = stream.size();
    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (uint64_t i = 0; i < total; ++i) {
            Instance inst = stream.at(i);
            InstanceResult res = evaluate_instance(cfg, metas, inst);
            aggregate(res);
        }
    } else {
        // Fixed-size batches; workers fill slots, aggregation stays in index
        // order so outputs are independent of the parallelism degree.
        const uint64_t batch = 512;
        for (uint64_t lo = 0; lo < total; lo += batch) {
            const uint64_t hi = std::min(total, lo + batch);
            std::vector<InstanceResult> results(hi - lo);
            std::vector<std::thread> workers;
            std::atomic<uint64_t> cursor{0};
            for (int t = 0; t < jobs; ++t)
                workers.emplace_back([&]() {
                    while (true) {
                        uint64_t j = cursor.fetch_add(1);
                        if (j >= hi - lo) break;
                        Instance inst = stream.at(lo + j);
                        results[j] = evaluate_instance(cfg, metas, inst);
                    }
                });
            for (auto& w : workers) w.join();
            for (uint64_t j = 0; j < hi - lo; ++j) aggregate(results[j]);
        }
    }

    summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cfg.out_csv) {
        std::ofstream csv(*cfg.out_csv);
        if (!csv) throw malformed_input_error("cannot write " + *cfg.out_csv);
        csv << summary_csv(summary);
    }
    return summary;
}

std::vector<BoundReport> min_slack_search(const SuiteConfig& cfg, const std::string& id,
                                          bool connected_only) {
    SuiteConfig local = cfg;
    local.bounds = {id};
    local.connected_only = connected_only;
    if (local.leaderboard_size <= 0) local.leaderboard_size = 10;
    RunSummary summary = run_suite(local);
    auto it = summary.leaderboards.find(id);
    return it == summary.leaderboards.end() ? std::vector<BoundReport>{} : it->second;
}

int exit_code(const RunSummary& summary) {
    if (summary.theorem_violations > 0) return 1;
    if (summary.conjecture_violations > 0) return 3;
    return 0;
}

std::string summary_csv(const RunSummary& summary) {
    std::ostringstream out;
    out << "bound_id,instances,min_slack,argmin_instance,violations\n";
    for (const auto& [id, agg] : summary.per_bound) {
        char slack[40] = "";
        if (agg.any) std::snprintf(slack, sizeof slack, "%.12g", agg.min_slack);
        out << id << "," << agg.instances << "," << slack << ",\"" << agg.argmin_instance << "\","
            << agg.violations << "\n";
    }
    return out.str();
}

namespace {

double multiset_residual(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end(), std::greater<double>());
    std::sort(b.begin(), b.end(), std::greater<double>());
    const size_t n = std::max(a.size(), b.size());
    a.resize(n, 0.0);
    b.resize(n, 0.0);
    double res = 0.0;
    for (size_t i = 0; i < n; ++i) res = std::max(res, std::abs(a[i] - b[i]));
    return res;
}

SpectrumSummary graph_laplacian_spectrum(const SimplicialComplex& g) {
    if (g.dim() < 1) return SpectrumSummary(std::vector<double>(g.num_vertices(), 0.0), 1e-9);
    return sym_spectrum(laplacian(g, OperatorKind::upper_laplacian, 1));
}

}  // namespace

std::vector<IdentityReport> check_identities(const Instance& inst, double tol) {
    std::vector<IdentityReport> out;
    const SimplicialComplex& x = inst.complex;
    auto push = [&](const std::string& name, double residual) {
        out.push_back({name, residual, tol, residual <= tol});
    };

    // Nonzero spectra of L+_{r-1} and L-_r agree; same for Q.
    for (int r = 1; r <= x.dim(); ++r) {
        SpectrumSummary up = sym_spectrum(laplacian(x, OperatorKind::upper_laplacian, r));
        SpectrumSummary lo = sym_spectrum(laplacian(x, OperatorKind::lower_laplacian, r));
        push("lminus_nonzero_r" + std::to_string(r),
             multiset_residual(nonzero_spectrum(up), nonzero_spectrum(lo)));
        SpectrumSummary qup = sym_spectrum(laplacian(x, OperatorKind::signless_upper, r));
        SpectrumSummary qlo = sym_spectrum(laplacian(x, OperatorKind::signless_lower, r));
        push("q_nonzero_r" + std::to_string(r),
             multiset_residual(nonzero_spectrum(qup), nonzero_spectrum(qlo)));
    }

    const bool graph = x.dim() <= 1;
    if (graph && x.num_vertices() >= 2) {
        push("complement_pair", complement_eigen_check(x));

        // Component union.
        std::vector<double> merged;
        for (const auto& comp : connected_components(x)) {
            SimplicialComplex sub = induced_subcomplex(x, comp);
            SpectrumSummary part = graph_laplacian_spectrum(sub);
            merged.insert(merged.end(), part.eigenvalues().begin(), part.eigenvalues().end());
        }
        std::vector<double> whole = graph_laplacian_spectrum(x).eigenvalues();
        push("component_union", multiset_residual(merged, whole));
    }

    // Coning shift: nonzero spectrum of L+_{r-1+s}(X * sigma) equals the
    // full L-_r(X) spectrum shifted by s (r = dim X).
    if (x.dim() >= 0 && x.num_vertices() >= 1) {
        const int r = x.dim();
        int base = 0;
        for (int v : x.labels()) base = std::max(base, v);
        SpectrumSummary lower = sym_spectrum(laplacian(x, OperatorKind::lower_laplacian, r));
        for (int s = 1; s <= 3; ++s) {
            std::vector<int> sigma;
            for (int i = 1; i <= s; ++i) sigma.push_back(base + i);
            SimplicialComplex y = join_cone(x, sigma);
            SpectrumSummary up = sym_spectrum(laplacian(y, OperatorKind::upper_laplacian, r + s));
            std::vector<double> shifted;
            for (double ev : lower.eigenvalues()) shifted.push_back(ev + s);
            push("coning_shift_s" + std::to_string(s),
                 multiset_residual(nonzero_spectrum(up), shifted));
        }
    }

    // Cone equality: sum_{i<=k} lambda_i(L+_{r-1}(G * sigma)) =
    // f_r(Y) + eps_k(G) + (r-1)k for graphs, |sigma| = r-1.
    if (graph && x.f(1) >= 1) {
        const int n = x.num_vertices();
        const int kmax = std::min(n, x.f(1));
        int base = 0;
        for (int v : x.labels()) base = std::max(base, v);
        SpectrumSummary gspec = graph_laplacian_spectrum(x);
        for (int s = 1; s <= 3; ++s) {
            const int r = s + 1;
            std::vector<int> sigma;
            for (int i = 1; i <= s; ++i) sigma.push_back(base + i);
            SimplicialComplex y = join_cone(x, sigma);
            SpectrumSummary up = sym_spectrum(laplacian(y, OperatorKind::upper_laplacian, r));
            double residual = 0.0;
            for (int k = 1; k <= kmax; ++k) {
                double lhs = up.top_k_sum(k);
                double rhs = y.f(r) + (gspec.top_k_sum(k) - x.f(1)) + (r - 1.0) * k;
                residual = std::max(residual, std::abs(lhs - rhs));
            }
            push("cone_equality_r" + std::to_string(r), residual);
        }
    }
    return out;
}

}  // namespace lb
