#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lapbound/complex.hpp"
#include "lapbound/families.hpp"
#include "lapbound/spectra.hpp"

namespace lb {

enum class Tier { theorem, conjecture, lemma_gadget };

std::string to_string(Tier tier);

/// One evaluated inequality. slack = rhs - lhs and holds <=> slack >= -tol.
/// Lower bounds (grone_merris_lower) are reported in <=-normal form, i.e.
/// the degree sum is the lhs and the eigenvalue sum the rhs.
struct BoundReport {
    std::string bound_id;
    std::string instance_id;
    int r = 1;
    int k = 1;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    Tier tier = Tier::theorem;
    bool holds = true;
    std::optional<nlohmann::ordered_json> witness;
};

/// Registry metadata for one bound id. The id strings are stable and are
/// the ones accepted by the CLI and emitted in report files.
struct BoundMeta {
    std::string id;
    Tier tier;             // duval_reiner ids upgrade conjecture -> theorem on partite input
    bool graph_only;       // requires dim(X) <= 1 and r == 1
    bool signless;         // LHS spectrum comes from Q instead of L
    bool needs_partition;  // requires an (r+1)-partite structure with dim(X) == r
    bool needs_family;     // hereditary schema: exactly one asserted family
    bool k_is_one;         // lambda_1-only bounds
};

const std::vector<BoundMeta>& bound_registry();
const BoundMeta* find_bound(const std::string& id);

/// Per-instance evaluation state: the complex plus lazily computed spectra
/// and degree profiles shared by all (id, r, k) evaluations.
class EvalContext {
  public:
    EvalContext(const SimplicialComplex& x, std::string instance_id,
                const PartiteStructure* partition = nullptr, Assumptions assumptions = {},
                double tol = 1e-7);

    const SimplicialComplex& complex() const { return x_; }
    const std::string& instance_id() const { return instance_id_; }
    const PartiteStructure* partition() const { return partition_; }
    const Assumptions& assumptions() const { return assumptions_; }
    double tol() const { return tol_; }

    bool is_graph() const { return x_.dim() <= 1; }
    int n() const { return x_.num_vertices(); }
    int num_edges() const { return x_.f(1); }

    /// Spectrum of L+_{r-1} (or Q+_{r-1}); extended by the zero matrix when
    /// r exceeds dim(X) so that edgeless graphs still have L(G) = 0.
    const SpectrumSummary& upper_spectrum(int r, bool signless);
    /// Degree profile at level r-1 (partition-aware when one is attached).
    const DegreeProfile& profile(int r);
    /// Vertex degrees of the 1-skeleton, descending (zeros when edgeless).
    const std::vector<int>& degrees_desc();
    /// Conjugate degree sequence d'_1..d'_n of the 1-skeleton.
    const std::vector<int>& conjugate();

  private:
    const SimplicialComplex& x_;
    std::string instance_id_;
    const PartiteStructure* partition_;
    Assumptions assumptions_;
    double tol_;
    std::map<std::pair<int, bool>, SpectrumSummary> spectra_;
    std::map<int, DegreeProfile> profiles_;
    std::optional<std::vector<int>> degrees_desc_;
    std::optional<std::vector<int>> conjugate_;
};

/// Valid k values for a bound id on this instance ("paper-valid" range);
/// empty (hi < lo) when the id does not apply at this r at all.
struct KRange {
    int lo = 1;
    int hi = 0;
    bool contains(int k) const { return k >= lo && k <= hi; }
    bool empty() const { return hi < lo; }
};

KRange paper_valid_k_range(const BoundMeta& meta, EvalContext& ctx, int r);

/// Evaluates one registry bound. Throws inapplicable_bound_error when the
/// id's applicability predicate fails (this is not an inequality failure)
/// and family_assumption_error when an asserted family flunks its check.
BoundReport evaluate_bound(const std::string& id, EvalContext& ctx, int r, int k,
                           bool want_witness = true);

/// Convenience wrapper building a one-off context.
BoundReport evaluate_bound(const std::string& id, const SimplicialComplex& x, int r, int k,
                           const Assumptions& assumptions = {},
                           const PartiteStructure* partition = nullptr, double tol = 1e-7);

}  // namespace lb
