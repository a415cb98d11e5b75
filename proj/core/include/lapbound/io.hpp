#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "lapbound/bounds.hpp"
#include "lapbound/complex.hpp"

namespace lb {

/// A complex read from disk, with its optional partition.
struct LoadedComplex {
    SimplicialComplex complex;
    std::optional<PartiteStructure> partition;
};

/// Accepted formats:
///   {"vertices": [ids...], "facets": [[ids...], ...], "partition": [[ids...], ...]}
///   {"n": N, "edges": [[u, v], ...]}    (vertices are 1..N)
/// "vertices" and "partition" are optional in the first form.
LoadedComplex complex_from_json(const nlohmann::json& j);
LoadedComplex read_complex_file(const std::string& path);

/// Facet-list JSON for a complex (vertices, facets, optional partition).
nlohmann::ordered_json complex_to_json(const SimplicialComplex& x,
                                       const PartiteStructure* partition = nullptr);
void write_complex_file(const std::string& path, const SimplicialComplex& x,
                        const PartiteStructure* partition = nullptr);

/// One JSON Lines record with fields in exactly this order:
/// bound_id, instance_id, r, k, lhs, rhs, slack, tier, holds, witness.
/// lhs/rhs/slack carry 12 significant digits.
nlohmann::ordered_json report_to_json(const BoundReport& rep);
std::string report_to_jsonl(const BoundReport& rep);

/// Rounds to 12 significant digits (the report print precision).
double round_sig12(double v);

}  // namespace lb
