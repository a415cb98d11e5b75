#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lapbound/complex.hpp"

namespace lb {

/// Hereditary graph families with a known edge-count function, as used by
/// the hereditary bound schema.
enum class HereditaryFamily {
    forest,
    max_degree,  // self-certifying: Delta is read off the graph
    planar,      // assertion only; planarity testing is out of scope
    square_free,
    girth5,
    no_path,        // no path with t edges (t from Assumptions)
    no_long_cycle,  // no cycle with more than t edges
};

std::string to_string(HereditaryFamily fam);
std::optional<HereditaryFamily> hereditary_family_from_string(const std::string& name);

/// Caller-asserted family memberships. Flags are verified by brute force
/// for n <= 12 and trusted beyond (family recognition is peripheral here).
struct Assumptions {
    std::vector<HereditaryFamily> hereditary;  // asserted hereditary families
    int no_path_t = -1;
    int no_long_cycle_t = -1;
    bool triangle_free = false;

    bool has(HereditaryFamily fam) const;
};

/// Parses "forest", "girth5", "no_path=4", "triangle_free", ... into flags.
Assumptions parse_assumptions(const std::vector<std::string>& names);

// Brute-force family checks over the 1-skeleton (graphs only).
bool is_forest(const SimplicialComplex& g);
bool is_triangle_free(const SimplicialComplex& g);
bool is_square_free(const SimplicialComplex& g);   // no 4-cycles
bool has_girth_at_least_5(const SimplicialComplex& g);
int max_vertex_degree(const SimplicialComplex& g);
/// Longest path, counted in edges. Exponential; requires n <= 12.
int longest_path_edges(const SimplicialComplex& g);
/// Longest cycle, counted in edges (0 when acyclic). Requires n <= 12.
int longest_cycle_edges(const SimplicialComplex& g);

/// Verifies an asserted family on a graph: checked for n <= 12 (except
/// planar, which is always taken on trust), trusted for larger graphs.
/// Throws family_assumption_error when a check fails.
void verify_family(const SimplicialComplex& g, HereditaryFamily fam, const Assumptions& a);

}  // namespace lb
