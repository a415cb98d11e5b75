#pragma once

#include <string>

#include "lapbound/complex.hpp"
#include "lapbound/matrix.hpp"

namespace lb {

enum class OperatorKind {
    boundary,
    signless_boundary,
    upper_laplacian,   // L+_{r-1} = B_r B_r^T, acting on X(r-1)
    lower_laplacian,   // L-_r = B_r^T B_r, acting on X(r)
    signless_upper,    // Q+_{r-1} = N_r N_r^T
    signless_lower,    // Q-_r = N_r^T N_r
    gadget_LA,
    gadget_Li,
    gadget_Lprime,
};

std::string to_string(OperatorKind kind);

/// A dense operator tagged with its kind and dimension parameter. Row and
/// column order always equal the face order of the owning complex: rows are
/// X(row_dim) and columns X(col_dim), both lexicographically sorted, so the
/// index maps are exactly SimplicialComplex::face_index.
struct OperatorMatrix {
    OperatorKind kind;
    int r = 0;        // dimension parameter of the construction
    int row_dim = 0;  // faces indexing rows
    int col_dim = 0;  // faces indexing columns
    Matrix m;
};

/// Incidence sign (tau:sigma) = (-1)^|{v in tau : v < u}| where u is the
/// unique vertex of tau minus sigma. Requires sigma a subset of tau with
/// |tau| = |sigma| + 1; vertices are internal indices.
int incidence_sign(const Face& tau, const Face& sigma);

/// B_r (signed) or N_r (unsigned): rows X(r-1), columns X(r). 0 <= r <= dim.
OperatorMatrix boundary_matrix(const SimplicialComplex& x, int r, bool with_signs = true);

/// Laplacian-type operators as matrix products, self-checked entrywise
/// against the direct combinatorial formula (the two constructions are
/// independent routes; a mismatch raises internal_consistency_error).
/// Upper kinds need 1 <= r <= dim (matrix on X(r-1)); lower kinds need
/// 0 <= r <= dim (matrix on X(r)).
OperatorMatrix laplacian(const SimplicialComplex& x, OperatorKind kind, int r);

}  // namespace lb
