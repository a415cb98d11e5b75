#include "lapbound/operators.hpp"

#include <algorithm>

#include "lapbound/errors.hpp"

namespace lb {

std::string to_string(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::boundary: return "boundary";
        case OperatorKind::signless_boundary: return "signless_boundary";
        case OperatorKind::upper_laplacian: return "upper_laplacian";
        case OperatorKind::lower_laplacian: return "lower_laplacian";
        case OperatorKind::signless_upper: return "signless_upper";
        case OperatorKind::signless_lower: return "signless_lower";
        case OperatorKind::gadget_LA: return "gadget_LA";
        case OperatorKind::gadget_Li: return "gadget_Li";
        case OperatorKind::gadget_Lprime: return "gadget_Lprime";
    }
    return "unknown";
}

int incidence_sign(const Face& tau, const Face& sigma) {
    if (tau.size() != sigma.size() + 1)
        throw contract_error("incidence_sign: |tau| != |sigma| + 1");
    if (!std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end()))
        throw contract_error("incidence_sign: sigma not a subset of tau");
    // u = the unique vertex of tau \ sigma; count its predecessors in tau.
    int u = -1;
    size_t j = 0;
    for (size_t i = 0; i < tau.size(); ++i) {
        if (j < sigma.size() && tau[i] == sigma[j]) {
            ++j;
        } else {
            u = static_cast<int>(i);  // position of u within tau
        }
    }
    return (u % 2 == 0) ? 1 : -1;
}

OperatorMatrix boundary_matrix(const SimplicialComplex& x, int r, bool with_signs) {
    if (r < 0 || r > x.dim()) throw contract_error("boundary_matrix: r out of range");
    const auto& rows = x.faces(r - 1);
    const auto& cols = x.faces(r);
    OperatorMatrix b;
    b.kind = with_signs ? OperatorKind::boundary : OperatorKind::signless_boundary;
    b.r = r;
    b.row_dim = r - 1;
    b.col_dim = r;
    b.m = Matrix(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        const Face& tau = cols[j];
        // Drop one vertex at a time; the sign alternates with its position.
        for (size_t drop = 0; drop < tau.size(); ++drop) {
            Face sigma;
            sigma.reserve(tau.size() - 1);
            for (size_t i = 0; i < tau.size(); ++i)
                if (i != drop) sigma.push_back(tau[i]);
            int i = x.face_index(r - 1, sigma);
            if (i < 0) throw internal_consistency_error("boundary_matrix: missing subface (closure broken)");
            b.m(i, j) = with_signs ? ((drop % 2 == 0) ? 1.0 : -1.0) : 1.0;
        }
    }
    return b;
}

namespace {

// Direct combinatorial forms of the four Laplacians, used as the self-check
// route against the boundary-matrix products.
Matrix upper_formula(const SimplicialComplex& x, int r, bool with_signs) {
    const auto& faces = x.faces(r - 1);
    const int n = static_cast<int>(faces.size());
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = x.face_degree(faces[i], r);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Face& tau = faces[i];
            const Face& eta = faces[j];
            Face uni;
            std::set_union(tau.begin(), tau.end(), eta.begin(), eta.end(), std::back_inserter(uni));
            if (static_cast<int>(uni.size()) != r + 1 || !x.has_face(uni)) continue;
            double v = 1.0;
            if (with_signs) {
                Face cap;
                std::set_intersection(tau.begin(), tau.end(), eta.begin(), eta.end(),
                                      std::back_inserter(cap));
                v = -1.0 * incidence_sign(tau, cap) * incidence_sign(eta, cap);
            }
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return m;
}

Matrix lower_formula(const SimplicialComplex& x, int r, bool with_signs) {
    const auto& faces = x.faces(r);
    const int n = static_cast<int>(faces.size());
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = r + 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Face& tau = faces[i];
            const Face& eta = faces[j];
            Face cap;
            std::set_intersection(tau.begin(), tau.end(), eta.begin(), eta.end(),
                                  std::back_inserter(cap));
            if (static_cast<int>(cap.size()) != r) continue;
            double v = with_signs ? 1.0 * incidence_sign(tau, cap) * incidence_sign(eta, cap) : 1.0;
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return m;
}

}  // namespace

OperatorMatrix laplacian(const SimplicialComplex& x, OperatorKind kind, int r) {
    const bool upper = (kind == OperatorKind::upper_laplacian || kind == OperatorKind::signless_upper);
    const bool lower = (kind == OperatorKind::lower_laplacian || kind == OperatorKind::signless_lower);
    if (!upper && !lower) throw contract_error("laplacian: kind is not a Laplacian kind");
    const bool with_signs =
        (kind == OperatorKind::upper_laplacian || kind == OperatorKind::lower_laplacian);
    if (upper && (r < 1 || r > x.dim())) throw contract_error("laplacian: upper kinds need 1 <= r <= dim");
    if (lower && (r < 0 || r > x.dim())) throw contract_error("laplacian: lower kinds need 0 <= r <= dim");

    OperatorMatrix b = boundary_matrix(x, r, with_signs);
    OperatorMatrix out;
    out.kind = kind;
    out.r = r;
    out.row_dim = out.col_dim = upper ? r - 1 : r;
    out.m = upper ? b.m * b.m.transpose() : b.m.transpose() * b.m;

    // All entries are integers, so the product must match the combinatorial
    // formula exactly.
    Matrix direct = upper ? upper_formula(x, r, with_signs) : lower_formula(x, r, with_signs);
    if (out.m.max_abs_diff(direct) != 0.0)
        throw internal_consistency_error("laplacian: product disagrees with combinatorial formula (" +
                                         to_string(kind) + ", r=" + std::to_string(r) + ")");
    return out;
}

}  // namespace lb
