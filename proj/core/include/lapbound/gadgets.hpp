#pragma once

#include <cstdint>
#include <vector>

#include "lapbound/complex.hpp"
#include "lapbound/operators.hpp"

namespace lb {

/// Exact rational with small components. All gadget entries are ratios of
/// r-degrees, so int64 with a gcd-normalized representation is plenty; the
/// dual-route identity checks compare these exactly instead of floats.
struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;
    Fraction(long long n);  // NOLINT(google-explicit-constructor)
    Fraction(long long n, long long d);

    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    bool operator==(const Fraction& o) const = default;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// A gadget operator carried in both exact and floating form. The exact
/// entries let identity checks be literally entrywise exact.
struct GadgetMatrix {
    OperatorMatrix op;                     // doubles, for eigenvalue work
    std::vector<std::vector<Fraction>> q;  // same entries, exact
};

/// L_A of the degree-bound proof: an f_r x f_r matrix for a set A of
/// (r-1)-faces no two of which share an r-face. Diagonal is 1 on r-faces
/// containing some sigma in A; off-diagonal entries are the sign products
/// where tau cap eta lies in A. Its nonzero spectrum is exactly the positive
/// r-degrees of A's members.
OperatorMatrix gadget_LA(const SimplicialComplex& x, int r, const std::vector<Face>& a);

/// Single-face special case of gadget_LA; self-checks that the unique
/// nonzero eigenvalue equals deg^{(r)}(sigma).
OperatorMatrix gadget_Li(const SimplicialComplex& x, int r, const Face& sigma);

/// L' = L-_r - sum over the top (r+1)k faces of (1 - d/d_i) L_i, where d is
/// the (r+1)k-th largest r-degree. Built from the weighted entrywise form
/// (weights w(sigma) = min{d/deg(sigma), 1}) and self-checked exactly
/// against the subtraction route; also verifies lambda_1(L') <= (r+1)d.
GadgetMatrix gadget_Lprime(const SimplicialComplex& x, int r, int k, double tol = 1e-7);

/// Reconstruction check: L-_r == L' + sum (1 - d/d_i) L_i, evaluated in
/// exact rational arithmetic. Returns true iff every entry matches exactly.
bool lprime_reconstruction_exact(const SimplicialComplex& x, int r, int k);

}  // namespace lb
