#pragma once

// Test-only oracles, kept independent of the production code paths they
// check: a cyclic Jacobi eigensolver (vs. Householder+QL), brute-force
// subset maxima, and direct combinatorial recounts.

#include <algorithm>
#include <cmath>
#include <vector>

#include "lapbound/complex.hpp"
#include "lapbound/generators.hpp"
#include "lapbound/matrix.hpp"

namespace oracle {

/// Cyclic Jacobi iteration; returns eigenvalues descending.
inline std::vector<double> jacobi_eigenvalues(lb::Matrix a) {
    const int n = a.rows();
    if (n == 0) return {};
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t =
                    (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const double api = a(p, i), aqi = a(q, i);
                    a(p, i) = c * api - s * aqi;
                    a(q, i) = s * api + c * aqi;
                }
            }
        }
    }
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = a(i, i);
    std::sort(d.begin(), d.end(), std::greater<double>());
    return d;
}

/// Random symmetric matrix with integer entries in [-3, 3].
inline lb::Matrix random_symmetric(int n, lb::SplitMix64& rng) {
    lb::Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double v = static_cast<double>(static_cast<int>(rng.next_below(7)) - 3);
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

/// Max of sum(deg) over all subsets A of X(r-1) with |A| = size, by full
/// enumeration. Independent recount of each face's degree.
inline long long brute_max_degree_subset(const lb::SimplicialComplex& x, int r, int size) {
    const auto& level = x.faces(r - 1);
    const int n = static_cast<int>(level.size());
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i) deg[i] = x.face_degree(level[i], r);
    long long best = -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != size) continue;
        long long s = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s += deg[i];
        best = std::max(best, s);
    }
    return best;
}

/// Direct enumeration count of i-faces of the join X * sigma: every i-face
/// splits as (face of X) cup (nonempty-or-empty subset of sigma).
inline long long join_face_count(const lb::SimplicialComplex& x, int sigma_size, int i) {
    auto binom = [](int a, int b) -> long long {
        if (b < 0 || b > a) return 0;
        long long r = 1;
        for (int t = 0; t < b; ++t) r = r * (a - t) / (t + 1);
        return r;
    };
    long long total = 0;
    for (int j = -1; j < sigma_size; ++j) {
        // j+1 = size of the sigma part.
        int xdim = i - j - 1;
        long long fx = (xdim >= -1 && xdim <= x.dim()) ? x.f(xdim) : 0;
        total += fx * binom(sigma_size, j + 1);
    }
    return total;
}

}  // namespace oracle
