#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lapbound/complex.hpp"
#include "lapbound/errors.hpp"
#include "lapbound/generators.hpp"
#include "lapbound/operators.hpp"
#include "lapbound/spectra.hpp"

#include "oracles.hpp"

using namespace lb;

namespace {

SpectrumSummary graph_spectrum(const SimplicialComplex& g) {
    return sym_spectrum(laplacian(g, OperatorKind::upper_laplacian, 1));
}

void check_close(const std::vector<double>& got, const std::vector<double>& want, double tol) {
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= tol);
}

}  // namespace

TEST_CASE("eigensolver agrees with the Jacobi oracle on random matrices") {
    lb::SplitMix64 rng(101);
    for (int n : {1, 2, 3, 5, 8, 13, 21}) {
        for (int trial = 0; trial < 6; ++trial) {
            Matrix m = oracle::random_symmetric(n, rng);
            auto got = symmetric_eigenvalues(m);
            auto want = oracle::jacobi_eigenvalues(m);
            check_close(got, want, 1e-9 * std::max(1.0, std::abs(want.front())));
        }
    }
}

TEST_CASE("eigensolver handles edge shapes") {
    CHECK(symmetric_eigenvalues(Matrix(0, 0)).empty());
    Matrix one(1, 1);
    one(0, 0) = -4.5;
    CHECK(symmetric_eigenvalues(one) == std::vector<double>{-4.5});
}

TEST_CASE("known spectra: K_2, stars, paths, complete graphs") {
    check_close(graph_spectrum(build_complex({{1, 2}})).eigenvalues(), {2, 0}, 1e-10);
    check_close(graph_spectrum(gen_star(4)).eigenvalues(), {4, 1, 1, 0}, 1e-9);
    check_close(graph_spectrum(gen_path(3)).eigenvalues(), {3, 1, 0}, 1e-9);

    // P_n spectrum is 2 - 2cos(pi j / n), j = 0..n-1.
    for (int n : {5, 9, 16}) {
        std::vector<double> want;
        for (int j = n - 1; j >= 0; --j) want.push_back(2.0 - 2.0 * std::cos(M_PI * j / n));
        std::sort(want.begin(), want.end(), std::greater<double>());
        check_close(graph_spectrum(gen_path(n)).eigenvalues(), want, 1e-8);
    }

    // K_5: eigenvalue 5 with multiplicity 4, then 0.
    SimplicialComplex k5 = gen_brouwer_equality(5, 0);
    check_close(graph_spectrum(k5).eigenvalues(), {5, 5, 5, 5, 0}, 1e-9);

    // K_{2,2}: {4, 2, 2, 0}.
    auto [k22, part] = gen_complete_partite_complex(1, {2, 2});
    check_close(graph_spectrum(k22).eigenvalues(), {4, 2, 2, 0}, 1e-9);
}

TEST_CASE("sym_spectrum rejects non-symmetric input") {
    Matrix m(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(sym_spectrum(m), contract_error);
}

TEST_CASE("top_k_sum and prefix sums") {
    SpectrumSummary s = graph_spectrum(build_complex({{1, 2}, {1, 3}, {2, 3}}));
    CHECK(s.top_k_sum(2) == doctest::Approx(6.0).epsilon(1e-10));
    CHECK(s.top_k_sum(3) == doctest::Approx(6.0).epsilon(1e-10));  // trace = 2|E|
    CHECK_THROWS_AS(s.top_k_sum(0), contract_error);
    CHECK_THROWS_AS(s.top_k_sum(4), contract_error);

    SimplicialComplex m3 = gen_matching_complex(1, 3);
    CHECK(graph_spectrum(m3).top_k_sum(2) == doctest::Approx(4.0));
}

TEST_CASE("nonzero spectrum extraction") {
    SpectrumSummary s(std::vector<double>{2, 0}, 1e-9);
    CHECK(nonzero_spectrum(s) == std::vector<double>{2});

    SimplicialComplex tri = build_complex({{1, 2, 3}});
    auto nz = nonzero_spectrum(sym_spectrum(laplacian(tri, OperatorKind::upper_laplacian, 2)));
    REQUIRE(nz.size() == 1);
    CHECK(nz[0] == doctest::Approx(3.0));

    auto p3 = nonzero_spectrum(graph_spectrum(gen_path(3)));
    REQUIRE(p3.size() == 2);
    CHECK(p3[0] == doctest::Approx(3.0));
    CHECK(p3[1] == doctest::Approx(1.0));
}

TEST_CASE("eps_k on stars, K_2 and the Brouwer equality family") {
    CHECK(eps_k(build_complex({{1, 2}}), 1) == doctest::Approx(1.0));
    CHECK(eps_k(gen_star(4), 1) == doctest::Approx(1.0));
    CHECK(eps_k(gen_brouwer_equality(2, 4), 2) == doctest::Approx(3.0));
    CHECK(eps_k(gen_brouwer_equality(3, 0), 3) == doctest::Approx(3.0));  // K_3: C(3,2)
    CHECK_THROWS_AS(eps_k(gen_star(4), 0), contract_error);
    CHECK_THROWS_AS(eps_k(gen_star(4), 5), contract_error);
}

TEST_CASE("degree profiles and conjugate sequences") {
    DegreeProfile p = degree_profile(gen_path(3), 1);
    CHECK(p.sorted_degrees == std::vector<int>{2, 1, 1});
    CHECK(p.conjugate == std::vector<int>{3, 1, 0});

    auto [k22, part] = gen_complete_partite_complex(1, {2, 2});
    DegreeProfile q = degree_profile(k22, 1, &part);
    REQUIRE(q.partite_profiles.size() == 2);
    CHECK(q.partite_profiles[0] == std::vector<int>{2, 2});
    CHECK(q.partite_profiles[1] == std::vector<int>{2, 2});

    DegreeProfile m = degree_profile(gen_matching_complex(1, 4), 1);
    CHECK(std::all_of(m.sorted_degrees.begin(), m.sorted_degrees.end(),
                      [](int d) { return d == 1; }));

    CHECK_THROWS_AS(degree_profile(gen_path(3), 2), contract_error);
}

TEST_CASE("degree sums match trace identities") {
    lb::SplitMix64 rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        SimplicialComplex x = gen_random_complex(6, 2, 0.5, rng.next());
        for (int r = 1; r <= x.dim(); ++r) {
            DegreeProfile p = degree_profile(x, r);
            long long degree_sum = 0;
            for (int d : p.sorted_degrees) degree_sum += d;
            CHECK(degree_sum == static_cast<long long>(r + 1) * x.f(r));
            // trace(L+_{r-1}) = sum of degrees; trace(L-_r) = (r+1) f_r.
            SpectrumSummary up = sym_spectrum(laplacian(x, OperatorKind::upper_laplacian, r));
            SpectrumSummary lo = sym_spectrum(laplacian(x, OperatorKind::lower_laplacian, r));
            CHECK(up.trace() == doctest::Approx(static_cast<double>(degree_sum)).epsilon(1e-9));
            CHECK(lo.trace() == doctest::Approx((r + 1.0) * x.f(r)).epsilon(1e-9));
        }
    }
}

TEST_CASE("conjugate transpose identity: sum of top d' equals sum of min(d, k)") {
    lb::SplitMix64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        SimplicialComplex g = gen_random_graph(7, 0.4, rng.next());
        std::vector<int> deg(g.num_vertices(), 0);
        if (g.dim() >= 1)
            for (const Face& e : g.faces(1)) {
                ++deg[e[0]];
                ++deg[e[1]];
            }
        auto conj = conjugate_sequence(deg, g.num_vertices());
        for (int k = 1; k <= g.num_vertices(); ++k) {
            long long lhs = 0;
            for (int i = 0; i < k; ++i) lhs += conj[i];
            long long rhs = 0;
            for (int d : deg) rhs += std::min(d, k);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("gershgorin bound") {
    SimplicialComplex p3 = gen_path(3);
    Matrix l = laplacian(p3, OperatorKind::upper_laplacian, 1).m;
    CHECK(gershgorin_bound(l) == doctest::Approx(4.0));
    CHECK(gershgorin_bound(Matrix(3, 3)) == 0.0);

    SimplicialComplex k3 = build_complex({{1, 2}, {1, 3}, {2, 3}});
    Matrix lk = laplacian(k3, OperatorKind::upper_laplacian, 1).m;
    CHECK(gershgorin_bound(lk) == doctest::Approx(4.0));
    CHECK(graph_spectrum(k3).eigenvalues()[0] <= gershgorin_bound(lk) + 1e-12);
}

TEST_CASE("complement identities") {
    CHECK(complement_eigen_check(gen_path(3)) <= 1e-9);
    SimplicialComplex k4 = gen_brouwer_equality(4, 0);
    CHECK(complement_eigen_check(k4) <= 1e-9);
    CHECK(complement_eigen_check(gen_random_graph(6, 0.5, 1)) <= 1e-9);
    lb::SplitMix64 rng(3);
    for (int trial = 0; trial < 20; ++trial)
        CHECK(complement_eigen_check(gen_random_graph(8, 0.3, rng.next())) <= 1e-8);
}

TEST_CASE("PSD and relabeling invariance of Laplacian spectra") {
    lb::SplitMix64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        SimplicialComplex x = gen_random_complex(6, 2, 0.6, rng.next());
        for (int r = 1; r <= x.dim(); ++r) {
            for (OperatorKind kind : {OperatorKind::upper_laplacian, OperatorKind::lower_laplacian,
                                      OperatorKind::signless_upper, OperatorKind::signless_lower}) {
                SpectrumSummary s = sym_spectrum(laplacian(x, kind, r));
                if (s.size() == 0) continue;
                double floor = -1e-9 * std::max(1.0, s.eigenvalues().front());
                CHECK(s.eigenvalues().back() >= floor);
            }
        }
        // Relabel vertices: spectra must agree although matrices differ.
        std::vector<int> relabel;
        for (int v = 0; v < x.num_vertices(); ++v) relabel.push_back(v + 1);
        for (int i = x.num_vertices() - 1; i > 0; --i)
            std::swap(relabel[i], relabel[rng.next_below(i + 1)]);
        std::vector<std::vector<int>> facets;
        for (const Face& f : x.facets()) {
            std::vector<int> relabeled;
            for (int v : f) relabeled.push_back(relabel[v]);
            facets.push_back(std::move(relabeled));
        }
        SimplicialComplex y = build_complex(facets);
        for (int r = 1; r <= x.dim(); ++r) {
            auto a = sym_spectrum(laplacian(x, OperatorKind::upper_laplacian, r));
            auto b = sym_spectrum(laplacian(y, OperatorKind::upper_laplacian, r));
            REQUIRE(a.size() == b.size());
            for (int i = 0; i < a.size(); ++i)
                CHECK(std::abs(a.eigenvalues()[i] - b.eigenvalues()[i]) <= 1e-9);
        }
    }
}

TEST_CASE("Ky Fan inequality on random symmetric pairs") {
    lb::SplitMix64 rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(7));
        Matrix a = oracle::random_symmetric(n, rng);
        Matrix b = oracle::random_symmetric(n, rng);
        auto ea = symmetric_eigenvalues(a);
        auto eb = symmetric_eigenvalues(b);
        auto es = symmetric_eigenvalues(a + b);
        double sa = 0, sb = 0, ss = 0;
        for (int k = 1; k <= n; ++k) {
            sa += ea[k - 1];
            sb += eb[k - 1];
            ss += es[k - 1];
            CHECK(sa + sb - ss >= -1e-8);
        }
    }
}

TEST_CASE("AB and BA share nonzero spectra") {
    lb::SplitMix64 rng(66);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(5));
        int m = 2 + static_cast<int>(rng.next_below(5));
        Matrix a(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) a(i, j) = static_cast<int>(rng.next_below(5)) - 2.0;
        Matrix ab = a * a.transpose();
        Matrix ba = a.transpose() * a;
        auto nz = [](const Matrix& mm) {
            SpectrumSummary s = sym_spectrum(mm, 1e-7);
            return nonzero_spectrum(s);
        };
        auto x = nz(ab);
        auto y = nz(ba);
        REQUIRE(x.size() == y.size());
        for (size_t i = 0; i < x.size(); ++i) CHECK(std::abs(x[i] - y[i]) <= 1e-8);
    }
}
