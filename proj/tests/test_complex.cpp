#include <doctest.h>

#include <algorithm>
#include <set>

#include "lapbound/complex.hpp"
#include "lapbound/errors.hpp"
#include "lapbound/generators.hpp"
#include "lapbound/operators.hpp"

#include "oracles.hpp"

using namespace lb;

TEST_CASE("build_complex closes a triangle downward") {
    SimplicialComplex x = build_complex({{1, 2, 3}});
    CHECK(x.dim() == 2);
    CHECK(x.f(-1) == 1);
    CHECK(x.f(0) == 3);
    CHECK(x.f(1) == 3);
    CHECK(x.f(2) == 1);
}

TEST_CASE("build_complex perfect matching and edgeless") {
    SimplicialComplex m = build_complex({{1, 2}, {3, 4}, {5, 6}});
    CHECK(m.dim() == 1);
    CHECK(m.f(0) == 6);
    CHECK(m.f(1) == 3);

    SimplicialComplex e = build_complex({{1}, {2}});
    CHECK(e.dim() == 0);
    CHECK(e.f(0) == 2);
    CHECK(e.f(1) == 0);
}

TEST_CASE("build_complex rejects duplicate vertices in a facet") {
    CHECK_THROWS_AS(build_complex({{1, 1, 2}}), malformed_input_error);
}

TEST_CASE("incidence signs on the triangle") {
    // Labels 1,2,3 enter in ascending order, so internal order matches.
    Face tau{0, 1, 2};
    CHECK(incidence_sign(tau, Face{1, 2}) == 1);   // u first
    CHECK(incidence_sign(tau, Face{0, 2}) == -1);  // u second
    CHECK(incidence_sign(tau, Face{0, 1}) == 1);   // u third
    CHECK(incidence_sign(Face{0, 1}, Face{1}) == 1);
    CHECK_THROWS_AS(incidence_sign(Face{0, 1, 2}, Face{0}), contract_error);
    CHECK_THROWS_AS(incidence_sign(Face{0, 1, 2}, Face{3, 4}), contract_error);
}

TEST_CASE("boundary matrix of the full triangle") {
    SimplicialComplex x = build_complex({{1, 2, 3}});
    OperatorMatrix b2 = boundary_matrix(x, 2, true);
    CHECK(b2.m.rows() == 3);
    CHECK(b2.m.cols() == 1);
    // Rows in lex order (1,2),(1,3),(2,3).
    CHECK(b2.m(0, 0) == 1.0);
    CHECK(b2.m(1, 0) == -1.0);
    CHECK(b2.m(2, 0) == 1.0);

    OperatorMatrix n2 = boundary_matrix(x, 2, false);
    CHECK(n2.m(0, 0) == 1.0);
    CHECK(n2.m(1, 0) == 1.0);
    CHECK(n2.m(2, 0) == 1.0);
}

TEST_CASE("matching complex boundary has one +/- pair per column") {
    SimplicialComplex m = build_complex({{1, 2}, {3, 4}, {5, 6}});
    OperatorMatrix b = boundary_matrix(m, 1, true);
    REQUIRE(b.m.rows() == 6);
    REQUIRE(b.m.cols() == 3);
    for (int j = 0; j < 3; ++j) {
        int plus = 0, minus = 0, zero = 0;
        for (int i = 0; i < 6; ++i) {
            if (b.m(i, j) == 1.0) ++plus;
            else if (b.m(i, j) == -1.0) ++minus;
            else ++zero;
        }
        CHECK(plus == 1);
        CHECK(minus == 1);
        CHECK(zero == 4);
    }
}

TEST_CASE("boundary composition vanishes") {
    lb::SplitMix64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        SimplicialComplex x = gen_random_complex(6, 2 + static_cast<int>(rng.next_below(2)), 0.6,
                                                 rng.next());
        for (int r = 1; r <= x.dim(); ++r) {
            Matrix prod = boundary_matrix(x, r - 1, true).m * boundary_matrix(x, r, true).m;
            double maxabs = 0;
            for (int i = 0; i < prod.rows(); ++i)
                for (int j = 0; j < prod.cols(); ++j) maxabs = std::max(maxabs, std::abs(prod(i, j)));
            CHECK(maxabs == 0.0);
        }
    }
}

TEST_CASE("sign lemma on random complexes") {
    lb::SplitMix64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        SimplicialComplex x = gen_random_complex(6, 2, 0.7, rng.next());
        for (int r = 1; r <= x.dim(); ++r) {
            const auto& faces = x.faces(r - 1);
            for (size_t i = 0; i < faces.size(); ++i)
                for (size_t j = i + 1; j < faces.size(); ++j) {
                    Face cap, uni;
                    std::set_intersection(faces[i].begin(), faces[i].end(), faces[j].begin(),
                                          faces[j].end(), std::back_inserter(cap));
                    std::set_union(faces[i].begin(), faces[i].end(), faces[j].begin(),
                                   faces[j].end(), std::back_inserter(uni));
                    if (static_cast<int>(cap.size()) != r - 1 || !x.has_face(uni)) continue;
                    int lhs = incidence_sign(uni, faces[i]) * incidence_sign(uni, faces[j]);
                    int rhs = -incidence_sign(faces[i], cap) * incidence_sign(faces[j], cap);
                    CHECK(lhs == rhs);
                }
        }
    }
}

TEST_CASE("laplacian boundary product matches example values") {
    SimplicialComplex k2 = build_complex({{1, 2}});
    OperatorMatrix l = laplacian(k2, OperatorKind::upper_laplacian, 1);
    CHECK(l.m(0, 0) == 1.0);
    CHECK(l.m(0, 1) == -1.0);
    CHECK(l.m(1, 1) == 1.0);

    SimplicialComplex tri = build_complex({{1, 2, 3}});
    OperatorMatrix lo = laplacian(tri, OperatorKind::lower_laplacian, 1);
    CHECK(lo.m(0, 0) == 2.0);
    // Edges (1,2),(1,3): shared vertex 1; signs -1 * -1.
    CHECK(lo.m(0, 1) == 1.0);
    CHECK(lo.m(0, 2) == -1.0);
    CHECK(lo.m(1, 2) == 1.0);

    OperatorMatrix up2 = laplacian(tri, OperatorKind::upper_laplacian, 2);
    for (int i = 0; i < 3; ++i) CHECK(up2.m(i, i) == 1.0);  // rank-1 outer product
}

TEST_CASE("laplacian r range contracts") {
    SimplicialComplex tri = build_complex({{1, 2, 3}});
    CHECK_THROWS_AS(laplacian(tri, OperatorKind::upper_laplacian, 0), contract_error);
    CHECK_THROWS_AS(laplacian(tri, OperatorKind::upper_laplacian, 3), contract_error);
    CHECK_NOTHROW(laplacian(tri, OperatorKind::lower_laplacian, 0));
}

TEST_CASE("complement graph") {
    SimplicialComplex p3 = build_complex({{1, 2}, {2, 3}});
    SimplicialComplex c = complement_graph(p3);
    CHECK(c.f(1) == 1);
    CHECK(c.has_face(Face{0, 2}));  // edge {1,3} in internal indices
    CHECK(c.num_vertices() == 3);

    SimplicialComplex k3 = build_complex({{1, 2, 3}});
    CHECK_THROWS_AS(complement_graph(k3), contract_error);
    SimplicialComplex k3_graph = build_complex({{1, 2}, {1, 3}, {2, 3}});
    CHECK(complement_graph(k3_graph).f(1) == 0);

    SimplicialComplex edgeless = build_complex({}, {1, 2, 3, 4});
    CHECK(complement_graph(edgeless).f(1) == 6);
}

TEST_CASE("complement is an involution and edge counts sum to C(n,2)") {
    lb::SplitMix64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        SimplicialComplex g = gen_random_graph(6, 0.5, rng.next());
        SimplicialComplex c = complement_graph(g);
        CHECK(g.f(1) + c.f(1) == 15);
        SimplicialComplex cc = complement_graph(c);
        CHECK(cc.f(1) == g.f(1));
        for (const Face& e : g.faces(1)) CHECK(cc.has_face(e));
    }
}

TEST_CASE("join_cone examples") {
    SimplicialComplex k2 = build_complex({{1, 2}});
    SimplicialComplex tri = join_cone(k2, {9});
    CHECK(tri.dim() == 2);
    CHECK(tri.f(2) == 1);
    CHECK(tri.label(2) == 9);  // cone vertex ordered last

    SimplicialComplex two = build_complex({}, {1, 2});
    SimplicialComplex p3 = join_cone(two, {5});
    CHECK(p3.dim() == 1);
    CHECK(p3.f(1) == 2);

    SimplicialComplex path = build_complex({{1, 2}, {2, 3}});
    SimplicialComplex y = join_cone(path, {7, 8});
    CHECK(y.dim() == 3);
    CHECK(y.f(3) == 2);

    CHECK_THROWS_AS(join_cone(k2, {1}), contract_error);
    CHECK_THROWS_AS(join_cone(k2, {}), contract_error);
}

TEST_CASE("join_cone face counts match direct enumeration") {
    lb::SplitMix64 rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        SimplicialComplex x = gen_random_complex(5, 2, 0.5, rng.next());
        int s = 1 + static_cast<int>(rng.next_below(3));
        std::vector<int> sigma;
        for (int i = 0; i < s; ++i) sigma.push_back(100 + i);
        SimplicialComplex y = join_cone(x, sigma);
        CHECK(y.dim() == x.dim() + s);
        for (int i = 0; i <= y.dim(); ++i) CHECK(y.f(i) == oracle::join_face_count(x, s, i));
    }
}

TEST_CASE("induced subcomplex") {
    SimplicialComplex k4 = build_complex({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(induced_subcomplex(k4, {1, 2}).f(1) == 1);

    SimplicialComplex p4 = build_complex({{1, 2}, {2, 3}, {3, 4}});
    SimplicialComplex sub = induced_subcomplex(p4, {1, 3});
    CHECK(sub.num_vertices() == 2);
    CHECK(sub.f(1) == 0);

    SimplicialComplex tri = build_complex({{1, 2, 3}});
    CHECK(induced_subcomplex(tri, {1, 2}).f(1) == 1);
    CHECK(induced_subcomplex(tri, {}).num_vertices() == 0);
}

TEST_CASE("partite_classes recognizes and refuses correctly") {
    SimplicialComplex k22 = build_complex({{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    auto p = partite_classes(k22);
    REQUIRE(p.has_value());
    REQUIRE(p->classes.size() == 2);
    CHECK(p->classes[0].size() == 2);
    CHECK(p->classes[1].size() == 2);

    SimplicialComplex k3 = build_complex({{1, 2}, {1, 3}, {2, 3}});
    CHECK(!partite_classes(k3).has_value());

    auto [x, part] = gen_complete_partite_complex(2, {1, 1, 2});
    auto found = partite_classes(x);
    REQUIRE(found.has_value());
    // Same multiset of class sizes up to relabeling.
    std::multiset<size_t> a, b;
    for (const auto& c : part.classes) a.insert(c.size());
    for (const auto& c : found->classes) b.insert(c.size());
    CHECK(a == b);
    // Every face rainbow under the recovered coloring.
    for (int d = 1; d <= x.dim(); ++d)
        for (const Face& face : x.faces(d)) {
            std::set<int> colors;
            for (int v : face) colors.insert(found->class_of[v]);
            CHECK(colors.size() == face.size());
        }
}

TEST_CASE("vertex order pinning: first appearance, ties ascending") {
    SimplicialComplex x = build_complex({{3, 1}, {2, 1}});
    // Facet {3,1} admits 1 and 3 (ascending), then 2.
    CHECK(x.label(0) == 1);
    CHECK(x.label(1) == 3);
    CHECK(x.label(2) == 2);
}

TEST_CASE("facets recovers maximal faces") {
    SimplicialComplex x = build_complex({{1, 2, 3}, {3, 4}});
    auto fs = x.facets();
    REQUIRE(fs.size() == 2);
    CHECK(face_dim(fs[0]) == 2);
    CHECK(face_dim(fs[1]) == 1);
}
