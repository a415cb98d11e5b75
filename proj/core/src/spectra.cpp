#include "lapbound/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "lapbound/errors.hpp"

namespace lb {

SpectrumSummary::SpectrumSummary(std::vector<double> eigenvalues_desc, double tolerance)
    : eigenvalues_(std::move(eigenvalues_desc)), tolerance_(tolerance) {
    prefix_.resize(eigenvalues_.size() + 1, 0.0);
    for (size_t i = 0; i < eigenvalues_.size(); ++i) prefix_[i + 1] = prefix_[i] + eigenvalues_[i];
}

double SpectrumSummary::top_k_sum(int k) const {
    if (k < 1 || k > size()) throw contract_error("top_k_sum: k out of range");
    return prefix_[k];
}

double SpectrumSummary::top_k_sum_clamped(int k) const {
    if (k <= 0) return 0.0;
    return prefix_[std::min<size_t>(k, eigenvalues_.size())];
}

SpectrumSummary sym_spectrum(const Matrix& m, std::optional<double> tolerance) {
    if (m.rows() != m.cols()) throw contract_error("sym_spectrum: matrix not square");
    if (m.rows() > 0 && m.asymmetry() > 1e-12) throw contract_error("sym_spectrum: matrix not symmetric");
    std::vector<double> ev = symmetric_eigenvalues(m);
    double tol = tolerance.value_or(ev.empty() ? 1e-9 : 1e-9 * std::max(1.0, ev.front()));
    return SpectrumSummary(std::move(ev), tol);
}

SpectrumSummary sym_spectrum(const OperatorMatrix& m, std::optional<double> tolerance) {
    return sym_spectrum(m.m, tolerance);
}

std::vector<double> nonzero_spectrum(const SpectrumSummary& s) {
    std::vector<double> out;
    for (double v : s.eigenvalues())
        if (std::abs(v) > s.tolerance()) out.push_back(v);
    return out;
}

double eps_k(const SimplicialComplex& g, int k) {
    if (g.dim() > 1) throw contract_error("eps_k: not a graph");
    const int n = g.num_vertices();
    if (k < 1 || k > n) throw contract_error("eps_k: k out of range");
    const int edges = g.f(1);
    if (g.dim() < 1) return 0.0;  // L(G) = 0 for edgeless graphs
    SpectrumSummary s = sym_spectrum(laplacian(g, OperatorKind::upper_laplacian, 1));
    return s.top_k_sum(k) - edges;
}

double gershgorin_bound(const Matrix& m) {
    if (m.rows() != m.cols()) throw contract_error("gershgorin_bound: matrix not square");
    double best = 0.0;
    for (int i = 0; i < m.rows(); ++i) {
        double row = 0.0;
        for (int j = 0; j < m.cols(); ++j) row += std::abs(m(i, j));
        best = std::max(best, row);
    }
    return best;
}

long long DegreeProfile::top_degree_sum(int j) const {
    long long s = 0;
    const int m = std::min<int>(j, static_cast<int>(sorted_degrees.size()));
    for (int i = 0; i < m; ++i) s += sorted_degrees[i];
    return s;
}

DegreeProfile degree_profile(const SimplicialComplex& x, int r, const PartiteStructure* partition) {
    if (r < 1 || r > x.dim()) throw contract_error("degree_profile: r out of range");
    DegreeProfile p;
    p.r = r;
    const auto& level = x.faces(r - 1);
    p.degree_of.assign(level.size(), 0);
    p.vertex_degrees.assign(x.num_vertices(), 0);

    // Count subface incidences by walking the r-faces once.
    for (const Face& tau : x.faces(r)) {
        for (size_t drop = 0; drop < tau.size(); ++drop) {
            Face sigma;
            sigma.reserve(tau.size() - 1);
            for (size_t i = 0; i < tau.size(); ++i)
                if (i != drop) sigma.push_back(tau[i]);
            ++p.degree_of[x.face_index(r - 1, sigma)];
        }
        for (int v : tau) ++p.vertex_degrees[v];
    }

    p.sorted_faces.resize(level.size());
    for (size_t i = 0; i < level.size(); ++i) p.sorted_faces[i] = static_cast<int>(i);
    // Descending degree, lexicographic face order as the tie-break.
    std::stable_sort(p.sorted_faces.begin(), p.sorted_faces.end(),
                     [&](int a, int b) { return p.degree_of[a] > p.degree_of[b]; });
    p.sorted_degrees.resize(level.size());
    for (size_t i = 0; i < level.size(); ++i) p.sorted_degrees[i] = p.degree_of[p.sorted_faces[i]];

    if (r == 1) p.conjugate = conjugate_sequence(p.vertex_degrees, x.num_vertices());

    if (partition != nullptr) {
        const int classes = static_cast<int>(partition->classes.size());
        p.partite_profiles.assign(classes, {});
        for (size_t i = 0; i < level.size(); ++i) {
            // X(r-1;j): faces missing class j. A face of dimension r-1 in an
            // (r+1)-partite complex misses one class per absent color.
            std::vector<bool> meets(classes, false);
            for (int v : level[i]) meets[partition->class_of[v]] = true;
            for (int j = 0; j < classes; ++j)
                if (!meets[j]) p.partite_profiles[j].push_back(p.degree_of[i]);
        }
        for (auto& prof : p.partite_profiles) std::sort(prof.begin(), prof.end(), std::greater<int>());
    }
    return p;
}

std::vector<int> conjugate_sequence(const std::vector<int>& degrees, int len) {
    std::vector<int> out(len, 0);
    for (int d : degrees) {
        int cap = std::min(d, len);
        for (int i = 0; i < cap; ++i) ++out[i];
    }
    return out;
}

double complement_eigen_check(const SimplicialComplex& g) {
    if (g.dim() > 1) throw contract_error("complement_eigen_check: not a graph");
    const int n = g.num_vertices();
    if (n < 2) throw contract_error("complement_eigen_check: n < 2");
    SimplicialComplex gc = complement_graph(g);

    auto graph_spectrum = [&](const SimplicialComplex& h) {
        if (h.dim() < 1) return SpectrumSummary(std::vector<double>(h.num_vertices(), 0.0), 1e-9);
        return sym_spectrum(laplacian(h, OperatorKind::upper_laplacian, 1));
    };
    SpectrumSummary s = graph_spectrum(g);
    SpectrumSummary sc = graph_spectrum(gc);

    double residual = 0.0;
    // lambda_i(L(G)) = n - lambda_{n-i}(L(Gc)) for 1 <= i <= n-1.
    for (int i = 1; i <= n - 1; ++i) {
        double lhs = s.eigenvalues()[i - 1];
        double rhs = n - sc.eigenvalues()[n - i - 1];
        residual = std::max(residual, std::abs(lhs - rhs));
    }
    // eps_k(G) = eps_{n-k-1}(Gc) + nk - C(n,2) for 1 <= k <= n-1.
    const double e = g.f(1);
    const double ec = gc.f(1);
    for (int k = 1; k <= n - 1; ++k) {
        double lhs = s.top_k_sum(k) - e;
        double rhs_eps = sc.top_k_sum_clamped(n - k - 1) - ec;  // eps_0 = -|E(Gc)|
        double rhs = rhs_eps + static_cast<double>(n) * k - 0.5 * n * (n - 1);
        residual = std::max(residual, std::abs(lhs - rhs));
    }
    return residual;
}

}  // namespace lb
