#include "lapbound/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lapbound/errors.hpp"
#include "lapbound/matrix.hpp"
#include "lapbound/spectra.hpp"

namespace lb {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw internal_consistency_error("Fraction overflow");
    return static_cast<long long>(v);
}

Fraction reduce(__int128 n, __int128 d) {
    if (d == 0) throw contract_error("Fraction: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g == 0) g = 1;
    return Fraction(narrow(n / g), narrow(d / g));
}

}  // namespace

Fraction::Fraction(long long n) : num(n), den(1) {}

Fraction::Fraction(long long n, long long d) {
    if (d == 0) throw contract_error("Fraction: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Fraction Fraction::operator+(const Fraction& o) const {
    return reduce(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
                  static_cast<__int128>(den) * o.den);
}

Fraction Fraction::operator-(const Fraction& o) const { return *this + Fraction(-o.num, o.den); }

Fraction Fraction::operator*(const Fraction& o) const {
    return reduce(static_cast<__int128>(num) * o.num, static_cast<__int128>(den) * o.den);
}

namespace {

// Sign product (tau : tau cap eta)(eta : tau cap eta) for r-faces sharing r
// vertices; 0 when the intersection is smaller.
int sign_product(const Face& tau, const Face& eta, int r) {
    Face cap;
    std::set_intersection(tau.begin(), tau.end(), eta.begin(), eta.end(), std::back_inserter(cap));
    if (static_cast<int>(cap.size()) != r) return 0;
    return incidence_sign(tau, cap) * incidence_sign(eta, cap);
}

}  // namespace

OperatorMatrix gadget_LA(const SimplicialComplex& x, int r, const std::vector<Face>& a) {
    if (r < 1 || r > x.dim()) throw contract_error("gadget_LA: r out of range");
    std::vector<Face> sorted_a = a;
    std::sort(sorted_a.begin(), sorted_a.end());
    for (const Face& sigma : sorted_a) {
        if (face_dim(sigma) != r - 1 || !x.has_face(sigma))
            throw contract_error("gadget_LA: A contains a non-(r-1)-face");
    }
    const auto& taus = x.faces(r);
    const int n = static_cast<int>(taus.size());

    auto in_a = [&](const Face& f) {
        return std::binary_search(sorted_a.begin(), sorted_a.end(), f);
    };
    // Precondition: every r-face contains at most one element of A.
    for (const Face& tau : taus) {
        int hits = 0;
        for (size_t drop = 0; drop < tau.size(); ++drop) {
            Face sigma;
            for (size_t i = 0; i < tau.size(); ++i)
                if (i != drop) sigma.push_back(tau[i]);
            if (in_a(sigma)) ++hits;
        }
        if (hits > 1) throw contract_error("gadget_LA: an r-face contains two elements of A");
    }

    OperatorMatrix out;
    out.kind = OperatorKind::gadget_LA;
    out.r = r;
    out.row_dim = out.col_dim = r;
    out.m = Matrix(n, n);
    for (int i = 0; i < n; ++i) {
        const Face& tau = taus[i];
        bool diag = false;
        for (size_t drop = 0; drop < tau.size() && !diag; ++drop) {
            Face sigma;
            for (size_t t = 0; t < tau.size(); ++t)
                if (t != drop) sigma.push_back(tau[t]);
            diag = in_a(sigma);
        }
        if (diag) out.m(i, i) = 1.0;
        for (int j = i + 1; j < n; ++j) {
            Face cap;
            std::set_intersection(tau.begin(), tau.end(), taus[j].begin(), taus[j].end(),
                                  std::back_inserter(cap));
            if (static_cast<int>(cap.size()) == r && in_a(cap)) {
                double v = incidence_sign(tau, cap) * incidence_sign(taus[j], cap);
                out.m(i, j) = v;
                out.m(j, i) = v;
            }
        }
    }
    return out;
}

OperatorMatrix gadget_Li(const SimplicialComplex& x, int r, const Face& sigma) {
    if (!x.has_face(sigma) || face_dim(sigma) != r - 1)
        throw contract_error("gadget_Li: sigma is not an (r-1)-face of X");
    OperatorMatrix out = gadget_LA(x, r, {sigma});
    out.kind = OperatorKind::gadget_Li;

    // Self-check: the unique nonzero eigenvalue is deg^{(r)}(sigma).
    const int deg = x.face_degree(sigma, r);
    SpectrumSummary s = sym_spectrum(out.m);
    std::vector<double> nz = nonzero_spectrum(s);
    bool ok = (deg == 0) ? nz.empty()
                         : (nz.size() == 1 && std::abs(nz[0] - deg) <= 1e-8 * std::max(1, deg));
    if (!ok) throw internal_consistency_error("gadget_Li: nonzero spectrum is not {deg(sigma)}");
    return out;
}

namespace {

struct LprimeParts {
    std::vector<int> top;        // indices into X(r-1), the (r+1)k chosen faces
    std::vector<Fraction> w;     // w(sigma) for every (r-1)-face
    int d = 0;                   // d^{(r)}_{(r+1)k}
    DegreeProfile profile;
};

LprimeParts lprime_parts(const SimplicialComplex& x, int r, int k) {
    if (r < 1 || r > x.dim()) throw contract_error("gadget_Lprime: r out of range");
    LprimeParts parts;
    parts.profile = degree_profile(x, r);
    const int need = (r + 1) * k;
    if (k < 1 || need > x.f(r - 1)) throw contract_error("gadget_Lprime: (r+1)k exceeds f_{r-1}");
    parts.d = parts.profile.sorted_degrees[need - 1];
    if (parts.d == 0) throw degenerate_instance_error("gadget_Lprime: d^{(r)}_{(r+1)k} is zero");
    parts.top.assign(parts.profile.sorted_faces.begin(), parts.profile.sorted_faces.begin() + need);
    const int nf = x.f(r - 1);
    parts.w.resize(nf);
    for (int i = 0; i < nf; ++i) {
        int deg = parts.profile.degree_of[i];
        parts.w[i] = (deg <= parts.d) ? Fraction(1) : Fraction(parts.d, deg);
    }
    return parts;
}

// Exact L' by the weighted entrywise formula.
std::vector<std::vector<Fraction>> lprime_weighted(const SimplicialComplex& x, int r,
                                                   const LprimeParts& parts) {
    const auto& taus = x.faces(r);
    const int n = static_cast<int>(taus.size());
    std::vector<std::vector<Fraction>> q(n, std::vector<Fraction>(n));
    for (int i = 0; i < n; ++i) {
        const Face& tau = taus[i];
        Fraction diag(0);
        for (size_t drop = 0; drop < tau.size(); ++drop) {
            Face sigma;
            for (size_t t = 0; t < tau.size(); ++t)
                if (t != drop) sigma.push_back(tau[t]);
            diag = diag + parts.w[x.face_index(r - 1, sigma)];
        }
        q[i][i] = diag;
        for (int j = i + 1; j < n; ++j) {
            Face cap;
            std::set_intersection(tau.begin(), tau.end(), taus[j].begin(), taus[j].end(),
                                  std::back_inserter(cap));
            if (static_cast<int>(cap.size()) != r) continue;
            int sp = incidence_sign(tau, cap) * incidence_sign(taus[j], cap);
            Fraction v = parts.w[x.face_index(r - 1, cap)] * Fraction(sp);
            q[i][j] = v;
            q[j][i] = v;
        }
    }
    return q;
}

// Exact L' by the definition: L-_r minus the weighted L_i sum.
std::vector<std::vector<Fraction>> lprime_subtraction(const SimplicialComplex& x, int r,
                                                      const LprimeParts& parts) {
    const auto& taus = x.faces(r);
    const int n = static_cast<int>(taus.size());
    std::vector<std::vector<Fraction>> q(n, std::vector<Fraction>(n));
    // L-_r entries.
    for (int i = 0; i < n; ++i) {
        q[i][i] = Fraction(r + 1);
        for (int j = i + 1; j < n; ++j) {
            int sp = sign_product(taus[i], taus[j], r);
            q[i][j] = Fraction(sp);
            q[j][i] = Fraction(sp);
        }
    }
    // Subtract (1 - d/d_i) L_i for each chosen face.
    for (int idx : parts.top) {
        const Face& sigma = x.faces(r - 1)[idx];
        int deg = parts.profile.degree_of[idx];
        Fraction coef = Fraction(1) - Fraction(parts.d, deg);
        OperatorMatrix li = gadget_LA(x, r, {sigma});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double e = li.m(i, j);
                if (e != 0.0) q[i][j] = q[i][j] - coef * Fraction(static_cast<long long>(e));
            }
    }
    return q;
}

}  // namespace

GadgetMatrix gadget_Lprime(const SimplicialComplex& x, int r, int k, double tol) {
    LprimeParts parts = lprime_parts(x, r, k);
    GadgetMatrix g;
    g.q = lprime_weighted(x, r, parts);

    // Entrywise-exact agreement between the two construction routes.
    auto sub = lprime_subtraction(x, r, parts);
    if (g.q != sub)
        throw internal_consistency_error("gadget_Lprime: weighted and subtraction routes disagree");

    const int n = static_cast<int>(g.q.size());
    g.op.kind = OperatorKind::gadget_Lprime;
    g.op.r = r;
    g.op.row_dim = g.op.col_dim = r;
    g.op.m = Matrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.op.m(i, j) = g.q[i][j].to_double();

    SpectrumSummary s = sym_spectrum(g.op.m);
    double lambda1 = s.size() > 0 ? s.eigenvalues().front() : 0.0;
    if (lambda1 > (r + 1.0) * parts.d + tol)
        throw internal_consistency_error("gadget_Lprime: lambda_1(L') exceeds (r+1)d");
    return g;
}

bool lprime_reconstruction_exact(const SimplicialComplex& x, int r, int k) {
    LprimeParts parts = lprime_parts(x, r, k);
    auto weighted = lprime_weighted(x, r, parts);

    // Rebuild L-_r from L' and the weighted L_i sum, exactly.
    const auto& taus = x.faces(r);
    const int n = static_cast<int>(taus.size());
    auto recon = weighted;
    for (int idx : parts.top) {
        const Face& sigma = x.faces(r - 1)[idx];
        int deg = parts.profile.degree_of[idx];
        Fraction coef = Fraction(1) - Fraction(parts.d, deg);
        OperatorMatrix li = gadget_LA(x, r, {sigma});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double e = li.m(i, j);
                if (e != 0.0) recon[i][j] = recon[i][j] + coef * Fraction(static_cast<long long>(e));
            }
    }
    for (int i = 0; i < n; ++i) {
        if (recon[i][i] != Fraction(r + 1)) return false;
        for (int j = i + 1; j < n; ++j) {
            if (recon[i][j] != Fraction(sign_product(taus[i], taus[j], r))) return false;
        }
    }
    return true;
}

}  // namespace lb
