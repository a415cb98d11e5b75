#include "lapbound/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "lapbound/errors.hpp"
#include "lapbound/operators.hpp"

namespace lb {

std::string to_string(Tier tier) {
    switch (tier) {
        case Tier::theorem: return "theorem";
        case Tier::conjecture: return "conjecture";
        case Tier::lemma_gadget: return "lemma-gadget";
    }
    return "unknown";
}

namespace {

enum class Id {
    anderson_morley,
    am_edgewise,
    grone_merris_lower,
    bai,
    brouwer,
    weak_brouwer_old,
    degree_sum_main,
    witness_max_form,
    binom_complex,
    k_squared,
    main_plus_bai,
    brouwer_min_binom,
    partite_degree_sum,
    duval_reiner,
    higher_brouwer,
    brouwer_plus,
    induced_2k,
    hereditary_f,
    lambda1_fww,
    lambda1_fr_plus_r,
    signless_degree_sum,
    signless_aot,
    signless_trianglefree_k2,
    signless_binom_complex,
    signless_partite_degree_sum,
    signless_duval_reiner,
    signless_induced_2k,
    signless_hereditary_f,
};

struct Entry {
    Id id;
    BoundMeta meta;
};

const std::vector<Entry>& entries() {
    auto make = [](Id id, const char* name, Tier tier, bool graph_only, bool signless,
                   bool needs_partition, bool needs_family, bool k_is_one) {
        return Entry{id, BoundMeta{name, tier, graph_only, signless, needs_partition, needs_family,
                                   k_is_one}};
    };
    static const std::vector<Entry> table = {
        make(Id::anderson_morley, "anderson_morley", Tier::theorem, true, false, false, false, true),
        make(Id::am_edgewise, "am_edgewise", Tier::theorem, true, false, false, false, true),
        make(Id::grone_merris_lower, "grone_merris_lower", Tier::theorem, true, false, false, false, false),
        make(Id::bai, "bai", Tier::theorem, true, false, false, false, false),
        make(Id::brouwer, "brouwer", Tier::conjecture, true, false, false, false, false),
        make(Id::weak_brouwer_old, "weak_brouwer_old", Tier::theorem, true, false, false, false, false),
        make(Id::degree_sum_main, "degree_sum_main", Tier::theorem, false, false, false, false, false),
        make(Id::witness_max_form, "witness_max_form", Tier::theorem, false, false, false, false, false),
        make(Id::binom_complex, "binom_complex", Tier::theorem, false, false, false, false, false),
        make(Id::k_squared, "k_squared", Tier::theorem, true, false, false, false, false),
        make(Id::main_plus_bai, "main_plus_bai", Tier::theorem, true, false, false, false, false),
        make(Id::brouwer_min_binom, "brouwer_min_binom", Tier::theorem, true, false, false, false, false),
        make(Id::partite_degree_sum, "partite_degree_sum", Tier::theorem, false, false, true, false, false),
        make(Id::duval_reiner, "duval_reiner", Tier::conjecture, false, false, false, false, false),
        make(Id::higher_brouwer, "higher_brouwer", Tier::conjecture, false, false, false, false, false),
        make(Id::brouwer_plus, "brouwer_plus", Tier::conjecture, true, false, false, false, false),
        make(Id::induced_2k, "induced_2k", Tier::theorem, true, false, false, false, false),
        make(Id::hereditary_f, "hereditary_f", Tier::theorem, true, false, false, true, false),
        make(Id::lambda1_fww, "lambda1_fww", Tier::theorem, false, false, false, false, true),
        make(Id::lambda1_fr_plus_r, "lambda1_fr_plus_r", Tier::theorem, false, false, false, false, true),
        make(Id::signless_degree_sum, "signless_degree_sum", Tier::theorem, false, true, false, false, false),
        make(Id::signless_aot, "signless_aot", Tier::conjecture, true, true, false, false, false),
        make(Id::signless_trianglefree_k2, "signless_trianglefree_k2", Tier::theorem, true, true, false, false, false),
        make(Id::signless_binom_complex, "signless_binom_complex", Tier::theorem, false, true, false, false, false),
        make(Id::signless_partite_degree_sum, "signless_partite_degree_sum", Tier::theorem, false, true, true, false, false),
        make(Id::signless_duval_reiner, "signless_duval_reiner", Tier::conjecture, false, true, false, false, false),
        make(Id::signless_induced_2k, "signless_induced_2k", Tier::theorem, true, true, false, false, false),
        make(Id::signless_hereditary_f, "signless_hereditary_f", Tier::theorem, true, true, false, true, false),
    };
    return table;
}

const Entry* find_entry(const std::string& id) {
    for (const Entry& e : entries())
        if (e.meta.id == id) return &e;
    return nullptr;
}

double binom2(long long m) { return m < 2 ? 0.0 : 0.5 * static_cast<double>(m) * (m - 1); }

// floor with a small nudge so that analytically integral values are not
// pushed down by representation error; arguments here are < 1e6.
double safe_floor(double x) { return std::floor(x + 1e-9); }

}  // namespace

const std::vector<BoundMeta>& bound_registry() {
    static const std::vector<BoundMeta> metas = [] {
        std::vector<BoundMeta> out;
        for (const Entry& e : entries()) out.push_back(e.meta);
        return out;
    }();
    return metas;
}

const BoundMeta* find_bound(const std::string& id) {
    const Entry* e = find_entry(id);
    return e ? &e->meta : nullptr;
}

EvalContext::EvalContext(const SimplicialComplex& x, std::string instance_id,
                         const PartiteStructure* partition, Assumptions assumptions, double tol)
    : x_(x),
      instance_id_(std::move(instance_id)),
      partition_(partition),
      assumptions_(std::move(assumptions)),
      tol_(tol) {}

const SpectrumSummary& EvalContext::upper_spectrum(int r, bool signless) {
    auto key = std::make_pair(r, signless);
    auto it = spectra_.find(key);
    if (it != spectra_.end()) return it->second;
    SpectrumSummary s;
    if (r > x_.dim()) {
        // B_r is empty: the Laplacian is the zero matrix on X(r-1).
        s = SpectrumSummary(std::vector<double>(x_.f(r - 1), 0.0), 1e-9);
    } else {
        s = sym_spectrum(laplacian(
            x_, signless ? OperatorKind::signless_upper : OperatorKind::upper_laplacian, r));
    }
    return spectra_.emplace(key, std::move(s)).first->second;
}

const DegreeProfile& EvalContext::profile(int r) {
    auto it = profiles_.find(r);
    if (it != profiles_.end()) return it->second;
    return profiles_.emplace(r, degree_profile(x_, r, partition_)).first->second;
}

const std::vector<int>& EvalContext::degrees_desc() {
    if (!degrees_desc_) {
        std::vector<int> d(x_.num_vertices(), 0);
        if (x_.dim() >= 1)
            for (const Face& e : x_.faces(1)) {
                ++d[e[0]];
                ++d[e[1]];
            }
        std::sort(d.begin(), d.end(), std::greater<int>());
        degrees_desc_ = std::move(d);
    }
    return *degrees_desc_;
}

const std::vector<int>& EvalContext::conjugate() {
    if (!conjugate_) conjugate_ = conjugate_sequence(degrees_desc(), x_.num_vertices());
    return *conjugate_;
}

namespace {

bool partite_applies(EvalContext& ctx, int r) {
    const PartiteStructure* p = ctx.partition();
    return p != nullptr && ctx.complex().dim() == r &&
           static_cast<int>(p->classes.size()) == r + 1;
}

// Exact max of |E(G[S])| over |S| = 2k by subset enumeration (n <= 16), or a
// greedy + local-swap lower bound beyond. Returns {count, S, exact}.
struct InducedMax {
    int edges = 0;
    std::vector<int> s;
    bool exact = true;
};

InducedMax induced_2k_max(EvalContext& ctx, int k) {
    const SimplicialComplex& g = ctx.complex();
    const int n = g.num_vertices();
    const int size = 2 * k;
    std::vector<unsigned> nbr(n, 0);
    if (g.dim() >= 1)
        for (const Face& e : g.faces(1)) {
            nbr[e[0]] |= 1u << e[1];
            nbr[e[1]] |= 1u << e[0];
        }
    InducedMax best;
    if (n <= 16) {
        // Enumerate all C(n, 2k) subsets via mask iteration.
        unsigned mask = (1u << size) - 1;
        const unsigned limit = 1u << n;
        while (mask < limit) {
            int count = 0;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) count += __builtin_popcount(nbr[v] & mask);
            count /= 2;
            if (count > best.edges) {
                best.edges = count;
                best.s.clear();
                for (int v = 0; v < n; ++v)
                    if (mask & (1u << v)) best.s.push_back(g.label(v));
            }
            // Next subset of the same popcount (Gosper's hack).
            unsigned c = mask & -mask;
            unsigned r = mask + c;
            if (r >= limit || c == 0) break;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        if (best.s.empty())
            for (int v = 0; v < size; ++v) best.s.push_back(g.label(v));
        return best;
    }

    // Greedy seed: the 2k highest-degree vertices, then 1-swap hill climbing.
    best.exact = false;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return __builtin_popcount(nbr[a]) > __builtin_popcount(nbr[b]);
    });
    std::vector<char> in(n, 0);
    for (int i = 0; i < size; ++i) in[order[i]] = 1;
    auto count_edges = [&]() {
        int c = 0;
        for (int v = 0; v < n; ++v)
            if (in[v])
                for (int u = v + 1; u < n; ++u)
                    if (in[u] && (nbr[v] & (1u << u))) ++c;
        return c;
    };
    int current = count_edges();
    bool improved = true;
    int guard = 0;
    while (improved && guard++ < 200) {
        improved = false;
        for (int v = 0; v < n && !improved; ++v) {
            if (!in[v]) continue;
            for (int u = 0; u < n && !improved; ++u) {
                if (in[u]) continue;
                in[v] = 0;
                in[u] = 1;
                int c = count_edges();
                if (c > current) {
                    current = c;
                    improved = true;
                } else {
                    in[v] = 1;
                    in[u] = 0;
                }
            }
        }
    }
    best.edges = current;
    for (int v = 0; v < n; ++v)
        if (in[v]) best.s.push_back(g.label(v));
    return best;
}

HereditaryFamily single_family(const EvalContext& ctx) {
    const auto& fams = ctx.assumptions().hereditary;
    if (fams.size() != 1)
        throw family_assumption_error(
            "hereditary_f needs exactly one asserted family (got " + std::to_string(fams.size()) + ")");
    return fams.front();
}

double hereditary_f2k(EvalContext& ctx, HereditaryFamily fam, int k) {
    switch (fam) {
        case HereditaryFamily::forest: return 2.0 * k - 1.0;
        case HereditaryFamily::max_degree: {
            int delta = max_vertex_degree(ctx.complex());
            return static_cast<double>(k) * std::min(delta, k);
        }
        case HereditaryFamily::planar:
            // max edges of a planar graph on 2k vertices; 3n-6 only from n=3
            return k == 1 ? 1.0 : 6.0 * k - 6.0;
        case HereditaryFamily::square_free:
            return safe_floor(k * (1.0 + std::sqrt(8.0 * k - 3.0)) / 2.0);
        case HereditaryFamily::girth5: return safe_floor(k * std::sqrt(2.0 * k - 1.0));
        case HereditaryFamily::no_path: {
            int t = ctx.assumptions().no_path_t;
            return static_cast<double>(k) * (t - 1);
        }
        case HereditaryFamily::no_long_cycle: {
            long long t = ctx.assumptions().no_long_cycle_t;
            return static_cast<double>((t * (2LL * k - 1)) / 2);
        }
    }
    throw contract_error("hereditary_f2k: unreachable");
}

}  // namespace

KRange paper_valid_k_range(const BoundMeta& meta, EvalContext& ctx, int r) {
    const Entry* e = find_entry(meta.id);
    if (e == nullptr) return {};
    const SimplicialComplex& x = ctx.complex();
    if (meta.graph_only) {
        if (x.dim() > 1 || r != 1) return {};
    } else {
        if (r < 1 || r > x.dim()) return {};
    }
    if (meta.needs_partition && !partite_applies(ctx, r)) return {};
    const int n = ctx.n();
    const int fr1 = x.f(r - 1);
    KRange kr;
    if (meta.k_is_one) {
        kr.hi = fr1 >= 1 ? 1 : 0;
        return kr;
    }
    switch (e->id) {
        case Id::degree_sum_main:
        case Id::witness_max_form:
        case Id::signless_degree_sum: kr.hi = fr1 / (r + 1); break;
        case Id::binom_complex:
        case Id::signless_binom_complex:
        case Id::duval_reiner:
        case Id::signless_duval_reiner:
        case Id::higher_brouwer:
        case Id::partite_degree_sum:
        case Id::signless_partite_degree_sum: kr.hi = fr1; break;
        case Id::main_plus_bai: kr.hi = (n - 1) / 2; break;
        case Id::brouwer_min_binom: kr.hi = n - 1; break;
        case Id::induced_2k:
        case Id::signless_induced_2k: kr.hi = n / 2; break;
        default: kr.hi = n; break;  // graph-wide ids: 1 <= k <= |V|
    }
    return kr;
}

BoundReport evaluate_bound(const std::string& id, EvalContext& ctx, int r, int k,
                           bool want_witness) {
    const Entry* e = find_entry(id);
    if (e == nullptr) throw inapplicable_bound_error("unknown bound id: " + id);
    const BoundMeta& meta = e->meta;
    const SimplicialComplex& x = ctx.complex();

    if (meta.graph_only && (x.dim() > 1 || r != 1))
        throw inapplicable_bound_error(id + ": graph bound needs dim(X) <= 1 and r = 1");
    if (!meta.graph_only && (r < 1 || r > x.dim()))
        throw inapplicable_bound_error(id + ": needs 1 <= r <= dim(X)");
    if (meta.needs_partition && !partite_applies(ctx, r))
        throw inapplicable_bound_error(id + ": needs an (r+1)-partite structure with dim(X) = r");

    KRange kr = paper_valid_k_range(meta, ctx, r);
    if (!kr.contains(k))
        throw inapplicable_bound_error(id + ": k = " + std::to_string(k) + " outside its range");

    if (meta.needs_family) {
        HereditaryFamily fam = single_family(ctx);
        if (e->id == Id::signless_hereditary_f && fam == HereditaryFamily::max_degree)
            throw inapplicable_bound_error(
                "signless_hereditary_f: the max_degree instantiation has no signless analogue");
        verify_family(x, fam, ctx.assumptions());
    }
    if (e->id == Id::signless_trianglefree_k2) {
        if (ctx.n() <= 12) {
            if (!is_triangle_free(x))
                throw inapplicable_bound_error("signless_trianglefree_k2: graph has a triangle");
        } else if (!ctx.assumptions().triangle_free) {
            throw inapplicable_bound_error(
                "signless_trianglefree_k2: assert triangle_free for n > 12");
        }
    }

    BoundReport rep;
    rep.bound_id = meta.id;
    rep.instance_id = ctx.instance_id();
    rep.r = r;
    rep.k = k;
    rep.tier = meta.tier;

    const SpectrumSummary& spec = ctx.upper_spectrum(r, meta.signless);
    double eigen_sum = spec.top_k_sum_clamped(k);
    rep.lhs = eigen_sum;
    const double edges = x.f(1);

    switch (e->id) {
        case Id::anderson_morley: {
            const auto& d = ctx.degrees_desc();
            rep.rhs = (d.size() > 0 ? d[0] : 0) + (d.size() > 1 ? d[1] : 0);
            break;
        }
        case Id::am_edgewise: {
            std::vector<int> deg(x.num_vertices(), 0);
            if (x.dim() >= 1)
                for (const Face& edge : x.faces(1)) {
                    ++deg[edge[0]];
                    ++deg[edge[1]];
                }
            int best = 0;
            Face arg;
            if (x.dim() >= 1)
                for (const Face& edge : x.faces(1)) {
                    int v = deg[edge[0]] + deg[edge[1]];
                    if (v > best) {
                        best = v;
                        arg = edge;
                    }
                }
            rep.rhs = best;
            if (want_witness && !arg.empty())
                rep.witness = nlohmann::ordered_json{{"edge", {x.label(arg[0]), x.label(arg[1])}}};
            break;
        }
        case Id::grone_merris_lower: {
            // <=-normal form: degree sum <= eigenvalue sum.
            const auto& d = ctx.degrees_desc();
            long long s = 0;
            for (int i = 0; i < k; ++i) s += d[i];
            rep.lhs = static_cast<double>(s);
            rep.rhs = eigen_sum;
            break;
        }
        case Id::bai: {
            const auto& c = ctx.conjugate();
            long long s = 0;
            for (int i = 0; i < k; ++i) s += c[i];
            rep.rhs = static_cast<double>(s);
            break;
        }
        case Id::brouwer: rep.rhs = edges + binom2(k + 1); break;
        case Id::weak_brouwer_old: {
            double a = 2.0 * k * k - std::ceil(k / 2.0);
            double b = static_cast<double>(k) * k + 15.0 * k * std::log(static_cast<double>(k)) + 65.0 * k;
            rep.rhs = edges + std::min(a, b);
            break;
        }
        case Id::degree_sum_main:
        case Id::signless_degree_sum: {
            rep.rhs = static_cast<double>(ctx.profile(r).top_degree_sum((r + 1) * k));
            break;
        }
        case Id::witness_max_form: {
            const DegreeProfile& p = ctx.profile(r);
            const int take = (r + 1) * k;
            rep.rhs = static_cast<double>(p.top_degree_sum(take));
            if (want_witness) {
                nlohmann::ordered_json faces = nlohmann::ordered_json::array();
                for (int i = 0; i < take; ++i) {
                    const Face& f = x.faces(r - 1)[p.sorted_faces[i]];
                    nlohmann::ordered_json jf = nlohmann::ordered_json::array();
                    for (int v : f) jf.push_back(x.label(v));
                    faces.push_back(std::move(jf));
                }
                rep.witness = nlohmann::ordered_json{{"A", std::move(faces)}};
            }
            break;
        }
        case Id::binom_complex:
        case Id::signless_binom_complex:
            rep.rhs = x.f(r) + binom2(static_cast<long long>(r + 1) * k);
            break;
        case Id::k_squared: rep.rhs = edges + static_cast<double>(k) * k; break;
        case Id::main_plus_bai: {
            const auto& d = ctx.degrees_desc();
            const int n = ctx.n();
            long long plus = 0, minus = 0;
            for (int i = 0; i < 2 * k && i < n; ++i) plus += std::min(d[i], k);
            for (int i = 2 * k; i < n; ++i) minus += std::max(0, d[i] - k);
            rep.rhs = edges + 0.5 * static_cast<double>(plus - minus);
            break;
        }
        case Id::brouwer_min_binom:
            rep.rhs = edges + binom2(k + 1) + std::min(binom2(ctx.n() - k - 1), binom2(k));
            break;
        case Id::partite_degree_sum:
        case Id::signless_partite_degree_sum: {
            const DegreeProfile& p = ctx.profile(r);
            double s = 0;
            nlohmann::ordered_json profs = nlohmann::ordered_json::array();
            for (const auto& prof : p.partite_profiles) {
                int take = std::min<int>(k, static_cast<int>(prof.size()));
                nlohmann::ordered_json jp = nlohmann::ordered_json::array();
                for (int i = 0; i < take; ++i) {
                    s += prof[i];
                    jp.push_back(prof[i]);
                }
                profs.push_back(std::move(jp));
            }
            rep.rhs = s;
            if (want_witness) rep.witness = nlohmann::ordered_json{{"class_profiles", std::move(profs)}};
            break;
        }
        case Id::duval_reiner:
        case Id::signless_duval_reiner: {
            const DegreeProfile& p = ctx.profile(r);
            long long s = 0;
            for (int dv : p.vertex_degrees) s += std::min(dv, k);
            rep.rhs = static_cast<double>(s);
            if (partite_applies(ctx, r)) rep.tier = Tier::theorem;
            break;
        }
        case Id::higher_brouwer:
            rep.rhs = x.f(r) + binom2(k) + static_cast<double>(r) * k;
            break;
        case Id::brouwer_plus: {
            const auto& d = ctx.degrees_desc();
            long long s = 0;
            for (int i = 0; i < k; ++i) s += std::min(d[i], k);
            rep.rhs = edges + 0.5 * k + 0.5 * static_cast<double>(s);
            if (want_witness && k == ctx.n())
                rep.witness = nlohmann::ordered_json{{"k_equals_n", true}};
            break;
        }
        case Id::induced_2k:
        case Id::signless_induced_2k: {
            InducedMax im = induced_2k_max(ctx, k);
            rep.rhs = edges + im.edges;
            if (want_witness)
                rep.witness = nlohmann::ordered_json{
                    {"S", im.s}, {"induced_edges", im.edges}, {"exact", im.exact}};
            break;
        }
        case Id::hereditary_f:
        case Id::signless_hereditary_f: {
            HereditaryFamily fam = single_family(ctx);
            double f2k = hereditary_f2k(ctx, fam, k);
            rep.rhs = edges + f2k;
            if (want_witness) {
                nlohmann::ordered_json w{{"family", to_string(fam)}, {"f_2k", f2k}};
                if (fam == HereditaryFamily::max_degree) w["delta"] = max_vertex_degree(x);
                rep.witness = std::move(w);
            }
            break;
        }
        case Id::lambda1_fww: {
            const DegreeProfile& p = ctx.profile(r);
            long long best = 0;
            const Face* arg = nullptr;
            for (const Face& tau : x.faces(r)) {
                long long s = 0;
                for (size_t drop = 0; drop < tau.size(); ++drop) {
                    Face sigma;
                    for (size_t i = 0; i < tau.size(); ++i)
                        if (i != drop) sigma.push_back(tau[i]);
                    s += p.degree_of[x.face_index(r - 1, sigma)];
                }
                if (s > best) {
                    best = s;
                    arg = &tau;
                }
            }
            rep.rhs = static_cast<double>(best);
            if (want_witness && arg != nullptr) {
                nlohmann::ordered_json jt = nlohmann::ordered_json::array();
                for (int v : *arg) jt.push_back(x.label(v));
                rep.witness = nlohmann::ordered_json{{"tau", std::move(jt)}};
            }
            break;
        }
        case Id::lambda1_fr_plus_r: rep.rhs = x.f(r) + static_cast<double>(r); break;
        case Id::signless_aot: rep.rhs = edges + binom2(k + 1); break;
        case Id::signless_trianglefree_k2: rep.rhs = edges + static_cast<double>(k) * k; break;
    }

    rep.slack = rep.rhs - rep.lhs;
    rep.holds = rep.slack >= -ctx.tol();
    return rep;
}

BoundReport evaluate_bound(const std::string& id, const SimplicialComplex& x, int r, int k,
                           const Assumptions& assumptions, const PartiteStructure* partition,
                           double tol) {
    EvalContext ctx(x, "adhoc", partition, assumptions, tol);
    return evaluate_bound(id, ctx, r, k);
}

}  // namespace lb
