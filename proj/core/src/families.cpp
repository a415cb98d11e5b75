#include "lapbound/families.hpp"

#include <algorithm>

#include "lapbound/errors.hpp"

namespace lb {

std::string to_string(HereditaryFamily fam) {
    switch (fam) {
        case HereditaryFamily::forest: return "forest";
        case HereditaryFamily::max_degree: return "max_degree";
        case HereditaryFamily::planar: return "planar";
        case HereditaryFamily::square_free: return "square_free";
        case HereditaryFamily::girth5: return "girth5";
        case HereditaryFamily::no_path: return "no_path";
        case HereditaryFamily::no_long_cycle: return "no_long_cycle";
    }
    return "unknown";
}

std::optional<HereditaryFamily> hereditary_family_from_string(const std::string& name) {
    for (HereditaryFamily fam :
         {HereditaryFamily::forest, HereditaryFamily::max_degree, HereditaryFamily::planar,
          HereditaryFamily::square_free, HereditaryFamily::girth5, HereditaryFamily::no_path,
          HereditaryFamily::no_long_cycle})
        if (to_string(fam) == name) return fam;
    return std::nullopt;
}

bool Assumptions::has(HereditaryFamily fam) const {
    return std::find(hereditary.begin(), hereditary.end(), fam) != hereditary.end();
}

Assumptions parse_assumptions(const std::vector<std::string>& names) {
    Assumptions a;
    for (const std::string& raw : names) {
        std::string name = raw;
        int value = -1;
        auto eq = raw.find('=');
        if (eq != std::string::npos) {
            name = raw.substr(0, eq);
            try {
                value = std::stoi(raw.substr(eq + 1));
            } catch (const std::exception&) {
                throw malformed_input_error("assumption parameter is not an integer: " + raw);
            }
        }
        if (name == "triangle_free") {
            a.triangle_free = true;
            continue;
        }
        auto fam = hereditary_family_from_string(name);
        if (!fam) throw malformed_input_error("unknown family assumption: " + name);
        if (*fam == HereditaryFamily::no_path || *fam == HereditaryFamily::no_long_cycle) {
            if (value < 1) throw malformed_input_error("assumption needs a parameter, e.g. no_path=4");
            if (*fam == HereditaryFamily::no_path) a.no_path_t = value;
            else a.no_long_cycle_t = value;
        }
        a.hereditary.push_back(*fam);
    }
    return a;
}

namespace {

std::vector<std::vector<int>> adjacency(const SimplicialComplex& g) {
    if (g.dim() > 1) throw contract_error("family check: not a graph");
    std::vector<std::vector<int>> adj(g.num_vertices());
    if (g.dim() >= 1)
        for (const Face& e : g.faces(1)) {
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }
    return adj;
}

}  // namespace

bool is_forest(const SimplicialComplex& g) {
    if (g.dim() > 1) throw contract_error("family check: not a graph");
    const int n = g.num_vertices();
    std::vector<int> uf(n);
    for (int i = 0; i < n; ++i) uf[i] = i;
    auto find = [&](int v) {
        while (uf[v] != v) v = uf[v] = uf[uf[v]];
        return v;
    };
    if (g.dim() >= 1)
        for (const Face& e : g.faces(1)) {
            int a = find(e[0]), b = find(e[1]);
            if (a == b) return false;
            uf[a] = b;
        }
    return true;
}

bool is_triangle_free(const SimplicialComplex& g) {
    if (g.dim() < 1) return true;
    for (const Face& e : g.faces(1))
        for (int w = 0; w < g.num_vertices(); ++w) {
            if (w == e[0] || w == e[1]) continue;
            Face a{std::min(w, e[0]), std::max(w, e[0])};
            Face b{std::min(w, e[1]), std::max(w, e[1])};
            if (g.has_face(a) && g.has_face(b)) return false;
        }
    return true;
}

bool is_square_free(const SimplicialComplex& g) {
    // A 4-cycle exists iff two vertices share two common neighbors.
    const int n = g.num_vertices();
    auto adj = adjacency(g);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int common = 0;
            for (int w : adj[u])
                if (w != v && std::find(adj[v].begin(), adj[v].end(), w) != adj[v].end()) ++common;
            if (common >= 2) return false;
        }
    return true;
}

bool has_girth_at_least_5(const SimplicialComplex& g) {
    return is_triangle_free(g) && is_square_free(g);
}

int max_vertex_degree(const SimplicialComplex& g) {
    auto adj = adjacency(g);
    int best = 0;
    for (const auto& nbrs : adj) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

namespace {

std::vector<unsigned> adjacency_masks(const SimplicialComplex& g) {
    const int n = g.num_vertices();
    if (n > 12) throw contract_error("longest path/cycle: n > 12, assert the family explicitly");
    std::vector<unsigned> nbr(n, 0);
    if (g.dim() >= 1)
        for (const Face& e : g.faces(1)) {
            nbr[e[0]] |= 1u << e[1];
            nbr[e[1]] |= 1u << e[0];
        }
    return nbr;
}

}  // namespace

int longest_path_edges(const SimplicialComplex& g) {
    const int n = g.num_vertices();
    if (n == 0) return 0;
    auto nbr = adjacency_masks(g);
    // reach[mask][v]: some simple path covers mask and ends at v.
    std::vector<std::vector<char>> reach(1u << n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v) reach[1u << v][v] = 1;
    int best = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        for (int v = 0; v < n; ++v) {
            if (!reach[mask][v]) continue;
            best = std::max(best, __builtin_popcount(mask) - 1);
            unsigned free = nbr[v] & ~mask;
            while (free) {
                int u = __builtin_ctz(free);
                free &= free - 1;
                reach[mask | (1u << u)][u] = 1;
            }
        }
    return best;
}

int longest_cycle_edges(const SimplicialComplex& g) {
    const int n = g.num_vertices();
    if (n == 0) return 0;
    auto nbr = adjacency_masks(g);
    int best = 0;
    // Root every cycle at its lowest vertex s; paths may only use
    // vertices >= s, so relabel s..n-1 to 0..m-1.
    for (int s = 0; s + 2 < n; ++s) {
        const int m = n - s;
        std::vector<std::vector<char>> dp(1u << m, std::vector<char>(m, 0));
        dp[1][0] = 1;
        for (unsigned mask = 1; mask < (1u << m); mask += 2) {
            for (int v = 0; v < m; ++v) {
                if (!dp[mask][v]) continue;
                if (__builtin_popcount(mask) >= 3 && (nbr[s + v] & (1u << s)))
                    best = std::max(best, __builtin_popcount(mask));
                unsigned cand = (nbr[s + v] >> s) & ~mask;
                while (cand) {
                    int u = __builtin_ctz(cand);
                    cand &= cand - 1;
                    dp[mask | (1u << u)][u] = 1;
                }
            }
        }
    }
    return best;
}

void verify_family(const SimplicialComplex& g, HereditaryFamily fam, const Assumptions& a) {
    const int n = g.num_vertices();
    if (fam == HereditaryFamily::planar) return;  // assertion only
    if (fam == HereditaryFamily::max_degree) return;
    if (n > 12) return;  // trusted beyond the brute-force scale
    bool ok = true;
    switch (fam) {
        case HereditaryFamily::forest: ok = is_forest(g); break;
        case HereditaryFamily::square_free: ok = is_square_free(g); break;
        case HereditaryFamily::girth5: ok = has_girth_at_least_5(g); break;
        case HereditaryFamily::no_path: ok = longest_path_edges(g) < a.no_path_t; break;
        case HereditaryFamily::no_long_cycle: ok = longest_cycle_edges(g) <= a.no_long_cycle_t; break;
        default: break;
    }
    if (!ok) throw family_assumption_error("graph fails the asserted family: " + to_string(fam));
}

}  // namespace lb
