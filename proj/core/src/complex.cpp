#include "lapbound/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lapbound/errors.hpp"

namespace lb {

SimplicialComplex::SimplicialComplex() : faces_(1) { faces_[0] = {Face{}}; }

int SimplicialComplex::f(int d) const {
    if (d < -1 || d > dim()) return 0;
    return static_cast<int>(faces_[d + 1].size());
}

const std::vector<Face>& SimplicialComplex::faces(int d) const {
    if (d < -1 || d > dim()) throw contract_error("faces: dimension out of range");
    return faces_[d + 1];
}

int SimplicialComplex::face_index(int d, const Face& face) const {
    if (d < -1 || d > dim()) return -1;
    const auto& fs = faces_[d + 1];
    auto it = std::lower_bound(fs.begin(), fs.end(), face);
    if (it == fs.end() || *it != face) return -1;
    return static_cast<int>(it - fs.begin());
}

bool SimplicialComplex::has_face(const Face& face) const {
    return face_index(face_dim(face), face) >= 0;
}

int SimplicialComplex::vertex_index(int label) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

std::vector<Face> SimplicialComplex::facets() const {
    // A d-face is maximal iff it lies in no (d+1)-face.
    std::vector<Face> out;
    for (int d = dim(); d >= 0; --d) {
        for (const Face& face : faces(d)) {
            if (d == dim() || face_degree(face, d + 1) == 0) out.push_back(face);
        }
    }
    return out;
}

int SimplicialComplex::face_degree(const Face& face, int r) const {
    if (r < 0 || r > dim()) return 0;
    if (face_dim(face) > r) return 0;
    int count = 0;
    for (const Face& tau : faces(r)) {
        if (std::includes(tau.begin(), tau.end(), face.begin(), face.end())) ++count;
    }
    return count;
}

SimplicialComplex SimplicialComplex::from_internal(std::vector<int> labels, std::vector<Face> faces) {
    SimplicialComplex x;
    x.labels_ = std::move(labels);
    std::vector<std::set<Face>> by_dim;
    auto ensure_dim = [&](int d) {
        if (static_cast<int>(by_dim.size()) < d + 1) by_dim.resize(d + 1);
    };
    // Downward closure over internal indices.
    for (Face& face : faces) {
        std::sort(face.begin(), face.end());
        const int m = static_cast<int>(face.size());
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            Face sub;
            for (int b = 0; b < m; ++b)
                if (mask & (1u << b)) sub.push_back(face[b]);
            ensure_dim(face_dim(sub));
            by_dim[face_dim(sub)].insert(std::move(sub));
        }
    }
    x.faces_.resize(by_dim.size() + 1);
    x.faces_[0] = {Face{}};
    for (size_t d = 0; d < by_dim.size(); ++d)
        x.faces_[d + 1] = std::vector<Face>(by_dim[d].begin(), by_dim[d].end());
    return x;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<int>>& facet_labels,
                                                 const std::vector<int>& extra_vertices) {
    // Pin the vertex order: first appearance across the facet list (ties
    // within one facet by ascending label), then leftover vertices ascending.
    std::vector<int> order;
    std::set<int> seen;
    for (const auto& facet : facet_labels) {
        if (facet.empty()) throw malformed_input_error("empty facet");
        std::set<int> distinct(facet.begin(), facet.end());
        if (distinct.size() != facet.size())
            throw malformed_input_error("facet contains a duplicate vertex");
        for (int v : distinct) {
            if (seen.insert(v).second) order.push_back(v);
        }
    }
    std::set<int> extras(extra_vertices.begin(), extra_vertices.end());
    for (int v : extras) {
        if (seen.insert(v).second) order.push_back(v);
    }

    std::map<int, int> index_of;
    for (int i = 0; i < static_cast<int>(order.size()); ++i) index_of[order[i]] = i;

    std::vector<Face> internal_facets;
    internal_facets.reserve(facet_labels.size() + order.size());
    for (const auto& facet : facet_labels) {
        Face f;
        f.reserve(facet.size());
        for (int v : facet) f.push_back(index_of.at(v));
        internal_facets.push_back(std::move(f));
    }
    // Isolated vertices still contribute 0-faces.
    for (int i = 0; i < static_cast<int>(order.size()); ++i) internal_facets.push_back(Face{i});

    return from_internal(std::move(order), std::move(internal_facets));
}

SimplicialComplex build_complex(const std::vector<std::vector<int>>& facet_labels,
                                const std::vector<int>& extra_vertices) {
    return SimplicialComplex::from_facets(facet_labels, extra_vertices);
}

SimplicialComplex complement_graph(const SimplicialComplex& g) {
    if (g.dim() > 1) throw contract_error("complement_graph: dim > 1");
    const int n = g.num_vertices();
    std::vector<Face> faces;
    for (int i = 0; i < n; ++i) {
        faces.push_back(Face{i});
        for (int j = i + 1; j < n; ++j)
            if (!g.has_face(Face{i, j})) faces.push_back(Face{i, j});
    }
    return SimplicialComplex::from_internal(g.labels(), std::move(faces));
}

SimplicialComplex join_cone(const SimplicialComplex& x, const std::vector<int>& sigma_labels) {
    if (sigma_labels.empty()) throw contract_error("join_cone: sigma is empty");
    std::set<int> sigma(sigma_labels.begin(), sigma_labels.end());
    if (sigma.size() != sigma_labels.size()) throw contract_error("join_cone: duplicate cone vertex");
    for (int v : sigma)
        if (x.vertex_index(v) >= 0) throw contract_error("join_cone: sigma overlaps V(X)");

    const int n = x.num_vertices();
    const int s = static_cast<int>(sigma.size());
    std::vector<int> labels = x.labels();
    for (int v : sigma) labels.push_back(v);  // cone vertices last in the order

    // Facets of X*sigma are facet(X) union sigma; sigma's internal indices
    // n..n+s-1 exceed every index of X, so tuples stay increasing.
    std::vector<Face> faces;
    for (const Face& facet : x.facets()) {
        Face lifted = facet;
        for (int i = 0; i < s; ++i) lifted.push_back(n + i);
        faces.push_back(std::move(lifted));
    }
    if (x.num_vertices() == 0) {
        Face full;
        for (int i = 0; i < s; ++i) full.push_back(n + i);
        faces.push_back(std::move(full));
    }
    return SimplicialComplex::from_internal(std::move(labels), std::move(faces));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& x, const std::vector<int>& s_labels) {
    std::set<int> s;
    for (int label : s_labels) {
        int idx = x.vertex_index(label);
        if (idx >= 0) s.insert(idx);
    }
    // Survivors keep their ambient relative order.
    std::vector<int> labels;
    std::vector<int> remap(x.num_vertices(), -1);
    for (int v = 0; v < x.num_vertices(); ++v)
        if (s.count(v)) {
            remap[v] = static_cast<int>(labels.size());
            labels.push_back(x.label(v));
        }
    std::vector<Face> faces;
    for (const Face& facet : x.facets()) {
        Face kept;
        for (int v : facet)
            if (remap[v] >= 0) kept.push_back(remap[v]);
        if (!kept.empty()) faces.push_back(std::move(kept));
    }
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) faces.push_back(Face{i});
    return SimplicialComplex::from_internal(std::move(labels), std::move(faces));
}

std::optional<PartiteStructure> partite_classes(const SimplicialComplex& x) {
    const int n = x.num_vertices();
    const int r = x.dim();
    if (r < 0) return PartiteStructure{};
    if (n > 24) throw contract_error("partite_classes: n > 24, supply a partition explicitly");
    const int num_classes = r + 1;

    // Every face is rainbow iff every 1-face is bichromatic (faces are
    // downward closed), so this is proper coloring of the 1-skeleton.
    std::vector<std::vector<int>> adj(n);
    if (r >= 1)
        for (const Face& e : x.faces(1)) {
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return adj[a].size() > adj[b].size(); });

    std::vector<int> color(n, -1);
    auto backtrack = [&](auto&& self, int pos, int used) -> bool {
        if (pos == n) return true;
        const int v = order[pos];
        // Symmetry break: at most one fresh class may be opened per step.
        for (int c = 0; c < std::min(num_classes, used + 1); ++c) {
            bool ok = true;
            for (int u : adj[v])
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (self(self, pos + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    if (!backtrack(backtrack, 0, 0)) return std::nullopt;

    PartiteStructure p;
    p.classes.assign(num_classes, {});
    p.class_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        p.class_of[v] = color[v];
        p.classes[color[v]].push_back(v);
    }
    return p;
}

PartiteStructure make_partite_structure(const SimplicialComplex& x,
                                        const std::vector<std::vector<int>>& class_labels) {
    const int n = x.num_vertices();
    PartiteStructure p;
    p.classes.resize(class_labels.size());
    p.class_of.assign(n, -1);
    for (size_t c = 0; c < class_labels.size(); ++c) {
        for (int label : class_labels[c]) {
            int v = x.vertex_index(label);
            if (v < 0) throw malformed_input_error("partition names an unknown vertex");
            if (p.class_of[v] != -1) throw malformed_input_error("partition classes overlap");
            p.class_of[v] = static_cast<int>(c);
            p.classes[c].push_back(v);
        }
    }
    for (int v = 0; v < n; ++v)
        if (p.class_of[v] == -1) throw malformed_input_error("partition does not cover the vertex set");
    for (int d = 1; d <= x.dim(); ++d)
        for (const Face& face : x.faces(d)) {
            std::set<int> used;
            for (int v : face)
                if (!used.insert(p.class_of[v]).second)
                    throw malformed_input_error("a face meets a partition class twice");
        }
    return p;
}

std::vector<std::vector<int>> connected_components(const SimplicialComplex& x) {
    const int n = x.num_vertices();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> adj(n);
    if (x.dim() >= 1)
        for (const Face& e : x.faces(1)) {
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }
    std::vector<std::vector<int>> out;
    for (int start = 0; start < n; ++start) {
        if (comp[start] != -1) continue;
        const int c = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{start};
        comp[start] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[c].push_back(x.label(v));
            for (int u : adj[v])
                if (comp[u] == -1) {
                    comp[u] = c;
                    stack.push_back(u);
                }
        }
        std::sort(out[c].begin(), out[c].end());
    }
    return out;
}

bool is_connected(const SimplicialComplex& x) { return connected_components(x).size() <= 1; }

}  // namespace lb
