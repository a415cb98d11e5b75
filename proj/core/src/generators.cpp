#include "lapbound/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "lapbound/errors.hpp"
#include "lapbound/io.hpp"
#include "lapbound/operators.hpp"
#include "lapbound/spectra.hpp"

namespace lb {

SimplicialComplex gen_star(int n) {
    if (n < 2) throw contract_error("gen_star: n < 2");
    std::vector<std::vector<int>> facets;
    for (int i = 2; i <= n; ++i) facets.push_back({1, i});
    return build_complex(facets);
}

SimplicialComplex gen_path(int n) {
    if (n < 2) throw contract_error("gen_path: n < 2");
    std::vector<std::vector<int>> facets;
    for (int i = 1; i < n; ++i) facets.push_back({i, i + 1});
    return build_complex(facets);
}

SimplicialComplex gen_star_forest(const std::vector<int>& sizes) {
    if (sizes.empty()) throw contract_error("gen_star_forest: no components");
    std::vector<std::vector<int>> facets;
    int base = 0;
    for (int s : sizes) {
        if (s < 2) throw contract_error("gen_star_forest: component size < 2");
        for (int i = 2; i <= s; ++i) facets.push_back({base + 1, base + i});
        base += s;
    }
    return build_complex(facets);
}

SimplicialComplex gen_matching_complex(int r, int m, int s) {
    if (r < 1 || m < 1 || s < 0 || s > r - 1)
        throw contract_error("gen_matching_complex: need r >= 1, m >= 1, 0 <= s <= r-1");
    // sigma = {1..s}; tau_i blocks of size r+1-s after it.
    std::vector<std::vector<int>> facets;
    int next = s + 1;
    for (int i = 0; i < m; ++i) {
        std::vector<int> facet;
        for (int v = 1; v <= s; ++v) facet.push_back(v);
        for (int t = 0; t < r + 1 - s; ++t) facet.push_back(next++);
        facets.push_back(std::move(facet));
    }
    SimplicialComplex x = build_complex(facets);
    if (x.f(r) * (r + 1) != x.f(r - 1))
        throw internal_consistency_error("gen_matching_complex: f_r != f_{r-1}/(r+1)");
    return x;
}

SimplicialComplex gen_brouwer_equality(int k, int b) {
    if (k < 1 || b < 0) throw contract_error("gen_brouwer_equality: need k >= 1, b >= 0");
    // A = {1..k} clique, B = {k+1..k+b} independent, complete A-B join.
    std::vector<std::vector<int>> facets;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) facets.push_back({i, j});
    for (int i = 1; i <= k; ++i)
        for (int j = k + 1; j <= k + b; ++j) facets.push_back({i, j});
    std::vector<int> verts;
    for (int i = 1; i <= k + b; ++i) verts.push_back(i);
    return build_complex(facets, verts);
}

std::pair<SimplicialComplex, PartiteStructure> gen_complete_partite_complex(
    int r, const std::vector<int>& sizes) {
    if (static_cast<int>(sizes.size()) != r + 1)
        throw contract_error("gen_complete_partite_complex: need r+1 class sizes");
    for (int s : sizes)
        if (s < 1) throw contract_error("gen_complete_partite_complex: class size < 1");
    std::vector<std::vector<int>> classes(r + 1);
    int next = 1;
    for (int c = 0; c <= r; ++c)
        for (int i = 0; i < sizes[c]; ++i) classes[c].push_back(next++);

    // Facets: one vertex from each class (the product of the classes).
    std::vector<std::vector<int>> facets;
    std::vector<int> pick(r + 1, 0);
    while (true) {
        std::vector<int> facet;
        for (int c = 0; c <= r; ++c) facet.push_back(classes[c][pick[c]]);
        facets.push_back(std::move(facet));
        int c = r;
        while (c >= 0 && ++pick[c] == sizes[c]) pick[c--] = 0;
        if (c < 0) break;
    }
    SimplicialComplex x = build_complex(facets);
    PartiteStructure p = make_partite_structure(x, classes);
    return {std::move(x), std::move(p)};
}

SimplicialComplex gen_random_graph(int n, double p, uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw contract_error("gen_random_graph: bad parameters");
    SplitMix64 rng(seed);
    std::vector<std::vector<int>> facets;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng.next_double() < p) facets.push_back({i, j});
    std::vector<int> verts;
    for (int i = 1; i <= n; ++i) verts.push_back(i);
    return build_complex(facets, verts);
}

SimplicialComplex gen_random_complex(int n, int r, double p, uint64_t seed) {
    if (n < r + 1 || r < 1 || p < 0.0 || p > 1.0)
        throw contract_error("gen_random_complex: bad parameters");
    SplitMix64 rng(seed);
    std::vector<std::vector<int>> facets;
    // Full (r-1)-skeleton: all r-subsets of 1..n.
    auto emit_combinations = [&](int size, auto&& emit) {
        std::vector<int> c(size);
        for (int i = 0; i < size; ++i) c[i] = i + 1;
        while (true) {
            emit(c);
            int i = size - 1;
            while (i >= 0 && c[i] == n - size + i + 1) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
        }
    };
    emit_combinations(r, [&](const std::vector<int>& c) { facets.push_back(c); });
    // Each r-face (an (r+1)-subset) independently with probability p, in
    // lexicographic order so the draw sequence is pinned.
    emit_combinations(r + 1, [&](const std::vector<int>& c) {
        if (rng.next_double() < p) facets.push_back(c);
    });
    return build_complex(facets);
}

SimplicialComplex graph_from_edge_mask(int n, uint64_t mask) {
    if (n < 1 || n > 11) throw contract_error("graph_from_edge_mask: n out of range");
    std::vector<std::vector<int>> facets;
    int bit = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++bit)
            if (mask & (1ULL << bit)) facets.push_back({i, j});
    std::vector<int> verts;
    for (int i = 1; i <= n; ++i) verts.push_back(i);
    return build_complex(facets, verts);
}

SimplicialComplex tree_from_pruefer_index(int n, uint64_t index) {
    if (n < 1) throw contract_error("tree_from_pruefer_index: n < 1");
    if (n == 1) return build_complex({}, {1});
    if (n == 2) return build_complex({{1, 2}});
    // Decode index as an (n-2)-digit base-n Pruefer sequence.
    std::vector<int> seq(n - 2);
    for (int i = 0; i < n - 2; ++i) {
        seq[i] = static_cast<int>(index % n) + 1;
        index /= n;
    }
    if (index != 0) throw contract_error("tree_from_pruefer_index: index out of range");
    std::vector<int> degree(n + 1, 1);
    for (int v : seq) ++degree[v];
    std::vector<std::vector<int>> edges;
    std::vector<bool> used(n + 1, false);
    for (int v : seq) {
        // Connect v to the smallest unused leaf.
        for (int leaf = 1; leaf <= n; ++leaf) {
            if (degree[leaf] == 1 && !used[leaf]) {
                edges.push_back({std::min(leaf, v), std::max(leaf, v)});
                used[leaf] = true;
                --degree[v];
                break;
            }
        }
    }
    std::vector<int> last;
    for (int v = 1; v <= n; ++v)
        if (degree[v] == 1 && !used[v]) last.push_back(v);
    edges.push_back({last[0], last[1]});
    std::vector<int> verts;
    for (int i = 1; i <= n; ++i) verts.push_back(i);
    return build_complex(edges, verts);
}

std::string invariant_key(const SimplicialComplex& g) {
    std::vector<int> deg(g.num_vertices(), 0);
    if (g.dim() >= 1)
        for (const Face& e : g.faces(1)) {
            ++deg[e[0]];
            ++deg[e[1]];
        }
    std::sort(deg.begin(), deg.end());
    std::string key;
    for (int d : deg) key += std::to_string(d) + ",";
    key += "|";
    if (g.dim() >= 1) {
        SpectrumSummary s = sym_spectrum(laplacian(g, OperatorKind::upper_laplacian, 1));
        char buf[32];
        for (double ev : s.eigenvalues()) {
            double rounded = std::round(ev * 1e6) / 1e6;
            if (rounded == 0.0) rounded = 0.0;  // fold -0
            std::snprintf(buf, sizeof buf, "%.6f;", rounded);
            key += buf;
        }
    }
    return key;
}

namespace {

std::vector<int> parse_plus_list(const std::string& text) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find('+', pos);
        if (next == std::string::npos) next = text.size();
        if (next > pos) out.push_back(std::stoi(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

uint64_t checked_pow(uint64_t base, int exp, uint64_t cap) {
    uint64_t v = 1;
    for (int i = 0; i < exp; ++i) {
        v *= base;
        if (v > cap) throw contract_error("instance stream too large");
    }
    return v;
}

}  // namespace

InstanceStream InstanceStream::parse(const std::string& descriptor) {
    InstanceStream s;
    s.descriptor_ = descriptor;
    auto colon = descriptor.find(':');
    s.family_ = descriptor.substr(0, colon);
    if (colon != std::string::npos) {
        std::string rest = descriptor.substr(colon + 1);
        size_t pos = 0;
        while (pos < rest.size()) {
            size_t next = rest.find(',', pos);
            if (next == std::string::npos) next = rest.size();
            std::string item = rest.substr(pos, next - pos);
            auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0)
                throw malformed_input_error("bad descriptor parameter: " + item);
            s.params_[item.substr(0, eq)] = item.substr(eq + 1);
            pos = next + 1;
        }
    }

    const std::string& fam = s.family_;
    if (fam == "star" || fam == "path") {
        s.int_param("n");
        s.count_ = 1;
    } else if (fam == "star_forest") {
        if (!s.params_.count("sizes")) throw malformed_input_error("star_forest needs sizes=a+b+...");
        s.count_ = 1;
    } else if (fam == "matching") {
        s.int_param("r");
        s.int_param("m");
        s.count_ = 1;
    } else if (fam == "brouwer_equality") {
        s.int_param("k");
        s.int_param("b");
        s.count_ = 1;
    } else if (fam == "complete_partite") {
        s.int_param("r");
        if (!s.params_.count("sizes"))
            throw malformed_input_error("complete_partite needs sizes=a+b+...");
        s.count_ = 1;
    } else if (fam == "random_graph") {
        s.int_param("n");
        s.real_param("p");
        s.int_param("seed", 0);
        s.count_ = static_cast<uint64_t>(s.int_param("count", 1));
    } else if (fam == "random_complex") {
        s.int_param("n");
        s.int_param("r");
        s.real_param("p");
        s.int_param("seed", 0);
        s.count_ = static_cast<uint64_t>(s.int_param("count", 1));
    } else if (fam == "enumerate") {
        int n = s.int_param("n");
        if (n < 1) throw malformed_input_error("enumerate: n < 1");
        if (n > 8)
            throw contract_error("enumerate: refusing n > 8 (2^C(n,2) labeled graphs is too many)");
        s.count_ = 1ULL << (n * (n - 1) / 2);
    } else if (fam == "trees") {
        int n = s.int_param("n");
        if (n < 1) throw malformed_input_error("trees: n < 1");
        if (n > 9) throw contract_error("trees: refusing n > 9");
        s.count_ = (n <= 2) ? 1 : checked_pow(n, n - 2, UINT64_MAX / 2);
    } else if (fam == "file") {
        if (!s.params_.count("path")) throw malformed_input_error("file needs path=...");
        s.count_ = 1;
    } else {
        throw malformed_input_error("unknown family: " + fam);
    }
    return s;
}

int InstanceStream::int_param(const std::string& key, std::optional<int> fallback) const {
    auto it = params_.find(key);
    if (it == params_.end()) {
        if (fallback) return *fallback;
        throw malformed_input_error(family_ + " needs parameter " + key);
    }
    try {
        return std::stoi(it->second);
    } catch (const std::exception&) {
        throw malformed_input_error("parameter " + key + " is not an integer");
    }
}

double InstanceStream::real_param(const std::string& key, std::optional<double> fallback) const {
    auto it = params_.find(key);
    if (it == params_.end()) {
        if (fallback) return *fallback;
        throw malformed_input_error(family_ + " needs parameter " + key);
    }
    try {
        return std::stod(it->second);
    } catch (const std::exception&) {
        throw malformed_input_error("parameter " + key + " is not a number");
    }
}

Instance InstanceStream::at(uint64_t index) const {
    if (index >= count_) throw contract_error("instance index out of range");
    Instance inst;
    inst.id = descriptor_ + "#" + std::to_string(index);
    if (family_ == "star") {
        inst.complex = gen_star(int_param("n"));
    } else if (family_ == "path") {
        inst.complex = gen_path(int_param("n"));
    } else if (family_ == "star_forest") {
        inst.complex = gen_star_forest(parse_plus_list(params_.at("sizes")));
    } else if (family_ == "matching") {
        inst.complex = gen_matching_complex(int_param("r"), int_param("m"), int_param("s", 0));
    } else if (family_ == "brouwer_equality") {
        inst.complex = gen_brouwer_equality(int_param("k"), int_param("b"));
    } else if (family_ == "complete_partite") {
        auto [x, p] = gen_complete_partite_complex(int_param("r"), parse_plus_list(params_.at("sizes")));
        inst.complex = std::move(x);
        inst.partition = std::move(p);
    } else if (family_ == "random_graph") {
        uint64_t seed = SplitMix64::split(static_cast<uint64_t>(int_param("seed", 0)), index).state;
        inst.complex = gen_random_graph(int_param("n"), real_param("p"), seed);
    } else if (family_ == "random_complex") {
        uint64_t seed = SplitMix64::split(static_cast<uint64_t>(int_param("seed", 0)), index).state;
        inst.complex = gen_random_complex(int_param("n"), int_param("r"), real_param("p"), seed);
    } else if (family_ == "enumerate") {
        inst.complex = graph_from_edge_mask(int_param("n"), index);
    } else if (family_ == "trees") {
        inst.complex = tree_from_pruefer_index(int_param("n"), index);
    } else if (family_ == "file") {
        LoadedComplex loaded = read_complex_file(params_.at("path"));
        inst.complex = std::move(loaded.complex);
        inst.partition = std::move(loaded.partition);
    } else {
        throw contract_error("InstanceStream::at: unhandled family " + family_);
    }
    return inst;
}

}  // namespace lb
