#include "lapbound/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "lapbound/errors.hpp"

namespace lb {

LoadedComplex complex_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw malformed_input_error("complex JSON must be an object");
    LoadedComplex out;
    if (j.contains("edges")) {
        if (!j.contains("n") || !j["n"].is_number_integer())
            throw malformed_input_error("edge-list form needs an integer \"n\"");
        const int n = j["n"].get<int>();
        if (n < 0) throw malformed_input_error("\"n\" must be nonnegative");
        std::vector<std::vector<int>> facets;
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw malformed_input_error("edges must be pairs");
            int u = e[0].get<int>(), v = e[1].get<int>();
            if (u < 1 || u > n || v < 1 || v > n || u == v)
                throw malformed_input_error("edge endpoints must be distinct vertices in 1..n");
            facets.push_back({u, v});
        }
        std::vector<int> verts;
        for (int i = 1; i <= n; ++i) verts.push_back(i);
        out.complex = build_complex(facets, verts);
        return out;
    }

    if (!j.contains("facets")) throw malformed_input_error("complex JSON needs \"facets\" or \"edges\"");
    std::vector<std::vector<int>> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw malformed_input_error("facets must be arrays of vertex ids");
        facets.push_back(f.get<std::vector<int>>());
    }
    std::vector<int> verts;
    if (j.contains("vertices")) verts = j["vertices"].get<std::vector<int>>();
    out.complex = build_complex(facets, verts);
    if (j.contains("partition")) {
        std::vector<std::vector<int>> classes;
        for (const auto& c : j["partition"]) classes.push_back(c.get<std::vector<int>>());
        out.partition = make_partite_structure(out.complex, classes);
    }
    return out;
}

LoadedComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw malformed_input_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw malformed_input_error("invalid JSON in " + path + ": " + e.what());
    }
    return complex_from_json(j);
}

nlohmann::ordered_json complex_to_json(const SimplicialComplex& x, const PartiteStructure* partition) {
    nlohmann::ordered_json j;
    j["vertices"] = x.labels();
    nlohmann::ordered_json facets = nlohmann::ordered_json::array();
    for (const Face& f : x.facets()) {
        std::vector<int> labels;
        for (int v : f) labels.push_back(x.label(v));
        facets.push_back(labels);
    }
    j["facets"] = std::move(facets);
    if (partition != nullptr) {
        nlohmann::ordered_json classes = nlohmann::ordered_json::array();
        for (const auto& cls : partition->classes) {
            std::vector<int> labels;
            for (int v : cls) labels.push_back(x.label(v));
            classes.push_back(labels);
        }
        j["partition"] = std::move(classes);
    }
    return j;
}

void write_complex_file(const std::string& path, const SimplicialComplex& x,
                        const PartiteStructure* partition) {
    std::ofstream out(path);
    if (!out) throw malformed_input_error("cannot write " + path);
    out << complex_to_json(x, partition).dump(2) << "\n";
}

double round_sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

nlohmann::ordered_json report_to_json(const BoundReport& rep) {
    nlohmann::ordered_json j;
    j["bound_id"] = rep.bound_id;
    j["instance_id"] = rep.instance_id;
    j["r"] = rep.r;
    j["k"] = rep.k;
    j["lhs"] = round_sig12(rep.lhs);
    j["rhs"] = round_sig12(rep.rhs);
    j["slack"] = round_sig12(rep.slack);
    j["tier"] = to_string(rep.tier);
    j["holds"] = rep.holds;
    j["witness"] = rep.witness ? *rep.witness : nlohmann::ordered_json(nullptr);
    return j;
}

std::string report_to_jsonl(const BoundReport& rep) { return report_to_json(rep).dump(); }

}  // namespace lb
