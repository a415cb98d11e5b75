#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lb {

/// A face is a strictly increasing tuple of internal vertex indices.
/// Internal indices 0..n-1 realize the linear order "<" on the vertices;
/// all incidence signs derive from it.
using Face = std::vector<int>;

inline int face_dim(const Face& f) { return static_cast<int>(f.size()) - 1; }

/// Partition of the vertex set into r+1 classes such that every face meets
/// each class at most once. Vertices are internal indices.
struct PartiteStructure {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;  // vertex -> class index
};

/// A finite simplicial complex: a downward-closed family of vertex sets.
///
/// Vertices carry external labels; the internal index order (assigned at
/// construction: order of first appearance across the facet list, ties
/// within one facet broken by ascending label, leftover explicit vertices
/// appended ascending) is the linear order used for incidence signs. Faces
/// within a dimension are kept lexicographically sorted by vertex tuple,
/// which fixes every matrix row/column order. The empty face (dim -1) is
/// always stored so that B_0 exists.
class SimplicialComplex {
  public:
    SimplicialComplex();

    int dim() const { return static_cast<int>(faces_.size()) - 2; }
    int num_vertices() const { return static_cast<int>(labels_.size()); }

    /// Number of d-dimensional faces; 0 when d is out of range. f(-1) == 1.
    int f(int d) const;

    /// Lexicographically sorted d-faces. d must lie in -1..dim().
    const std::vector<Face>& faces(int d) const;

    /// Index of a d-face in faces(d), or -1 when absent.
    int face_index(int d, const Face& face) const;
    bool has_face(const Face& face) const;

    int label(int vertex) const { return labels_[vertex]; }
    const std::vector<int>& labels() const { return labels_; }
    /// Internal index of an external label, or -1.
    int vertex_index(int label) const;

    /// Facets (faces maximal under inclusion), as internal-index tuples.
    std::vector<Face> facets() const;

    /// Number of r-faces containing the given face.
    int face_degree(const Face& face, int r) const;

    /// Downward closure of a facet list given in external labels.
    /// extra_vertices admits isolated vertices absent from every facet.
    static SimplicialComplex from_facets(const std::vector<std::vector<int>>& facet_labels,
                                         const std::vector<int>& extra_vertices = {});

    /// Downward closure over internal indices with the vertex order given by
    /// `labels` as-is. Used by operations that must preserve an ambient order.
    static SimplicialComplex from_internal(std::vector<int> labels, std::vector<Face> faces);

  private:
    std::vector<int> labels_;               // internal index -> external label
    std::vector<std::vector<Face>> faces_;  // faces_[d+1] = sorted d-faces
};

/// build_complex: downward closure of a facet list. Duplicate vertices
/// inside one facet are rejected.
SimplicialComplex build_complex(const std::vector<std::vector<int>>& facet_labels,
                                const std::vector<int>& extra_vertices = {});

/// Complement graph; requires dim(G) <= 1. Same vertex set and order.
SimplicialComplex complement_graph(const SimplicialComplex& g);

/// Join X * sigma with a fresh vertex set sigma (external labels, disjoint
/// from V(X), nonempty). Cone vertices are ordered after all existing ones.
SimplicialComplex join_cone(const SimplicialComplex& x, const std::vector<int>& sigma_labels);

/// All faces contained in S (external labels). Empty S yields the empty
/// complex (dim -1).
SimplicialComplex induced_subcomplex(const SimplicialComplex& x, const std::vector<int>& s_labels);

/// A valid (dim+1)-coloring of the vertices in which every face is rainbow,
/// or nullopt when none exists. Exact backtracking; requires n <= 24 (the
/// caller must supply a partition beyond that).
std::optional<PartiteStructure> partite_classes(const SimplicialComplex& x);

/// Validates a user-supplied partition (external labels per class) against
/// the complex; throws malformed_input_error when invalid.
PartiteStructure make_partite_structure(const SimplicialComplex& x,
                                        const std::vector<std::vector<int>>& class_labels);

/// Connected components of the 1-skeleton, as label sets (isolated vertices
/// are their own components).
std::vector<std::vector<int>> connected_components(const SimplicialComplex& x);

bool is_connected(const SimplicialComplex& x);

}  // namespace lb
