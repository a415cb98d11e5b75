#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lapbound/complex.hpp"
#include "lapbound/families.hpp"

namespace lb {

/// SplitMix64: the pinned PRNG for all randomized generation. Counter-based
/// and splittable, so instance i of a stream draws from an independent
/// generator seeded with mix(seed, i); replays are bit-exact.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform in [0, bound).
    uint64_t next_below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    /// Independent generator for stream element `index`.
    static SplitMix64 split(uint64_t seed, uint64_t index) {
        SplitMix64 mixer(seed ^ (0xA0761D6478BD642FULL * (index + 1)));
        return SplitMix64(mixer.next());
    }
};

// Named instance families. Vertices are labeled 1..n; star centers come
// first within their component and paths are numbered along the path.
SimplicialComplex gen_star(int n);
SimplicialComplex gen_path(int n);
SimplicialComplex gen_star_forest(const std::vector<int>& sizes);
/// m maximal faces sigma cup tau_i sharing a common face sigma of size s
/// (0 <= s <= r-1); every (r-1)-face has r-degree exactly one. s = 0 gives
/// m disjoint r-simplices (a perfect matching when r = 1).
SimplicialComplex gen_matching_complex(int r, int m, int s = 0);
/// Clique on k vertices completely joined to an independent set of size b;
/// the Brouwer equality family (eps_k = C(k+1,2) for b >= 1).
SimplicialComplex gen_brouwer_equality(int k, int b);
/// Complete (r+1)-partite r-complex (all rainbow faces) plus its partition.
std::pair<SimplicialComplex, PartiteStructure> gen_complete_partite_complex(
    int r, const std::vector<int>& sizes);
SimplicialComplex gen_random_graph(int n, double p, uint64_t seed);
/// Full (r-1)-skeleton plus each r-face independently with probability p
/// (the standard random-complex model).
SimplicialComplex gen_random_complex(int n, int r, double p, uint64_t seed);
/// Labeled graph on n vertices from an edge bitmask in lexicographic pair
/// order ((0,1), (0,2), ..., (n-2,n-1) over labels 1..n).
SimplicialComplex graph_from_edge_mask(int n, uint64_t mask);
/// Labeled tree on n vertices decoded from a Pruefer sequence index.
SimplicialComplex tree_from_pruefer_index(int n, uint64_t index);

/// One element of an instance stream.
struct Instance {
    std::string id;  // full provenance: family, parameters, seed, index
    SimplicialComplex complex;
    std::optional<PartiteStructure> partition;
    Assumptions assumptions;
};

/// A deterministic, replayable instance source. Generation is pure in
/// (descriptor, index), so streams can be partitioned across workers.
class InstanceStream {
  public:
    /// Parses "family:param=value,..." descriptors:
    ///   star:n=4            path:n=200          star_forest:sizes=3+2
    ///   matching:r=2,m=4    (optional s=...)    brouwer_equality:k=3,b=5
    ///   complete_partite:r=2,sizes=2+2+2
    ///   random_graph:n=6,p=0.5,seed=42,count=100
    ///   random_complex:n=8,r=2,p=0.5,seed=7,count=50
    ///   enumerate:n=6       (all 2^C(n,2) labeled graphs; n <= 8)
    ///   trees:n=8           (all labeled trees via Pruefer sequences)
    ///   file:path=x.json
    static InstanceStream parse(const std::string& descriptor);

    const std::string& descriptor() const { return descriptor_; }
    uint64_t size() const { return count_; }
    Instance at(uint64_t index) const;

  private:
    std::string descriptor_;
    std::string family_;
    std::map<std::string, std::string> params_;
    uint64_t count_ = 0;

    int int_param(const std::string& key, std::optional<int> fallback = std::nullopt) const;
    double real_param(const std::string& key, std::optional<double> fallback = std::nullopt) const;
};

/// Cheap invariant key (sorted degree sequence + rounded spectrum) used by
/// dedup filters; collapses relabelings without claiming isomorphism
/// exactness.
std::string invariant_key(const SimplicialComplex& g);

}  // namespace lb
