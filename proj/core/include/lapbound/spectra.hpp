#pragma once

#include <optional>
#include <vector>

#include "lapbound/complex.hpp"
#include "lapbound/matrix.hpp"
#include "lapbound/operators.hpp"

namespace lb {

/// Full spectrum of a symmetric operator, descending, with prefix sums and
/// the tolerance used to classify eigenvalues as zero.
class SpectrumSummary {
  public:
    SpectrumSummary() = default;
    SpectrumSummary(std::vector<double> eigenvalues_desc, double tolerance);

    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    int size() const { return static_cast<int>(eigenvalues_.size()); }
    double tolerance() const { return tolerance_; }

    /// Sum of the k largest eigenvalues; requires 1 <= k <= size().
    double top_k_sum(int k) const;
    /// Prefix sum with the out-of-range values clamped: k <= 0 gives 0 and
    /// k >= size() gives the trace.
    double top_k_sum_clamped(int k) const;
    double trace() const { return prefix_.empty() ? 0.0 : prefix_.back(); }

  private:
    std::vector<double> eigenvalues_;
    std::vector<double> prefix_;  // prefix_[k] = sum of k largest, prefix_[0] = 0
    double tolerance_ = 0.0;
};

/// Eigenvalues of a symmetric matrix, descending. `tolerance` feeds the
/// zero classification; when absent it defaults to 1e-9 * max(1, lambda_1).
/// Asymmetry beyond 1e-12 is a contract violation.
SpectrumSummary sym_spectrum(const Matrix& m, std::optional<double> tolerance = std::nullopt);
SpectrumSummary sym_spectrum(const OperatorMatrix& m, std::optional<double> tolerance = std::nullopt);

/// Eigenvalues with |lambda| > tolerance, descending.
std::vector<double> nonzero_spectrum(const SpectrumSummary& s);

/// eps_k(G) = (sum of the k largest Laplacian eigenvalues) - |E|.
double eps_k(const SimplicialComplex& g, int k);

/// Max absolute row sum; an upper bound for lambda_1 of a symmetric matrix.
double gershgorin_bound(const Matrix& m);

/// r-degrees of the (r-1)-faces plus the derived sequences every bound
/// consumes. `sorted_degrees` is descending; ties in the face ordering are
/// broken lexicographically (sorted_faces keeps that order).
struct DegreeProfile {
    int r = 1;
    std::vector<int> sorted_degrees;        // d_i^{(r)}, descending
    std::vector<int> sorted_faces;          // face indices into X(r-1), same order
    std::vector<int> degree_of;             // X(r-1) face index -> degree
    std::vector<int> vertex_degrees;        // deg^{(r)}(v) per vertex
    std::vector<int> conjugate;             // d'_i over vertex degrees (graphs, r=1)
    std::vector<std::vector<int>> partite_profiles;  // per class j: descending degrees on X(r-1;j)

    /// d_i^{(r)} with i past the end treated as 0 (1-based index).
    int degree_or_zero(int i) const {
        return (i >= 1 && i <= static_cast<int>(sorted_degrees.size())) ? sorted_degrees[i - 1] : 0;
    }
    /// Sum of the j largest degrees, clamped to the profile length.
    long long top_degree_sum(int j) const;
};

/// Degree profile at level r-1. The conjugate sequence is filled for r == 1
/// over vertex degrees; partite profiles are filled when a partition is
/// given (class j lists the degrees of faces avoiding class j).
DegreeProfile degree_profile(const SimplicialComplex& x, int r,
                             const PartiteStructure* partition = nullptr);

/// Conjugate (transpose) of an integer partition given as a degree list:
/// result[i-1] = |{j : d_j >= i}| for i = 1..len.
std::vector<int> conjugate_sequence(const std::vector<int>& degrees, int len);

/// Checks lambda_i(L(G)) = n - lambda_{n-i}(L(complement G)) for all valid i
/// and eps_k(G) = eps_{n-k-1}(complement G) + nk - C(n,2) for all valid k;
/// returns the maximum absolute residual over both identities.
double complement_eigen_check(const SimplicialComplex& g);

}  // namespace lb
