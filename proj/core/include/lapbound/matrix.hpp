#pragma once

#include <cstddef>
#include <vector>

namespace lb {

/// Dense row-major real matrix. All operators in this project are desk
/// scale (order <= ~3000), so no sparse storage is provided.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

    /// Max |A_ij - B_ij|; matrices must have equal shape.
    double max_abs_diff(const Matrix& other) const;

    /// Max |A_ij - A_ji| over all pairs (0 for exactly symmetric matrices).
    double asymmetry() const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;

    bool operator==(const Matrix& other) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

/// Eigenvalues of a symmetric matrix, descending. Householder reduction to
/// tridiagonal form followed by implicit-shift QL; no eigenvectors are
/// accumulated (nothing in this project needs them). Deterministic for a
/// fixed input.
std::vector<double> symmetric_eigenvalues(const Matrix& m);

}  // namespace lb
