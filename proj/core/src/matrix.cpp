#include "lapbound/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "lapbound/errors.hpp"

namespace lb {

double Matrix::max_abs_diff(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw contract_error("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - other.a_[i]));
    return m;
}

double Matrix::asymmetry() const {
    if (rows_ != cols_) throw contract_error("asymmetry: matrix not square");
    double m = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j) m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw contract_error("matrix product: shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const double aik = (*this)(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw contract_error("matrix sum: shape mismatch");
    Matrix out = *this;
    for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += rhs.a_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw contract_error("matrix difference: shape mismatch");
    Matrix out = *this;
    for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= rhs.a_[i];
    return out;
}

namespace {

// Householder reduction of a symmetric matrix to tridiagonal form.
// On return d holds the diagonal and e the subdiagonal (e[0] unused).
void householder_tridiag(Matrix a, std::vector<double>& d, std::vector<double>& e) {
    const int n = a.rows();
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    for (int k = 0; k < n - 2; ++k) {
        double scale = 0.0;
        for (int i = k + 1; i < n; ++i) scale += std::abs(a(i, k));
        if (scale == 0.0) {
            e[k + 1] = 0.0;
            continue;
        }
        // Householder vector v (stored in column k below the diagonal),
        // scaled for numerical stability.
        double h = 0.0;
        for (int i = k + 1; i < n; ++i) {
            a(i, k) /= scale;
            h += a(i, k) * a(i, k);
        }
        double f = a(k + 1, k);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[k + 1] = scale * g;
        h -= f * g;
        a(k + 1, k) = f - g;

        // p = A v / h, K = v^T p / (2h), q = p - K v; A <- A - v q^T - q v^T.
        std::vector<double> p(n, 0.0);
        for (int i = k + 1; i < n; ++i) {
            double s = 0.0;
            for (int j = k + 1; j <= i; ++j) s += a(i, j) * a(j, k);
            for (int j = i + 1; j < n; ++j) s += a(j, i) * a(j, k);
            p[i] = s / h;
        }
        double kk = 0.0;
        for (int i = k + 1; i < n; ++i) kk += a(i, k) * p[i];
        kk /= 2.0 * h;
        for (int i = k + 1; i < n; ++i) p[i] -= kk * a(i, k);
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j <= i; ++j) a(i, j) -= a(i, k) * p[j] + p[i] * a(j, k);
    }
    if (n >= 2) e[n - 1] = a(n - 1, n - 2);
    for (int i = 0; i < n; ++i) d[i] = a(i, i);
}

// Implicit-shift QL on a symmetric tridiagonal matrix (d, e); eigenvalues
// land in d in arbitrary order.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(d.size());
    if (n <= 1) return;
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 2.22e-16 * dd) break;
            }
            if (m != l) {
                if (++iter == 60) throw internal_consistency_error("QL iteration failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const Matrix& m) {
    if (m.rows() != m.cols()) throw contract_error("symmetric_eigenvalues: matrix not square");
    const int n = m.rows();
    if (n == 0) return {};
    if (n == 1) return {m(0, 0)};
    std::vector<double> d, e;
    householder_tridiag(m, d, e);
    tridiag_ql(d, e);
    std::sort(d.begin(), d.end(), std::greater<double>());
    return d;
}

}  // namespace lb
