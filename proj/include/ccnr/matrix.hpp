#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "ccnr/error.hpp"

namespace ccnr {

using cdouble = std::complex<double>;

/// Dense rectangular complex matrix, row-major. The single numeric carrier
/// for operators, vectors (as n x 1 matrices) and realigned matrices.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) throw shape_error("matrix dimensions must be positive");
    }

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cdouble> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (rows == 0 || cols == 0) throw shape_error("matrix dimensions must be positive");
        if (data_.size() != rows * cols) throw shape_error("entry count does not match rows*cols");
    }

    /// Row-major nested initializer, ragged rows rejected.
    ComplexMatrix(std::initializer_list<std::initializer_list<cdouble>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        if (rows_ == 0 || cols_ == 0) throw shape_error("matrix dimensions must be positive");
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw shape_error("ragged initializer rows");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<cdouble>& d) {
        ComplexMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    cdouble& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cdouble& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cdouble>& entries() const { return data_; }

    bool same_shape(const ComplexMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    bool all_finite() const {
        for (const auto& z : data_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    ComplexMatrix transpose() const {
        ComplexMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    ComplexMatrix conjugate() const {
        ComplexMatrix c = *this;
        for (auto& z : c.data_) z = std::conj(z);
        return c;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix a(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) a(j, i) = std::conj((*this)(i, j));
        return a;
    }

    cdouble trace() const {
        if (rows_ != cols_) throw shape_error("trace of non-square matrix");
        cdouble t = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    double hs_norm() const {
        double s = 0.0;
        for (const auto& z : data_) s += std::norm(z);
        return std::sqrt(s);
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }

    ComplexMatrix& operator*=(cdouble a) {
        for (auto& z : data_) z *= a;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cdouble s) { return a *= s; }
    friend ComplexMatrix operator*(cdouble s, ComplexMatrix a) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols_ != b.rows_) throw shape_error("matrix product shape mismatch");
        ComplexMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cdouble aik = a(i, k);
                if (aik == cdouble{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

private:
    void require_same_shape(const ComplexMatrix& o) const {
        if (!same_shape(o)) throw shape_error("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cdouble> data_;
};

/// Kronecker product. result[(i*b.rows+k),(j*b.cols+l)] = a[i,j]*b[k,l].
/// The entry cap keeps an accidental pair of large factors from allocating
/// gigabytes; 2^20 entries covers 16x16 local dimensions.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                          std::size_t max_entries = std::size_t{1} << 20) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if (rows * cols > max_entries) throw shape_error("kron result exceeds entry cap");
    ComplexMatrix c(rows, cols);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cdouble aij = a(i, j);
            if (aij == cdouble{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

/// Row-major flatten to a column vector: element (i*cols + j) = a[i,j].
inline ComplexMatrix vec_r(const ComplexMatrix& a) {
    return {a.size(), 1, a.entries()};
}

/// Inverse of vec_r.
inline ComplexMatrix unvec_r(const ComplexMatrix& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw shape_error("unvec_r length mismatch");
    return {rows, cols, v.entries()};
}

/// Hilbert-Schmidt inner product Tr(a^dag b), antilinear in the first slot.
inline cdouble hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.same_shape(b)) throw shape_error("hs_inner shape mismatch");
    cdouble s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a.entries()[i]) * b.entries()[i];
    return s;
}

}  // namespace ccnr
