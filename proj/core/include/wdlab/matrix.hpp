#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wdlab/laurent.hpp"
#include "wdlab/scalar.hpp"

namespace wdlab {

inline bool is_zero(const Scalar& x) { return x.is_zero(); }
inline bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline Scalar exact_div(const Scalar& a, const Scalar& b) { return a / b; }

/// Dense row-major matrix over Scalar or LaurentPoly.
template <typename R>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<R> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows * cols)
            throw std::invalid_argument("matrix data size mismatch");
    }
    Matrix(std::initializer_list<std::initializer_list<R>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        for (auto& row : rows) {
            if (row.size() != cols_)
                throw std::invalid_argument("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = R(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const
    {
        for (auto& x : data_)
            if (!wdlab::is_zero(x))
                return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const
    {
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix product shape mismatch: " + shape() + " * " + o.shape());
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const R& a = (*this)(i, k);
                if (wdlab::is_zero(a))
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    if (!wdlab::is_zero(o(k, j)))
                        r(i, j) += a * o(k, j);
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const
    {
        check_same_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i)
            r.data_[i] += o.data_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const
    {
        check_same_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i)
            r.data_[i] -= o.data_[i];
        return r;
    }

    Matrix operator-() const
    {
        Matrix r = *this;
        for (auto& x : r.data_)
            x = -x;
        return r;
    }

    Matrix scaled(const R& c) const
    {
        Matrix r = *this;
        for (auto& x : r.data_)
            x = x * c;
        return r;
    }

    bool operator==(const Matrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }
    /// row[dst] += c * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const R& c)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            if (!wdlab::is_zero((*this)(src, j)))
                (*this)(dst, j) += c * (*this)(src, j);
    }
    /// col[dst] += c * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const R& c)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            if (!wdlab::is_zero((*this)(i, src)))
                (*this)(i, dst) += c * (*this)(i, src);
    }
    void scale_row(std::size_t i, const R& c)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(i, j) = (*this)(i, j) * c;
    }
    void scale_col(std::size_t j, const R& c)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) = (*this)(i, j) * c;
    }

    /// Block [A B] side by side.
    static Matrix hstack(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_)
            throw std::invalid_argument("hstack row mismatch");
        Matrix r(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j)
                r(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j)
                r(i, a.cols_ + j) = b(i, j);
        }
        return r;
    }
    /// Block [A; B] stacked.
    static Matrix vstack(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.cols_)
            throw std::invalid_argument("vstack column mismatch");
        Matrix r(a.rows_ + b.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                r(a.rows_ + i, j) = b(i, j);
        return r;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    std::string to_string() const
    {
        std::string out = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            out += i == 0 ? "[" : ", [";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j)
                    out += ", ";
                out += (*this)(i, j).to_string();
            }
            out += "]";
        }
        return out + "]";
    }

private:
    void check_same_shape(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch: " + shape() + " vs " + o.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<LaurentPoly>;

/// Fraction-free (Bareiss) determinant; divisions are exact.
template <typename R>
R determinant(Matrix<R> m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return R(1);
    R sign(1);
    R prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(m(p, k)))
                ++p;
            if (p == n)
                return R(0);
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Rank over K by Gaussian elimination.
std::size_t rank(ScalarMatrix m);
/// Basis of the right kernel, as columns.
ScalarMatrix kernel_basis(const ScalarMatrix& m);
/// Inverse over K; throws std::domain_error if singular.
ScalarMatrix inverse(const ScalarMatrix& m);
/// Left inverse L (L*B = I) of a matrix with independent columns.
ScalarMatrix left_inverse(const ScalarMatrix& b);

/// Inverse over K[T^-1, T] by the adjugate; throws std::domain_error unless
/// the determinant is a unit.
PolyMatrix inverse(const PolyMatrix& m);

PolyMatrix to_poly(const ScalarMatrix& m);
/// Throws if any entry is non-constant.
ScalarMatrix to_scalar(const PolyMatrix& m);
bool is_constant(const PolyMatrix& m);

}  // namespace wdlab
