#pragma once

#include "symdec/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace symdec {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(Field f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

inline Vector unit_vector(Field f, std::size_t n, std::size_t i) {
    Vector v = zero_vector(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

inline bool is_zero(std::span<const Scalar> v) {
    for (const auto& s : v)
        if (!s.is_zero())
            return false;
    return true;
}

/// Dense row-major matrix over one Field.
class Matrix {
public:
    Matrix() = default;

    Matrix(Field f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(Field f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = Scalar::one(f);
        return m;
    }

    /// Rows must all have length `cols`.
    static Matrix from_rows(Field f, std::size_t cols, std::span<const Vector> rows) {
        Matrix m(f, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols)
                throw InvalidInput("ragged matrix rows");
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = rows[r][c];
        }
        return m;
    }

    static Matrix from_ints(Field f, std::initializer_list<std::initializer_list<long>> rows) {
        const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
        Matrix m(f, rows.size(), cols);
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != cols)
                throw InvalidInput("ragged matrix rows");
            std::size_t c = 0;
            for (long v : row)
                m(r, c++) = Scalar(f, v);
            ++r;
        }
        return m;
    }

    Field field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    Vector row_vector(std::size_t r) const {
        auto s = row(r);
        return Vector(s.begin(), s.end());
    }

    Vector column(std::size_t c) const {
        Vector v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            v.push_back((*this)(r, c));
        return v;
    }

    std::vector<Vector> row_vectors() const {
        std::vector<Vector> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            out.push_back(row_vector(r));
        return out;
    }

    bool is_zero() const { return symdec::is_zero(data_); }

    /// m * v. Zero entries of m are skipped, which matters for the sparse
    /// multiplication matrices of monomial algebras.
    Vector apply(std::span<const Scalar> v) const {
        if (v.size() != cols_)
            throw InvalidInput("matrix-vector dimension mismatch");
        Vector out = zero_vector(field_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) {
                const Scalar& a = (*this)(r, c);
                if (!a.is_zero() && !v[c].is_zero())
                    out[r] += a * v[c];
            }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw InvalidInput("matrix product dimension mismatch");
        Matrix out(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik.is_zero())
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero())
                        out(i, j) += aik * b(k, j);
            }
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw InvalidInput("matrix sum dimension mismatch");
        for (std::size_t i = 0; i < data_.size(); ++i)
            if (!o.data_[i].is_zero())
                data_[i] += o.data_[i];
        return *this;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    /// Rows of a followed by rows of b.
    static Matrix stack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_)
            throw InvalidInput("stacking matrices with different column counts");
        Matrix m(a.field_, a.rows_ + b.rows_, a.cols_);
        std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
        std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
        return m;
    }

    const std::vector<Scalar>& entries() const noexcept { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << '[';
        for (std::size_t r = 0; r < m.rows_; ++r) {
            os << (r ? ",[" : "[");
            for (std::size_t c = 0; c < m.cols_; ++c)
                os << (c ? "," : "") << m(r, c);
            os << ']';
        }
        return os << ']';
    }

private:
    Field field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

} // namespace symdec
