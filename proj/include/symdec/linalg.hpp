#pragma once

#include "symdec/matrix.hpp"

#include <algorithm>
#include <utility>

namespace symdec {

struct RrefResult {
    Matrix reduced;                   // rank x cols, zero rows dropped
    std::vector<std::size_t> pivots;  // strictly increasing
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form.
inline RrefResult rref(const Matrix& m) {
    const Field f = m.field();
    for (const auto& e : m.entries())
        if (!(e.field() == f))
            throw InvalidInput("matrix entries from mixed fields");

    std::vector<Vector> rows = m.row_vectors();
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][c].is_zero())
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[rank], rows[sel]);
        Vector& prow = rows[rank];
        const Scalar inv = prow[c].inverse();
        for (std::size_t k = c; k < m.cols(); ++k)
            if (!prow[k].is_zero())
                prow[k] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero())
                continue;
            const Scalar factor = rows[r][c];
            for (std::size_t k = c; k < m.cols(); ++k)
                if (!prow[k].is_zero())
                    rows[r][k].sub_mul(factor, prow[k]);
        }
        pivots.push_back(c);
        ++rank;
    }
    rows.resize(rank);
    return {Matrix::from_rows(f, m.cols(), rows), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// A linear subspace of k^n held as its canonical RREF basis, so equality of
/// subspaces is equality of basis matrices.
class Subspace {
public:
    Subspace() = default;

    /// The zero subspace of k^n.
    Subspace(Field f, std::size_t ambient) : basis_(f, 0, ambient) {}

    static Subspace span(const Matrix& generators) {
        RrefResult r = rref(generators);
        Subspace s;
        s.basis_ = std::move(r.reduced);
        s.pivots_ = std::move(r.pivots);
        return s;
    }

    static Subspace span(Field f, std::size_t ambient, std::span<const Vector> vectors) {
        return span(Matrix::from_rows(f, ambient, vectors));
    }

    static Subspace full(Field f, std::size_t ambient) { return span(Matrix::identity(f, ambient)); }

    Field field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return dim() == ambient_dim(); }

    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

    /// Remainder of v after eliminating the pivot coordinates; zero iff v lies in the span.
    Vector reduce(std::span<const Scalar> v) const {
        if (v.size() != ambient_dim())
            throw InvalidInput("vector length does not match subspace ambient dimension");
        Vector out(v.begin(), v.end());
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            const Scalar factor = out[pivots_[r]];
            if (factor.is_zero())
                continue;
            const auto brow = basis_.row(r);
            for (std::size_t k = pivots_[r]; k < out.size(); ++k)
                if (!brow[k].is_zero())
                    out[k].sub_mul(factor, brow[k]);
        }
        return out;
    }

    bool contains(std::span<const Scalar> v) const { return symdec::is_zero(reduce(v)); }

    bool contains(const Subspace& other) const {
        check_ambient(other);
        for (std::size_t r = 0; r < other.dim(); ++r)
            if (!contains(other.basis_.row(r)))
                return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

    void check_ambient(const Subspace& other) const {
        if (ambient_dim() != other.ambient_dim() || !(field() == other.field()))
            throw InvalidInput("subspaces live in different ambient spaces");
    }

private:
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Kernel of v -> m v.
inline Subspace nullspace(const Matrix& m) {
    const Field f = m.field();
    const RrefResult r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots)
        is_pivot[p] = true;
    std::vector<Vector> kernel;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        Vector v = zero_vector(f, n);
        v[free] = Scalar::one(f);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = -r.reduced(i, free);
        kernel.push_back(std::move(v));
    }
    return Subspace::span(f, n, kernel);
}

inline Subspace sum(const Subspace& s, const Subspace& t) {
    s.check_ambient(t);
    return Subspace::span(Matrix::stack(s.basis(), t.basis()));
}

/// s ∩ t = ann(ann s + ann t) for the standard dot product, which is
/// non-degenerate on k^n over every field.
inline Subspace intersect(const Subspace& s, const Subspace& t) {
    s.check_ambient(t);
    if (s.is_full())
        return t;
    if (t.is_full())
        return s;
    const Subspace as = nullspace(s.basis());
    const Subspace at = nullspace(t.basis());
    return nullspace(Matrix::stack(as.basis(), at.basis()));
}

inline bool contains(const Subspace& s, std::span<const Scalar> v) { return s.contains(v); }

} // namespace symdec
