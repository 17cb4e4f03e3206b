#pragma once

#include "symdec/linalg.hpp"
#include "symdec/polynomial.hpp"

#include <map>
#include <memory>
#include <optional>

namespace symdec {

/// k[x1..xn] / (monomials of degree >= N): the finite model of the power series ring.
class TruncRing {
public:
    TruncRing() = default;

    TruncRing(Field f, std::size_t n_vars, unsigned order)
        : field_(f), n_vars_(n_vars), order_(order), basis_(monomials_below(n_vars, order)) {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            index_.emplace(basis_[i], i);
    }

    Field field() const noexcept { return field_; }
    std::size_t n_vars() const noexcept { return n_vars_; }
    unsigned order() const noexcept { return order_; }
    std::size_t size() const noexcept { return basis_.size(); }
    const std::vector<Monomial>& basis() const noexcept { return basis_; }

    std::optional<std::size_t> index_of(const Monomial& m) const {
        auto it = index_.find(m);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    /// Coordinates of p with every term of degree >= N dropped.
    Vector coordinates(const Polynomial& p) const {
        if (p.n_vars() != n_vars_ || !(p.field() == field_))
            throw InvalidInput("polynomial does not belong to this ring");
        Vector v = zero_vector(field_, size());
        for (const auto& [m, c] : p.terms())
            if (auto i = index_of(m))
                v[*i] = c;
        return v;
    }

private:
    Field field_{};
    std::size_t n_vars_ = 0;
    unsigned order_ = 0;
    std::vector<Monomial> basis_;
    std::map<Monomial, std::size_t, MonomialOrder> index_;
};

struct QuotientOptions {
    unsigned trunc_cap = 32;
    /// Build the model at truncation order at least this large (0 = the stabilized order).
    unsigned min_order = 0;
};

class ArtinianAlgebra;
using AlgebraPtr = std::shared_ptr<const ArtinianAlgebra>;

inline AlgebraPtr build_quotient(std::vector<Polynomial> gens, std::size_t n_vars, Field field, unsigned order);

/// A = k[[x1..xn]]/J held in coordinates over a monomial basis.
///
/// The model is T_N / J_N where T_N is the truncation below degree N and
/// J_N = (J + m^N)/m^N. Row reduction of J_N puts pivots on the highest
/// monomials, so the standard basis is an order ideal of low-degree monomials.
class ArtinianAlgebra {
public:
    Field field() const noexcept { return ring_.field(); }
    std::size_t n_vars() const noexcept { return ring_.n_vars(); }
    std::size_t dim() const noexcept { return std_basis_.size(); }
    unsigned socle_degree() const noexcept { return socle_degree_; }
    unsigned truncation_order() const noexcept { return ring_.order(); }

    const std::vector<Monomial>& std_basis() const noexcept { return std_basis_; }
    const TruncRing& trunc_ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& j_generators() const noexcept { return j_generators_; }

    /// Multiplication by x_i in A-coordinates (column j = x_i * b_j).
    const Matrix& mult_by_var(std::size_t i) const { return mult_by_var_.at(i); }
    /// Multiplication by the j-th standard basis monomial.
    const Matrix& mult_by_basis(std::size_t j) const { return mult_by_basis_.at(j); }

    /// |A| x |T_N| projector onto A-coordinates.
    const Matrix& nf() const noexcept { return nf_; }

    Vector unit() const { return unit_vector(field(), dim(), 0); }

    Vector normal_form(const Polynomial& p) const {
        if (p.n_vars() != n_vars() || !(p.field() == field()))
            throw InvalidInput("element is not in this algebra's coordinate domain");
        return nf_.apply(ring_.coordinates(p));
    }

    /// Coordinates of a monomial of any degree (zero past the truncation order).
    Vector monomial_coordinates(const Monomial& m) const {
        if (auto i = ring_.index_of(m))
            return nf_.column(*i);
        return zero_vector(field(), dim());
    }

    std::optional<std::size_t> basis_index(const Monomial& m) const {
        for (std::size_t j = 0; j < std_basis_.size(); ++j)
            if (std_basis_[j] == m)
                return j;
        return std::nullopt;
    }

    Matrix multiplication_matrix(std::span<const Scalar> a) const {
        check_vector(a);
        Matrix out(field(), dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            if (a[j].is_zero())
                continue;
            Matrix term = mult_by_basis_[j];
            if (!a[j].is_one())
                scale(term, a[j]);
            out += term;
        }
        return out;
    }

    /// a * b: expand b over the standard basis and apply each monomial's chain
    /// of variable multiplications to a.
    Vector multiply(std::span<const Scalar> a, std::span<const Scalar> b) const {
        check_vector(a);
        check_vector(b);
        Vector out = zero_vector(field(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            if (b[j].is_zero())
                continue;
            Vector t = mult_by_basis_[j].apply(a);
            for (std::size_t k = 0; k < dim(); ++k)
                if (!t[k].is_zero())
                    out[k] += b[j] * t[k];
        }
        return out;
    }

    /// (0 : m) as a subspace of A.
    Subspace socle() const {
        Matrix stacked(field(), 0, dim());
        for (const auto& m : mult_by_var_)
            stacked = Matrix::stack(stacked, m);
        return nullspace(stacked);
    }

    std::string describe_basis(std::span<const std::string> names) const {
        std::string out = "{";
        for (std::size_t j = 0; j < dim(); ++j)
            out += (j ? ", " : "") + std_basis_[j].to_string(names);
        return out + "}";
    }

private:
    friend AlgebraPtr build_quotient(std::vector<Polynomial>, std::size_t, Field, unsigned);

    static void scale(Matrix& m, const Scalar& s) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (auto& e : m.row(r))
                if (!e.is_zero())
                    e *= s;
    }

    void check_vector(std::span<const Scalar> v) const {
        if (v.size() != dim())
            throw InvalidInput("coordinate vector length does not match algebra dimension");
    }

    TruncRing ring_;
    std::vector<Polynomial> j_generators_;
    std::vector<Monomial> std_basis_;
    unsigned socle_degree_ = 0;
    Matrix nf_;
    std::vector<Matrix> mult_by_var_;
    std::vector<Matrix> mult_by_basis_;
};

namespace detail {

/// Rows spanning J_N, in reversed canonical column order (highest monomial first).
inline Subspace truncated_ideal(const TruncRing& ring, std::span<const Polynomial> gens) {
    const std::size_t n = ring.size();
    std::vector<Vector> rows;
    for (const auto& g : gens) {
        if (g.is_zero())
            continue;
        for (const auto& m : ring.basis()) {
            if (m.degree() + g.order() >= ring.order())
                continue;
            Vector row = zero_vector(ring.field(), n);
            for (const auto& [gm, c] : g.terms())
                if (auto i = ring.index_of(gm * m))
                    row[n - 1 - *i] = c;
            rows.push_back(std::move(row));
        }
    }
    return Subspace::span(ring.field(), n, rows);
}

} // namespace detail

/// Builds T_N / J_N at a fixed truncation order N (callers guarantee m^N ⊆ J).
inline AlgebraPtr build_quotient(std::vector<Polynomial> gens, std::size_t n_vars, Field field, unsigned order) {
    auto alg = std::make_shared<ArtinianAlgebra>();
    alg->ring_ = TruncRing(field, n_vars, order);
    const TruncRing& ring = alg->ring_;
    const std::size_t tn = ring.size();
    const Subspace j = detail::truncated_ideal(ring, gens);

    // pivot_row[c] = row of the reduced basis whose pivot is canonical column c
    std::vector<std::optional<std::size_t>> pivot_row(tn);
    for (std::size_t r = 0; r < j.pivots().size(); ++r)
        pivot_row[tn - 1 - j.pivots()[r]] = r;

    std::vector<std::size_t> std_index(tn, SIZE_MAX);
    for (std::size_t c = 0; c < tn; ++c)
        if (!pivot_row[c]) {
            std_index[c] = alg->std_basis_.size();
            alg->std_basis_.push_back(ring.basis()[c]);
        }
    const std::size_t dim = alg->std_basis_.size();

    // Column c of nf: a pivot monomial equals minus the non-pivot part of its row.
    alg->nf_ = Matrix(field, dim, tn);
    for (std::size_t c = 0; c < tn; ++c) {
        if (!pivot_row[c]) {
            alg->nf_(std_index[c], c) = Scalar::one(field);
            continue;
        }
        const auto row = j.basis().row(*pivot_row[c]);
        for (std::size_t c2 = 0; c2 < tn; ++c2) {
            const Scalar& e = row[tn - 1 - c2];
            if (!e.is_zero() && !pivot_row[c2])
                alg->nf_(std_index[c2], c) = -e;
        }
    }

    alg->socle_degree_ = 0;
    for (std::size_t c = 0; c < tn; ++c) {
        bool nonzero = false;
        for (std::size_t r = 0; r < dim && !nonzero; ++r)
            nonzero = !alg->nf_(r, c).is_zero();
        if (nonzero)
            alg->socle_degree_ = std::max(alg->socle_degree_, ring.basis()[c].degree());
    }

    for (std::size_t i = 0; i < n_vars; ++i) {
        const Monomial x = Monomial::variable(n_vars, i);
        Matrix m(field, dim, dim);
        for (std::size_t b = 0; b < dim; ++b) {
            const Vector col = alg->monomial_coordinates(alg->std_basis_[b] * x);
            for (std::size_t r = 0; r < dim; ++r)
                m(r, b) = col[r];
        }
        alg->mult_by_var_.push_back(std::move(m));
    }

    // The standard basis is an order ideal, so each monomial is x_i times an
    // earlier basis monomial.
    alg->mult_by_basis_.reserve(dim);
    for (std::size_t b = 0; b < dim; ++b) {
        const Monomial& m = alg->std_basis_[b];
        if (m.degree() == 0) {
            alg->mult_by_basis_.push_back(Matrix::identity(field, dim));
            continue;
        }
        std::size_t var = 0;
        while (m[var] == 0)
            ++var;
        const auto prev = alg->basis_index(m / Monomial::variable(n_vars, var));
        if (!prev)
            throw InternalError("standard basis is not closed under division");
        alg->mult_by_basis_.push_back(alg->mult_by_var_[var] * alg->mult_by_basis_[*prev]);
    }

    alg->j_generators_ = std::move(gens);
    return alg;
}

/// A = k[[x1..xn]]/J for polynomial generators of J.
///
/// Picks the least N with dim T_N/J_N = dim T_{N+1}/J_{N+1}. That equality
/// says J + m^N = J + m^{N+1}, hence J + m^N = J + m^M for every M > N, and
/// by Krull's intersection theorem m^N ⊆ J. So T_N/J_N is exactly A.
inline AlgebraPtr artinian_quotient(const std::vector<Polynomial>& gens, std::size_t n_vars, Field field,
                                    QuotientOptions opts = {}) {
    if (gens.empty())
        throw InvalidInput("J needs at least one generator");
    if (n_vars == 0)
        throw InvalidInput("at least one variable is required");
    if (opts.trunc_cap < 2)
        throw InvalidInput("truncation cap must be at least 2");
    for (const auto& g : gens) {
        if (g.n_vars() != n_vars || !(g.field() == field))
            throw InvalidInput("generator does not belong to the ambient ring");
        if (!g.coefficient(Monomial(n_vars)).is_zero())
            throw ZeroAlgebra("J contains a unit, so A = 0");
    }

    auto quotient_dim = [&](unsigned order) {
        const TruncRing ring(field, n_vars, order);
        return ring.size() - detail::truncated_ideal(ring, gens).dim();
    };

    std::size_t prev = quotient_dim(1);
    for (unsigned order = 1; order <= opts.trunc_cap; ++order) {
        const std::size_t next = quotient_dim(order + 1);
        if (next == prev)
            return build_quotient(gens, n_vars, field, std::max(order, opts.min_order));
        prev = next;
    }
    throw NotArtinian("quotient did not stabilize below truncation order " + std::to_string(opts.trunc_cap));
}

/// Multiplication in A; convenience wrapper for `A.multiply`.
inline Vector multiply(const ArtinianAlgebra& a, std::span<const Scalar> x, std::span<const Scalar> y) {
    return a.multiply(x, y);
}

/// Gorenstein iff the socle (0 : m) is one-dimensional.
inline bool is_gorenstein(const ArtinianAlgebra& a) { return a.socle().dim() == 1; }

} // namespace symdec
