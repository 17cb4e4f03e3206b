#pragma once

#include "symdec/algebra.hpp"

namespace symdec {

/// An ideal of A: a subspace of A-coordinates closed under multiplication by
/// every variable, plus the elements it was generated from.
class Ideal {
public:
    Ideal() = default;

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const Subspace& space() const noexcept { return space_; }
    const std::vector<Vector>& generators() const noexcept { return generators_; }

    std::size_t dim() const noexcept { return space_.dim(); }
    bool is_zero() const noexcept { return space_.is_zero(); }
    bool is_unit() const noexcept { return space_.is_full(); }
    /// Proper (1 ∉ I) iff I ⊆ m iff I ≠ A, since A is local.
    bool is_proper() const noexcept { return !is_unit(); }

    bool contains(std::span<const Scalar> v) const { return space_.contains(v); }
    bool contains(const Ideal& o) const { return space_.contains(o.space_); }

    friend bool operator==(const Ideal& a, const Ideal& b) { return a.space_ == b.space_; }

    /// Trusted constructor; `generators` must generate `space` as an ideal.
    static Ideal make(AlgebraPtr a, Subspace space, std::vector<Vector> generators) {
        Ideal i;
        i.algebra_ = std::move(a);
        i.space_ = std::move(space);
        i.generators_ = std::move(generators);
        return i;
    }

private:
    AlgebraPtr algebra_;
    Subspace space_;
    std::vector<Vector> generators_;
};

/// True iff x_i * v stays in s for every variable and basis row v.
inline bool is_multiplicatively_closed(const ArtinianAlgebra& a, const Subspace& s) {
    for (std::size_t i = 0; i < a.n_vars(); ++i)
        for (std::size_t r = 0; r < s.dim(); ++r)
            if (!s.contains(a.mult_by_var(i).apply(s.basis().row(r))))
                return false;
    return true;
}

inline Ideal zero_ideal(const AlgebraPtr& a) { return Ideal::make(a, Subspace(a->field(), a->dim()), {}); }

inline Ideal unit_ideal(const AlgebraPtr& a) {
    return Ideal::make(a, Subspace::full(a->field(), a->dim()), {a->unit()});
}

/// The ideal generated by elements given in A-coordinates: span{b * g}.
inline Ideal ideal_from_elements(const AlgebraPtr& a, std::vector<Vector> gens) {
    std::vector<Vector> rows;
    for (const auto& g : gens) {
        if (g.size() != a->dim())
            throw InvalidInput("generator is not in the algebra's coordinate domain");
        for (std::size_t j = 0; j < a->dim(); ++j)
            rows.push_back(a->mult_by_basis(j).apply(g));
    }
    Subspace s = Subspace::span(a->field(), a->dim(), rows);
    std::erase_if(gens, [](const Vector& g) { return is_zero(g); });
    return Ideal::make(a, std::move(s), std::move(gens));
}

inline Ideal ideal_from_generators(const AlgebraPtr& a, std::span<const Polynomial> gens) {
    std::vector<Vector> coords;
    coords.reserve(gens.size());
    for (const auto& g : gens)
        coords.push_back(a->normal_form(g));
    return ideal_from_elements(a, std::move(coords));
}

/// Validating constructor from a subspace (generated by its own basis).
inline Ideal ideal_from_subspace(const AlgebraPtr& a, const Subspace& s) {
    if (s.ambient_dim() != a->dim())
        throw InvalidInput("subspace is not in the algebra's coordinate domain");
    if (!is_multiplicatively_closed(*a, s))
        throw InvalidInput("subspace is not closed under multiplication");
    return Ideal::make(a, s, s.basis_vectors());
}

inline Ideal maximal_ideal(const AlgebraPtr& a) {
    std::vector<Vector> vars;
    for (std::size_t i = 0; i < a->n_vars(); ++i)
        vars.push_back(a->monomial_coordinates(Monomial::variable(a->n_vars(), i)));
    return ideal_from_elements(a, std::move(vars));
}

inline void check_same_algebra(const Ideal& i, const Ideal& k) {
    if (i.algebra() != k.algebra())
        throw InvalidInput("ideals of different algebras");
}

/// I * K = span{g * v : g generator of I, v basis vector of K}; an ideal
/// because K is.
inline Ideal product(const Ideal& i, const Ideal& k) {
    check_same_algebra(i, k);
    const auto& a = i.algebra();
    std::vector<Vector> rows;
    for (const auto& g : i.generators()) {
        const Matrix mg = a->multiplication_matrix(g);
        for (std::size_t r = 0; r < k.dim(); ++r)
            rows.push_back(mg.apply(k.space().basis().row(r)));
    }
    Subspace s = Subspace::span(a->field(), a->dim(), rows);
    return Ideal::make(a, s, s.basis_vectors());
}

inline Ideal sum(const Ideal& i, const Ideal& k) {
    check_same_algebra(i, k);
    std::vector<Vector> gens = i.generators();
    gens.insert(gens.end(), k.generators().begin(), k.generators().end());
    return Ideal::make(i.algebra(), sum(i.space(), k.space()), std::move(gens));
}

inline Ideal intersect(const Ideal& i, const Ideal& k) {
    check_same_algebra(i, k);
    Subspace s = intersect(i.space(), k.space());
    return Ideal::make(i.algebra(), s, s.basis_vectors());
}

/// I^n with I^0 = A, built by repeated multiplication of the stored basis of I^{n-1}.
inline Ideal power(const Ideal& i, unsigned n) {
    Ideal acc = unit_ideal(i.algebra());
    for (unsigned e = 0; e < n; ++e) {
        if (acc.is_zero())
            break;
        acc = product(i, acc);
    }
    return acc;
}

/// I^0, I^1, ..., I^{u+1} where I^{u+1} is the first zero power. For the unit
/// ideal the chain never terminates, so it is rejected.
inline std::vector<Ideal> power_chain(const Ideal& i) {
    if (i.is_unit())
        throw InvalidInput("power chain of the unit ideal does not terminate");
    std::vector<Ideal> chain{unit_ideal(i.algebra())};
    while (!chain.back().is_zero())
        chain.push_back(product(i, chain.back()));
    return chain;
}

/// (0 : K) = {a : a v = 0 for every v in K}.
inline Ideal colon_zero(const AlgebraPtr& a, const Ideal& k) {
    if (k.is_zero())
        return unit_ideal(a);
    if (k.is_unit())
        return zero_ideal(a);
    Matrix stacked(a->field(), 0, a->dim());
    for (std::size_t r = 0; r < k.dim(); ++r)
        stacked = Matrix::stack(stacked, a->multiplication_matrix(k.space().basis().row(r)));
    Subspace s = nullspace(stacked);
    return Ideal::make(a, s, s.basis_vectors());
}

inline Ideal colon_zero(const Ideal& k) { return colon_zero(k.algebra(), k); }

/// Least u with I^u ≠ 0 and I^{u+1} = 0.
inline unsigned end_degree(const Ideal& i) {
    if (i.is_unit())
        throw InvalidInput("end degree of the unit ideal is undefined");
    return static_cast<unsigned>(power_chain(i).size()) - 2;
}

/// ℓ(T/S) for ideals S ⊆ T.
inline std::size_t length_quotient(const Ideal& s, const Ideal& t) {
    if (s.space().ambient_dim() != t.space().ambient_dim() || !t.contains(s))
        throw InvalidInput("length_quotient needs S ⊆ T");
    return t.dim() - s.dim();
}

/// A linear functional nonzero on the socle of a Gorenstein algebra, together
/// with the non-degenerate pairing <a, b> = phi(ab) it induces.
class SocleFunctional {
public:
    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    /// phi as a row vector over A-coordinates.
    const Vector& phi() const noexcept { return phi_; }
    /// Coordinate on which phi is supported.
    std::size_t coordinate() const noexcept { return coord_; }
    const Vector& socle_generator() const noexcept { return socle_generator_; }

    Scalar evaluate(std::span<const Scalar> v) const { return v[coord_]; }

    Scalar pair(std::span<const Scalar> a, std::span<const Scalar> b) const {
        return evaluate(algebra_->multiply(a, b));
    }

    /// G[i][j] = phi(b_i b_j) over the standard basis.
    Matrix gram() const {
        const std::size_t n = algebra_->dim();
        Matrix g(algebra_->field(), n, n);
        for (std::size_t j = 0; j < n; ++j) {
            const Matrix& lj = algebra_->mult_by_basis(j);
            for (std::size_t i = 0; i < n; ++i)
                g(i, j) = lj(coord_, i);
        }
        return g;
    }

private:
    friend SocleFunctional make_socle_functional(const AlgebraPtr& a);

    AlgebraPtr algebra_;
    Vector phi_;
    Vector socle_generator_;
    std::size_t coord_ = 0;
};

/// phi = dual of the pivot coordinate of the canonical socle generator.
inline SocleFunctional make_socle_functional(const AlgebraPtr& a) {
    const Subspace soc = a->socle();
    if (soc.dim() != 1)
        throw NotGorenstein("socle has dimension " + std::to_string(soc.dim()));
    SocleFunctional f;
    f.algebra_ = a;
    f.coord_ = soc.pivots().front();
    f.phi_ = unit_vector(a->field(), a->dim(), f.coord_);
    f.socle_generator_ = soc.basis_vectors().front();
    if (rank(f.gram()) != a->dim())
        throw InternalError("socle pairing is degenerate");
    return f;
}

/// S^⊥ = {a : phi(s a) = 0 for all s in S}.
inline Subspace perp(const SocleFunctional& phi, const Subspace& s) {
    const auto& a = phi.algebra();
    if (s.ambient_dim() != a->dim())
        throw InvalidInput("subspace is not in the algebra's coordinate domain");
    Matrix rows(a->field(), s.dim(), a->dim());
    for (std::size_t r = 0; r < s.dim(); ++r) {
        // phi(s * a) as a linear form in a: row `coord` of mult-by-s.
        const Matrix ms = a->multiplication_matrix(s.basis().row(r));
        for (std::size_t c = 0; c < a->dim(); ++c)
            rows(r, c) = ms(phi.coordinate(), c);
    }
    return nullspace(rows);
}

} // namespace symdec
