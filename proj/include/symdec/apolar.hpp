#pragma once

#include "symdec/algebra.hpp"
#include "symdec/parser.hpp"

namespace symdec {

/// A nonzero polynomial in the divided-power variables X1..Xn.
class DPForm {
public:
    explicit DPForm(Polynomial p) : poly_(std::move(p)) {
        if (poly_.is_zero())
            throw InvalidInput("a dual form must be nonzero");
    }

    const Polynomial& polynomial() const noexcept { return poly_; }
    Field field() const noexcept { return poly_.field(); }
    std::size_t n_vars() const noexcept { return poly_.n_vars(); }
    unsigned top_degree() const { return poly_.degree(); }

    DPForm scaled(const Scalar& c) const { return DPForm(poly_.scaled(c)); }

private:
    Polynomial poly_;
};

/// Parses a form over the upper-cased ring variables, e.g. "X^2*Y + Y^4".
inline DPForm parse_form(std::string_view text, std::span<const std::string> ring_vars,
                         Field field = Field::rationals()) {
    const auto names = dual_names(ring_vars);
    return DPForm(parse_poly(text, names, field));
}

/// g ∘ F with x^a ∘ X^b = X^(b-a) when a <= b componentwise and 0 otherwise.
/// No factorials: this is the divided-power action, valid in every characteristic.
inline Polynomial contract(const Polynomial& g, const Polynomial& f) {
    if (g.n_vars() != f.n_vars() || !(g.field() == f.field()))
        throw InvalidInput("contraction between different rings");
    Polynomial out(f.field(), f.n_vars());
    for (const auto& [ma, ca] : g.terms())
        for (const auto& [mb, cb] : f.terms())
            if (ma.divides(mb))
                out.add_term(mb / ma, ca * cb);
    return out;
}

inline Polynomial contract(const Polynomial& g, const DPForm& f) { return contract(g, f.polynomial()); }

namespace detail {

/// Matrix of g ↦ g∘F on polynomials supported on `domain`, landing in DP
/// monomials of degree <= top degree of F.
inline Matrix contraction_matrix(const DPForm& f, const std::vector<Monomial>& domain,
                                 const TruncRing& target) {
    Matrix m(f.field(), target.size(), domain.size());
    for (std::size_t c = 0; c < domain.size(); ++c)
        for (const auto& [mb, cb] : f.polynomial().terms())
            if (domain[c].divides(mb))
                m(*target.index_of(mb / domain[c]), c) += cb;
    return m;
}

} // namespace detail

/// dim span{g∘F : g ∈ R}; equals dim A_F for a principal inverse system.
inline std::size_t contraction_span_dim(const DPForm& f) {
    const unsigned s = f.top_degree();
    const TruncRing ring(f.field(), f.n_vars(), s + 1);
    return rank(detail::contraction_matrix(f, ring.basis(), ring));
}

/// Generators of ann(F) = {g : g∘F = 0}.
///
/// Degree by degree, the kernel on polynomials of degree <= d is computed;
/// a kernel element is kept as a new generator unless it already lies in the
/// ideal generated so far (modulo m^{s+2}). Kernel elements are visited
/// lowest-order first, which keeps the generating set small. Degree s+1
/// contributes whatever part of m^{s+1} is still missing.
inline std::vector<Polynomial> annihilator(const DPForm& f) {
    const Field field = f.field();
    const std::size_t n = f.n_vars();
    const unsigned s = f.top_degree();
    const TruncRing target(field, n, s + 1);
    const TruncRing ambient(field, n, s + 2);

    std::vector<Polynomial> gens;
    Subspace generated(field, ambient.size());

    auto to_poly = [&](std::span<const Scalar> coords, const std::vector<Monomial>& monos) {
        Polynomial p(field, n);
        for (std::size_t i = 0; i < coords.size(); ++i)
            p.add_term(monos[i], coords[i]);
        return p;
    };
    auto multiples = [&](const Polynomial& g) {
        std::vector<Vector> rows;
        for (const auto& m : ambient.basis())
            if (m.degree() + g.order() <= s + 1)
                rows.push_back(ambient.coordinates(g * Polynomial::monomial(field, m, Scalar::one(field))));
        return rows;
    };

    for (unsigned d = 0; d <= s + 1; ++d) {
        const std::vector<Monomial> domain = monomials_below(n, d + 1);
        const Subspace kernel = nullspace(detail::contraction_matrix(f, domain, target));
        for (std::size_t r = 0; r < kernel.dim(); ++r) {
            const Polynomial g = to_poly(kernel.basis().row(r), domain);
            if (generated.contains(ambient.coordinates(g)))
                continue;
            gens.push_back(g);
            auto rows = multiples(g);
            rows.push_back(ambient.coordinates(g));
            generated = sum(generated, Subspace::span(field, ambient.size(), rows));
        }
    }
    return gens;
}

/// A_F = k[[x]]/ann(F): Artinian Gorenstein with socle degree deg F.
inline AlgebraPtr apolar_algebra(const DPForm& f, QuotientOptions opts = {}) {
    return artinian_quotient(annihilator(f), f.n_vars(), f.field(), opts);
}

} // namespace symdec
