#pragma once

#include "symdec/scalar.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace symdec {

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t n_vars) : exps_(n_vars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t n_vars, std::size_t i) {
        Monomial m(n_vars);
        m.exps_.at(i) = 1;
        return m;
    }

    std::size_t n_vars() const noexcept { return exps_.size(); }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<unsigned>& exponents() const noexcept { return exps_; }

    unsigned degree() const noexcept {
        unsigned d = 0;
        for (auto e : exps_)
            d += e;
        return d;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i])
                return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (std::size_t i = 0; i < m.exps_.size(); ++i)
            m.exps_[i] += b.exps_[i];
        return m;
    }

    /// a / b; b must divide a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (std::size_t i = 0; i < m.exps_.size(); ++i)
            m.exps_[i] -= b.exps_[i];
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// "x^2*y", "1" for the unit monomial.
    std::string to_string(std::span<const std::string> names) const {
        std::string out;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0)
                continue;
            if (!out.empty())
                out += '*';
            out += names[i];
            if (exps_[i] > 1)
                out += '^' + std::to_string(exps_[i]);
        }
        return out.empty() ? "1" : out;
    }

private:
    std::vector<unsigned> exps_;
};

/// Canonical order: degree ascending, then lexicographic with x1 > x2 > ...
/// (so x^2 < x*y < y^2 among the quadrics). It is a monomial order.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const unsigned da = a.degree(), db = b.degree();
        if (da != db)
            return da < db;
        return a.exponents() > b.exponents();
    }
};

/// All monomials of exactly degree d in n variables, in canonical order.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
    std::vector<Monomial> out;
    if (n == 0) {
        if (d == 0)
            out.emplace_back(0);
        return out;
    }
    std::vector<unsigned> e(n, 0);
    // Enumerate exponent vectors in descending lexicographic order.
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == n) {
            e[i] = left;
            out.emplace_back(e);
            return;
        }
        for (unsigned k = left + 1; k-- > 0;) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

/// All monomials of degree < bound, in canonical order.
inline std::vector<Monomial> monomials_below(std::size_t n, unsigned bound) {
    std::vector<Monomial> out;
    for (unsigned d = 0; d < bound; ++d) {
        auto layer = monomials_of_degree(n, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

/// Sparse polynomial with canonically ordered terms and no zero coefficients.
class Polynomial {
public:
    using Terms = std::map<Monomial, Scalar, MonomialOrder>;

    Polynomial() = default;
    Polynomial(Field f, std::size_t n_vars) : field_(f), n_vars_(n_vars) {}

    static Polynomial constant(Field f, std::size_t n_vars, const Scalar& c) {
        Polynomial p(f, n_vars);
        p.add_term(Monomial(n_vars), c);
        return p;
    }

    static Polynomial monomial(Field f, const Monomial& m, const Scalar& c) {
        Polynomial p(f, m.n_vars());
        p.add_term(m, c);
        return p;
    }

    static Polynomial variable(Field f, std::size_t n_vars, std::size_t i) {
        return monomial(f, Monomial::variable(n_vars, i), Scalar::one(f));
    }

    Field field() const noexcept { return field_; }
    std::size_t n_vars() const noexcept { return n_vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Scalar coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar::zero(field_) : it->second;
    }

    /// Highest total degree of a term; 0 for the zero polynomial.
    unsigned degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

    /// Lowest total degree of a term; 0 for the zero polynomial.
    unsigned order() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

    void add_term(const Monomial& m, const Scalar& c) {
        if (m.n_vars() != n_vars_)
            throw InvalidInput("monomial variable count mismatch");
        if (!(c.field() == field_))
            throw InvalidInput("coefficient from a different field");
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_compatible(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_compatible(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }

    Polynomial operator-() const {
        Polynomial p(field_, n_vars_);
        for (const auto& [m, c] : terms_)
            p.terms_.emplace(m, -c);
        return p;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        Polynomial p(a.field_, a.n_vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                p.add_term(ma * mb, ca * cb);
        return p;
    }

    Polynomial scaled(const Scalar& s) const {
        Polynomial p(field_, n_vars_);
        for (const auto& [m, c] : terms_)
            p.add_term(m, c * s);
        return p;
    }

    Polynomial pow(unsigned e) const {
        Polynomial acc = constant(field_, n_vars_, Scalar::one(field_));
        for (unsigned i = 0; i < e; ++i)
            acc = acc * *this;
        return acc;
    }

    /// Terms of degree < bound.
    Polynomial truncated(unsigned bound) const {
        Polynomial p(field_, n_vars_);
        for (const auto& [m, c] : terms_)
            if (m.degree() < bound)
                p.terms_.emplace(m, c);
        return p;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
    }

    /// Human-readable form in the parser grammar, highest degree first.
    std::string to_string(std::span<const std::string> names) const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string coeff = c.to_string();
            const bool negative = !coeff.empty() && coeff[0] == '-';
            if (negative)
                coeff.erase(0, 1);
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            const bool unit_monomial = m.degree() == 0;
            if (unit_monomial) {
                out += coeff;
            } else {
                if (coeff != "1")
                    out += coeff + "*";
                out += m.to_string(names);
            }
        }
        return out;
    }

private:
    void check_compatible(const Polynomial& o) const {
        if (!(field_ == o.field_) || n_vars_ != o.n_vars_)
            throw InvalidInput("polynomials from different rings");
    }

    Field field_{};
    std::size_t n_vars_ = 0;
    Terms terms_;
};

} // namespace symdec
