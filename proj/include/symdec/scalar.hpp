#pragma once

#include "symdec/error.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

namespace symdec {

/// Base field descriptor: Q (characteristic 0) or GF(p).
class Field {
public:
    constexpr Field() = default;

    static constexpr Field rationals() { return Field{}; }

    /// GF(p). p must be a prime below 2^32 so that residue products fit in 64 bits.
    static Field prime(std::uint64_t p) {
        if (p < 2 || p > 0xffffffffULL)
            throw InvalidInput("field characteristic " + std::to_string(p) + " out of range");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
        Field f;
        f.p_ = p;
        return f;
    }

    /// 0 selects Q, anything else must be prime.
    static Field from_characteristic(std::uint64_t c) { return c == 0 ? rationals() : prime(c); }

    constexpr std::uint64_t characteristic() const noexcept { return p_; }
    constexpr bool is_rational() const noexcept { return p_ == 0; }

    friend constexpr bool operator==(Field a, Field b) noexcept { return a.p_ == b.p_; }

    std::string name() const { return p_ == 0 ? std::string("QQ") : "GF(" + std::to_string(p_) + ")"; }

private:
    std::uint64_t p_ = 0;
};

/// An exact element of a Field. Rationals are kept in lowest terms by GMP;
/// residues are kept in [0, p).
class Scalar {
public:
    Scalar() = default;

    Scalar(Field f, long value) : field_(f) {
        if (f.is_rational()) {
            q_ = value;
        } else {
            r_ = reduce_signed(value, f.characteristic());
        }
    }

    /// num/den reduced into the field. den must be nonzero in the field.
    static Scalar fraction(Field f, const mpz_class& num, const mpz_class& den) {
        if (den == 0)
            throw InvalidInput("zero denominator");
        Scalar s;
        s.field_ = f;
        if (f.is_rational()) {
            s.q_ = mpq_class(num, den);
            s.q_.canonicalize();
            return s;
        }
        const mpz_class p = static_cast<unsigned long>(f.characteristic());
        mpz_class n = num % p;
        if (n < 0)
            n += p;
        mpz_class d = den % p;
        if (d < 0)
            d += p;
        if (d == 0)
            throw InvalidInput("denominator vanishes in " + f.name());
        Scalar ns, ds;
        ns.field_ = ds.field_ = f;
        ns.r_ = n.get_ui();
        ds.r_ = d.get_ui();
        return ns / ds;
    }

    static Scalar zero(Field f) { return Scalar(f, 0); }
    static Scalar one(Field f) { return Scalar(f, 1); }

    Field field() const noexcept { return field_; }

    bool is_zero() const noexcept { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }
    bool is_one() const noexcept { return field_.is_rational() ? q_ == 1 : r_ == 1; }

    const mpq_class& rational() const noexcept { return q_; }
    std::uint64_t residue() const noexcept { return r_; }

    Scalar operator-() const {
        Scalar s = *this;
        if (field_.is_rational())
            s.q_ = -q_;
        else if (r_ != 0)
            s.r_ = field_.characteristic() - r_;
        return s;
    }

    Scalar& operator+=(const Scalar& o) {
        check_same(o);
        if (field_.is_rational())
            q_ += o.q_;
        else
            r_ = (r_ + o.r_) % field_.characteristic();
        return *this;
    }

    Scalar& operator-=(const Scalar& o) {
        check_same(o);
        if (field_.is_rational())
            q_ -= o.q_;
        else
            r_ = (r_ + field_.characteristic() - o.r_) % field_.characteristic();
        return *this;
    }

    Scalar& operator*=(const Scalar& o) {
        check_same(o);
        if (field_.is_rational())
            q_ *= o.q_;
        else
            r_ = (r_ * o.r_) % field_.characteristic();
        return *this;
    }

    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// this -= a*b, the elimination kernel.
    void sub_mul(const Scalar& a, const Scalar& b) {
        check_same(a);
        check_same(b);
        if (field_.is_rational()) {
            q_ -= a.q_ * b.q_;
        } else {
            const std::uint64_t p = field_.characteristic();
            r_ = (r_ + p - (a.r_ * b.r_) % p) % p;
        }
    }

    Scalar inverse() const {
        if (is_zero())
            throw InvalidInput("division by zero");
        Scalar s = *this;
        if (field_.is_rational()) {
            s.q_ = 1 / q_;
            return s;
        }
        // Fermat: a^(p-2)
        const std::uint64_t p = field_.characteristic();
        std::uint64_t base = r_, e = p - 2, acc = 1;
        while (e) {
            if (e & 1)
                acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        s.r_ = acc;
        return s;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (!(a.field_ == b.field_))
            return false;
        return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
    }

    std::string to_string() const { return field_.is_rational() ? q_.get_str() : std::to_string(r_); }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    static std::uint64_t reduce_signed(long v, std::uint64_t p) {
        const long long m = static_cast<long long>(p);
        long long r = static_cast<long long>(v) % m;
        if (r < 0)
            r += m;
        return static_cast<std::uint64_t>(r);
    }

    void check_same(const Scalar& o) const {
        if (!(field_ == o.field_))
            throw InvalidInput("mixed-field arithmetic: " + field_.name() + " vs " + o.field_.name());
    }

    Field field_{};
    mpq_class q_{};
    std::uint64_t r_ = 0;
};

} // namespace symdec
