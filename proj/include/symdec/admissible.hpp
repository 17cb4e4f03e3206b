#pragma once

#include "symdec/error.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace symdec {

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

/// r = C(k(n), n) + C(k(n-1), n-1) + ... with k(n) > k(n-1) > ...; terms
/// stored as (k, i) from i = n downwards, stopping once r is exhausted.
struct MacaulayRep {
    unsigned degree = 0;
    std::vector<std::pair<unsigned long, unsigned long>> terms;

    mpz_class value() const {
        mpz_class s = 0;
        for (auto [k, i] : terms)
            s += binomial(k, i);
        return s;
    }

    /// Sum of C(k+1, i+1).
    mpz_class bound() const {
        mpz_class s = 0;
        for (auto [k, i] : terms)
            s += binomial(k + 1, i + 1);
        return s;
    }
};

inline MacaulayRep macaulay_rep(const mpz_class& r, unsigned n) {
    if (r < 0)
        throw InvalidInput("macaulay_rep needs r >= 0");
    if (n == 0)
        throw InvalidInput("macaulay_rep needs n >= 1");
    MacaulayRep rep;
    rep.degree = n;
    mpz_class rest = r;
    for (unsigned long i = n; i >= 1 && rest > 0; --i) {
        unsigned long k = i;
        mpz_class c = 1;  // C(k, i)
        for (;;) {
            mpz_class next = c * (k + 1) / (k + 1 - i);
            if (next > rest)
                break;
            c = next;
            ++k;
        }
        rep.terms.emplace_back(k, i);
        rest -= c;
    }
    return rep;
}

inline mpz_class macaulay_bound(const mpz_class& r, unsigned n) { return macaulay_rep(r, n).bound(); }

namespace detail {

/// Largest value allowed for h_{n+1} given h_n, for n >= 1.
inline mpz_class admissible_next_bound(unsigned b, long h_n, unsigned n) {
    const mpz_class block = binomial(n + b - 1, b - 1);
    const mpz_class hn = h_n;
    const mpz_class q = hn / block;
    const mpz_class r = hn - q * block;
    return q * binomial(n + b, b - 1) + macaulay_bound(r, n);
}

} // namespace detail

/// Sequence test used for b-admissibility: h_1 <= b h_0, then the Macaulay
/// bound on each step h_n -> h_{n+1}. Zeros are allowed, negatives are not.
inline bool is_b_admissible(unsigned b, const std::vector<int>& h) {
    if (b == 0)
        throw InvalidInput("b must be positive");
    if (h.empty())
        throw InvalidInput("empty sequence");
    if (std::any_of(h.begin(), h.end(), [](int x) { return x < 0; }))
        return false;
    if (h.size() >= 2 && static_cast<long>(h[1]) > static_cast<long>(b) * h[0])
        return false;
    for (std::size_t n = 1; n + 1 < h.size(); ++n)
        if (h[n + 1] > detail::admissible_next_bound(b, h[n], static_cast<unsigned>(n)))
            return false;
    return true;
}

/// The degree-0 condition for a known base ring: h_0 <= l(R_0).
inline bool satisfies_base_length(const std::vector<int>& h, long base_length) {
    if (h.empty())
        throw InvalidInput("empty sequence");
    return h.front() <= base_length;
}

inline bool is_b_admissible_over(unsigned b, const std::vector<int>& h, long base_length) {
    return satisfies_base_length(h, base_length) && is_b_admissible(b, h);
}

/// All (h0, ..., h_u) with u_min <= u <= u_max, entries >= 1, h_u <= hu_max
/// that pass is_b_admissible; sorted lexicographically.
inline std::vector<std::vector<int>> enumerate_admissible(unsigned b, int h0, unsigned u_min, unsigned u_max,
                                                          int hu_max) {
    if (b == 0 || h0 < 1 || hu_max < 1 || u_min > u_max)
        throw InvalidInput("enumerate_admissible needs positive parameters and u_min <= u_max");
    std::vector<std::vector<int>> out;
    std::vector<int> cur{h0};
    auto dfs = [&](auto&& self) -> void {
        const std::size_t u = cur.size() - 1;
        if (u >= u_min && cur.back() <= hu_max)
            out.push_back(cur);
        if (u == u_max)
            return;
        const mpz_class cap = u == 0 ? mpz_class(static_cast<long>(b) * h0)
                                     : detail::admissible_next_bound(b, cur.back(), static_cast<unsigned>(u));
        if (!cap.fits_sint_p())
            throw InvalidInput("enumeration bound exceeds integer range");
        const int top = static_cast<int>(cap.get_si());
        for (int x = 1; x <= top; ++x) {
            cur.push_back(x);
            self(self);
            cur.pop_back();
        }
    };
    dfs(dfs);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace symdec
