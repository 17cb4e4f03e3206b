#pragma once

#include "symdec/decomposition.hpp"

#include <algorithm>
#include <cstdlib>

namespace symdec {

inline void check_positive_sequence(const Sequence& h) {
    if (h.empty())
        throw InvalidInput("empty sequence");
    for (int x : h)
        if (x < 1)
            throw InvalidInput("sequence entries must be positive");
}

/// Every family H(0..u) of non-negative rows with H(a) supported on [0, u-a],
/// symmetric about (u-a)/2, summing to h and with H(0)_u = h_u. Ordered
/// lexicographically by (H(0), H(1), ...).
inline std::vector<DecompositionTable> enumerate_candidate_decompositions(const Sequence& h) {
    check_positive_sequence(h);
    const int u = static_cast<int>(h.size()) - 1;
    std::vector<DecompositionTable> out;
    DecompositionTable cur;
    cur.hf.values = h;
    cur.rows.assign(h.size(), Sequence(h.size(), 0));
    Sequence remaining = h;

    // Fills row a position v (and its mirror u-a-v).
    auto dfs = [&](auto&& self, int a, int v) -> void {
        const int top = u - a;
        if (a > u) {
            if (std::all_of(remaining.begin(), remaining.end(), [](int x) { return x == 0; }))
                out.push_back(cur);
            return;
        }
        if (2 * v > top) {
            // Later rows never reach index u-a.
            if (remaining[static_cast<std::size_t>(top)] != 0)
                return;
            self(self, a + 1, 0);
            return;
        }
        const auto lo = static_cast<std::size_t>(v);
        const auto hi = static_cast<std::size_t>(top - v);
        int cap = lo == hi ? remaining[lo] : std::min(remaining[lo], remaining[hi]);
        int start = 0;
        if (a == 0 && (v == 0 || top - v == u)) {
            // H(0)_u = h_u, hence also H(0)_0 = h_u.
            if (h.back() > cap)
                return;
            start = cap = h.back();
        }
        for (int x = start; x <= cap; ++x) {
            cur.rows[static_cast<std::size_t>(a)][lo] = x;
            cur.rows[static_cast<std::size_t>(a)][hi] = x;
            remaining[lo] -= x;
            if (hi != lo)
                remaining[hi] -= x;
            self(self, a, v + 1);
            remaining[lo] += x;
            if (hi != lo)
                remaining[hi] += x;
        }
        cur.rows[static_cast<std::size_t>(a)][lo] = 0;
        cur.rows[static_cast<std::size_t>(a)][hi] = 0;
    };
    dfs(dfs, 0, 0);
    return out;
}

struct SequencePredicates {
    bool cor35 = false;       // h_u <= h_0
    bool psu = false;         // h_0 < ... < h_i >= h_{i+1} >= ... for some i
    bool diff_bound = false;  // |h_i - h_{i+1}| <= h_0
};

inline SequencePredicates sequence_predicates(const Sequence& h) {
    check_positive_sequence(h);
    SequencePredicates p;
    p.cor35 = h.back() <= h.front();
    std::size_t peak = 0;
    while (peak + 1 < h.size() && h[peak] < h[peak + 1])
        ++peak;
    p.psu = true;
    for (std::size_t i = peak; i + 1 < h.size(); ++i)
        p.psu = p.psu && h[i] >= h[i + 1];
    p.diff_bound = true;
    for (std::size_t i = 0; i + 1 < h.size(); ++i)
        p.diff_bound = p.diff_bound && std::abs(h[i] - h[i + 1]) <= h.front();
    return p;
}

/// False when h = (2, ..., 1), H(1)_0 = 0, H(0) = (1, ..., 1) and H(1)_1 >= 2:
/// such a table cannot come from k[[x,y]] with l(A/I) = 2.
inline bool prop52_filter(const Sequence& h, const DecompositionTable& t) {
    if (h.size() < 2 || h.front() != 2 || h.back() != 1)
        return true;
    const std::size_t u = h.size() - 1;
    if (t.rows.size() != h.size())
        return true;
    const Sequence& h0 = t.rows[0];
    for (std::size_t v = 0; v <= u; ++v)
        if (h0[v] != 1)
            return true;
    const Sequence& h1 = t.rows[1];
    if (h1[0] != 0)
        return true;
    return h1.size() < 2 || h1[1] < 2;
}

/// Optional filters on candidate lists. Sequence-level predicates drop every
/// candidate when the sequence fails them.
struct CandidateFilters {
    bool cor35 = false;
    bool psu = false;
    bool diff = false;
    bool prop52 = false;
    /// Keep only candidates whose H(0) has no zero entry. H(0) is the Hilbert
    /// function of a standard graded quotient generated in degree 0 with
    /// socle degree u, so a zero inside it cannot occur.
    bool h0pos = false;

    bool any() const { return cor35 || psu || diff || prop52 || h0pos; }
};

/// Parses "cor35,psu,diff,prop52,h0pos" (any subset, any order).
inline CandidateFilters parse_filters(std::string_view text) {
    CandidateFilters f;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        const std::string_view name = text.substr(start, end - start);
        if (name == "cor35")
            f.cor35 = true;
        else if (name == "psu")
            f.psu = true;
        else if (name == "diff")
            f.diff = true;
        else if (name == "prop52")
            f.prop52 = true;
        else if (name == "h0pos")
            f.h0pos = true;
        else if (!name.empty())
            throw InvalidInput("unknown filter '" + std::string(name) + "'");
        start = end + 1;
    }
    return f;
}

inline std::vector<DecompositionTable> apply_filters(const Sequence& h, std::vector<DecompositionTable> cands,
                                                     const CandidateFilters& f) {
    const SequencePredicates p = sequence_predicates(h);
    if ((f.cor35 && !p.cor35) || (f.psu && !p.psu) || (f.diff && !p.diff_bound))
        return {};
    std::erase_if(cands, [&](const DecompositionTable& t) {
        if (f.prop52 && !prop52_filter(h, t))
            return true;
        if (f.h0pos && std::any_of(t.rows[0].begin(), t.rows[0].end(), [](int x) { return x == 0; }))
            return true;
        return false;
    });
    return cands;
}

inline std::vector<DecompositionTable> candidate_decompositions(const Sequence& h, const CandidateFilters& f = {}) {
    return apply_filters(h, enumerate_candidate_decompositions(h), f);
}

} // namespace symdec
