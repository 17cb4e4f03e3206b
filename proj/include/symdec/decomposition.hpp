#pragma once

#include "symdec/ideal.hpp"

#include <string>
#include <vector>

namespace symdec {

using Sequence = std::vector<int>;

/// HF(G(I)) = (dim I^i/I^{i+1}) for i = 0..u.
struct HilbertFunction {
    Sequence values;

    unsigned end_degree() const { return values.empty() ? 0 : static_cast<unsigned>(values.size() - 1); }
    int operator[](std::size_t i) const { return values.at(i); }
    std::size_t size() const noexcept { return values.size(); }
    bool is_symmetric() const {
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i] != values[values.size() - 1 - i])
                return false;
        return true;
    }
    friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

/// Rows H(0)..H(u), each of length u+1 and zero beyond index u-a.
struct DecompositionTable {
    HilbertFunction hf;
    std::vector<Sequence> rows;

    unsigned end_degree() const { return hf.end_degree(); }
    const Sequence& row(std::size_t a) const { return rows.at(a); }

    friend bool operator==(const DecompositionTable&, const DecompositionTable&) = default;
    friend bool operator<(const DecompositionTable& a, const DecompositionTable& b) { return a.rows < b.rows; }

    /// Empty string when every structural invariant holds, else a description
    /// of the first violation: support, symmetry about (u-a)/2, column sums.
    std::string violation() const {
        const std::size_t n = hf.size();
        if (rows.size() != n)
            return "row count differs from u+1";
        for (std::size_t a = 0; a < n; ++a) {
            if (rows[a].size() != n)
                return "row H(" + std::to_string(a) + ") has wrong length";
            const std::size_t top = n - 1 - a;
            for (std::size_t v = 0; v < n; ++v) {
                if (rows[a][v] < 0)
                    return "negative entry in H(" + std::to_string(a) + ")";
                if (v > top && rows[a][v] != 0)
                    return "H(" + std::to_string(a) + ") nonzero beyond u-a";
                if (v <= top && rows[a][v] != rows[a][top - v])
                    return "H(" + std::to_string(a) + ") is not symmetric";
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            int s = 0;
            for (std::size_t a = 0; a < n; ++a)
                s += rows[a][i];
            if (s != hf.values[i])
                return "column " + std::to_string(i) + " does not sum to HF";
        }
        return {};
    }
};

/// Powers and colon ideals of I computed once, with the degenerate-index
/// conventions I^m = A for m <= 0, (0 : A) = 0 and (0 : 0) = A.
class IdealFiltration {
public:
    explicit IdealFiltration(const Ideal& i) : ideal_(i) {
        if (!i.is_proper())
            throw InvalidInput("the ideal must be proper");
        powers_ = power_chain(i);
        for (const auto& p : powers_)
            colons_.push_back(colon_zero(p));
    }

    const Ideal& ideal() const noexcept { return ideal_; }
    const AlgebraPtr& algebra() const noexcept { return ideal_.algebra(); }
    unsigned end_degree() const { return static_cast<unsigned>(powers_.size()) - 2; }

    /// I^m; A for m <= 0, 0 for m > u.
    const Ideal& power(int m) const {
        if (m <= 0)
            return powers_.front();
        return powers_[std::min<std::size_t>(static_cast<std::size_t>(m), powers_.size() - 1)];
    }

    /// (0 : I^m); 0 for m <= 0, A for m > u.
    const Ideal& colon(int m) const {
        if (m <= 0)
            return colons_.front();
        return colons_[std::min<std::size_t>(static_cast<std::size_t>(m), colons_.size() - 1)];
    }

    HilbertFunction hilbert_function() const {
        HilbertFunction hf;
        for (std::size_t i = 0; i + 1 < powers_.size(); ++i)
            hf.values.push_back(static_cast<int>(powers_[i].dim() - powers_[i + 1].dim()));
        return hf;
    }

    /// dim Q(a)_v = dim M - dim(M ∩ N) with l = u+1-a-v,
    /// M = I^v ∩ (0:I^l), N = I^{v+1} ∩ (0:I^l) + I^v ∩ (0:I^{l-1}).
    std::size_t q_dimension(int a, int v) const {
        const int u = static_cast<int>(end_degree());
        if (a < 0 || v < 0 || a + v >= u + 1)
            return 0;
        const int l = u + 1 - a - v;
        const Subspace m = intersect(power(v).space(), colon(l).space());
        const Subspace n = sum(intersect(power(v + 1).space(), colon(l).space()),
                               intersect(power(v).space(), colon(l - 1).space()));
        return m.dim() - intersect(m, n).dim();
    }

    /// dim C(a)_i = dim((0:I^{u+1-a-i}) ∩ I^i + I^{i+1}) - dim I^{i+1}.
    std::size_t c_dimension(int a, int i) const {
        const int u = static_cast<int>(end_degree());
        if (i < 0 || i > u)
            return 0;
        const Subspace num =
            sum(intersect(colon(u + 1 - a - i).space(), power(i).space()), power(i + 1).space());
        return num.dim() - power(i + 1).dim();
    }

    DecompositionTable table() const {
        const int u = static_cast<int>(end_degree());
        DecompositionTable t;
        t.hf = hilbert_function();
        t.rows.assign(static_cast<std::size_t>(u + 1), Sequence(static_cast<std::size_t>(u + 1), 0));
        for (int a = 0; a <= u; ++a)
            for (int v = 0; v + a <= u; ++v)
                t.rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(v)] =
                    static_cast<int>(q_dimension(a, v));
        return t;
    }

    /// Rows a = 0..u+1 of dim C(a)_i.
    std::vector<Sequence> c_table() const {
        const int u = static_cast<int>(end_degree());
        std::vector<Sequence> out;
        for (int a = 0; a <= u + 1; ++a) {
            Sequence row;
            for (int i = 0; i <= u; ++i)
                row.push_back(static_cast<int>(c_dimension(a, i)));
            out.push_back(std::move(row));
        }
        return out;
    }

private:
    Ideal ideal_;
    std::vector<Ideal> powers_;  // I^0 .. I^{u+1}
    std::vector<Ideal> colons_;  // (0 : I^m) for the same m
};

inline HilbertFunction hf_assoc_graded(const Ideal& i) {
    if (!i.is_proper())
        throw InvalidInput("the ideal must be proper");
    const auto chain = power_chain(i);
    HilbertFunction hf;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        hf.values.push_back(static_cast<int>(chain[k].dim() - chain[k + 1].dim()));
    return hf;
}

inline std::size_t q_dimension(const Ideal& i, int a, int v) { return IdealFiltration(i).q_dimension(a, v); }

inline std::vector<Sequence> c_filtration_dims(const Ideal& i) { return IdealFiltration(i).c_table(); }

/// The symmetric decomposition of HF(G(I)) for I in a Gorenstein A.
///
/// Besides the table invariants this checks that socle(A) ∩ I^u is a line
/// when I ≠ 0, since Q(0) is Gorenstein of socle degree u.
inline DecompositionTable symmetric_decomposition(const IdealFiltration& filt) {
    const auto& a = filt.algebra();
    if (!is_gorenstein(*a))
        throw NotGorenstein("A is not Gorenstein");
    DecompositionTable t = filt.table();
    if (auto why = t.violation(); !why.empty())
        throw InternalError("decomposition invariant failed: " + why);
    if (!filt.ideal().is_zero()) {
        const auto top = filt.power(static_cast<int>(filt.end_degree()));
        if (intersect(a->socle(), top.space()).dim() != 1)
            throw InternalError("socle ∩ I^u is not one-dimensional");
    }
    return t;
}

inline DecompositionTable symmetric_decomposition(const Ideal& i) {
    return symmetric_decomposition(IdealFiltration(i));
}

struct GorensteinReport {
    bool symmetric_hf = false;
    bool c1_zero = false;
    bool all_c_zero = false;
    bool all_q_zero = false;
    bool verdict = false;
};

/// Evaluates the four computable equivalent conditions for G(I) to be
/// Gorenstein of socle degree u and insists that they agree.
inline GorensteinReport gorenstein_criteria(const IdealFiltration& filt) {
    if (!is_gorenstein(*filt.algebra()))
        throw NotGorenstein("A is not Gorenstein");
    const int u = static_cast<int>(filt.end_degree());
    GorensteinReport r;
    r.symmetric_hf = filt.hilbert_function().is_symmetric();
    r.c1_zero = true;
    for (int i = 0; i <= u; ++i)
        r.c1_zero = r.c1_zero && filt.c_dimension(1, i) == 0;
    r.all_c_zero = true;
    for (int a = 1; a <= u + 1; ++a)
        for (int i = 0; i <= u; ++i)
            r.all_c_zero = r.all_c_zero && filt.c_dimension(a, i) == 0;
    r.all_q_zero = true;
    for (int a = 1; a <= u; ++a)
        for (int v = 0; v <= u; ++v)
            r.all_q_zero = r.all_q_zero && filt.q_dimension(a, v) == 0;
    if (r.symmetric_hf != r.c1_zero || r.c1_zero != r.all_c_zero || r.all_c_zero != r.all_q_zero)
        throw InternalError("Gorenstein criteria disagree");
    r.verdict = r.symmetric_hf;
    return r;
}

inline GorensteinReport gorenstein_criteria(const Ideal& i) { return gorenstein_criteria(IdealFiltration(i)); }

} // namespace symdec
