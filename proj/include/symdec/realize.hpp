#pragma once

#include "symdec/apolar.hpp"
#include "symdec/decomposition.hpp"

#include <future>
#include <optional>
#include <variant>

namespace symdec {

/// How to build A: either A_F for a dual form F, or R/J for explicit relations.
class AlgebraSource {
public:
    static AlgebraSource from_form(DPForm f) {
        AlgebraSource s(f.field(), f.n_vars());
        s.data_ = std::move(f);
        return s;
    }

    static AlgebraSource from_relations(std::vector<Polynomial> j, std::size_t n_vars, Field field) {
        AlgebraSource s(field, n_vars);
        s.data_ = std::move(j);
        return s;
    }

    Field field() const noexcept { return field_; }
    std::size_t n_vars() const noexcept { return n_vars_; }
    bool is_form() const noexcept { return std::holds_alternative<DPForm>(data_); }
    const DPForm& form() const { return std::get<DPForm>(data_); }
    const std::vector<Polynomial>& relations() const { return std::get<std::vector<Polynomial>>(data_); }

    AlgebraPtr build(QuotientOptions opts = {}) const {
        if (is_form())
            return apolar_algebra(form(), opts);
        return artinian_quotient(relations(), n_vars_, field_, opts);
    }

    std::string describe(std::span<const std::string> ring_vars) const {
        if (is_form())
            return "F = " + form().polynomial().to_string(dual_names(ring_vars));
        std::string s = "J = (";
        for (std::size_t i = 0; i < relations().size(); ++i)
            s += (i ? ", " : "") + relations()[i].to_string(ring_vars);
        return s + ")";
    }

private:
    AlgebraSource(Field f, std::size_t n) : field_(f), n_vars_(n), data_(std::vector<Polynomial>{}) {}

    Field field_;
    std::size_t n_vars_;
    std::variant<DPForm, std::vector<Polynomial>> data_;
};

struct SearchAttempt {
    std::size_t source = 0;
    std::size_t ideal = 0;
    std::optional<DecompositionTable> table;  // set when A and I were built
    std::string error;                        // set when construction failed
};

struct SearchResult {
    std::vector<SearchAttempt> witnesses;  // attempts whose HF(G(I)) equals the target
    std::vector<SearchAttempt> failures;   // attempts that threw
};

/// Tries every (source, ideal generators) pair and keeps those with
/// HF(G(I)) = h. Sources are processed concurrently; output follows the
/// (source, ideal) order.
inline SearchResult realize_search(const Sequence& h, const std::vector<AlgebraSource>& sources,
                                   const std::vector<std::vector<Polynomial>>& ideal_gens,
                                   QuotientOptions opts = {}) {
    auto run_source = [&](std::size_t s) {
        std::vector<SearchAttempt> attempts;
        AlgebraPtr a;
        try {
            a = sources[s].build(opts);
        } catch (const Error& e) {
            for (std::size_t g = 0; g < ideal_gens.size(); ++g)
                attempts.push_back({s, g, std::nullopt, e.what()});
            return attempts;
        }
        for (std::size_t g = 0; g < ideal_gens.size(); ++g) {
            SearchAttempt at{s, g, std::nullopt, {}};
            try {
                const Ideal i = ideal_from_generators(a, ideal_gens[g]);
                const IdealFiltration filt(i);
                if (filt.hilbert_function().values == h)
                    at.table = symmetric_decomposition(filt);
                else
                    at.table = DecompositionTable{filt.hilbert_function(), {}};
            } catch (const Error& e) {
                at.error = e.what();
            }
            attempts.push_back(std::move(at));
        }
        return attempts;
    };

    std::vector<std::future<std::vector<SearchAttempt>>> jobs;
    for (std::size_t s = 0; s < sources.size(); ++s)
        jobs.push_back(std::async(std::launch::async, run_source, s));

    SearchResult out;
    for (auto& job : jobs)
        for (auto& at : job.get()) {
            if (!at.error.empty())
                out.failures.push_back(std::move(at));
            else if (at.table && at.table->hf.values == h)
                out.witnesses.push_back(std::move(at));
        }
    return out;
}

} // namespace symdec
