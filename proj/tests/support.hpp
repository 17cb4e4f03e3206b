#pragma once

#include "corpus.hpp"
#include "corpus_data.hpp"

#include <random>

namespace symdec::testing {

struct Instance {
    std::string label;
    AlgebraPtr algebra;
    Ideal ideal;
};

/// Every decomposition entry of the builtin corpus, built.
inline std::vector<Instance> corpus_instances() {
    std::vector<Instance> out;
    const auto corpus = cli::json::parse(cli::builtin_corpus);
    for (const auto& e : corpus["entries"]) {
        if (e["kind"] != "decompose")
            continue;
        const auto job = cli::parse_decompose_job(e);
        auto a = job.source().build(job.options);
        auto gens = job.ideal_generators();
        out.push_back({e["label"].get<std::string>(), a, ideal_from_generators(a, gens)});
    }
    return out;
}

inline Polynomial random_poly(std::mt19937& rng, const Field& f, std::size_t n, unsigned min_deg, unsigned max_deg,
                              int terms) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Monomial> monos;
    for (const auto& m : monomials_below(n, max_deg + 1))
        if (m.degree() >= min_deg)
            monos.push_back(m);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    Polynomial p(f, n);
    for (int t = 0; t < terms; ++t)
        p.add_term(monos[pick(rng)], Scalar(f, coeff(rng)));
    return p;
}

/// Random apolar algebras with 2 or 3 variables and length in [2, max_dim],
/// each paired with a random proper nonzero ideal.
inline std::vector<Instance> random_instances(std::size_t count, std::uint32_t seed, std::size_t max_dim = 20,
                                              Field f = Field::rationals()) {
    std::mt19937 rng(seed);
    std::vector<Instance> out;
    std::size_t attempt = 0;
    while (out.size() < count) {
        ++attempt;
        const std::size_t n = 2 + rng() % 2;
        const unsigned deg = 2 + rng() % (n == 2 ? 5 : 3);
        Polynomial form = random_poly(rng, f, n, deg, deg, 1 + static_cast<int>(rng() % 3));
        if (rng() % 2)
            form += random_poly(rng, f, n, 1, deg, 1 + static_cast<int>(rng() % 2));
        if (form.is_zero())
            continue;
        const DPForm F(form);
        if (contraction_span_dim(F) > max_dim)
            continue;
        AlgebraPtr a = apolar_algebra(F);
        if (a->dim() < 2)
            continue;
        std::vector<Polynomial> gens;
        const int ngens = 1 + static_cast<int>(rng() % 2);
        for (int g = 0; g < ngens; ++g)
            gens.push_back(random_poly(rng, f, n, 1, 3, 1 + static_cast<int>(rng() % 2)));
        Ideal i = ideal_from_generators(a, gens);
        if (i.is_zero())
            continue;
        const std::vector<std::string> names{"X", "Y", "Z"};
        out.push_back({"random#" + std::to_string(attempt) + " F = " +
                           form.to_string(std::span<const std::string>(names).first(n)),
                       a, i});
    }
    return out;
}

} // namespace symdec::testing
