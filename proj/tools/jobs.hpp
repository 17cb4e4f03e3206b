#pragma once

#include "symdec/symdec.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <set>

namespace symdec::cli {

using nlohmann::json;

/// Command-line overrides applied on top of a job file.
struct Overrides {
    std::optional<std::uint64_t> characteristic;
    std::optional<unsigned> trunc_cap;
};

/// A ring description: field, variables, and either relations J or a dual form.
struct Job {
    Field field = Field::rationals();
    std::vector<std::string> vars;
    std::optional<std::string> form;
    std::vector<std::string> relations;
    std::vector<std::string> ideal;
    QuotientOptions options;

    AlgebraSource source() const {
        if (form)
            return AlgebraSource::from_form(parse_form(*form, vars, field));
        return AlgebraSource::from_relations(parse_polys(relations, vars, field), vars.size(), field);
    }

    std::vector<Polynomial> ideal_generators() const { return parse_polys(ideal, vars, field); }
};

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput("malformed JSON in '" + path + "': " + e.what());
    }
}

namespace detail {

inline std::vector<std::string> string_list(const json& j, const char* key) {
    if (!j.contains(key))
        return {};
    if (!j[key].is_array())
        throw InvalidInput(std::string("'") + key + "' must be a list of strings");
    std::vector<std::string> out;
    for (const auto& s : j[key]) {
        if (!s.is_string())
            throw InvalidInput(std::string("'") + key + "' must be a list of strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

inline bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

} // namespace detail

inline Field parse_field(const json& j) {
    if (!j.contains("field"))
        return Field::rationals();
    const json& f = j["field"];
    if (!f.is_object() || !f.contains("char") || !f["char"].is_number_unsigned())
        throw InvalidInput("'field' must look like {\"char\": 0} or {\"char\": p}");
    return Field::from_characteristic(f["char"].get<std::uint64_t>());
}

/// Reads the ring part of a job: field, vars, and exactly one of J / form.
inline Job parse_ring(const json& j, const Overrides& ov = {}) {
    if (!j.is_object())
        throw InvalidInput("a job must be a JSON object");
    Job job;
    job.field = ov.characteristic ? Field::from_characteristic(*ov.characteristic) : parse_field(j);
    job.vars = detail::string_list(j, "vars");
    if (job.vars.empty())
        throw InvalidInput("'vars' must be a nonempty list");
    std::set<std::string> seen;
    for (const auto& v : job.vars) {
        if (!detail::is_identifier(v))
            throw InvalidInput("'" + v + "' is not a valid variable name");
        if (!seen.insert(v).second)
            throw InvalidInput("variable '" + v + "' declared twice");
    }
    const bool has_j = j.contains("J");
    const bool has_form = j.contains("form");
    if (has_j == has_form)
        throw InvalidInput("exactly one of 'J' and 'form' must be given");
    if (has_form) {
        if (!j["form"].is_string())
            throw InvalidInput("'form' must be a string");
        job.form = j["form"].get<std::string>();
        const auto duals = dual_names(job.vars);
        if (std::set<std::string>(duals.begin(), duals.end()).size() != duals.size())
            throw InvalidInput("variable names must stay distinct after upper-casing");
    } else {
        job.relations = detail::string_list(j, "J");
    }
    if (j.contains("options")) {
        const json& o = j["options"];
        if (o.contains("trunc_cap")) {
            if (!o["trunc_cap"].is_number_unsigned())
                throw InvalidInput("'options.trunc_cap' must be a non-negative integer");
            job.options.trunc_cap = o["trunc_cap"].get<unsigned>();
        }
    }
    if (ov.trunc_cap)
        job.options.trunc_cap = *ov.trunc_cap;
    return job;
}

inline Job parse_decompose_job(const json& j, const Overrides& ov = {}) {
    Job job = parse_ring(j, ov);
    if (!j.contains("I"))
        throw InvalidInput("a decomposition job needs 'I'");
    job.ideal = detail::string_list(j, "I");
    return job;
}

inline json to_json(const DecompositionTable& t) { return json{{"hf", t.hf.values}, {"rows", t.rows}}; }

inline std::string join(std::span<const std::string> parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

inline std::vector<std::string> poly_strings(std::span<const Polynomial> ps, std::span<const std::string> names) {
    std::vector<std::string> out;
    for (const auto& p : ps)
        out.push_back(p.to_string(names));
    return out;
}

struct DecomposeReport {
    std::string field;
    std::vector<std::string> vars;
    std::string algebra;
    std::vector<std::string> ideal;
    std::size_t length = 0;
    unsigned socle_degree = 0;
    unsigned end_degree = 0;
    std::vector<std::size_t> quotient_lengths;  // l(A/I^k), k = 1..u+1
    DecompositionTable table;
    GorensteinReport criteria;
};

inline DecomposeReport decompose(const Job& job) {
    const AlgebraSource src = job.source();
    const AlgebraPtr a = src.build(job.options);
    const auto gens = job.ideal_generators();
    const Ideal i = ideal_from_generators(a, gens);
    const IdealFiltration filt(i);
    DecomposeReport r;
    r.field = job.field.name();
    r.vars = job.vars;
    r.algebra = src.describe(job.vars);
    r.ideal = poly_strings(gens, job.vars);
    r.length = a->dim();
    r.socle_degree = a->socle_degree();
    r.end_degree = filt.end_degree();
    for (int k = 1; k <= static_cast<int>(r.end_degree) + 1; ++k)
        r.quotient_lengths.push_back(a->dim() - filt.power(k).dim());
    r.table = symmetric_decomposition(filt);
    r.criteria = gorenstein_criteria(filt);
    return r;
}

inline json to_json(const DecomposeReport& r) {
    return json{{"field", r.field},
                {"vars", r.vars},
                {"algebra", r.algebra},
                {"ideal", r.ideal},
                {"length", r.length},
                {"socle_degree", r.socle_degree},
                {"end_degree", r.end_degree},
                {"quotient_lengths", r.quotient_lengths},
                {"decomposition", to_json(r.table)},
                {"gorenstein",
                 {{"symmetric_hf", r.criteria.symmetric_hf},
                  {"c1_zero", r.criteria.c1_zero},
                  {"all_c_zero", r.criteria.all_c_zero},
                  {"all_q_zero", r.criteria.all_q_zero},
                  {"verdict", r.criteria.verdict}}}};
}

inline std::string to_text(const DecomposeReport& r) {
    std::string s;
    s += "field: " + r.field + "\n";
    s += "A: " + r.algebra + ", length " + std::to_string(r.length) + ", socle degree " +
         std::to_string(r.socle_degree) + "\n";
    s += "I = (" + join(r.ideal, ", ") + "), end degree " + std::to_string(r.end_degree) + "\n";
    s += "l(A/I^k), k = 1.." + std::to_string(r.end_degree + 1) + ":";
    for (auto l : r.quotient_lengths)
        s += " " + std::to_string(l);
    s += "\n\n" + format_table(r.table) + "\n";
    s += std::string("G(I) Gorenstein: ") + (r.criteria.verdict ? "yes" : "no") + "\n";
    return s;
}

struct ApolarReport {
    std::string field;
    std::string form;
    std::vector<std::string> annihilator;
    std::size_t length = 0;
    unsigned socle_degree = 0;
    DecompositionTable m_adic;  // decomposition for I = m
};

inline ApolarReport apolar(const Job& job) {
    if (!job.form)
        throw InvalidInput("apolar needs a form");
    const DPForm f = parse_form(*job.form, job.vars, job.field);
    const auto ann = annihilator(f);
    const AlgebraPtr a = artinian_quotient(ann, job.vars.size(), job.field, job.options);
    ApolarReport r;
    r.field = job.field.name();
    r.form = f.polynomial().to_string(dual_names(job.vars));
    r.annihilator = poly_strings(ann, job.vars);
    r.length = a->dim();
    r.socle_degree = a->socle_degree();
    r.m_adic = symmetric_decomposition(maximal_ideal(a));
    return r;
}

inline json to_json(const ApolarReport& r) {
    return json{{"field", r.field},
                {"form", r.form},
                {"annihilator", r.annihilator},
                {"length", r.length},
                {"socle_degree", r.socle_degree},
                {"maximal_ideal_decomposition", to_json(r.m_adic)}};
}

inline std::string to_text(const ApolarReport& r) {
    std::string s;
    s += "field: " + r.field + "\n";
    s += "F = " + r.form + "\n";
    s += "ann(F) = (" + join(r.annihilator, ", ") + ")\n";
    s += "length " + std::to_string(r.length) + ", socle degree " + std::to_string(r.socle_degree) + "\n\n";
    s += "decomposition for I = m:\n" + format_table(r.m_adic);
    return s;
}

inline std::string filter_names(const CandidateFilters& f) {
    std::vector<std::string> names;
    if (f.cor35)
        names.emplace_back("cor35");
    if (f.psu)
        names.emplace_back("psu");
    if (f.diff)
        names.emplace_back("diff");
    if (f.prop52)
        names.emplace_back("prop52");
    if (f.h0pos)
        names.emplace_back("h0pos");
    return names.empty() ? "none" : join(names, ",");
}

struct CandidatesReport {
    Sequence sequence;
    std::string filters;
    SequencePredicates predicates;
    std::vector<DecompositionTable> tables;

    std::string status() const { return tables.empty() ? "no symmetric decomposition" : "candidates exist"; }
};

inline CandidatesReport candidates(const Sequence& h, const CandidateFilters& f) {
    CandidatesReport r;
    r.sequence = h;
    r.filters = filter_names(f);
    r.predicates = sequence_predicates(h);
    r.tables = candidate_decompositions(h, f);
    return r;
}

inline json to_json(const CandidatesReport& r) {
    json tables = json::array();
    for (const auto& t : r.tables)
        tables.push_back(to_json(t));
    return json{{"sequence", r.sequence},
                {"filters", r.filters},
                {"predicates",
                 {{"cor35", r.predicates.cor35}, {"psu", r.predicates.psu}, {"diff", r.predicates.diff_bound}}},
                {"count", r.tables.size()},
                {"candidates", tables},
                {"status", r.status()}};
}

inline std::string to_text(const CandidatesReport& r) {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::string s = "sequence " + format_sequence(r.sequence) + "\n";
    s += "filters: " + r.filters + "\n";
    s += std::string("cor35: ") + yn(r.predicates.cor35) + ", psu: " + yn(r.predicates.psu) +
         ", diff: " + yn(r.predicates.diff_bound) + "\n";
    for (std::size_t k = 0; k < r.tables.size(); ++k)
        s += "\ncandidate " + std::to_string(k + 1) + "\n" + format_table(r.tables[k]);
    s += "\ncount " + std::to_string(r.tables.size()) + "\n";
    s += "status: " + r.status() + "\n";
    if (!r.tables.empty())
        s += "realizability: undetermined by implemented filters\n";
    return s;
}

/// {"field", "vars", "sequence", "sources": [{"form": ..} | {"J": [..]}], "ideals": [[..], ..]}
struct SearchJob {
    Field field = Field::rationals();
    std::vector<std::string> vars;
    Sequence sequence;
    std::vector<Job> sources;
    std::vector<std::vector<std::string>> ideals;
    QuotientOptions options;
};

inline SearchJob parse_search_job(const json& j, const Overrides& ov = {}) {
    if (!j.is_object() || !j.contains("sources") || !j["sources"].is_array() || !j.contains("ideals") ||
        !j["ideals"].is_array() || !j.contains("sequence") || !j["sequence"].is_array())
        throw InvalidInput("a search job needs 'sequence', 'sources' and 'ideals' lists");
    SearchJob s;
    for (const auto& x : j["sequence"]) {
        if (!x.is_number_integer())
            throw InvalidInput("'sequence' must hold integers");
        s.sequence.push_back(x.get<int>());
    }
    check_positive_sequence(s.sequence);
    for (const auto& src : j["sources"]) {
        json ring = src;
        if (!ring.is_object())
            throw InvalidInput("each source must be an object");
        ring["vars"] = j.value("vars", json::array());
        if (j.contains("field"))
            ring["field"] = j["field"];
        if (j.contains("options"))
            ring["options"] = j["options"];
        s.sources.push_back(parse_ring(ring, ov));
    }
    for (const auto& gens : j["ideals"]) {
        json wrap{{"I", gens}};
        s.ideals.push_back(detail::string_list(wrap, "I"));
    }
    if (s.sources.empty())
        throw InvalidInput("'sources' is empty");
    s.field = s.sources.front().field;
    s.vars = s.sources.front().vars;
    s.options = s.sources.front().options;
    return s;
}

struct SearchReport {
    SearchJob job;
    SearchResult result;
};

inline SearchReport search(const SearchJob& job) {
    std::vector<AlgebraSource> sources;
    for (const auto& s : job.sources)
        sources.push_back(s.source());
    std::vector<std::vector<Polynomial>> ideals;
    for (const auto& g : job.ideals)
        ideals.push_back(parse_polys(g, job.vars, job.field));
    return {job, realize_search(job.sequence, sources, ideals, job.options)};
}

inline std::string describe_source(const Job& j) {
    return j.form ? "F = " + *j.form : "J = (" + join(j.relations, ", ") + ")";
}

inline json to_json(const SearchReport& r) {
    json witnesses = json::array();
    for (const auto& w : r.result.witnesses)
        witnesses.push_back({{"source", describe_source(r.job.sources[w.source])},
                             {"ideal", r.job.ideals[w.ideal]},
                             {"decomposition", to_json(*w.table)}});
    json failures = json::array();
    for (const auto& f : r.result.failures)
        failures.push_back({{"source", describe_source(r.job.sources[f.source])},
                            {"ideal", r.job.ideals[f.ideal]},
                            {"error", f.error}});
    return json{{"sequence", r.job.sequence}, {"witnesses", witnesses}, {"failures", failures},
                {"count", r.result.witnesses.size()}};
}

inline std::string to_text(const SearchReport& r) {
    std::string s = "sequence " + format_sequence(r.job.sequence) + "\n";
    for (const auto& w : r.result.witnesses) {
        s += "\nwitness: " + describe_source(r.job.sources[w.source]) + ", I = (" +
             join(r.job.ideals[w.ideal], ", ") + ")\n";
        s += format_table(*w.table);
    }
    for (const auto& f : r.result.failures)
        s += "\nfailed: " + describe_source(r.job.sources[f.source]) + ", I = (" +
             join(r.job.ideals[f.ideal], ", ") + "): " + f.error + "\n";
    s += "\nwitnesses " + std::to_string(r.result.witnesses.size()) + "\n";
    return s;
}

} // namespace symdec::cli
