#pragma once

#include "jobs.hpp"

#include <future>

namespace symdec::cli {

struct EntryOutcome {
    std::string label;
    bool pass = false;
    std::string detail;  // first mismatch, or the error message
};

struct VerifyOutcome {
    std::vector<EntryOutcome> entries;

    std::size_t passed() const {
        return static_cast<std::size_t>(
            std::count_if(entries.begin(), entries.end(), [](const EntryOutcome& e) { return e.pass; }));
    }
    bool all_passed() const { return passed() == entries.size(); }
};

namespace detail {

/// Expected rows are stored without padding; pad to (u+1) x (u+1).
inline std::vector<Sequence> padded_rows(const json& rows, std::size_t n) {
    std::vector<Sequence> out;
    for (const auto& r : rows) {
        Sequence row = r.get<Sequence>();
        row.resize(n, 0);
        out.push_back(std::move(row));
    }
    return out;
}

inline std::string show_rows(const std::vector<Sequence>& rows) {
    std::string s;
    for (const auto& r : rows)
        s += format_sequence(r);
    return s;
}

class Mismatch {
public:
    template <class T>
    void check(const std::string& what, const T& got, const T& want) {
        if (detail_.empty() && !(got == want))
            detail_ = what + " differs";
    }
    void check_rows(const std::vector<Sequence>& got, const std::vector<Sequence>& want) {
        if (detail_.empty() && got != want)
            detail_ = "rows " + show_rows(got) + " != expected " + show_rows(want);
    }
    void fail(std::string why) {
        if (detail_.empty())
            detail_ = std::move(why);
    }
    const std::string& detail() const { return detail_; }

private:
    std::string detail_;
};

inline std::string verify_decompose(const json& e) {
    const DecomposeReport r = decompose(parse_decompose_job(e));
    const json& x = e.at("expect");
    Mismatch m;
    const std::size_t n = r.table.hf.size();
    if (x.contains("hf") && r.table.hf.values != x["hf"].get<Sequence>())
        m.fail("HF " + format_sequence(r.table.hf.values) + " != expected " +
               format_sequence(x["hf"].get<Sequence>()));
    if (x.contains("length"))
        m.check("length", r.length, x["length"].get<std::size_t>());
    if (x.contains("end_degree"))
        m.check("end degree", r.end_degree, x["end_degree"].get<unsigned>());
    if (x.contains("quotient_lengths")) {
        const auto want = x["quotient_lengths"].get<std::vector<std::size_t>>();
        std::vector<std::size_t> got(r.quotient_lengths.begin(),
                                     r.quotient_lengths.begin() +
                                         static_cast<std::ptrdiff_t>(std::min(want.size(), r.quotient_lengths.size())));
        m.check("quotient lengths", got, want);
    }
    if (x.contains("rows"))
        m.check_rows(r.table.rows, padded_rows(x["rows"], n));
    if (x.contains("gorenstein"))
        m.check("Gorenstein verdict", r.criteria.verdict, x["gorenstein"].get<bool>());
    return m.detail();
}

inline std::string verify_admissible(const json& e) {
    const bool got = is_b_admissible(e.at("b").get<unsigned>(), e.at("sequence").get<Sequence>());
    const bool want = e.at("expect").at("admissible").get<bool>();
    return got == want ? "" : std::string("admissible = ") + (got ? "true" : "false");
}

inline std::string verify_enumerate(const json& e) {
    const auto got = enumerate_admissible(e.at("b").get<unsigned>(), e.at("h0").get<int>(),
                                          e.at("u_min").get<unsigned>(), e.at("u_max").get<unsigned>(),
                                          e.at("hu_max").get<int>());
    const json& x = e.at("expect");
    auto listed = x.at("sequences").get<std::vector<Sequence>>();
    auto want = listed;
    if (x.contains("unlisted"))
        for (auto s : x["unlisted"].get<std::vector<Sequence>>())
            want.push_back(std::move(s));
    std::sort(want.begin(), want.end());
    if (got != want)
        return "enumeration returned " + std::to_string(got.size()) + " sequences, expected " +
               std::to_string(want.size());
    if (x.contains("no_candidates")) {
        std::vector<Sequence> none;
        for (const auto& s : listed)
            if (enumerate_candidate_decompositions(s).empty())
                none.push_back(s);
        auto expected = x["no_candidates"].get<std::vector<Sequence>>();
        std::sort(expected.begin(), expected.end());
        if (none != expected)
            return "sequences without candidates differ";
    }
    return "";
}

inline std::string verify_candidates(const json& e) {
    const Sequence h = e.at("sequence").get<Sequence>();
    const auto tables = candidate_decompositions(h, parse_filters(e.value("filters", std::string())));
    std::vector<std::vector<Sequence>> got;
    for (const auto& t : tables)
        got.push_back(t.rows);
    const json& x = e.at("expect");
    if (x.contains("tables")) {
        std::vector<std::vector<Sequence>> want;
        for (const auto& t : x["tables"])
            want.push_back(padded_rows(t, h.size()));
        if (got != want)
            return std::to_string(got.size()) + " candidates, expected " + std::to_string(want.size());
    }
    if (x.contains("contains"))
        for (const auto& t : x["contains"]) {
            const auto rows = padded_rows(t, h.size());
            if (std::find(got.begin(), got.end(), rows) == got.end())
                return "missing candidate " + show_rows(rows);
        }
    return "";
}

} // namespace detail

inline EntryOutcome verify_entry(const json& e) {
    EntryOutcome out;
    try {
        out.label = e.at("label").get<std::string>();
        const std::string kind = e.at("kind").get<std::string>();
        if (kind == "decompose")
            out.detail = detail::verify_decompose(e);
        else if (kind == "admissible")
            out.detail = detail::verify_admissible(e);
        else if (kind == "enumerate")
            out.detail = detail::verify_enumerate(e);
        else if (kind == "candidates")
            out.detail = detail::verify_candidates(e);
        else
            out.detail = "unknown entry kind '" + kind + "'";
        out.pass = out.detail.empty();
    } catch (const std::exception& ex) {
        out.pass = false;
        out.detail = std::string("error: ") + ex.what();
    }
    return out;
}

/// Checks every entry concurrently; outcomes keep corpus order.
inline VerifyOutcome verify_corpus(const json& corpus) {
    if (!corpus.is_object() || !corpus.contains("entries") || !corpus["entries"].is_array())
        throw InvalidInput("a corpus is an object with an 'entries' list");
    std::vector<std::future<EntryOutcome>> jobs;
    for (const auto& e : corpus["entries"])
        jobs.push_back(std::async(std::launch::async, [&e] { return verify_entry(e); }));
    VerifyOutcome out;
    for (auto& j : jobs)
        out.entries.push_back(j.get());
    return out;
}

inline std::string to_text(const VerifyOutcome& v) {
    std::string s;
    for (const auto& e : v.entries)
        s += (e.pass ? "PASS " : "FAIL ") + e.label + (e.pass ? "" : ": " + e.detail) + "\n";
    s += std::to_string(v.passed()) + "/" + std::to_string(v.entries.size()) + " entries passed\n";
    return s;
}

inline json to_json(const VerifyOutcome& v) {
    json entries = json::array();
    for (const auto& e : v.entries)
        entries.push_back({{"label", e.label}, {"pass", e.pass}, {"detail", e.detail}});
    return json{{"entries", entries}, {"passed", v.passed()}, {"total", v.entries.size()}};
}

} // namespace symdec::cli
