#pragma once

#include "corpus.hpp"
#include "corpus_data.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace symdec::cli {

enum ExitCode : int { ok = 0, mismatch = 1, input_error = 2 };

/// Runs the command line; all output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symmetric decompositions of Hilbert functions of associated graded rings"};
    app.require_subcommand(1);

    std::string format = "text";
    std::optional<std::uint64_t> characteristic;
    std::optional<unsigned> trunc_cap;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--char", characteristic, "Field characteristic: 0 or a prime below 2^32");
    app.add_option("--trunc-cap", trunc_cap, "Largest truncation order tried when building A");

    auto* decompose_cmd = app.add_subcommand("decompose", "Decompose HF(G(I)) for a job file");
    std::string job_path;
    decompose_cmd->add_option("job", job_path, "Job file (JSON)")->required();

    auto* apolar_cmd = app.add_subcommand("apolar", "Annihilator and m-adic decomposition of a dual form");
    std::string form_text;
    std::vector<std::string> vars{"x", "y"};
    apolar_cmd->add_option("form", form_text, "Form in the upper-cased variables, e.g. X^2*Y+Y^4")->required();
    apolar_cmd->add_option("--vars", vars, "Ring variables")->delimiter(',');

    auto* adm_cmd = app.add_subcommand("admissible", "b-admissible sequences");
    adm_cmd->require_subcommand(1);
    unsigned b = 2;
    auto* check_cmd = adm_cmd->add_subcommand("check", "Test one sequence");
    std::string seq_text;
    check_cmd->add_option("-b", b, "Number of generators")->check(CLI::PositiveNumber);
    check_cmd->add_option("sequence", seq_text, "Sequence, e.g. 2,2,3,4")->required();
    auto* enum_cmd = adm_cmd->add_subcommand("enumerate", "List sequences");
    int h0 = 2, hu_max = 2;
    unsigned u_min = 1, u_max = 3;
    enum_cmd->add_option("-b", b, "Number of generators")->check(CLI::PositiveNumber);
    enum_cmd->add_option("--h0", h0, "First entry")->check(CLI::PositiveNumber);
    enum_cmd->add_option("--umin", u_min, "Smallest end degree");
    enum_cmd->add_option("--umax", u_max, "Largest end degree");
    enum_cmd->add_option("--humax", hu_max, "Largest last entry")->check(CLI::PositiveNumber);

    auto* cand_cmd = app.add_subcommand("candidates", "Candidate symmetric decompositions of a sequence");
    std::string filters_text;
    cand_cmd->add_option("sequence", seq_text, "Sequence, e.g. (2,4,1)")->required();
    cand_cmd->add_option("--filters", filters_text, "Subset of cor35,psu,diff,prop52,h0pos");

    auto* search_cmd = app.add_subcommand("search", "Look for (A, I) realizing a sequence");
    search_cmd->add_option("job", job_path, "Search job file (JSON)")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check a corpus against computed results");
    std::string corpus_path = "builtin";
    verify_cmd->add_option("corpus", corpus_path, "Corpus file, or 'builtin'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }

    const bool as_json = format == "json";
    const Overrides ov{characteristic, trunc_cap};
    auto emit = [&](const json& j, const std::string& text) { out << (as_json ? j.dump(2) + "\n" : text); };

    try {
        if (*decompose_cmd) {
            const auto r = decompose(parse_decompose_job(read_json_file(job_path), ov));
            emit(to_json(r), to_text(r));
        } else if (*apolar_cmd) {
            json j{{"vars", vars}, {"form", form_text}};
            const auto r = apolar(parse_ring(j, ov));
            emit(to_json(r), to_text(r));
        } else if (*check_cmd) {
            const Sequence h = parse_sequence(seq_text);
            for (int x : h)
                if (x < 0)
                    throw InvalidInput("sequence entries must be non-negative");
            const bool v = is_b_admissible(b, h);
            emit(json{{"b", b}, {"sequence", h}, {"admissible", v}}, std::string(v ? "true" : "false") + "\n");
        } else if (*enum_cmd) {
            const auto seqs = enumerate_admissible(b, h0, u_min, u_max, hu_max);
            std::string text;
            for (const auto& s : seqs)
                text += format_sequence(s) + "\n";
            text += "count " + std::to_string(seqs.size()) + "\n";
            emit(json{{"b", b}, {"sequences", seqs}, {"count", seqs.size()}}, text);
        } else if (*cand_cmd) {
            const auto r = candidates(parse_hilbert_function(seq_text), parse_filters(filters_text));
            emit(to_json(r), to_text(r));
        } else if (*search_cmd) {
            const auto r = search(parse_search_job(read_json_file(job_path), ov));
            emit(to_json(r), to_text(r));
        } else if (*verify_cmd) {
            json corpus;
            if (corpus_path == "builtin")
                corpus = json::parse(builtin_corpus);
            else
                corpus = read_json_file(corpus_path);
            const auto v = verify_corpus(corpus);
            emit(to_json(v), to_text(v));
            return v.all_passed() ? ok : mismatch;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
    return ok;
}

} // namespace symdec::cli
