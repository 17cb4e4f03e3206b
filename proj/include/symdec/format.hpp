#pragma once

#include "symdec/decomposition.hpp"

#include <charconv>
#include <sstream>

namespace symdec {

/// "(2,4,3,1)".
inline std::string format_sequence(const Sequence& h) {
    std::string s = "(";
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(h[i]);
    }
    return s + ")";
}

/// Accepts "(2,4,3,1)" or "2,4,3,1"; whitespace is ignored. Entries may be negative.
inline Sequence parse_sequence(std::string_view text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    std::string_view body = t;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')')
            throw ParseError("missing ')'", t.size());
        body = body.substr(1, body.size() - 2);
    }
    if (body.empty())
        throw ParseError("empty sequence", 0);
    Sequence out;
    std::size_t pos = 0;
    while (true) {
        int value = 0;
        const char* first = body.data() + pos;
        const char* last = body.data() + body.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first)
            throw ParseError("malformed sequence entry", pos);
        out.push_back(value);
        pos = static_cast<std::size_t>(ptr - body.data());
        if (pos == body.size())
            return out;
        if (body[pos] != ',')
            throw ParseError(std::string("unexpected '") + body[pos] + "'", pos);
        ++pos;
    }
}

/// A Hilbert function of G(I): every entry positive (no internal or trailing zeros).
inline Sequence parse_hilbert_function(std::string_view text) {
    Sequence h = parse_sequence(text);
    for (int x : h)
        if (x < 1)
            throw InvalidInput("Hilbert function entries must be positive");
    return h;
}

/// Aligned table: an "HF" line then one "H(a)" line per row, zero padded.
inline std::string format_table(const DecompositionTable& t) {
    std::vector<std::string> labels{"HF"};
    std::vector<const Sequence*> lines{&t.hf.values};
    for (std::size_t a = 0; a < t.rows.size(); ++a) {
        labels.push_back("H(" + std::to_string(a) + ")");
        lines.push_back(&t.rows[a]);
    }
    std::size_t label_w = 0;
    std::size_t cell_w = 1;
    for (const auto& l : labels)
        label_w = std::max(label_w, l.size());
    for (const auto* line : lines)
        for (int x : *line)
            cell_w = std::max(cell_w, std::to_string(x).size());
    std::ostringstream os;
    for (std::size_t r = 0; r < lines.size(); ++r) {
        os << labels[r] << std::string(label_w - labels[r].size(), ' ');
        for (int x : *lines[r]) {
            const std::string cell = std::to_string(x);
            os << "  " << std::string(cell_w - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace symdec
