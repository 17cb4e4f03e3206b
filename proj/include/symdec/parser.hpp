#pragma once

#include "symdec/polynomial.hpp"

#include <cctype>
#include <string_view>

namespace symdec {

namespace detail {

// expr    := ['+'|'-'] term { ('+'|'-') term }
// term    := factor { ('*'|'/') factor }        division only by nonzero constants
// factor  := '-' factor | primary [ '^' integer ]
// primary := integer | identifier | '(' expr ')'
class PolyParser {
public:
    PolyParser(std::string_view text, std::span<const std::string> vars, Field field)
        : text_(text), vars_(vars), field_(field) {}

    Polynomial parse() {
        skip_ws();
        if (pos_ == text_.size())
            throw ParseError("empty polynomial", pos_);
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

private:
    Polynomial expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        Polynomial acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-')
                return acc;
            ++pos_;
            Polynomial rhs = term();
            if (c == '+')
                acc += rhs;
            else
                acc -= rhs;
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '*' && c != '/')
                return acc;
            const std::size_t at = pos_;
            ++pos_;
            Polynomial rhs = factor();
            if (c == '*') {
                acc = acc * rhs;
                continue;
            }
            if (rhs.is_zero() || rhs.degree() != 0)
                throw ParseError("division by a non-constant or zero", at);
            acc = acc.scaled(rhs.coefficient(Monomial(vars_.size())).inverse());
        }
    }

    Polynomial factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        Polynomial base = primary();
        skip_ws();
        if (peek() != '^')
            return base;
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("malformed exponent", at);
        unsigned long e = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (e > 4096)
                throw ParseError("exponent too large", at);
            ++pos_;
        }
        return base.pow(static_cast<unsigned>(e));
    }

    Polynomial primary() {
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ == text_.size())
            throw ParseError("unexpected end of input", at);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            skip_ws();
            if (peek() != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            const mpz_class value(std::string(text_.substr(at, pos_ - at)));
            return Polynomial::constant(field_, vars_.size(), Scalar::fraction(field_, value, 1));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string_view name = text_.substr(at, pos_ - at);
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name)
                    return Polynomial::variable(field_, vars_.size(), i);
            throw ParseError("unknown identifier '" + std::string(name) + "'", at);
        }
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    std::span<const std::string> vars_;
    Field field_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses integer/fraction-coefficient polynomial text over the declared variables.
inline Polynomial parse_poly(std::string_view text, std::span<const std::string> vars,
                             Field field = Field::rationals()) {
    return detail::PolyParser(text, vars, field).parse();
}

inline std::vector<Polynomial> parse_polys(std::span<const std::string> texts, std::span<const std::string> vars,
                                           Field field = Field::rationals()) {
    std::vector<Polynomial> out;
    out.reserve(texts.size());
    for (const auto& t : texts)
        out.push_back(parse_poly(t, vars, field));
    return out;
}

/// Dual (divided-power) variable names: the upper-cased ring variables.
inline std::vector<std::string> dual_names(std::span<const std::string> vars) {
    std::vector<std::string> out;
    for (auto v : vars) {
        for (auto& ch : v)
            ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace symdec
