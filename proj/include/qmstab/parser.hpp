#pragma once

// Text form of polynomials.
//
//   expr    := ['-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := base ('^' natural)?
//   base    := rational | variable | '(' expr ')'
//   rational:= integer ('/' positive-integer)?
//
// Whitespace is insignificant; juxtaposition is not multiplication.

#include "qmstab/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

namespace qmstab {

/// Syntax error with the 0-based byte offset where parsing stopped.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class PolynomialParser {
public:
    PolynomialParser(std::string_view text, const VariableContext& ctx) : s_(text), ctx_(ctx) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    // Largest exponent accepted literally; larger powers are rejected rather
    // than attempted.
    static constexpr std::uint32_t max_exponent = 1U << 16;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        bool negate = accept('-');
        Polynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (accept('^')) {
            skip_ws();
            std::string digits = read_digits();
            if (digits.empty()) fail("expected natural exponent");
            if (digits.size() > 6 || std::stoul(digits) > max_exponent) fail("exponent too large");
            b = b.pow(static_cast<std::uint32_t>(std::stoul(digits)));
        }
        return b;
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    Polynomial base() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ctx_.size(), literal());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string_view name = s_.substr(start, pos_ - start);
            auto idx = ctx_.index_of(name);
            if (!idx) {
                pos_ = start;
                fail("unknown variable '" + std::string(name) + "'");
            }
            return Polynomial::variable(ctx_.size(), *idx);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Rational literal() {
        std::string num = read_digits();
        if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
            fail("non-rational literal (only integers and p/q are allowed)");
        // A '/' directly after an integer belongs to the literal.
        std::size_t save = pos_;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::string den = read_digits();
            if (den.empty()) fail("non-rational literal: expected positive integer denominator");
            if (BigInt(den) == 0) fail("non-rational literal: zero denominator");
            if (pos_ < s_.size() && s_[pos_] == '.') fail("non-rational literal (only integers and p/q are allowed)");
            return Rational(BigInt(num), BigInt(den));
        }
        pos_ = save;
        return Rational(BigInt(num));
    }

    std::string_view s_;
    const VariableContext& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const VariableContext& ctx) {
    return detail::PolynomialParser(text, ctx).parse();
}

/// Prints terms from the graded-lex largest down, e.g. "2*x^2 - y".
/// The output is accepted by parse_polynomial and parses back to the same
/// polynomial.
inline std::string to_string(const Polynomial& f, const VariableContext& ctx) {
    if (f.nvars() != ctx.size()) throw DimensionError("context does not match polynomial");
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        bool wrote = false;
        if (mag != 1 || e.is_zero()) {
            out << to_string(mag);
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out << (wrote ? "*" : "") << ctx.name(i);
            if (e[i] > 1) out << '^' << e[i];
            wrote = true;
        }
    }
    return out.str();
}

}  // namespace qmstab
