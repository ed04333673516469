#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "hilbspec/polynomial.hpp"

namespace hilbspec {

namespace detail {

// Recursive-descent reader for
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*      (juxtaposition only before ident / '(')
//   factor := primary ('^' uint)*
//   primary:= rational | ident | '(' expr ')'
class PolyReader {
public:
    PolyReader(std::string_view text, const VariableContext& ctx) : s_(text), ctx_(ctx) {}

    Polynomial parse() {
        skip_ws();
        if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Polynomial expr() {
        bool neg = false;
        char c = peek();
        if (c == '+' || c == '-') {
            neg = c == '-';
            ++pos_;
        }
        Polynomial acc = term();
        if (neg) acc = -acc;
        for (;;) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Polynomial t = term();
            acc = c == '+' ? acc + t : acc - t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= factor();
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) {
                acc *= factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = primary();
        while (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            std::string digits = read_digits();
            if (digits.empty()) throw ParseError("expected exponent", at);
            if (digits.size() > 6) throw ParseError("exponent too large", at);
            base = base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    Polynomial primary() {
        char c = peek();
        std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t dat = pos_;
                std::string den = read_digits();
                if (den.empty()) throw ParseError("expected denominator", dat);
                Integer d(den);
                if (d == 0) throw ParseError("zero denominator", dat);
                return Polynomial::constant(ctx_, make_rational(Integer(num), d));
            }
            return Polynomial::constant(ctx_, Rational(Integer(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            auto idx = ctx_.index_of(name);
            if (!idx) throw UnknownVariable(name);
            return Polynomial::variable(ctx_, *idx);
        }
        if (c == '\0') throw ParseError("unexpected end of input", at);
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string_view s_;
    const VariableContext& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const VariableContext& ctx) {
    return detail::PolyReader(text, ctx).parse();
}

inline std::string print_polynomial(const Polynomial& p) { return p.str(); }

}  // namespace hilbspec
