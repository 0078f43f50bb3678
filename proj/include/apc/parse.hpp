#pragma once

/**
 * Text grammar shared by problem files, goldens and the CLI:
 *
 *   poly   := ['-'] term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := atom ['^' integer]
 *   atom   := rational | variable | '(' poly ')'
 *
 * Rationals are "3" or "1/2"; parameter variables are s,t,u,v or X1..Xn,
 * target variables x,y,z,w or T1..Tn. Whitespace is free.
 */

#include <cctype>
#include <string>

#include <apc/polynomial.hpp>

namespace apc {

namespace detail {

template <class Vars>
class PolyParser {
public:
    PolyParser(const std::string& text, int nvars) : s_(text), nvars_(nvars) {}

    Poly<Vars> parse() {
        Poly<Vars> p = expression();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    Poly<Vars> expression() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (next() == '-');
        Poly<Vars> acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') return acc;
            next();
            Poly<Vars> t = term();
            if (c == '-')
                acc -= t;
            else
                acc += t;
        }
    }

    Poly<Vars> term() {
        Poly<Vars> acc = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') return acc;
            next();
            acc *= factor();
        }
    }

    Poly<Vars> factor() {
        Poly<Vars> base = atom();
        skip_ws();
        if (peek() == '^') {
            next();
            skip_ws();
            if (!std::isdigit(peek())) fail("exponent expected after '^'");
            long e = 0;
            while (std::isdigit(peek())) e = e * 10 + (next() - '0');
            if (e > kMaxDegree) fail("exponent too large");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly<Vars> atom() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            next();
            Poly<Vars> p = expression();
            skip_ws();
            if (next() != ')') fail("')' expected");
            return p;
        }
        if (std::isdigit(c)) {
            std::string num = digits();
            skip_ws();
            if (peek() == '/') {
                next();
                skip_ws();
                if (!std::isdigit(peek())) fail("denominator expected");
                num += "/" + digits();
            }
            return Poly<Vars>::constant(nvars_, rational_from_string(num));
        }
        if (std::isalpha(c)) return Poly<Vars>::variable(nvars_, variable_index());
        fail("unexpected character");
        return Poly<Vars>(nvars_);  // unreachable
    }

    int variable_index() {
        const char c = next();
        if (c == Vars::indexed_letter && std::isdigit(peek())) {
            long i = 0;
            while (std::isdigit(peek())) i = i * 10 + (next() - '0');
            if (i < 1 || i > nvars_) fail("variable index out of range");
            return static_cast<int>(i - 1);
        }
        for (int i = 0; i < nvars_ && i < 4; ++i)
            if (Vars::name(i) == std::string(1, c)) return i;
        fail(std::string("unknown variable '") + c + "'");
        return -1;  // unreachable
    }

    std::string digits() {
        std::string out;
        while (std::isdigit(peek())) out += next();
        return out;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char next() {
        if (pos_ >= s_.size()) fail("unexpected end of input");
        return s_[pos_++];
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("parse error at position " + std::to_string(pos_) + ": " + why +
                         " in '" + s_ + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int nvars_;
};

}  // namespace detail

inline ParamPoly parse_param_poly(const std::string& text, int nvars) {
    return detail::PolyParser<ParamVars>(text, nvars).parse();
}

inline TargetPoly parse_target_poly(const std::string& text, int nvars) {
    return detail::PolyParser<TargetVars>(text, nvars).parse();
}

}  // namespace apc
