#pragma once

/**
 * @file io.hpp
 * @brief Text form of polynomials: a recursive-descent parser and a printer
 * whose output parses back to the same polynomial.
 *
 *     expr   := ['+'|'-'] term (('+'|'-') term)*
 *     term   := factor ('*' factor)*
 *     factor := (rational | variable | '(' expr ')') ('^' digits)?
 *
 * A rational is digits or digits/digits. Whitespace is ignored between tokens.
 */

#include "tategb/arith.hpp"
#include "tategb/polynomial.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tategb {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class ExprParser {
public:
    ExprParser(std::string_view src, RingPtr ring) : src_(src), ring_(std::move(ring)) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool at_end() {
        skip_ws();
        return pos_ == src_.size();
    }

    std::string digits() {
        std::string out;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) out.push_back(src_[pos_++]);
        return out;
    }

    Polynomial expr() {
        bool negate = false;
        if (eat('-')) negate = true;
        else eat('+');
        Polynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        skip_ws();
        if (at_end()) throw ParseError("unexpected end of input", pos_);
        const std::size_t start = pos_;
        Polynomial base(ring_);
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            base = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text = digits();
            if (pos_ < src_.size() && src_[pos_] == '/') {
                ++pos_;
                const std::string den = digits();
                if (den.empty()) throw ParseError("expected denominator digits", pos_);
                if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", pos_);
                text += "/" + den;
            }
            base = Polynomial::constant(ring_, Rational::parse(text));
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                name.push_back(src_[pos_++]);
            const auto idx = ring_->index_of(name);
            if (!idx) throw ParseError("unknown variable '" + name + "'", start);
            base = Polynomial::variable(ring_, *idx);
        } else {
            throw ParseError(std::string("unexpected '") + c + "'", pos_);
        }
        if (eat('^')) {
            skip_ws();
            const std::size_t at = pos_;
            const std::string e = digits();
            if (e.empty()) throw ParseError("malformed exponent", at);
            if (e.size() > 6) throw ParseError("exponent too large", at);
            base = power(base, std::stoul(e));
        }
        return base;
    }

    Polynomial power(const Polynomial& b, unsigned long e) const {
        Polynomial result = Polynomial::constant(ring_, Rational(1));
        Polynomial sq = b;
        while (e) {
            if (e & 1) result = result * sq;
            e >>= 1;
            if (e) sq = sq * sq;
        }
        return result;
    }

    std::string_view src_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view src, const RingPtr& ring) {
    return detail::ExprParser(src, ring).parse();
}

/// Parses "[+-]digits[/digits]", reporting failures as ParseError.
inline Rational parse_rational(std::string_view text) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

inline std::string monomial_to_string(const Monomial& m, const Ring& ring) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.name(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

/// Terms in storage order, e.g. "x^2 - x", "-1/7*x + y", "0".
inline std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        const bool negative = t.coeff.sign() < 0;
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        const Rational mag = t.coeff.abs();
        const std::string mono = monomial_to_string(t.mono, f.ring());
        if (mono.empty()) out += mag.to_string();
        else if (mag == Rational(1)) out += mono;
        else out += mag.to_string() + "*" + mono;
    }
    return out;
}

inline std::string to_string(const Term& t, const Ring& ring) {
    return to_string(Polynomial::from_term(std::make_shared<const Ring>(ring), t));
}

}  // namespace tategb
