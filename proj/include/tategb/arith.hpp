#pragma once

/**
 * @file arith.hpp
 * @brief Exact rationals, the +infinity extension, and p-adic valuations on Q.
 *
 * Every quantity in the library (coefficients, log-radii, weights, Gauss
 * valuations) is an exact rational. Nothing is ever rounded.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace tategb {

/// Arbitrary precision rational, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;

    template <typename Int>
        requires std::is_integral_v<Int>
    Rational(Int n) : q_(static_cast<long>(n)) {}

    Rational(long num, long den) : q_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}

    /// Parses "[+-]int[/posint]".
    static Rational parse(std::string_view text);

    const mpq_class& get() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1 / q_));
    }

    std::string to_string() const { return q_.get_str(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class q_{0};
};

inline Rational Rational::parse(std::string_view text) {
    std::size_t i = 0;
    auto bad = [&](const char* why) {
        return std::invalid_argument("invalid rational '" + std::string(text) + "': " + why);
    };
    std::string digits;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') digits.push_back('-');
        ++i;
    }
    const std::size_t num_start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') digits.push_back(text[i++]);
    if (i == num_start) throw bad("expected digits");
    mpz_class num(digits, 10);
    mpz_class den(1);
    if (i < text.size()) {
        if (text[i] != '/') throw bad("unexpected character");
        ++i;
        const std::size_t den_start = i;
        std::string dd;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') dd.push_back(text[i++]);
        if (i == den_start) throw bad("expected denominator digits");
        if (i != text.size()) throw bad("trailing characters");
        den = mpz_class(dd, 10);
        if (den == 0) throw bad("zero denominator");
    }
    mpq_class q(num, den);
    return Rational(std::move(q));
}

/// A rational or +infinity (the valuation of zero).
class ExtRational {
public:
    ExtRational() = default;  // +infinity
    ExtRational(Rational v) : value_(std::move(v)) {}

    static ExtRational infinity() { return ExtRational(); }

    bool is_infinite() const { return !value_.has_value(); }
    const Rational& value() const {
        if (!value_) throw std::logic_error("ExtRational: value of +infinity");
        return *value_;
    }

    std::string to_string() const { return value_ ? value_->to_string() : std::string("inf"); }

    friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return ExtRational(*a.value_ + *b.value_);
    }

    friend bool operator==(const ExtRational& a, const ExtRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
        if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
        if (a.is_infinite()) return std::strong_ordering::greater;
        if (b.is_infinite()) return std::strong_ordering::less;
        return *a.value_ <=> *b.value_;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExtRational& v) { return os << v.to_string(); }

private:
    std::optional<Rational> value_;
};

/// Deterministic trial division; inputs are small.
inline bool is_prime(long long p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (long long d = 3; d <= p / d; d += 2)
        if (p % d == 0) return false;
    return true;
}

/// Q equipped with the p-adic valuation. The uniformizer is p itself.
class ValuedField {
public:
    explicit ValuedField(long p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("ValuedField: " + std::to_string(p) + " is not prime");
    }

    long prime() const { return p_; }
    Rational uniformizer() const { return Rational(p_); }

    friend bool operator==(const ValuedField&, const ValuedField&) = default;

private:
    long p_;
};

/// Exponent of p in a nonzero rational.
inline long valuation(const Rational& c, const ValuedField& field) {
    if (c.is_zero()) throw std::domain_error("valuation of zero is +infinity");
    const mpz_class p(field.prime());
    auto count = [&](mpz_class z) {
        if (z < 0) z = -z;
        mpz_class rest;
        return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
    };
    return count(c.num()) - count(c.den());
}

inline ExtRational val_p(const Rational& c, const ValuedField& field) {
    if (c.is_zero()) return ExtRational::infinity();
    return ExtRational(Rational(valuation(c, field)));
}

/// Dot product of exact vectors (sizes must agree).
inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    mpq_class acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].get() * b[i].get();
    return Rational(std::move(acc));
}

}  // namespace tategb

template <>
struct std::hash<tategb::Rational> {
    std::size_t operator()(const tategb::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.to_string());
    }
};
