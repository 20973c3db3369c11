#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials over Q with a p-adic valuation.
 *
 * A Polynomial is a sorted sequence of nonzero terms. The storage order is
 * degree-reverse-lexicographic on exponents alone, so two polynomials are
 * equal exactly when their term sequences are equal. This storage order is
 * unrelated to the Tate term orders used for leading terms (see order.hpp).
 */

#include "tategb/arith.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tategb {

class Monomial {
public:
    using exponent_type = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<exponent_type> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<exponent_type> exps) : exps_(exps) {}

    std::size_t size() const { return exps_.size(); }
    exponent_type operator[](std::size_t i) const { return exps_[i]; }
    exponent_type& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<exponent_type>& exponents() const { return exps_; }
    std::span<const exponent_type> head(std::size_t k) const { return {exps_.data(), k}; }

    std::uint64_t degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
    }
    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
    }

    /// True iff this divides other.
    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
        return m;
    }

    /// Exact quotient a / b; b must divide a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        if (!b.divides(a)) throw std::domain_error("Monomial: inexact division");
        Monomial m(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = a.exps_[i] - b.exps_[i];
        return m;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial m(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
        return m;
    }
    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Lexicographic on exponent vectors; only for ordered containers, not a term order.
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<exponent_type> exps_;
};

/// Graded reverse lexicographic comparison on the first k exponents.
inline int grevlex_cmp(std::span<const Monomial::exponent_type> a, std::span<const Monomial::exponent_type> b) {
    const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

inline int lex_cmp(std::span<const Monomial::exponent_type> a, std::span<const Monomial::exponent_type> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

inline int grlex_cmp(std::span<const Monomial::exponent_type> a, std::span<const Monomial::exponent_type> b) {
    const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db ? -1 : 1;
    return lex_cmp(a, b);
}

/// Storage order for polynomials: larger grevlex first.
struct StorageOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_cmp(a.exponents(), b.exponents()) > 0;
    }
};

struct Term {
    Rational coeff;
    Monomial mono;

    friend bool operator==(const Term&, const Term&) = default;
    friend Term operator*(const Term& a, const Term& b) { return {a.coeff * b.coeff, a.mono * b.mono}; }
};

/// Variable names plus the valued coefficient field.
class Ring {
public:
    Ring(std::vector<std::string> names, ValuedField field) : names_(std::move(names)), field_(field) {
        std::set<std::string> seen;
        for (const auto& n : names_) {
            if (n.empty()) throw std::invalid_argument("Ring: empty variable name");
            if (!seen.insert(n).second) throw std::invalid_argument("Ring: duplicate variable '" + n + "'");
        }
    }

    static std::shared_ptr<const Ring> make(std::vector<std::string> names, ValuedField field) {
        return std::make_shared<const Ring>(std::move(names), field);
    }

    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const ValuedField& field() const { return field_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    /// The ring with one extra variable appended; the name avoids collisions.
    std::shared_ptr<const Ring> extended(std::string preferred = "t") const {
        while (index_of(preferred)) preferred += "_";
        auto names = names_;
        names.push_back(std::move(preferred));
        return make(std::move(names), field_);
    }

    /// The ring without its last variable.
    std::shared_ptr<const Ring> truncated() const {
        if (names_.empty()) throw std::logic_error("Ring: nothing to truncate");
        return make({names_.begin(), names_.end() - 1}, field_);
    }

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    std::vector<std::string> names_;
    ValuedField field_;
};

using RingPtr = std::shared_ptr<const Ring>;

class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    /// Builds a canonical polynomial from arbitrary (possibly repeated, possibly zero) terms.
    Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
        std::map<Monomial, Rational, StorageOrder> acc;
        for (auto& t : terms) {
            check_arity(t.mono);
            if (t.coeff.is_zero()) continue;
            auto [it, fresh] = acc.try_emplace(std::move(t.mono), t.coeff);
            if (!fresh) it->second += t.coeff;
        }
        for (auto& [m, c] : acc)
            if (!c.is_zero()) terms_.push_back({std::move(c), m});
    }

    static Polynomial constant(RingPtr ring, const Rational& c) {
        const auto n = ring->nvars();
        return Polynomial(ring, {Term{c, Monomial(n)}});
    }
    static Polynomial variable(RingPtr ring, std::size_t i) {
        Monomial m(ring->nvars());
        m[i] = 1;
        return Polynomial(ring, {Term{Rational(1), std::move(m)}});
    }
    static Polynomial from_term(RingPtr ring, Term t) { return Polynomial(std::move(ring), {std::move(t)}); }

    const Ring& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    std::size_t nvars() const { return ring_->nvars(); }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    /// Coefficient of a monomial (zero if absent).
    Rational coeff(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& x) { return StorageOrder{}(t.mono, x); });
        if (it != terms_.end() && it->mono == m) return it->coeff;
        return Rational(0);
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const auto d = terms_.front().mono.degree();
        return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g) { return f.combine(g, Rational(1)); }
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f.combine(g, Rational(-1)); }

    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        f.check_ring(g);
        std::map<Monomial, Rational, StorageOrder> acc;
        for (const auto& a : f.terms_) {
            for (const auto& b : g.terms_) {
                auto [it, fresh] = acc.try_emplace(a.mono * b.mono, a.coeff * b.coeff);
                if (!fresh) it->second += a.coeff * b.coeff;
            }
        }
        Polynomial r(f.ring_);
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.push_back({std::move(c), m});
        return r;
    }

    /// Multiplication by a single term keeps the storage order.
    friend Polynomial operator*(const Term& t, const Polynomial& f) {
        Polynomial r(f.ring_);
        if (t.coeff.is_zero()) return r;
        f.check_arity(t.mono);
        r.terms_.reserve(f.terms_.size());
        for (const auto& a : f.terms_) r.terms_.push_back({t.coeff * a.coeff, t.mono * a.mono});
        return r;
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& f) {
        return Term{c, Monomial(f.nvars())} * f;
    }

    Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
    Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }

    /// this - c * g, the workhorse of every elimination step.
    Polynomial axpy(const Rational& c, const Polynomial& g) const { return combine(g, -c); }

    friend bool operator==(const Polynomial& f, const Polynomial& g) {
        return *f.ring_ == *g.ring_ && f.terms_ == g.terms_;
    }

    /// Canonical total order used to sort output sets deterministically.
    friend bool canonical_less(const Polynomial& f, const Polynomial& g) {
        const std::size_t n = std::min(f.size(), g.size());
        for (std::size_t i = 0; i < n; ++i) {
            const auto& a = f.terms_[i];
            const auto& b = g.terms_[i];
            if (a.mono != b.mono) return StorageOrder{}(a.mono, b.mono);
            if (a.coeff != b.coeff) return a.coeff < b.coeff;
        }
        return f.size() < g.size();
    }

private:
    void check_arity(const Monomial& m) const {
        if (m.size() != ring_->nvars()) throw std::invalid_argument("Polynomial: monomial arity mismatch");
    }
    void check_ring(const Polynomial& g) const {
        if (ring_ != g.ring_ && !(*ring_ == *g.ring_))
            throw std::invalid_argument("Polynomial: ring mismatch");
    }

    Polynomial combine(const Polynomial& g, const Rational& scale) const {
        check_ring(g);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        StorageOrder before;
        while (i < terms_.size() || j < g.terms_.size()) {
            if (j == g.terms_.size() || (i < terms_.size() && before(terms_[i].mono, g.terms_[j].mono))) {
                r.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size() || before(g.terms_[j].mono, terms_[i].mono)) {
                r.terms_.push_back({scale * g.terms_[j].coeff, g.terms_[j].mono});
                ++j;
            } else {
                Rational c = terms_[i].coeff + scale * g.terms_[j].coeff;
                if (!c.is_zero()) r.terms_.push_back({std::move(c), terms_[i].mono});
                ++i;
                ++j;
            }
        }
        return r;
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// f scaled so that the coefficient of its first stored monomial is 1.
inline Polynomial primitive_normal(const Polynomial& f) {
    if (f.is_zero()) return f;
    return f.terms().front().coeff.inverse() * f;
}

/// True iff f = c * g for some nonzero rational c.
inline bool same_up_to_unit(const Polynomial& f, const Polynomial& g) {
    return primitive_normal(f) == primitive_normal(g);
}

/// f^*: each term padded with the appended variable t up to deg(f).
inline Polynomial homogenize(const Polynomial& f, const RingPtr& extended) {
    if (extended->nvars() != f.nvars() + 1) throw std::invalid_argument("homogenize: ring must add one variable");
    const auto d = f.total_degree();
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        auto e = t.mono.exponents();
        e.push_back(static_cast<Monomial::exponent_type>(d - t.mono.degree()));
        out.push_back({t.coeff, Monomial(std::move(e))});
    }
    return Polynomial(extended, std::move(out));
}

inline Polynomial homogenize(const Polynomial& f) { return homogenize(f, f.ring().extended()); }

/// h_*: set the last variable to 1.
inline Polynomial dehomogenize(const Polynomial& h, const RingPtr& base) {
    if (base->nvars() + 1 != h.nvars()) throw std::invalid_argument("dehomogenize: ring must drop one variable");
    std::vector<Term> out;
    out.reserve(h.size());
    for (const auto& t : h.terms()) {
        auto e = t.mono.exponents();
        e.pop_back();
        out.push_back({t.coeff, Monomial(std::move(e))});
    }
    return Polynomial(base, std::move(out));
}

inline Polynomial dehomogenize(const Polynomial& h) { return dehomogenize(h, h.ring().truncated()); }

/// Sorts by canonical_less and drops unit multiples of earlier entries.
inline std::vector<Polynomial> canonical_set(std::vector<Polynomial> fs) {
    std::vector<Polynomial> out;
    for (auto& f : fs) {
        if (f.is_zero()) continue;
        if (std::none_of(out.begin(), out.end(), [&](const Polynomial& g) { return same_up_to_unit(f, g); }))
            out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) { return canonical_less(a, b); });
    return out;
}

}  // namespace tategb
