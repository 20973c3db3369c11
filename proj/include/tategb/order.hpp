#pragma once

/**
 * @file order.hpp
 * @brief Gauss valuations, r-supports, initial parts and the Tate term orders.
 *
 * For log-radii r, a term c*X^a has Gauss valuation val(c) - r.a. The term
 * order <_{r,m} ranks terms by decreasing Gauss valuation (smaller valuation
 * means larger term) and breaks ties with a classical monomial order m.
 *
 * The homogenized variant is used on K[X,t] with t the last variable. Between
 * valuation and the tie-break it compares total degree, and the tie-break only
 * sees the X-part of the monomial.
 */

#include "tategb/arith.hpp"
#include "tategb/lp.hpp"
#include "tategb/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tategb {

using LogRadii = std::vector<Rational>;

enum class TieBreak { Grevlex, Lex, Grlex };

inline std::string to_string(TieBreak tie) {
    switch (tie) {
        case TieBreak::Grevlex: return "grevlex";
        case TieBreak::Lex: return "lex";
        case TieBreak::Grlex: return "grlex";
    }
    return "?";
}

inline TieBreak parse_tie_break(std::string_view name) {
    if (name == "grevlex") return TieBreak::Grevlex;
    if (name == "lex") return TieBreak::Lex;
    if (name == "grlex") return TieBreak::Grlex;
    throw std::invalid_argument("unknown tie-break order '" + std::string(name) + "'");
}

inline int monomial_cmp(TieBreak tie, std::span<const Monomial::exponent_type> a,
                        std::span<const Monomial::exponent_type> b) {
    switch (tie) {
        case TieBreak::Grevlex: return grevlex_cmp(a, b);
        case TieBreak::Lex: return lex_cmp(a, b);
        case TieBreak::Grlex: return grlex_cmp(a, b);
    }
    return 0;
}

struct TateOrder {
    ValuedField field;
    LogRadii radii;
    TieBreak tie = TieBreak::Grevlex;
    bool homogenized = false;

    TateOrder(ValuedField f, LogRadii r, TieBreak t = TieBreak::Grevlex, bool hom = false)
        : field(f), radii(std::move(r)), tie(t), homogenized(hom) {}

    /// <_{(r,0),m} on K[X,t] from <_{r,m} on K[X].
    static TateOrder homogenized_from(const ValuedField& f, LogRadii r, TieBreak t) {
        r.push_back(Rational(0));
        return TateOrder(f, std::move(r), t, true);
    }
};

/// val(c) - r.a for a nonzero term.
inline Rational term_valuation(const Term& t, const LogRadii& r, const ValuedField& field) {
    if (r.size() != t.mono.size()) throw std::invalid_argument("gauss_val: radii dimension mismatch");
    Rational v(valuation(t.coeff, field));
    for (std::size_t i = 0; i < r.size(); ++i)
        if (t.mono[i] != 0) v -= r[i] * Rational(static_cast<long>(t.mono[i]));
    return v;
}

inline ExtRational gauss_val(const Term& t, const LogRadii& r, const ValuedField& field) {
    if (t.coeff.is_zero()) return ExtRational::infinity();
    return term_valuation(t, r, field);
}

inline ExtRational gauss_val_poly(const Polynomial& f, const LogRadii& r, const ValuedField& field) {
    ExtRational best = ExtRational::infinity();
    for (const auto& t : f.terms()) best = std::min(best, ExtRational(term_valuation(t, r, field)));
    return best;
}

inline ExtRational gauss_val_poly(const Polynomial& f, const LogRadii& r) {
    return gauss_val_poly(f, r, f.ring().field());
}

/// Monomials of f whose term valuation attains the Gauss valuation of f.
inline std::vector<Monomial> support_r(const Polynomial& f, const LogRadii& r) {
    if (f.is_zero()) throw std::invalid_argument("support_r: zero polynomial");
    const auto& field = f.ring().field();
    const Rational v = gauss_val_poly(f, r, field).value();
    std::vector<Monomial> out;
    for (const auto& t : f.terms())
        if (term_valuation(t, r, field) == v) out.push_back(t.mono);
    return out;
}

inline Polynomial initial_part(const Polynomial& f, const LogRadii& r) {
    if (f.is_zero()) throw std::invalid_argument("initial_part: zero polynomial");
    const auto& field = f.ring().field();
    const Rational v = gauss_val_poly(f, r, field).value();
    std::vector<Term> kept;
    for (const auto& t : f.terms())
        if (term_valuation(t, r, field) == v) kept.push_back(t);
    return Polynomial(f.ring_ptr(), std::move(kept));
}

/// Three-way comparison of nonzero terms: negative iff a < b.
inline int compare(const Term& a, const Term& b, const TateOrder& o) {
    const Rational va = term_valuation(a, o.radii, o.field);
    const Rational vb = term_valuation(b, o.radii, o.field);
    if (va != vb) return va > vb ? -1 : 1;
    std::size_t k = a.mono.size();
    if (o.homogenized) {
        const auto da = a.mono.degree();
        const auto db = b.mono.degree();
        if (da != db) return da < db ? -1 : 1;
        k -= 1;
    }
    return monomial_cmp(o.tie, a.mono.head(k), b.mono.head(k));
}

inline const Term& leading_term(const Polynomial& f, const TateOrder& o) {
    if (f.is_zero()) throw std::invalid_argument("leading_term: zero polynomial");
    const auto& ts = f.terms();
    std::size_t best = 0;
    Rational best_val = term_valuation(ts[0], o.radii, o.field);
    for (std::size_t i = 1; i < ts.size(); ++i) {
        Rational v = term_valuation(ts[i], o.radii, o.field);
        if (v < best_val || (v == best_val && compare(ts[i], ts[best], o) > 0)) {
            best = i;
            best_val = std::move(v);
        }
    }
    return ts[best];
}

inline const Monomial& leading_monomial(const Polynomial& f, const TateOrder& o) { return leading_term(f, o).mono; }
inline const Rational& leading_coeff(const Polynomial& f, const TateOrder& o) { return leading_term(f, o).coeff; }

/// Leading terms of a family, in input order (duplicates kept).
inline std::vector<Term> lt_set(const std::vector<Polynomial>& fs, const TateOrder& o) {
    std::vector<Term> out;
    out.reserve(fs.size());
    for (const auto& f : fs) {
        if (f.is_zero()) throw std::invalid_argument("lt_set: zero member");
        out.push_back(leading_term(f, o));
    }
    return out;
}

/// True iff both orders pick the same leading term for every member.
inline bool same_lt_set(const std::vector<Polynomial>& fs, const TateOrder& a, const TateOrder& b) {
    return lt_set(fs, a) == lt_set(fs, b);
}

/// Returns s such that for every f in fs, <_s picks the same leading term as
/// <_{r,tie} and that term is the whole initial part init_s(f). More strongly,
/// on the union of the supports, t1 >_{r,tie} t2 implies val_s(t1) < val_s(t2).
inline LogRadii realize_term_order(const std::vector<Polynomial>& fs, const LogRadii& r, TieBreak tie) {
    if (fs.empty()) return r;
    const auto& field = fs.front().ring().field();
    const std::size_t n = r.size();
    const TateOrder base(field, r, tie);

    std::vector<Term> terms;
    for (const auto& f : fs) {
        if (f.is_zero()) throw std::invalid_argument("realize_term_order: zero member");
        if (f.nvars() != n) throw std::invalid_argument("realize_term_order: radii dimension mismatch");
        for (const auto& t : f.terms()) terms.push_back(t);
    }
    std::vector<Rational> vals;
    vals.reserve(terms.size());
    for (const auto& t : terms) vals.push_back(term_valuation(t, r, field));

    auto to_vec = [](const Monomial& a, const Monomial& b) {
        std::vector<Rational> d(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            d[i] = Rational(static_cast<long>(a[i])) - Rational(static_cast<long>(b[i]));
        return d;
    };

    // Separate every valuation tie of distinct monomials in the direction of the tie-break.
    LPProblem lp(n);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t j = 0; j < terms.size(); ++j) {
            if (vals[i] != vals[j] || terms[i].mono == terms[j].mono) continue;
            if (monomial_cmp(tie, terms[i].mono.exponents(), terms[j].mono.exponents()) > 0)
                lp.add(to_vec(terms[i].mono, terms[j].mono), Relation::GreaterEqual, Rational(1));
        }
    }
    if (lp.constraints.empty()) return r;
    auto u = lp_feasible(lp);
    if (!u) throw std::logic_error("realize_term_order: tie-break order is not realizable by weights");

    Rational eps(1);
    bool bounded = false;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            if (vals[i] == vals[j]) continue;
            const Rational shift = dot(*u, to_vec(terms[i].mono, terms[j].mono));
            if (shift.is_zero()) continue;
            Rational slack = (vals[i] - vals[j]).abs() / shift.abs();
            if (!bounded || slack < eps) {
                eps = std::move(slack);
                bounded = true;
            }
        }
    }
    eps /= Rational(2);

    auto satisfies = [&](const LogRadii& s) {
        for (std::size_t i = 0; i < terms.size(); ++i) {
            for (std::size_t j = 0; j < terms.size(); ++j) {
                if (compare(terms[i], terms[j], base) > 0 &&
                    !(term_valuation(terms[i], s, field) < term_valuation(terms[j], s, field)))
                    return false;
            }
        }
        return true;
    };
    for (int sign : {1, -1}) {
        LogRadii s = r;
        for (std::size_t k = 0; k < n; ++k) s[k] += Rational(sign) * eps * (*u)[k];
        if (satisfies(s)) return s;
    }
    throw std::logic_error("realize_term_order: no perturbation satisfies the ordering contract");
}

}  // namespace tategb
