#pragma once

/**
 * @file polyhedral.hpp
 * @brief Series converging on a polyhedral family of polydisks.
 *
 * The domain is the hull of finitely many log-radii vertices s_1..s_l extended
 * by the negative orthant. A series converges on it iff it converges at every
 * vertex. Reduction at a working radius r in the domain uses Mora-style
 * weak normal forms: reducers are chosen by their écarts at the vertices, and
 * intermediate remainders may rejoin the reducer pool.
 */

#include "tategb/groebner.hpp"
#include "tategb/lp.hpp"
#include "tategb/order.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tategb {

class PolyhedralDomain {
public:
    explicit PolyhedralDomain(std::vector<LogRadii> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.empty()) throw std::invalid_argument("PolyhedralDomain: no vertices");
        const std::size_t n = vertices_.front().size();
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (vertices_[i].size() != n) throw std::invalid_argument("PolyhedralDomain: vertex dimension mismatch");
            for (std::size_t j = 0; j < vertices_.size(); ++j) {
                if (i == j) continue;
                if (vertices_[i] == vertices_[j]) throw std::invalid_argument("PolyhedralDomain: repeated vertex");
                bool dominated = true;
                for (std::size_t k = 0; k < n && dominated; ++k) dominated = vertices_[i][k] <= vertices_[j][k];
                if (dominated) throw std::invalid_argument("PolyhedralDomain: vertex dominated by another vertex");
            }
        }
    }

    const std::vector<LogRadii>& vertices() const { return vertices_; }
    std::size_t dim() const { return vertices_.front().size(); }

private:
    std::vector<LogRadii> vertices_;
};

/// r lies in the domain iff r <= sum lambda_i s_i for convex weights lambda.
inline bool domain_member(const LogRadii& r, const PolyhedralDomain& P) {
    if (r.size() != P.dim()) throw std::invalid_argument("domain_member: dimension mismatch");
    const std::size_t l = P.vertices().size();
    LPProblem lp(l);
    for (std::size_t i = 0; i < l; ++i) {
        std::vector<Rational> e(l);
        e[i] = Rational(1);
        lp.add(std::move(e), Relation::GreaterEqual, Rational(0));
    }
    lp.add(std::vector<Rational>(l, Rational(1)), Relation::Equal, Rational(1));
    for (std::size_t k = 0; k < r.size(); ++k) {
        std::vector<Rational> row(l);
        for (std::size_t i = 0; i < l; ++i) row[i] = P.vertices()[i][k];
        lp.add(std::move(row), Relation::GreaterEqual, r[k]);
    }
    return lp_feasible(lp).has_value();
}

inline Rational val_at(const Polynomial& f, const LogRadii& s) { return gauss_val_poly(f, s).value(); }

/// max over the s-support of f of (s - r).a
inline Rational deg_sr(const Polynomial& f, const LogRadii& s, const LogRadii& r) {
    if (f.is_zero()) throw std::invalid_argument("deg_sr: zero polynomial");
    std::optional<Rational> best;
    for (const auto& m : support_r(f, s)) {
        Rational d;
        for (std::size_t i = 0; i < m.size(); ++i) d += (s[i] - r[i]) * Rational(static_cast<long>(m[i]));
        if (!best || d > *best) best = std::move(d);
    }
    return *best;
}

/// kind 0: val_s(LT_r f) - val_s(f); kind 1: deg_sr(f) - deg_sr(LT_r f).
inline Rational ecart(const Polynomial& f, const LogRadii& s, const LogRadii& r, int kind,
                      TieBreak tie = TieBreak::Grevlex) {
    if (f.is_zero()) throw std::invalid_argument("ecart: zero polynomial");
    const auto& field = f.ring().field();
    const Polynomial lt = Polynomial::from_term(f.ring_ptr(), leading_term(f, TateOrder(field, r, tie)));
    switch (kind) {
        case 0: return val_at(lt, s) - val_at(f, s);
        case 1: return deg_sr(f, s, r) - deg_sr(lt, s, r);
        default: throw std::invalid_argument("ecart: kind must be 0 or 1");
    }
}

enum class WNFStatus { Exact, ConvergedToZeroAtCap };

inline std::string to_string(WNFStatus s) {
    return s == WNFStatus::Exact ? "exact" : "converged_to_zero_at_cap";
}

struct WNFResult {
    Polynomial remainder;
    WNFStatus status = WNFStatus::Exact;
    Polynomial mu;                     ///< mu*f = sum cofactors[i]*G[i] + remainder
    std::vector<Polynomial> cofactors;  ///< one per element of G
    Rational cap;
    std::size_t steps = 0;
    std::size_t pool_size = 0;           ///< reducers available at the end
    std::size_t monotonicity_violations = 0;
    std::vector<std::vector<Rational>> ecart_trace;  ///< écart tuple of the chosen reducer per step
};

struct WNFOptions {
    TieBreak tie = TieBreak::Grevlex;
    std::size_t max_steps = 100000;
    bool record_trace = false;
};

namespace detail {

/// An element a*f + sum b_i*G_i of the ideal together with that representation.
struct Tracked {
    Polynomial value;
    Polynomial a;
    std::vector<Polynomial> b;
    std::vector<Rational> ecarts;  ///< (E_{s1,0}, E_{s1,1}, E_{s2,0}, ...)
};

inline std::vector<Rational> ecart_tuple(const Polynomial& g, const PolyhedralDomain& P, const LogRadii& r,
                                         TieBreak tie) {
    std::vector<Rational> out;
    for (const auto& s : P.vertices()) {
        out.push_back(ecart(g, s, r, 0, tie));
        out.push_back(ecart(g, s, r, 1, tie));
    }
    return out;
}

}  // namespace detail

/// Weak normal form of f modulo G at radius r, reducing with the écart
/// strategy of the vertices of P. Stops with a distinct status once the
/// remainder's valuations at r and at every vertex all exceed cap.
inline WNFResult mora_wnf(const Polynomial& f, const std::vector<Polynomial>& G, const PolyhedralDomain& P,
                          const LogRadii& r, const Rational& cap, const WNFOptions& opts = {}) {
    if (cap.sign() <= 0) throw std::invalid_argument("mora_wnf: cap must be positive");
    if (!domain_member(r, P)) throw std::invalid_argument("mora_wnf: r is outside the polyhedral domain");
    const auto& ring = f.ring_ptr();
    const auto& field = ring->field();
    const TateOrder order(field, r, opts.tie);
    const Polynomial zero(ring);
    const Polynomial one = Polynomial::constant(ring, Rational(1));

    std::vector<detail::Tracked> pool;
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero()) continue;
        std::vector<Polynomial> b(G.size(), zero);
        b[i] = one;
        pool.push_back({G[i], zero, std::move(b), detail::ecart_tuple(G[i], P, r, opts.tie)});
    }

    detail::Tracked h{f, one, std::vector<Polynomial>(G.size(), zero), {}};
    WNFResult res{zero, WNFStatus::Exact, one, {}, cap, 0, 0, 0, {}};

    auto past_cap = [&](const Polynomial& p) {
        if (!(val_at(p, r) > cap)) return false;
        return std::all_of(P.vertices().begin(), P.vertices().end(), [&](const LogRadii& s) { return val_at(p, s) > cap; });
    };

    while (!h.value.is_zero()) {
        if (past_cap(h.value)) {
            res.status = WNFStatus::ConvergedToZeroAtCap;
            break;
        }
        const Term lt = leading_term(h.value, order);
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (!leading_monomial(pool[i].value, order).divides(lt.mono)) continue;
            if (!pick || pool[i].ecarts < pool[*pick].ecarts) pick = i;
        }
        if (!pick) break;
        if (++res.steps > opts.max_steps) throw std::runtime_error("mora_wnf: step limit exceeded");

        h.ecarts = detail::ecart_tuple(h.value, P, r, opts.tie);
        const auto g = pool[*pick];  // copy: the pool may grow below
        if (opts.record_trace) res.ecart_trace.push_back(g.ecarts);

        bool some_larger = false;
        for (std::size_t k = 0; k < g.ecarts.size(); ++k) some_larger = some_larger || g.ecarts[k] > h.ecarts[k];
        if (some_larger) pool.push_back(h);

        const Term& lg = leading_term(g.value, order);
        const Term t{lt.coeff / lg.coeff, lt.mono / lg.mono};
        detail::Tracked next{h.value - t * g.value, h.a - t * g.a, h.b, {}};
        for (std::size_t i = 0; i < G.size(); ++i) next.b[i] = h.b[i] - t * g.b[i];

        // Monitor: when both écarts of g at a vertex are within h's, the
        // valuation there must not drop, and on a tie the degree must not grow.
        for (std::size_t v = 0; v < P.vertices().size(); ++v) {
            if (!(g.ecarts[2 * v] <= h.ecarts[2 * v] && g.ecarts[2 * v + 1] <= h.ecarts[2 * v + 1])) continue;
            if (next.value.is_zero()) continue;
            const auto& s = P.vertices()[v];
            const Rational before = val_at(h.value, s), after = val_at(next.value, s);
            if (after < before || (after == before && deg_sr(next.value, s, r) > deg_sr(h.value, s, r)))
                ++res.monotonicity_violations;
        }
        h = std::move(next);
    }

    res.remainder = h.value;
    res.mu = h.a;
    res.cofactors.reserve(G.size());
    for (auto& b : h.b) res.cofactors.push_back(-b);
    res.pool_size = pool.size();
    return res;
}

/// Buchberger's algorithm with mora_wnf as the normal form. Pairs whose
/// normal form only converged to zero are dropped and counted.
inline GBasis local_gb_wnf(const std::vector<Polynomial>& F, const PolyhedralDomain& P, const LogRadii& r,
                           const Rational& cap, const WNFOptions& opts = {}, std::size_t max_basis = 256) {
    if (!domain_member(r, P)) throw std::invalid_argument("local_gb_wnf: r is outside the polyhedral domain");
    detail::require_nonempty_ring(F);
    const TateOrder order(F.front().ring().field(), r, opts.tie);
    GBasis out{{}, order, false, 0};
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    auto add = [&](const Polynomial& g) {
        if (out.generators.size() >= max_basis) throw std::runtime_error("local_gb_wnf: basis size limit exceeded");
        for (std::size_t i = 0; i < out.generators.size(); ++i) pairs.emplace_back(i, out.generators.size());
        out.generators.push_back(make_monic(g, order));
    };
    for (const auto& f : F)
        if (!f.is_zero()) add(f);
    while (!pairs.empty()) {
        const auto [i, j] = pairs.front();
        pairs.pop_front();
        const auto res = mora_wnf(spoly(out.generators[i], out.generators[j], order), out.generators, P, r, cap, opts);
        if (res.status == WNFStatus::ConvergedToZeroAtCap) {
            ++out.capped_pairs;
            continue;
        }
        if (!res.remainder.is_zero()) add(res.remainder);
    }
    return out;
}

/// Terms of f that are not strictly dominated by another term. u dominates t
/// when u has strictly smaller valuation at every vertex and u's monomial
/// divides t's. Contains LT_r(f) for every r in P and every tie-break.
inline std::vector<Term> terms_p_principal(const Polynomial& f, const PolyhedralDomain& P) {
    if (f.is_zero()) throw std::invalid_argument("terms_p_principal: zero polynomial");
    const auto& field = f.ring().field();
    const auto& ts = f.terms();
    std::vector<std::vector<Rational>> vals;
    for (const auto& t : ts) {
        std::vector<Rational> v;
        for (const auto& s : P.vertices()) v.push_back(term_valuation(t, s, field));
        vals.push_back(std::move(v));
    }
    std::vector<Term> out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < ts.size() && !dominated; ++j) {
            if (i == j || !ts[j].mono.divides(ts[i].mono)) continue;
            bool below = true;
            for (std::size_t k = 0; k < vals[i].size() && below; ++k) below = vals[j][k] < vals[i][k];
            dominated = below;
        }
        if (!dominated) out.push_back(ts[i]);
    }
    return out;
}

}  // namespace tategb
