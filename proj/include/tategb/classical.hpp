#pragma once

/**
 * @file classical.hpp
 * @brief Textbook Buchberger over Q with graded reverse lexicographic order.
 *
 * No valuation is involved. The leading term is simply the first stored term,
 * because polynomials are kept sorted by grevlex.
 */

#include "tategb/polynomial.hpp"

#include <deque>
#include <utility>
#include <vector>

namespace tategb::classical {

inline const Term& lead(const Polynomial& f) { return f.terms().front(); }

/// Full normal form of f modulo G.
inline Polynomial normal_form(Polynomial f, const std::vector<Polynomial>& G) {
    Polynomial rem(f.ring_ptr());
    std::vector<Term> kept;
    while (!f.is_zero()) {
        const Term lt = lead(f);
        bool divided = false;
        for (const auto& g : G) {
            const Term& lg = lead(g);
            if (lg.mono.divides(lt.mono)) {
                f = f - Term{lt.coeff / lg.coeff, lt.mono / lg.mono} * g;
                divided = true;
                break;
            }
        }
        if (!divided) {
            kept.push_back(lt);
            f = f - Polynomial::from_term(f.ring_ptr(), lt);
        }
    }
    return Polynomial(f.ring_ptr(), std::move(kept));
}

inline Polynomial spoly(const Polynomial& f, const Polynomial& g) {
    const Term& a = lead(f);
    const Term& b = lead(g);
    const Monomial l = lcm(a.mono, b.mono);
    return Term{b.coeff, l / a.mono} * f - Term{a.coeff, l / b.mono} * g;
}

/// The reduced Gröbner basis of <F> (monic elements, sorted canonically).
inline std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& F) {
    std::vector<Polynomial> G;
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    auto add = [&](Polynomial g) {
        g = lead(g).coeff.inverse() * g;
        for (std::size_t i = 0; i < G.size(); ++i) pairs.emplace_back(i, G.size());
        G.push_back(std::move(g));
    };
    for (const auto& f : F) {
        auto r = normal_form(f, G);
        if (!r.is_zero()) add(std::move(r));
    }
    while (!pairs.empty()) {
        const auto [i, j] = pairs.front();
        pairs.pop_front();
        const Monomial& a = lead(G[i]).mono;
        const Monomial& b = lead(G[j]).mono;
        if (gcd(a, b).is_one()) continue;  // coprime leading monomials
        auto r = normal_form(spoly(G[i], G[j]), G);
        if (!r.is_zero()) add(std::move(r));
    }

    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mj = lead(G[j]).mono;
            const Monomial& mi = lead(G[i]).mono;
            redundant = mj.divides(mi) && (mj != mi || j < i);
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        const Term lt = lead(minimal[i]);
        const Polynomial head = Polynomial::from_term(minimal[i].ring_ptr(), lt);
        reduced.push_back(head + normal_form(minimal[i] - head, others));
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const Polynomial& a, const Polynomial& b) { return canonical_less(a, b); });
    return reduced;
}

inline bool is_unit_ideal(const std::vector<Polynomial>& F) {
    for (const auto& g : groebner_basis(F))
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

}  // namespace tategb::classical
