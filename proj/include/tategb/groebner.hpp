#pragma once

/**
 * @file groebner.hpp
 * @brief Local Gröbner bases for Tate term orders.
 *
 * Homogeneous ideals are handled degree by degree. Inside one degree there
 * are finitely many monomials, so reduction is done by exact Gauss-Jordan
 * elimination whose pivot in each row is that row's leading term for the
 * Tate order. Naive term-by-term division would not terminate here: dividing
 * can keep producing p-multiples of the same monomial forever.
 *
 * Arbitrary polynomial ideals go through homogenization: a homogeneous basis
 * of <F^h> for <_{(r,0),m} dehomogenizes to an r-local basis of <F>.
 */

#include "tategb/order.hpp"
#include "tategb/polynomial.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace tategb {

struct GBasis {
    std::vector<Polynomial> generators;
    TateOrder order;
    bool reduced = false;
    /// S-pairs discarded because their weak normal form only converged to zero (see polyhedral.hpp).
    std::size_t capped_pairs = 0;
};

/// (LT(g)/D) f - (LT(f)/D) g with D the monomial gcd of the two leading terms.
inline Polynomial spoly(const Polynomial& f, const Polynomial& g, const TateOrder& o) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("spoly: zero input");
    const Term& lf = leading_term(f, o);
    const Term& lg = leading_term(g, o);
    const Monomial d = gcd(lf.mono, lg.mono);
    const Term mf{lg.coeff, lg.mono / d};
    const Term mg{lf.coeff, lf.mono / d};
    return mf * f - mg * g;
}

inline Polynomial make_monic(const Polynomial& f, const TateOrder& o) {
    return leading_coeff(f, o).inverse() * f;
}

/// Gauss-Jordan elimination where each row's pivot is its leading term.
/// Output rows are monic, have pairwise distinct pivots, and no row contains
/// another row's pivot monomial. Sorted by decreasing leading term.
inline std::vector<Polynomial> reduce_degree_slice(const std::vector<Polynomial>& rows, const TateOrder& o) {
    std::vector<Polynomial> echelon;
    std::vector<Monomial> pivots;
    for (const auto& input : rows) {
        Polynomial r = input;
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            const Rational c = r.coeff(pivots[k]);
            if (!c.is_zero()) r = r.axpy(c, echelon[k]);
        }
        if (r.is_zero()) continue;
        r = make_monic(r, o);
        const Monomial p = leading_monomial(r, o);
        for (auto& e : echelon) {
            const Rational c = e.coeff(p);
            if (!c.is_zero()) e = e.axpy(c, r);
        }
        echelon.push_back(std::move(r));
        pivots.push_back(p);
    }
    std::sort(echelon.begin(), echelon.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare(leading_term(a, o), leading_term(b, o), o) > 0;
    });
    return echelon;
}

namespace detail {

/// Incrementally maintained reduced echelon rows, one per monomial divisible
/// by a leading monomial of the current basis. Rows never contain another
/// row's pivot; each row is monic at its pivot, which is its leading term.
class SliceReducer {
public:
    SliceReducer(const TateOrder& o, const std::vector<Polynomial>& basis, const std::vector<Monomial>& lms)
        : order_(o), basis_(basis), lms_(lms) {}

    /// Removes every monomial divisible by a basis leading monomial.
    Polynomial reduce(Polynomial h) {
        for (;;) {
            std::optional<Monomial> hit;
            for (const auto& t : h.terms()) {
                if (divisor_of(t.mono)) {
                    hit = t.mono;
                    break;
                }
            }
            if (!hit) return h;
            auto& slice = rows_[hit->degree()];
            auto it = slice.find(*hit);
            if (it == slice.end()) {
                add_pivot(*hit);
                continue;
            }
            h = h.axpy(h.coeff(*hit), it->second);
        }
    }

    /// The element of the ideal with leading monomial mu and no other term
    /// divisible by a basis leading monomial.
    Polynomial reduced_row(const Monomial& mu) {
        auto& slice = rows_[mu.degree()];
        if (!slice.count(mu)) add_pivot(mu);
        for (;;) {
            std::optional<Monomial> hit;
            for (const auto& t : slice.at(mu).terms()) {
                if (t.mono != mu && divisor_of(t.mono)) {
                    hit = t.mono;
                    break;
                }
            }
            if (!hit) return slice.at(mu);
            add_pivot(*hit);  // eliminates *hit from every row, including this one
        }
    }

private:
    std::optional<std::size_t> divisor_of(const Monomial& m) const {
        for (std::size_t i = 0; i < lms_.size(); ++i)
            if (lms_[i].divides(m)) return i;
        return std::nullopt;
    }

    void add_pivot(const Monomial& mu) {
        const auto idx = divisor_of(mu);
        if (!idx) throw std::logic_error("SliceReducer: pivot not divisible by any leading monomial");
        auto& slice = rows_[mu.degree()];
        Polynomial row = Term{Rational(1), mu / lms_[*idx]} * basis_[*idx];
        // Clear existing pivots from the new row; the subtracted rows carry no other pivot.
        std::vector<Monomial> present;
        for (const auto& t : row.terms())
            if (t.mono != mu && slice.count(t.mono)) present.push_back(t.mono);
        for (const auto& nu : present) row = row.axpy(row.coeff(nu), slice.at(nu));
        row = row.coeff(mu).inverse() * row;
        for (auto& [pivot, other] : slice) {
            const Rational c = other.coeff(mu);
            if (!c.is_zero()) other = other.axpy(c, row);
        }
        slice.emplace(mu, std::move(row));
    }

    const TateOrder& order_;
    const std::vector<Polynomial>& basis_;
    const std::vector<Monomial>& lms_;
    std::map<std::uint64_t, std::map<Monomial, Polynomial, StorageOrder>> rows_;
};

class HomogeneousEngine {
public:
    explicit HomogeneousEngine(TateOrder o) : order_(std::move(o)), reducer_(order_, basis_, lms_) {}

    void run(const std::vector<Polynomial>& gens) {
        for (const auto& f : gens) {
            if (!f.is_homogeneous()) throw std::invalid_argument("Gröbner basis: non-homogeneous input");
            if (f.nvars() != order_.radii.size())
                throw std::invalid_argument("Gröbner basis: radii dimension mismatch");
            if (f.is_zero()) continue;
            pending_[f.total_degree()].emplace_back(f);
        }
        while (!pending_.empty()) {
            auto node = pending_.extract(pending_.begin());
            auto& items = node.mapped();
            for (std::size_t k = 0; k < items.size(); ++k) {
                Polynomial h = std::visit(
                    [&](const auto& item) -> Polynomial {
                        if constexpr (std::is_same_v<std::decay_t<decltype(item)>, Polynomial>) return item;
                        else return spoly(basis_[item.first], basis_[item.second], order_);
                    },
                    items[k]);
                h = reducer_.reduce(std::move(h));
                if (h.is_zero()) continue;
                add(make_monic(h, order_), node.key(), items);
            }
        }
    }

    const std::vector<Polynomial>& basis() const { return basis_; }
    const TateOrder& order() const { return order_; }

    std::vector<Polynomial> reduced_basis() {
        std::vector<Polynomial> out;
        out.reserve(basis_.size());
        for (const auto& m : lms_) out.push_back(reducer_.reduced_row(m));
        return out;
    }

private:
    using Item = std::variant<Polynomial, std::pair<std::size_t, std::size_t>>;

    void add(Polynomial g, std::uint64_t degree, std::vector<Item>& same_degree) {
        const Monomial lm = leading_monomial(g, order_);
        const std::size_t idx = basis_.size();
        basis_.push_back(std::move(g));
        lms_.push_back(lm);
        for (std::size_t i = 0; i < idx; ++i) {
            const auto d = lcm(lms_[i], lm).degree();
            if (d == degree) same_degree.emplace_back(std::pair{i, idx});
            else pending_[d].emplace_back(std::pair{i, idx});
        }
    }

    TateOrder order_;
    std::vector<Polynomial> basis_;
    std::vector<Monomial> lms_;
    SliceReducer reducer_;
    std::map<std::uint64_t, std::vector<Item>> pending_;
};

inline void require_nonempty_ring(const std::vector<Polynomial>& fs) {
    if (fs.empty()) throw std::invalid_argument("Gröbner basis: empty generator list");
}

}  // namespace detail

/// A Gröbner basis of <F> for o; F must be homogeneous. Processing by
/// increasing degree makes the result minimal.
inline GBasis buchberger_homogeneous(const std::vector<Polynomial>& F, const TateOrder& o) {
    detail::HomogeneousEngine engine(o);
    engine.run(F);
    return {engine.basis(), o, false, 0};
}

/// The unique reduced Gröbner basis of the homogeneous ideal <F> for o.
inline GBasis reduced_gb(const std::vector<Polynomial>& F, const TateOrder& o) {
    detail::HomogeneousEngine engine(o);
    engine.run(F);
    auto gens = engine.reduced_basis();
    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) { return canonical_less(a, b); });
    return {std::move(gens), o, true, 0};
}

/// An r-local Gröbner basis of <F>: homogenize, compute, dehomogenize.
/// Homogeneous input is computed directly, which gives the same result.
inline GBasis local_gb(const std::vector<Polynomial>& F, const LogRadii& r, TieBreak tie) {
    detail::require_nonempty_ring(F);
    const auto& ring = F.front().ring_ptr();
    const TateOrder order(ring->field(), r, tie);
    if (r.size() != ring->nvars()) throw std::invalid_argument("local_gb: radii dimension mismatch");

    const bool homogeneous = std::all_of(F.begin(), F.end(), [](const Polynomial& f) { return f.is_homogeneous(); });
    if (homogeneous) return {reduced_gb(F, order).generators, order, false, 0};

    const auto ext = ring->extended();
    std::vector<Polynomial> hom;
    hom.reserve(F.size());
    for (const auto& f : F) hom.push_back(homogenize(f, ext));
    const auto hgb = reduced_gb(hom, TateOrder::homogenized_from(ring->field(), r, tie));
    std::vector<Polynomial> out;
    for (const auto& h : hgb.generators) out.push_back(dehomogenize(h, ring));
    return {canonical_set(std::move(out)), order, false, 0};
}

/// Optional post-pass: drop elements whose leading monomial is divisible by another's.
inline GBasis minimalize(const GBasis& G) {
    GBasis out{{}, G.order, G.reduced, G.capped_pairs};
    const auto& gs = G.generators;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const Monomial mi = leading_monomial(gs[i], G.order);
        bool redundant = false;
        for (std::size_t j = 0; j < gs.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial mj = leading_monomial(gs[j], G.order);
            redundant = mj.divides(mi) && (mj != mi || j < i);
        }
        if (!redundant) out.generators.push_back(gs[i]);
    }
    return out;
}

/// True iff every leading monomial of a reference r-local basis of <F> is
/// divisible by a leading monomial of G. Assumes <G> is contained in <F>.
inline bool is_local_gb(const std::vector<Polynomial>& G, const std::vector<Polynomial>& F, const LogRadii& r,
                        TieBreak tie) {
    const auto reference = local_gb(F, r, tie);
    const auto& o = reference.order;
    std::vector<Monomial> lms;
    for (const auto& g : G)
        if (!g.is_zero()) lms.push_back(leading_monomial(g, o));
    for (const auto& h : reference.generators) {
        const Monomial& m = leading_monomial(h, o);
        if (std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); })) return false;
    }
    return true;
}

}  // namespace tategb
