#pragma once

/**
 * @file fan.hpp
 * @brief Weighted degrees, initial forms, Gröbner cones, the Gröbner fan of a
 * homogeneous ideal and its tropical subfan.
 *
 * A weight w = (w0, w1, ..., wn) with w0 < 0 assigns the term c*X^a the degree
 * w0*val(c) + w1*a1 + ... + wn*an, i.e. the dot product of w with the lifted
 * point (val(c), a). Maximizing this degree is the same as minimizing the
 * Gauss valuation for the compatible log-radii r = -(w1/w0, ..., wn/w0).
 *
 * Cones are stored as a list of equalities h.w = 0 and strict inequalities
 * h.w > 0, with every normal scaled to a primitive integer vector. The
 * inequality list always starts with the half-space condition w0 < 0.
 */

#include "tategb/classical.hpp"
#include "tategb/groebner.hpp"
#include "tategb/lp.hpp"
#include "tategb/order.hpp"
#include "tategb/polytope.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace tategb {

class WeightVector {
public:
    explicit WeightVector(std::vector<Rational> w) : w_(std::move(w)) {
        if (w_.empty() || w_[0].sign() >= 0) throw std::invalid_argument("WeightVector: w0 must be negative");
    }

    /// (-1, r1, ..., rn), the weight whose compatible radii are r.
    static WeightVector from_radii(const LogRadii& r) {
        std::vector<Rational> w{Rational(-1)};
        w.insert(w.end(), r.begin(), r.end());
        return WeightVector(std::move(w));
    }

    const std::vector<Rational>& values() const { return w_; }
    const Rational& operator[](std::size_t i) const { return w_[i]; }
    std::size_t size() const { return w_.size(); }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<Rational> w_;
};

inline Rational deg_w(const Term& t, const WeightVector& w, const ValuedField& field) {
    if (t.coeff.is_zero()) throw std::invalid_argument("deg_w: zero term");
    if (w.size() != t.mono.size() + 1) throw std::invalid_argument("deg_w: weight dimension mismatch");
    return dot(w.values(), lift(t, field));
}

inline LogRadii compatible_radii(const WeightVector& w) {
    LogRadii r;
    r.reserve(w.size() - 1);
    for (std::size_t i = 1; i < w.size(); ++i) r.push_back(-w[i] / w[0]);
    return r;
}

/// Terms of maximal weighted degree.
inline Polynomial init_w(const Polynomial& f, const WeightVector& w, const ValuedField& field) {
    if (f.is_zero()) throw std::invalid_argument("init_w: zero polynomial");
    std::optional<Rational> best;
    for (const auto& t : f.terms()) {
        Rational d = deg_w(t, w, field);
        if (!best || d > *best) best = std::move(d);
    }
    std::vector<Term> kept;
    for (const auto& t : f.terms())
        if (deg_w(t, w, field) == *best) kept.push_back(t);
    return Polynomial(f.ring_ptr(), std::move(kept));
}

inline Polynomial init_w(const Polynomial& f, const WeightVector& w) { return init_w(f, w, f.ring().field()); }

struct GroebnerCone {
    std::vector<Point> equalities;    ///< h.w = 0
    std::vector<Point> inequalities;  ///< h.w > 0 on the relative interior; [0] is w0 < 0
    WeightVector sample;
    std::vector<Polynomial> basis;          ///< reduced basis at the sample
    std::vector<Polynomial> initial_forms;  ///< init_w(g) for g in basis
    std::size_t dimension = 0;
    bool monomial_free = false;

    bool contains(const Point& w) const {
        for (const auto& h : equalities)
            if (!dot(h, w).is_zero()) return false;
        for (const auto& h : inequalities)
            if (dot(h, w).sign() <= 0) return false;
        return true;
    }
    bool closure_contains(const Point& w) const {
        for (const auto& h : equalities)
            if (!dot(h, w).is_zero()) return false;
        for (const auto& h : inequalities)
            if (dot(h, w).sign() < 0) return false;
        return true;
    }
};

struct TropicalFan {
    std::vector<GroebnerCone> cones;
    std::size_t maximal_cones = 0;  ///< size of the Gröbner fan that was searched
};

namespace detail {

/// Scales a nonzero vector to a primitive integer vector with the same direction.
inline Point primitive(Point v) {
    mpz_class l = 1;
    for (const auto& x : v)
        if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    mpz_class g = 0;
    for (auto& x : v) {
        x *= Rational(l);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.num().get_mpz_t());
    }
    if (g != 0)
        for (auto& x : v) x /= Rational(g);
    return v;
}

inline Point primitive_line(Point v) {
    v = primitive(std::move(v));
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        if (x.sign() < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

inline std::size_t rank(std::vector<Point> rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

inline Point difference(const Point& a, const Point& b) {
    Point d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

inline std::string poly_key(const Polynomial& f) {
    std::ostringstream os;
    for (const auto& t : f.terms()) {
        os << t.coeff.to_string() << '[';
        for (std::size_t i = 0; i < t.mono.size(); ++i) os << (i ? "," : "") << t.mono[i];
        os << ']';
    }
    return os.str();
}

inline std::string cone_key(const GroebnerCone& c) {
    std::string k;
    for (const auto& g : c.basis) k += poly_key(g) + ';';
    k += '|';
    for (const auto& g : c.initial_forms) k += poly_key(g) + ';';
    return k;
}

inline void require_homogeneous(const std::vector<Polynomial>& F, const char* who) {
    if (F.empty()) throw std::invalid_argument(std::string(who) + ": empty generator list");
    for (const auto& f : F)
        if (!f.is_homogeneous()) throw std::invalid_argument(std::string(who) + ": generators must be homogeneous");
}

/// Appends an exponent-0 variable.
inline Polynomial embed(const Polynomial& f, const RingPtr& ext) {
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        auto e = t.mono.exponents();
        e.push_back(0);
        out.push_back({t.coeff, Monomial(std::move(e))});
    }
    return Polynomial(ext, std::move(out));
}

template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, Fn&& fn) {
    std::vector<std::optional<T>> slots(count);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i].emplace(fn(i));
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    slots[i].emplace(fn(i));
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, count); ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }
    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

/// The face of the closed cone where the inequalities in `tight` vanish.
struct Face {
    std::set<std::size_t> tight;  ///< every inequality vanishing on the whole face
    Point sample;                 ///< relative-interior point
};

/// Closes `tight` under implied equalities. Returns nullopt when the face
/// lies inside w0 = 0, which is outside the weight space.
inline std::optional<Face> face_of(const GroebnerCone& cone, std::set<std::size_t> tight) {
    const std::size_t dim = cone.sample.size();
    LPProblem base(dim);
    for (const auto& e : cone.equalities) base.add(e, Relation::Equal, Rational(0));
    for (std::size_t k = 0; k < cone.inequalities.size(); ++k)
        base.add(cone.inequalities[k], tight.count(k) ? Relation::Equal : Relation::GreaterEqual, Rational(0));

    LPProblem all_strict = base;
    for (std::size_t k = 0; k < cone.inequalities.size(); ++k)
        if (!tight.count(k)) all_strict.constraints[cone.equalities.size() + k].rel = Relation::Greater;
    if (auto p = lp_feasible(all_strict)) {
        if (tight.count(0)) return std::nullopt;
        return Face{std::move(tight), std::move(*p)};
    }

    Point sum(dim);
    std::set<std::size_t> implied = tight;
    for (std::size_t k = 0; k < cone.inequalities.size(); ++k) {
        if (tight.count(k)) continue;
        LPProblem probe = base;
        probe.constraints[cone.equalities.size() + k].rel = Relation::Greater;
        if (auto p = lp_feasible(probe)) {
            for (std::size_t i = 0; i < dim; ++i) sum[i] += (*p)[i];
        } else {
            implied.insert(k);
        }
    }
    if (implied.count(0)) return std::nullopt;
    return Face{std::move(implied), std::move(sum)};
}

}  // namespace detail

/// Initial forms of the reduced basis at the compatible log-radii.
inline std::vector<Polynomial> initial_ideal_gens(const std::vector<Polynomial>& F, const WeightVector& w,
                                                  TieBreak tie) {
    detail::require_homogeneous(F, "initial_ideal_gens");
    const auto& field = F.front().ring().field();
    const auto G = reduced_gb(F, TateOrder(field, compatible_radii(w), tie));
    std::vector<Polynomial> out;
    for (const auto& g : G.generators) out.push_back(init_w(g, w, field));
    return out;
}

/// The cone of weights whose initial forms on the reduced basis at w agree with those at w.
inline GroebnerCone cone_of(const std::vector<Polynomial>& F, const WeightVector& w, TieBreak tie) {
    detail::require_homogeneous(F, "cone_of");
    const auto& field = F.front().ring().field();
    if (w.size() != F.front().nvars() + 1) throw std::invalid_argument("cone_of: weight dimension mismatch");

    GroebnerCone cone{{}, {}, w, {}, {}, 0, false};
    cone.basis = reduced_gb(F, TateOrder(field, compatible_radii(w), tie)).generators;

    std::set<Point> eqs, ineqs;
    Point half(w.size());
    half[0] = Rational(-1);
    cone.inequalities.push_back(half);
    for (const auto& g : cone.basis) {
        const auto init = init_w(g, w, field);
        cone.initial_forms.push_back(init);
        const Point top = lift(init.terms().front(), field);
        for (std::size_t i = 1; i < init.size(); ++i)
            eqs.insert(detail::primitive_line(detail::difference(top, lift(init.terms()[i], field))));
        for (const auto& t : g.terms()) {
            if (!init.coeff(t.mono).is_zero()) continue;
            ineqs.insert(detail::primitive(detail::difference(top, lift(t, field))));
        }
    }
    ineqs.erase(half);
    cone.equalities.assign(eqs.begin(), eqs.end());
    cone.inequalities.insert(cone.inequalities.end(), ineqs.begin(), ineqs.end());
    cone.dimension = w.size() - detail::rank(cone.equalities);
    return cone;
}

/// True iff the ideal generated by J contains a monomial, i.e. its saturation
/// by the product of all variables is the unit ideal.
inline bool contains_monomial(const std::vector<Polynomial>& J) {
    std::vector<Polynomial> gens;
    for (const auto& g : J) {
        if (g.is_zero()) continue;
        if (g.size() == 1) return true;
        gens.push_back(g);
    }
    if (gens.empty()) return false;
    const auto& ring = gens.front().ring_ptr();
    const auto ext = ring->extended("y");
    std::vector<Polynomial> sat;
    for (const auto& g : gens) sat.push_back(detail::embed(g, ext));
    Monomial all(ext->nvars());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = 1;
    sat.push_back(Polynomial(ext, {Term{Rational(1), all}, Term{Rational(-1), Monomial(ext->nvars())}}));
    return classical::is_unit_ideal(sat);
}

namespace detail {

/// Flags monomial-free cones and replaces the sample by a point that depends
/// only on the cone's sorted constraints, scaled to w0 = -1, so that output
/// does not depend on how the cone was reached.
inline GroebnerCone finish(GroebnerCone c) {
    c.monomial_free = !contains_monomial(c.initial_forms);
    LPProblem lp(c.sample.size());
    for (const auto& h : c.equalities) lp.add(h, Relation::Equal, Rational(0));
    for (const auto& h : c.inequalities) lp.add(h, Relation::Greater, Rational(0));
    if (auto w = lp_feasible(lp)) {
        const Rational scale = -(*w)[0];
        for (auto& x : *w) x /= scale;
        c.sample = WeightVector(std::move(*w));
    }
    return c;
}

/// A full-dimensional cone: perturb r = 0 until every initial form is a single term.
inline GroebnerCone start_cone(const std::vector<Polynomial>& F, TieBreak tie) {
    const std::size_t n = F.front().nvars();
    LogRadii r(n);
    for (int attempt = 0; attempt < 32; ++attempt) {
        auto cone = cone_of(F, WeightVector::from_radii(r), tie);
        if (cone.dimension == n + 1) return cone;
        r = realize_term_order(cone.basis, r, tie);
    }
    throw std::logic_error("groebner_fan: could not find a generic starting weight");
}

inline std::size_t face_codimension(const GroebnerCone& cone, const Face& face) {
    std::vector<Point> rows = cone.equalities;
    for (auto i : face.tight) rows.push_back(cone.inequalities[i]);
    return rank(std::move(rows)) - rank(cone.equalities);
}

/// The maximal cone across the facet cut out by inequality k, or nullopt if k is not a facet.
inline std::optional<GroebnerCone> flip(const std::vector<Polynomial>& F, const GroebnerCone& cone, std::size_t k,
                                        TieBreak tie) {
    const auto face = face_of(cone, {k});
    if (!face || face_codimension(cone, *face) != 1) return std::nullopt;

    const Point& v = face->sample;
    const Point& h = cone.inequalities[k];
    // Largest step keeping every other wall of this cone strictly satisfied, halved.
    std::optional<Rational> step;
    for (std::size_t i = 0; i < cone.inequalities.size(); ++i) {
        if (i == k) continue;
        const Rational rate = dot(cone.inequalities[i], h);
        if (rate.sign() <= 0) continue;
        Rational limit = dot(cone.inequalities[i], v) / rate;
        if (!step || limit < *step) step = std::move(limit);
    }
    Rational delta = step ? *step / Rational(2) : Rational(1);

    const std::size_t full = cone.sample.size();
    for (int halvings = 0; halvings < 128; ++halvings, delta /= Rational(2)) {
        Point w = v;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= delta * h[i];
        if (w[0].sign() >= 0) continue;
        auto next = cone_of(F, WeightVector(w), tie);
        if (next.dimension == full && next.closure_contains(v)) return next;
    }
    throw std::logic_error("groebner_fan: facet flip did not land in a maximal cone");
}

}  // namespace detail

/// All maximal cones, found by flipping across facets from a generic start.
/// The seed only changes the traversal order; the result is sorted canonically.
inline std::vector<GroebnerCone> groebner_fan(const std::vector<Polynomial>& F, TieBreak tie,
                                              std::uint64_t seed = 0, unsigned jobs = 1) {
    detail::require_homogeneous(F, "groebner_fan");
    std::vector<GroebnerCone> cones{detail::start_cone(F, tie)};
    std::set<std::string> seen{detail::cone_key(cones.front())};
    std::deque<std::size_t> queue{0};
    std::mt19937_64 rng(seed);

    while (!queue.empty()) {
        const std::size_t idx = queue.front();
        queue.pop_front();
        std::vector<std::size_t> walls;
        for (std::size_t k = 1; k < cones[idx].inequalities.size(); ++k) walls.push_back(k);
        std::shuffle(walls.begin(), walls.end(), rng);
        const GroebnerCone current = cones[idx];
        auto neighbours = detail::parallel_map<std::optional<GroebnerCone>>(
            walls.size(), jobs, [&](std::size_t i) { return detail::flip(F, current, walls[i], tie); });
        for (auto& nb : neighbours) {
            if (!nb || !seen.insert(detail::cone_key(*nb)).second) continue;
            cones.push_back(std::move(*nb));
            queue.push_back(cones.size() - 1);
        }
    }
    for (auto& c : cones) c = detail::finish(std::move(c));
    std::sort(cones.begin(), cones.end(), [](const GroebnerCone& a, const GroebnerCone& b) {
        return detail::cone_key(a) < detail::cone_key(b);
    });
    return cones;
}

/// Every cone of the fan (all faces of the maximal cones) whose initial ideal has no monomial.
inline TropicalFan tropical_variety(const std::vector<Polynomial>& F, TieBreak tie, std::uint64_t seed = 0,
                                    unsigned jobs = 1) {
    const auto maximal = groebner_fan(F, tie, seed, jobs);
    TropicalFan out;
    out.maximal_cones = maximal.size();

    std::vector<Point> samples;
    for (const auto& cone : maximal) {
        std::set<std::set<std::size_t>> visited;
        std::deque<std::set<std::size_t>> todo{{}};
        visited.insert({});
        while (!todo.empty()) {
            const auto tight = todo.front();
            todo.pop_front();
            for (std::size_t k = 1; k < cone.inequalities.size(); ++k) {
                if (tight.count(k)) continue;
                auto grown = tight;
                grown.insert(k);
                const auto face = detail::face_of(cone, grown);
                if (!face || !visited.insert(face->tight).second) continue;
                samples.push_back(face->sample);
                todo.push_back(face->tight);
            }
        }
    }

    auto faces = detail::parallel_map<GroebnerCone>(samples.size(), jobs, [&](std::size_t i) {
        return detail::finish(cone_of(F, WeightVector(samples[i]), tie));
    });
    std::set<std::string> seen;
    for (auto& c : faces) {
        if (!c.monomial_free || !seen.insert(detail::cone_key(c)).second) continue;
        out.cones.push_back(std::move(c));
    }
    std::sort(out.cones.begin(), out.cones.end(), [](const GroebnerCone& a, const GroebnerCone& b) {
        return detail::cone_key(a) < detail::cone_key(b);
    });
    return out;
}

}  // namespace tategb
