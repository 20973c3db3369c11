#pragma once

/**
 * @file polytope.hpp
 * @brief Valued Newton polytopes and their Minkowski-sum vertices.
 *
 * A term c*X^a lifts to the point (val(c), a) in Q^{1+n}. The Newton polytope
 * of f is the hull of its lifted terms plus the ray (1,0,...,0). A vertex of
 * the Minkowski sum of several such polytopes is a sum of one lifted point per
 * factor, and it is a vertex exactly when some direction U = (1,u) makes every
 * chosen point the strict unique minimizer within its own factor.
 */

#include "tategb/arith.hpp"
#include "tategb/lp.hpp"
#include "tategb/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tategb {

using Point = std::vector<Rational>;

struct NewtonPolytope {
    std::vector<Point> points;  ///< one lifted point per term, in the polynomial's storage order
    std::vector<Term> terms;    ///< the term each point came from

    std::size_t ambient_dim() const { return points.empty() ? 0 : points.front().size(); }
};

struct VertexCertificate {
    Point vertex;                        ///< sum of the selected lifted points
    Point direction;                     ///< U = (1, u)
    std::vector<std::size_t> selection;  ///< index of the chosen term in each factor

    /// The log-radii r = -u at which the selected terms lead: U.(val(c), a) = val(c) - r.a.
    std::vector<Rational> radii() const {
        std::vector<Rational> r;
        for (auto it = direction.begin() + 1; it != direction.end(); ++it) r.push_back(-*it);
        return r;
    }
};

inline Point lift(const Term& t, const ValuedField& field) {
    Point p;
    p.reserve(t.mono.size() + 1);
    p.emplace_back(valuation(t.coeff, field));
    for (std::size_t i = 0; i < t.mono.size(); ++i) p.emplace_back(static_cast<long>(t.mono[i]));
    return p;
}

inline NewtonPolytope newton_polytope(const Polynomial& f, const ValuedField& field) {
    if (f.is_zero()) throw std::invalid_argument("newton_polytope: zero polynomial");
    NewtonPolytope np;
    for (const auto& t : f.terms()) {
        np.points.push_back(lift(t, field));
        np.terms.push_back(t);
    }
    return np;
}

namespace detail {

/// Rows u.(a_l - a_j) > val_j - val_l: the lifted point j of this factor is
/// the strict minimizer of U.q among the factor's points.
inline void add_normal_cone(LPProblem& lp, const NewtonPolytope& np, std::size_t j) {
    const auto& pj = np.points[j];
    const std::size_t n = pj.size() - 1;
    for (std::size_t l = 0; l < np.points.size(); ++l) {
        if (l == j) continue;
        const auto& pl = np.points[l];
        std::vector<Rational> row(n);
        for (std::size_t k = 0; k < n; ++k) row[k] = pl[k + 1] - pj[k + 1];
        lp.add(std::move(row), Relation::Greater, pj[0] - pl[0]);
    }
}

inline void enumerate_vertices(const std::vector<NewtonPolytope>& factors, std::size_t depth, const LPProblem& lp,
                               std::vector<std::size_t>& selection, std::vector<VertexCertificate>& out) {
    if (depth == factors.size()) {
        const auto u = lp_feasible(lp);
        if (!u) return;
        VertexCertificate cert;
        cert.direction.emplace_back(1);
        cert.direction.insert(cert.direction.end(), u->begin(), u->end());
        cert.vertex.assign(factors.front().ambient_dim(), Rational(0));
        for (std::size_t i = 0; i < factors.size(); ++i)
            for (std::size_t k = 0; k < cert.vertex.size(); ++k) cert.vertex[k] += factors[i].points[selection[i]][k];
        cert.selection = selection;
        out.push_back(std::move(cert));
        return;
    }
    for (std::size_t j = 0; j < factors[depth].points.size(); ++j) {
        LPProblem next = lp;
        add_normal_cone(next, factors[depth], j);
        if (depth + 1 < factors.size() && !lp_feasible(next)) continue;  // empty partial cone
        selection.push_back(j);
        enumerate_vertices(factors, depth + 1, next, selection, out);
        selection.pop_back();
    }
}

}  // namespace detail

/// All vertices of the Minkowski sum of the Newton polytopes of F, each with a
/// certifying direction, in decreasing lexicographic order of the vertex.
inline std::vector<VertexCertificate> minkowski_vertices(const std::vector<Polynomial>& F, const ValuedField& field) {
    if (F.empty()) return {};
    std::vector<NewtonPolytope> factors;
    factors.reserve(F.size());
    for (const auto& f : F) factors.push_back(newton_polytope(f, field));
    const std::size_t n = F.front().nvars();
    for (const auto& f : F)
        if (f.nvars() != n) throw std::invalid_argument("minkowski_vertices: mixed rings");

    std::vector<VertexCertificate> out;
    std::vector<std::size_t> selection;
    detail::enumerate_vertices(factors, 0, LPProblem(n), selection, out);
    std::sort(out.begin(), out.end(),
              [](const VertexCertificate& a, const VertexCertificate& b) { return b.vertex < a.vertex; });
    return out;
}

/// Checks U.vertex < U.q for every other sum of lifted points by evaluating each factor separately.
inline bool certificate_valid(const VertexCertificate& cert, const std::vector<Polynomial>& F,
                              const ValuedField& field) {
    if (cert.selection.size() != F.size()) return false;
    for (std::size_t i = 0; i < F.size(); ++i) {
        const auto np = newton_polytope(F[i], field);
        const Rational best = dot(cert.direction, np.points[cert.selection[i]]);
        for (std::size_t l = 0; l < np.points.size(); ++l)
            if (l != cert.selection[i] && !(best < dot(cert.direction, np.points[l]))) return false;
    }
    return true;
}

}  // namespace tategb
