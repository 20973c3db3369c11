#pragma once

// Shared fixtures for the test suites: ring shorthands, seeded random
// generators, and oracles that avoid the library's own algorithms.

#include "tategb/tategb.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace tategb {

// Readable failure messages for the test framework.
inline void PrintTo(const Polynomial& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const Term& t, std::ostream* os) {
    *os << t.coeff << "*[";
    for (std::size_t i = 0; i < t.mono.size(); ++i) *os << (i ? "," : "") << t.mono[i];
    *os << "]";
}
inline void PrintTo(const Monomial& m, std::ostream* os) { PrintTo(Term{Rational(1), m}, os); }

}  // namespace tategb

namespace testkit {

using namespace tategb;
using Rng = std::mt19937_64;

inline RingPtr ring(std::vector<std::string> names, long p) { return Ring::make(std::move(names), ValuedField(p)); }

inline Polynomial poly(const RingPtr& R, const std::string& src) { return parse_polynomial(src, R); }

inline std::vector<Polynomial> polys(const RingPtr& R, const std::vector<std::string>& srcs) {
    std::vector<Polynomial> out;
    for (const auto& s : srcs) out.push_back(poly(R, s));
    return out;
}

inline LogRadii radii(std::initializer_list<long> xs) {
    LogRadii r;
    for (long x : xs) r.emplace_back(x);
    return r;
}

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// A unit times p^v with v drawn from [vmin, vmax].
inline Rational random_coefficient(Rng& rng, long p, long vmin, long vmax) {
    long num = 0;
    while (num == 0 || num % p == 0) num = uniform(rng, -9, 9);
    long den = 0;
    while (den == 0 || den % p == 0) den = uniform(rng, 1, 4);
    Rational c(num, den);
    const long v = uniform(rng, vmin, vmax);
    Rational pp(1);
    for (long i = 0; i < (v < 0 ? -v : v); ++i) pp *= Rational(p);
    return v < 0 ? c / pp : c * pp;
}

inline Monomial random_monomial(Rng& rng, std::size_t n, unsigned max_degree) {
    Monomial m(n);
    unsigned budget = static_cast<unsigned>(uniform(rng, 0, max_degree));
    for (unsigned k = 0; k < budget; ++k) m[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1))] += 1;
    return m;
}

/// A monomial of exact total degree d.
inline Monomial random_monomial_of_degree(Rng& rng, std::size_t n, unsigned d) {
    Monomial m(n);
    for (unsigned k = 0; k < d; ++k) m[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1))] += 1;
    return m;
}

struct PolyShape {
    std::size_t max_terms = 4;
    unsigned max_degree = 3;
    long vmin = 0, vmax = 2;
    bool homogeneous = false;
};

inline Polynomial random_poly(Rng& rng, const RingPtr& R, const PolyShape& shape) {
    const long p = R->field().prime();
    for (;;) {
        const std::size_t k = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(shape.max_terms)));
        const unsigned d = static_cast<unsigned>(uniform(rng, shape.homogeneous ? 1 : 0, shape.max_degree));
        std::vector<Term> ts;
        for (std::size_t i = 0; i < k; ++i) {
            Monomial m = shape.homogeneous ? random_monomial_of_degree(rng, R->nvars(), d)
                                          : random_monomial(rng, R->nvars(), shape.max_degree);
            ts.push_back({random_coefficient(rng, p, shape.vmin, shape.vmax), std::move(m)});
        }
        Polynomial f(R, std::move(ts));
        if (!f.is_zero()) return f;
    }
}

/// Entries a/b with |a| <= span*den and den in [1, max_den].
inline LogRadii random_radii(Rng& rng, std::size_t n, long span = 3, long max_den = 3) {
    LogRadii r;
    for (std::size_t i = 0; i < n; ++i) {
        const long den = uniform(rng, 1, max_den);
        r.emplace_back(uniform(rng, -span * den, span * den), den);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Linear algebra oracle for homogeneous ideals.

inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
    std::vector<Monomial> out;
    Monomial m(n);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == n) {
            m[i] = left;
            out.push_back(m);
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            m[i] = e;
            rec(i + 1, left - e);
        }
    };
    if (n == 0) return d == 0 ? std::vector<Monomial>{m} : out;
    rec(0, d);
    return out;
}

/// Rank of a set of polynomials seen as coefficient vectors.
inline std::size_t rank_of(const std::vector<Polynomial>& rows) {
    std::map<Monomial, std::size_t, StorageOrder> column;
    for (const auto& f : rows)
        for (const auto& t : f.terms()) column.emplace(t.mono, 0);
    std::size_t c = 0;
    for (auto& [m, idx] : column) idx = c++;
    std::vector<std::vector<Rational>> mat;
    for (const auto& f : rows) {
        std::vector<Rational> row(column.size());
        for (const auto& t : f.terms()) row[column[t.mono]] = t.coeff;
        mat.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < column.size() && rank < mat.size(); ++col) {
        std::size_t piv = rank;
        while (piv < mat.size() && mat[piv][col].is_zero()) ++piv;
        if (piv == mat.size()) continue;
        std::swap(mat[piv], mat[rank]);
        for (std::size_t i = 0; i < mat.size(); ++i) {
            if (i == rank || mat[i][col].is_zero()) continue;
            const Rational f = mat[i][col] / mat[rank][col];
            for (std::size_t k = col; k < column.size(); ++k) mat[i][k] -= f * mat[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// All products m*f of total degree d, for homogeneous f in F.
inline std::vector<Polynomial> degree_slice(const std::vector<Polynomial>& F, unsigned d) {
    std::vector<Polynomial> out;
    for (const auto& f : F) {
        if (f.is_zero() || f.total_degree() > d) continue;
        for (const auto& m : monomials_of_degree(f.nvars(), static_cast<unsigned>(d - f.total_degree())))
            out.push_back(Term{Rational(1), m} * f);
    }
    return out;
}

inline bool in_homogeneous_ideal(const Polynomial& g, const std::vector<Polynomial>& F) {
    if (g.is_zero()) return true;
    auto slice = degree_slice(F, static_cast<unsigned>(g.total_degree()));
    const std::size_t before = rank_of(slice);
    slice.push_back(g);
    return rank_of(slice) == before;
}

/// G lies in <F> and, in every degree up to max_degree, the monomials divisible
/// by a leading monomial of G are as many as dim <F>_d. Since distinct leading
/// monomials are linearly independent, this pins LM(<F>)_d to <LM(G)>_d.
inline bool is_homogeneous_gb_oracle(const std::vector<Polynomial>& G, const std::vector<Polynomial>& F,
                                     const TateOrder& o, unsigned max_degree) {
    for (const auto& g : G)
        if (!g.is_homogeneous() || !in_homogeneous_ideal(g, F)) return false;
    std::vector<Monomial> lms;
    for (const auto& g : G) lms.push_back(leading_monomial(g, o));
    const std::size_t n = F.front().nvars();
    for (unsigned d = 0; d <= max_degree; ++d) {
        std::size_t covered = 0;
        for (const auto& m : monomials_of_degree(n, d))
            if (std::any_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); })) ++covered;
        if (covered != rank_of(degree_slice(F, d))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin feasibility for small systems a.x (< or <=) b.

struct Ineq {
    std::vector<Rational> a;
    Rational b;
    bool strict = true;
};

inline bool fm_feasible(std::vector<Ineq> sys, std::size_t dim) {
    for (std::size_t v = dim; v-- > 0;) {
        std::vector<Ineq> pos, neg, rest;
        for (auto& q : sys) {
            const int s = q.a[v].sign();
            (s > 0 ? pos : s < 0 ? neg : rest).push_back(std::move(q));
        }
        for (const auto& P : pos)
            for (const auto& N : neg) {
                const Rational lp = P.a[v], ln = -N.a[v];
                Ineq c{std::vector<Rational>(dim), P.b * ln + N.b * lp, P.strict || N.strict};
                for (std::size_t k = 0; k < dim; ++k) c.a[k] = P.a[k] * ln + N.a[k] * lp;
                c.a[v] = Rational(0);
                rest.push_back(std::move(c));
            }
        sys = std::move(rest);
    }
    for (const auto& q : sys) {
        if (q.strict ? !(Rational(0) < q.b) : !(Rational(0) <= q.b)) return false;
    }
    return true;
}

/// Number of index vectors j (one term per polynomial) whose open cone of
/// directions u, making every chosen lifted point the unique minimizer of
/// val(c) + u.a in its polynomial, is nonempty.
inline std::size_t brute_force_vertex_count(const std::vector<Polynomial>& F) {
    const std::size_t n = F.front().nvars();
    const auto& field = F.front().ring().field();
    std::vector<std::size_t> idx(F.size(), 0);
    std::size_t count = 0;
    for (;;) {
        std::vector<Ineq> sys;
        for (std::size_t i = 0; i < F.size(); ++i) {
            const auto& ts = F[i].terms();
            const Term& tj = ts[idx[i]];
            for (std::size_t l = 0; l < ts.size(); ++l) {
                if (l == idx[i]) continue;
                // val_j + u.a_j < val_l + u.a_l
                Ineq q{std::vector<Rational>(n), Rational(valuation(ts[l].coeff, field) - valuation(tj.coeff, field)), true};
                for (std::size_t k = 0; k < n; ++k)
                    q.a[k] = Rational(static_cast<long>(tj.mono[k])) - Rational(static_cast<long>(ts[l].mono[k]));
                sys.push_back(std::move(q));
            }
        }
        if (fm_feasible(std::move(sys), n)) ++count;
        std::size_t k = 0;
        while (k < F.size() && ++idx[k] == F[k].size()) idx[k++] = 0;
        if (k == F.size()) break;
    }
    return count;
}

}  // namespace testkit
