#pragma once

/**
 * @file uagb.hpp
 * @brief Universal analytic Gröbner bases: the universality test and the
 * completion loop.
 *
 * Term orders on the finite set of terms of F fall into finitely many classes,
 * one per vertex of the Minkowski sum of the Newton polytopes. F is universal
 * iff it is a local basis at one representative of every class. Completion
 * homogenizes, then keeps adding the reduced basis at a failing class until
 * the test passes.
 */

#include "tategb/groebner.hpp"
#include "tategb/order.hpp"
#include "tategb/polytope.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>
#include <vector>

namespace tategb {

struct VertexCheck {
    Point vertex;
    Point direction;     ///< U = (1,u)
    LogRadii radii;      ///< r = -u
    bool passed = false;
};

struct UAGBReport {
    bool verdict = true;
    std::optional<LogRadii> witness;
    std::size_t vertex_count = 0;
    std::vector<VertexCheck> log;  ///< checks actually run, in vertex order
};

struct UAGBTrace {
    std::vector<Polynomial> generators;  ///< dehomogenized output
    std::vector<LogRadii> witnesses;     ///< one per completion round, last coordinate normalized to 0
    std::size_t max_vertex_count = 0;    ///< largest number of order classes seen by any test
};

namespace detail {

/// Runs check(i) for i in [0, count), stopping at the first failure in index
/// order. With jobs > 1 the checks run concurrently; the returned index is
/// still the smallest failing one.
template <typename Check>
std::pair<std::optional<std::size_t>, std::vector<char>> first_failure(std::size_t count, unsigned jobs,
                                                                         Check&& check) {
    std::vector<char> done(count, 0), ok(count, 0);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            done[i] = 1;
            ok[i] = check(i) ? 1 : 0;
            if (!ok[i]) return {i, std::vector<char>(done.begin(), done.begin() + static_cast<std::ptrdiff_t>(i + 1))};
        }
        return {std::nullopt, done};
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> stop_at{count};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || i > stop_at.load()) return;
            ok[i] = check(i) ? 1 : 0;
            done[i] = 1;
            if (!ok[i]) {
                std::size_t cur = stop_at.load();
                while (i < cur && !stop_at.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(count));
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    // Every index below stop_at was handed out before stop_at could drop below it.
    const std::size_t first = stop_at.load();
    if (first == count) return {std::nullopt, done};
    return {first, std::vector<char>(done.begin(), done.begin() + static_cast<std::ptrdiff_t>(first + 1))};
}

inline bool covers(const std::vector<Polynomial>& G, const std::vector<Polynomial>& reference, const TateOrder& o) {
    std::vector<Monomial> lms;
    for (const auto& g : G)
        if (!g.is_zero()) lms.push_back(leading_monomial(g, o));
    for (const auto& h : reference) {
        const Monomial& m = leading_monomial(h, o);
        if (std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); })) return false;
    }
    return true;
}

/// For homogeneous input, shifting every log-radius by the same amount does
/// not change any comparison; this puts the last coordinate at 0.
inline LogRadii normalize_last(LogRadii u) {
    if (u.empty()) return u;
    const Rational shift = u.back();
    for (auto& x : u) x -= shift;
    return u;
}

template <typename AtVertex>
UAGBReport run_test(const std::vector<Polynomial>& F, const ValuedField& field, unsigned jobs, AtVertex&& at_vertex) {
    for (const auto& f : F)
        if (f.is_zero()) throw std::invalid_argument("test_uagb: zero generator");
    const auto certs = minkowski_vertices(F, field);
    UAGBReport report;
    report.vertex_count = certs.size();
    auto [fail, done] = first_failure(certs.size(), jobs, [&](std::size_t i) { return at_vertex(certs[i].radii()); });
    for (std::size_t i = 0; i < done.size(); ++i) {
        if (!done[i]) continue;
        report.log.push_back({certs[i].vertex, certs[i].direction, certs[i].radii(), !(fail && *fail == i)});
    }
    if (fail) {
        report.verdict = false;
        report.witness = certs[*fail].radii();
    }
    return report;
}

}  // namespace detail

/// Decides whether F is a local Gröbner basis of <F> for every log-radii
/// vector. The witness is the first failing class in decreasing lexicographic
/// vertex order.
inline UAGBReport test_uagb(const std::vector<Polynomial>& F, const ValuedField& field, TieBreak tie,
                            unsigned jobs = 1) {
    return detail::run_test(F, field, jobs, [&](const LogRadii& u) { return is_local_gb(F, F, u, tie); });
}

/// One representative log-radii vector per class of term orders on the terms of F.
inline std::vector<LogRadii> term_order_classes(const std::vector<Polynomial>& F, const ValuedField& field) {
    std::vector<LogRadii> out;
    for (const auto& c : minkowski_vertices(F, field)) out.push_back(c.radii());
    return out;
}

/// Completion with full bookkeeping. On K[X,t] the test and the added bases
/// both use the homogenized order, so each round fixes the class it found.
inline UAGBTrace uagb_trace(const std::vector<Polynomial>& F, const ValuedField& field, TieBreak tie,
                            unsigned jobs = 1) {
    detail::require_nonempty_ring(F);
    const auto& ring = F.front().ring_ptr();
    const auto ext = ring->extended();
    std::vector<Polynomial> G;
    for (const auto& f : F) {
        if (f.is_zero()) throw std::invalid_argument("uagb: zero generator");
        auto h = homogenize(f, ext);
        if (std::none_of(G.begin(), G.end(), [&](const Polynomial& g) { return same_up_to_unit(g, h); }))
            G.push_back(std::move(h));
    }

    UAGBTrace trace;
    auto order_at = [&](const LogRadii& u) { return TateOrder(field, detail::normalize_last(u), tie, true); };
    for (;;) {
        const auto report = detail::run_test(G, field, jobs, [&](const LogRadii& u) {
            const auto o = order_at(u);
            return detail::covers(G, reduced_gb(G, o).generators, o);
        });
        trace.max_vertex_count = std::max(trace.max_vertex_count, report.vertex_count);
        if (report.verdict) break;
        const auto o = order_at(*report.witness);
        trace.witnesses.push_back(o.radii);
        for (auto& g : reduced_gb(G, o).generators) {
            if (std::none_of(G.begin(), G.end(), [&](const Polynomial& x) { return same_up_to_unit(x, g); }))
                G.push_back(std::move(g));
        }
    }
    std::vector<Polynomial> out;
    for (const auto& g : G) out.push_back(dehomogenize(g, ring));
    trace.generators = canonical_set(std::move(out));
    return trace;
}

/// A finite set of polynomials of <F> that is a local Gröbner basis for every log-radii vector.
inline std::vector<Polynomial> uagb(const std::vector<Polynomial>& F, const ValuedField& field, TieBreak tie,
                                    unsigned jobs = 1) {
    return uagb_trace(F, field, tie, jobs).generators;
}

}  // namespace tategb
