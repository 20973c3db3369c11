// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include "../common.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace testkit;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string join(const std::vector<Polynomial>& fs) {
    std::string s;
    for (const auto& f : fs) s += (s.empty() ? "" : ", ") + to_string(f);
    return "{" + s + "}";
}

std::string join(const LogRadii& r) {
    std::string s;
    for (const auto& x : r) s += (s.empty() ? "" : ",") + x.to_string();
    return "(" + s + ")";
}

const std::vector<std::string> kPair = {"x - 7*y", "y - 7*y^2"};
const std::vector<std::string> kExpected = {"x - 7*y", "y - 7*y^2", "x^2 - x"};

std::vector<Polynomial> completed_pair() {
    const auto R = ring({"x", "y"}, 7);
    return uagb(polys(R, kPair), R->field(), TieBreak::Grevlex);
}

Outcome criterion_1() {
    Outcome out;
    const auto R = ring({"x", "y"}, 7);
    const auto t0 = std::chrono::steady_clock::now();
    const auto G = uagb(polys(R, kPair), R->field(), TieBreak::Grevlex);
    const double secs = seconds_since(t0);
    const auto expected = polys(R, kExpected);
    for (const auto& e : expected)
        if (std::none_of(G.begin(), G.end(), [&](const Polynomial& g) { return same_up_to_unit(g, e); }))
            out.fail("missing " + to_string(e) + " in " + join(G));
    // Anything beyond the three must have its leading monomial covered by them in every order class.
    for (const auto& g : G) {
        if (std::any_of(expected.begin(), expected.end(), [&](const Polynomial& e) { return same_up_to_unit(g, e); }))
            continue;
        for (const auto& r : term_order_classes(G, R->field())) {
            const TateOrder o(R->field(), r, TieBreak::Grevlex);
            const Monomial lm = leading_monomial(g, o);
            if (std::none_of(expected.begin(), expected.end(),
                             [&](const Polynomial& e) { return leading_monomial(e, o).divides(lm); }))
                out.fail("extra element " + to_string(g) + " not covered at " + join(r));
        }
    }
    if (secs >= 5.0) out.fail("runtime " + std::to_string(secs) + " s");
    if (out.ok) out.detail = join(G) + " in " + std::to_string(secs) + " s";
    return out;
}

Outcome criterion_2() {
    Outcome out;
    const auto R = ring({"x", "y", "t"}, 7);
    const auto G = polys(R, {"x - 7*y", "y*t - 7*y^2"});
    const auto rep = test_uagb(G, R->field(), TieBreak::Grevlex);
    if (rep.verdict || !rep.witness) {
        out.fail("verdict was true");
        return out;
    }
    const LogRadii& w = *rep.witness;
    const TateOrder at_witness(R->field(), w, TieBreak::Grevlex);
    const TateOrder at_reference(R->field(), radii({0, 2, 0}), TieBreak::Grevlex);
    if (!same_lt_set(G, at_witness, at_reference)) out.fail("witness " + join(w) + " is in a different class");
    if (is_local_gb(G, G, w, TieBreak::Grevlex)) out.fail("basis passes at the reported witness");
    const auto x2 = poly(R, "x^2 - x*t");
    for (bool hom : {false, true}) {
        const auto basis = reduced_gb(G, TateOrder(R->field(), w, TieBreak::Grevlex, hom)).generators;
        if (std::none_of(basis.begin(), basis.end(), [&](const Polynomial& g) { return same_up_to_unit(g, x2); }))
            out.fail("reduced basis " + join(basis) + " lacks x^2 - x*t");
    }
    if (out.ok) out.detail = "witness " + join(w) + " of " + std::to_string(rep.vertex_count) + " classes";
    return out;
}

Outcome criterion_3() {
    Outcome out;
    const auto R = ring({"x", "y"}, 7);
    const auto t0 = std::chrono::steady_clock::now();
    const auto F = polys(R, kPair);
    const auto G = completed_pair();
    Rng rng(20240603);
    for (int i = 0; i < 20; ++i) {
        const auto r = random_radii(rng, 2, 4, 5);
        if (!is_local_gb(G, F, r, TieBreak::Grevlex)) out.fail("not a local basis at " + join(r));
    }
    const double secs = seconds_since(t0);
    if (secs >= 30.0) out.fail("runtime " + std::to_string(secs) + " s");
    if (out.ok) out.detail = "20 radii in " + std::to_string(secs) + " s";
    return out;
}

Outcome criterion_4() {
    Outcome out;
    const auto R = ring({"x", "y", "t"}, 7);
    const auto base = R->truncated();
    Rng rng(4);
    std::size_t checks = 0;
    for (int i = 0; i < 200; ++i) {
        const auto h = random_poly(rng, R, {5, 4, 0, 3, true});
        for (int k = 0; k < 5; ++k) {
            const auto r = random_radii(rng, 2);
            for (TieBreak tie : {TieBreak::Grevlex, TieBreak::Lex, TieBreak::Grlex}) {
                const auto hom = TateOrder::homogenized_from(R->field(), r, tie);
                const TateOrder plain(R->field(), r, tie);
                const Polynomial lt_h = dehomogenize(Polynomial::from_term(R, leading_term(h, hom)), base);
                const Polynomial lt_d = Polynomial::from_term(base, leading_term(dehomogenize(h, base), plain));
                const auto f = dehomogenize(h, base);
                const Polynomial lt_f = Polynomial::from_term(base, leading_term(f, plain));
                const Polynomial lt_fh =
                    dehomogenize(Polynomial::from_term(R, leading_term(homogenize(f, R), hom)), base);
                ++checks;
                if (!(lt_h == lt_d) || !(lt_f == lt_fh))
                    out.fail("h = " + to_string(h) + " at " + join(r) + " tie " + to_string(tie));
            }
        }
    }
    if (out.ok) out.detail = std::to_string(checks) + " comparisons";
    return out;
}

Outcome criterion_5() {
    Outcome out;
    Rng rng(5);
    std::size_t total = 0, largest = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
        std::vector<std::string> names{"x", "y", "z"};
        names.resize(n);
        const auto R = ring(names, uniform(rng, 0, 1) ? 2 : 3);
        std::vector<Polynomial> F;
        const long k = uniform(rng, 1, 3);
        for (long i = 0; i < k; ++i) F.push_back(random_poly(rng, R, {4, 3, 0, 2, false}));
        const auto certs = minkowski_vertices(F, R->field());
        const std::size_t expected = brute_force_vertex_count(F);
        total += certs.size();
        largest = std::max(largest, certs.size());
        if (certs.size() != expected) {
            out.fail("trial " + std::to_string(trial) + ": " + std::to_string(certs.size()) + " vertices, brute force " +
                     std::to_string(expected) + " for " + join(F));
            continue;
        }
        std::set<std::vector<std::string>> classes;
        for (const auto& c : certs) {
            std::vector<std::string> key;
            for (const auto& t : lt_set(F, TateOrder(R->field(), c.radii()))) key.push_back(to_string(t, *R));
            classes.insert(key);
        }
        if (classes.size() != certs.size()) out.fail("trial " + std::to_string(trial) + ": repeated lt_set");
    }
    if (out.ok)
        out.detail = "50 systems, " + std::to_string(total) + " vertices, largest " + std::to_string(largest);
    return out;
}

Outcome criterion_6() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const auto R = ring({"x", "y", "z"}, 5);
    const auto F = polys(R, {"x + y + z"});
    const auto trop = tropical_variety(F, TieBreak::Grevlex);
    auto attained_twice = [](const Point& w) {
        const Rational top = std::max({w[1], w[2], w[3]});
        return (w[1] == top) + (w[2] == top) + (w[3] == top) >= 2;
    };
    for (const auto& c : trop.cones)
        if (!attained_twice(c.sample.values())) out.fail("cone sample " + join(c.sample.values()) + " is not tropical");
    std::size_t hits = 0;
    for (long a = -4; a <= 5; ++a)
        for (long b = -4; b <= 5; ++b)
            for (long c = -4; c <= 5; ++c) {
                const Point w{Rational(-1), Rational(a), Rational(b), Rational(c)};
                const bool by_fan =
                    std::any_of(trop.cones.begin(), trop.cones.end(), [&](const GroebnerCone& k) { return k.contains(w); });
                const auto init = init_w(F.front(), WeightVector(w));
                const bool direct = init.size() >= 2;
                if (direct != attained_twice(w)) out.fail("init_w disagrees with the max rule at " + join(w));
                if (by_fan != direct) out.fail("misclassified " + join(w));
                hits += direct;
            }
    const double secs = seconds_since(t0);
    if (secs >= 60.0) out.fail("runtime " + std::to_string(secs) + " s");
    if (out.ok)
        out.detail = std::to_string(trop.cones.size()) + " cones, " + std::to_string(hits) + "/1000 tropical grid points, " +
                     std::to_string(secs) + " s";
    return out;
}

/// Points in the interior of a full-dimensional cone near its sample.
std::vector<Point> interior_samples(const GroebnerCone& c, Rng& rng, std::size_t count) {
    std::vector<Point> out;
    Rational eps(1, 2);
    std::size_t misses = 0;
    while (out.size() < count) {
        Point w = c.sample.values();
        for (std::size_t i = 1; i < w.size(); ++i) w[i] += eps * Rational(uniform(rng, -20, 20), 20);
        if (c.contains(w)) {
            out.push_back(std::move(w));
        } else if (++misses % 16 == 0) {
            eps /= Rational(2);
        }
    }
    return out;
}

Outcome criterion_7() {
    Outcome out;
    const auto R = ring({"x", "y", "z"}, 7);
    const auto F = polys(R, {"x^2 - 7*y*z", "y^2 - z^2"});
    std::set<std::size_t> counts;
    std::set<std::set<std::string>> shapes;
    Rng rng(7);
    std::size_t tested = 0;
    for (std::uint64_t seed : {0ULL, 1ULL, 2ULL}) {
        const auto cones = groebner_fan(F, TieBreak::Grevlex, seed);
        counts.insert(cones.size());
        std::set<std::string> shape;
        for (const auto& c : cones) {
            shape.insert(join(c.initial_forms));
            if (c.dimension != 4) out.fail("cone of dimension " + std::to_string(c.dimension));
            for (const auto& w : interior_samples(c, rng, 10)) {
                const WeightVector wv(w);
                for (std::size_t i = 0; i < c.basis.size(); ++i)
                    if (!(init_w(c.basis[i], wv) == c.initial_forms[i]))
                        out.fail("initial form of " + to_string(c.basis[i]) + " moves at " + join(w));
                const TateOrder o(R->field(), compatible_radii(wv), TieBreak::Grevlex);
                if (!is_homogeneous_gb_oracle(c.basis, F, o, 5)) out.fail("basis is not a GB at " + join(w));
                ++tested;
            }
        }
        shapes.insert(shape);
    }
    if (counts.size() != 1) out.fail("maximal cone count depends on the seed");
    if (shapes.size() != 1) out.fail("cone set depends on the seed");
    if (out.ok) out.detail = std::to_string(*counts.begin()) + " maximal cones, " + std::to_string(tested) + " samples";
    return out;
}

Outcome criterion_8() {
    Outcome out;
    Rng rng(8);
    const auto R = ring({"x", "y"}, 7);
    std::size_t exact = 0, attempts = 0;
    while (exact < 100 && attempts < 2000) {
        ++attempts;
        const LogRadii r{Rational(uniform(rng, 4, 6)), Rational(uniform(rng, 4, 6))};
        const LogRadii s{r[0] + Rational(uniform(rng, 0, 2)), r[1] + Rational(uniform(rng, 0, 2))};
        const PolyhedralDomain P({s});
        const auto f = random_poly(rng, R, {4, 4, 0, 3, false});
        std::vector<Polynomial> G;
        for (long i = uniform(rng, 1, 3); i > 0; --i) G.push_back(random_poly(rng, R, {3, 2, 0, 3, false}));
        const auto res = mora_wnf(f, G, P, r, Rational(60));
        if (res.monotonicity_violations != 0) out.fail("monotonicity monitor fired on " + to_string(f));
        if (res.status != WNFStatus::Exact) continue;
        ++exact;
        Polynomial rhs = res.remainder;
        for (std::size_t i = 0; i < G.size(); ++i) rhs = rhs + res.cofactors[i] * G[i];
        if (!(res.mu * f == rhs)) out.fail("identity fails for " + to_string(f));
        const TateOrder o(R->field(), r);
        if (!leading_monomial(res.mu, o).is_one()) out.fail("mu has a non-constant leading monomial");
        const Term lt_f = leading_term(f, o);
        for (std::size_t i = 0; i < G.size(); ++i) {
            const auto ug = res.cofactors[i] * G[i];
            if (!ug.is_zero() && compare(leading_term(ug, o), lt_f, o) > 0)
                out.fail("cofactor term exceeds LT(f) for " + to_string(f));
        }
    }
    if (exact < 100) out.fail("only " + std::to_string(exact) + " terminating instances");

    const auto S = ring({"x"}, 7);
    const auto div = mora_wnf(poly(S, "x^2"), polys(S, {"x - 7*x^2"}), PolyhedralDomain({radii({0})}), radii({-1}),
                              Rational(50));
    if (div.status != WNFStatus::ConvergedToZeroAtCap) out.fail("divergent instance reported exact");
    if (!div.remainder.is_zero() && !(val_at(div.remainder, radii({-1})) > Rational(50)))
        out.fail("divergent remainder not past the cap");
    if (out.ok)
        out.detail = "100 exact of " + std::to_string(attempts) + " drawn; divergent case stopped after " +
                     std::to_string(div.steps) + " steps";
    return out;
}

Outcome criterion_9() {
    Outcome out;
    Rng rng(9);
    std::size_t samples = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const bool two_vars = trial % 2 == 1;
        const auto R = two_vars ? ring({"x", "y"}, 3) : ring({"x"}, 3);
        const std::size_t n = R->nvars();
        const auto f = random_poly(rng, R, {4, 4, 0, 3, false});
        std::vector<LogRadii> verts{random_radii(rng, n, 3, 2)};
        if (uniform(rng, 0, 1) && n == 2) {
            // a second vertex that neither dominates nor is dominated
            LogRadii v = verts[0];
            v[0] += Rational(uniform(rng, 1, 3));
            v[1] -= Rational(uniform(rng, 1, 3));
            verts.push_back(v);
        }
        const PolyhedralDomain P(verts);
        const auto kept = terms_p_principal(f, P);
        for (int k = 0; k < 50; ++k) {
            const Rational lambda(uniform(rng, 0, 8), 8);
            LogRadii r(n);
            for (std::size_t i = 0; i < n; ++i) {
                const Rational top =
                    verts.size() == 1 ? verts[0][i] : lambda * verts[0][i] + (Rational(1) - lambda) * verts[1][i];
                r[i] = top - Rational(uniform(rng, 0, 12), 4);
            }
            if (!domain_member(r, P)) out.fail("sampled radius " + join(r) + " is outside the domain");
            for (TieBreak tie : {TieBreak::Grevlex, TieBreak::Lex}) {
                const Term lt = leading_term(f, TateOrder(R->field(), r, tie));
                if (std::find(kept.begin(), kept.end(), lt) == kept.end())
                    out.fail("LT " + to_string(lt, *R) + " of " + to_string(f) + " at " + join(r) + " missing");
            }
            ++samples;
        }
    }
    if (out.ok) out.detail = std::to_string(samples) + " sampled radii";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"uagb reproduces {x-7y, y-7y^2, x^2-x}", criterion_1},
        {"homogenized pair fails at the (0,2,0) class", criterion_2},
        {"completed basis is local at 20 random radii", criterion_3},
        {"leading terms commute with dehomogenization", criterion_4},
        {"Minkowski vertices match brute force", criterion_5},
        {"tropical hypersurface of x+y+z", criterion_6},
        {"Groebner cones are stable and seed-independent", criterion_7},
        {"weak normal form contract", criterion_8},
        {"principal terms contain every leading term", criterion_9},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failures += !o.ok;
        std::printf("%s criterion %zu: %s -- %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
