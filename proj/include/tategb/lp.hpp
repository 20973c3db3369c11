#pragma once

/**
 * @file lp.hpp
 * @brief Exact rational linear programming (two-phase simplex, Bland's rule).
 *
 * Variables are free. Strict inequalities are supported for feasibility
 * questions through a bounded slack delta: every strict row a.x > b becomes
 * a.x - delta >= b, delta <= 1 is added, and delta is maximized. The open
 * system is feasible iff the optimum delta is positive.
 */

#include "tategb/arith.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace tategb {

enum class Relation { Less, LessEqual, Equal, GreaterEqual, Greater };

struct LinearConstraint {
    std::vector<Rational> coeffs;
    Relation rel;
    Rational rhs;

    bool satisfied_by(const std::vector<Rational>& x) const {
        const Rational lhs = dot(coeffs, x);
        switch (rel) {
            case Relation::Less: return lhs < rhs;
            case Relation::LessEqual: return lhs <= rhs;
            case Relation::Equal: return lhs == rhs;
            case Relation::GreaterEqual: return lhs >= rhs;
            case Relation::Greater: return lhs > rhs;
        }
        return false;
    }
};

struct LPProblem {
    std::size_t dim = 0;
    std::vector<LinearConstraint> constraints;
    std::optional<std::vector<Rational>> objective;  ///< maximized when present

    explicit LPProblem(std::size_t d) : dim(d) {}

    LPProblem& add(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
        if (coeffs.size() != dim) throw std::invalid_argument("LPProblem: constraint dimension mismatch");
        constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
        return *this;
    }

    bool has_strict() const {
        for (const auto& c : constraints)
            if (c.rel == Relation::Less || c.rel == Relation::Greater) return true;
        return false;
    }
};

enum class LPStatus { Feasible, Infeasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    std::vector<Rational> point;
    std::optional<Rational> objective_value;
};

namespace detail {

class SimplexTableau {
public:
    SimplexTableau(std::size_t rows, std::size_t cols)
        : a_(rows, std::vector<Rational>(cols + 1)), basis_(rows, 0), allowed_(cols, true), cols_(cols) {}

    Rational& at(std::size_t i, std::size_t j) { return a_[i][j]; }
    Rational& rhs(std::size_t i) { return a_[i][cols_]; }
    std::size_t rows() const { return a_.size(); }
    std::size_t cols() const { return cols_; }
    std::vector<std::size_t>& basis() { return basis_; }
    void forbid(std::size_t j) { allowed_[j] = false; }

    void pivot(std::size_t r, std::size_t c) {
        const Rational inv = a_[r][c].inverse();
        for (auto& v : a_[r]) v *= inv;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (i == r || a_[i][c].is_zero()) continue;
            const Rational f = a_[i][c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (!a_[r][j].is_zero()) a_[i][j] -= f * a_[r][j];
        }
        basis_[r] = c;
    }

    /// Maximizes cost.x from the current basic feasible solution. Returns false if unbounded.
    bool maximize(const std::vector<Rational>& cost) {
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < cols_ && !entering; ++j) {
                if (!allowed_[j] || is_basic(j)) continue;
                Rational reduced = cost[j];
                for (std::size_t i = 0; i < a_.size(); ++i)
                    if (!a_[i][j].is_zero()) reduced -= cost[basis_[i]] * a_[i][j];
                if (reduced.sign() > 0) entering = j;
            }
            if (!entering) return true;
            const std::size_t c = *entering;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < a_.size(); ++i) {
                if (a_[i][c].sign() <= 0) continue;
                Rational ratio = a_[i][cols_] / a_[i][c];
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (!leave) return false;
            pivot(*leave, c);
        }
    }

    Rational value(const std::vector<Rational>& cost) const {
        Rational v;
        for (std::size_t i = 0; i < a_.size(); ++i) v += cost[basis_[i]] * a_[i][cols_];
        return v;
    }

    std::vector<Rational> solution() const {
        std::vector<Rational> x(cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) x[basis_[i]] = a_[i][cols_];
        return x;
    }

    void drop_row(std::size_t i) {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
    }

private:
    bool is_basic(std::size_t j) const {
        for (auto b : basis_)
            if (b == j) return true;
        return false;
    }

    std::vector<std::vector<Rational>> a_;
    std::vector<std::size_t> basis_;
    std::vector<bool> allowed_;
    std::size_t cols_;
};

}  // namespace detail

inline LPResult lp_solve(const LPProblem& problem) {
    const bool strict = problem.has_strict();
    if (strict && problem.objective)
        throw std::invalid_argument("lp_solve: objectives are not supported together with strict inequalities");

    const std::size_t d = problem.dim;
    const std::size_t m = problem.constraints.size() + (strict ? 1 : 0);
    std::size_t slacks = 0;
    for (const auto& c : problem.constraints)
        if (c.rel != Relation::Equal) ++slacks;
    if (strict) ++slacks;

    // Columns: x+ (d), x- (d), delta (0/1), slacks, artificials (m).
    const std::size_t delta_col = 2 * d;
    const std::size_t slack0 = 2 * d + (strict ? 1 : 0);
    const std::size_t art0 = slack0 + slacks;
    const std::size_t ncols = art0 + m;

    detail::SimplexTableau tab(m, ncols);
    std::size_t s = slack0;
    for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
        const auto& c = problem.constraints[i];
        for (std::size_t j = 0; j < d; ++j) {
            tab.at(i, j) = c.coeffs[j];
            tab.at(i, d + j) = -c.coeffs[j];
        }
        switch (c.rel) {
            case Relation::GreaterEqual: tab.at(i, s++) = Rational(-1); break;
            case Relation::LessEqual: tab.at(i, s++) = Rational(1); break;
            case Relation::Greater:
                tab.at(i, delta_col) = Rational(-1);
                tab.at(i, s++) = Rational(-1);
                break;
            case Relation::Less:
                tab.at(i, delta_col) = Rational(1);
                tab.at(i, s++) = Rational(1);
                break;
            case Relation::Equal: break;
        }
        tab.rhs(i) = c.rhs;
    }
    if (strict) {
        const std::size_t i = m - 1;
        tab.at(i, delta_col) = Rational(1);
        tab.at(i, s++) = Rational(1);
        tab.rhs(i) = Rational(1);
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.rhs(i).sign() < 0) {
            for (std::size_t j = 0; j < ncols; ++j) tab.at(i, j) = -tab.at(i, j);
            tab.rhs(i) = -tab.rhs(i);
        }
        tab.at(i, art0 + i) = Rational(1);
        tab.basis()[i] = art0 + i;
    }

    // Phase 1: drive the artificials to zero.
    std::vector<Rational> phase1(ncols);
    for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = Rational(-1);
    tab.maximize(phase1);
    if (tab.value(phase1).sign() < 0) return {LPStatus::Infeasible, {}, std::nullopt};

    for (std::size_t i = tab.rows(); i-- > 0;) {
        if (tab.basis()[i] < art0) continue;
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < art0 && !col; ++j)
            if (!tab.at(i, j).is_zero()) col = j;
        if (col) tab.pivot(i, *col);
        else tab.drop_row(i);
    }
    for (std::size_t j = art0; j < ncols; ++j) tab.forbid(j);

    auto extract = [&](const std::vector<Rational>& y) {
        std::vector<Rational> x(d);
        for (std::size_t j = 0; j < d; ++j) x[j] = y[j] - y[d + j];
        return x;
    };

    if (strict) {
        std::vector<Rational> cost(ncols);
        cost[delta_col] = Rational(1);
        tab.maximize(cost);  // bounded by delta <= 1
        if (tab.value(cost).sign() <= 0) return {LPStatus::Infeasible, {}, std::nullopt};
        return {LPStatus::Feasible, extract(tab.solution()), std::nullopt};
    }
    if (problem.objective) {
        std::vector<Rational> cost(ncols);
        for (std::size_t j = 0; j < d; ++j) {
            cost[j] = (*problem.objective)[j];
            cost[d + j] = -(*problem.objective)[j];
        }
        if (!tab.maximize(cost)) return {LPStatus::Unbounded, {}, std::nullopt};
        auto x = extract(tab.solution());
        Rational v = dot(*problem.objective, x);
        return {LPStatus::Feasible, std::move(x), std::move(v)};
    }
    return {LPStatus::Feasible, extract(tab.solution()), std::nullopt};
}

/// A feasible point, or nullopt when the (possibly strict) system is empty.
inline std::optional<std::vector<Rational>> lp_feasible(const LPProblem& problem) {
    LPProblem p = problem;
    p.objective.reset();
    auto r = lp_solve(p);
    if (r.status != LPStatus::Feasible) return std::nullopt;
    return std::move(r.point);
}

}  // namespace tategb
