#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "glauber/influences.hpp"

namespace glauber {

/// Exact monotonicity check over all covering pairs (x, x with one spin
/// raised). Binary alphabets only.
inline bool is_monotone(const StateSpace& space, const Eigen::VectorXd& f) {
    if (space.q() != 2) throw std::invalid_argument("is_monotone: binary alphabets only");
    for (std::int64_t x = 0; x < space.size(); ++x)
        for (int i = 0; i < space.n(); ++i)
            if (space.digit(x, i) == 0 && f[x] > f[space.with_digit(x, i, 1)]) return false;
    return true;
}

/// g(x) = f(x with the coordinates in S overwritten by the given symbol).
inline Observable pin(const StateSpace& space, const Eigen::VectorXd& f, const std::vector<int>& S,
                      int symbol) {
    if (symbol < 0 || symbol >= space.q()) throw std::invalid_argument("pin: symbol out of range");
    for (int i : S)
        if (i < 0 || i >= space.n()) throw std::invalid_argument("pin: coordinate out of range");
    Eigen::VectorXd g(space.size());
    for (std::int64_t x = 0; x < space.size(); ++x) {
        std::int64_t y = x;
        for (int i : S) y = space.with_digit(y, i, symbol);
        g[x] = f[y];
    }
    return {std::move(g)};
}

/// E_{X~nu}[ f(X with X_S overwritten by the top symbol) ]: the measure is
/// unchanged, only the argument is rewritten (fixing, not conditioning).
inline double pinned_expectation(const GibbsMeasure& mu, const Eigen::VectorXd& f,
                                 const std::vector<int>& S) {
    return mean(mu, pin(mu.space(), f, S, mu.q() - 1).values);
}

struct CoalitionStep {
    int coordinate = -1;
    double p_after = 0.0;      // Pr(f_{t+1} = 1)
    double influence = 0.0;    // I_{k_t}(f_t) of the chosen coordinate
    double gain_bound = 0.0;   // I_{k_t}(f_t) / (1 + b)
};

struct CoalitionResult {
    std::vector<int> S;
    std::vector<double> trajectory;  // p_0, p_1, ..., nondecreasing
    std::vector<CoalitionStep> steps;
    double epsilon = 0.0;
    bool succeeded = false;
    double min_gain_slack = std::numeric_limits<double>::infinity();  // of p_{t+1}-p_t >= I/(1+b)
    double implied_alpha = std::numeric_limits<double>::infinity();   // min_t I n / (Var(f_t) log n)
    double budget_bound = std::numeric_limits<double>::infinity();    // 4(1+b)log(1/2eps)/alpha * n/log n
};

/// Greedy coalition for a monotone boolean f on {-1,+1}^n with
/// E_nu[f] >= epsilon: repeatedly pin the currently most influential
/// coordinate to +1 until Pr(f_t = 1) >= 1 - epsilon. Influences of the
/// pinned functions are always taken under the unchanged measure.
inline CoalitionResult greedy_coalition(const GibbsMeasure& mu, const Eigen::VectorXd& f, double epsilon) {
    if (mu.q() != 2) throw std::invalid_argument("greedy_coalition: binary alphabets only");
    if (!(epsilon > 0.0 && epsilon < 0.5))
        throw std::invalid_argument("greedy_coalition: epsilon must lie in (0, 1/2)");
    if (!is_monotone(mu.space(), f)) throw std::invalid_argument("greedy_coalition: f must be monotone");
    for (Eigen::Index x = 0; x < f.size(); ++x)
        if (f[x] != 0.0 && f[x] != 1.0)
            throw std::invalid_argument("greedy_coalition: f must be boolean");

    CoalitionResult res;
    res.epsilon = epsilon;
    Eigen::VectorXd ft = f;
    double p = mean(mu, ft);
    if (p < epsilon) throw std::invalid_argument("greedy_coalition: E[f] < epsilon");
    res.trajectory.push_back(p);

    const int n = mu.n();
    const double b = mu.pinned_ratio_bound();
    const double logn = std::log(static_cast<double>(n));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    while (p < 1.0 - epsilon) {
        if (static_cast<int>(res.S.size()) >= n)
            throw NumericalError("greedy_coalition: no progress after pinning every coordinate");
        int best = -1;
        double best_inf = -1.0;
        for (int i = 0; i < n; ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            const double I = influence(mu, ft, i);
            if (I > best_inf) {  // strict: ties stay at the lowest index
                best_inf = I;
                best = i;
            }
        }
        const double var_ft = variance(mu, ft);
        if (n >= 2 && var_ft > 0.0 && logn > 0.0)
            res.implied_alpha = std::min(res.implied_alpha, best_inf * n / (var_ft * logn));
        used[static_cast<std::size_t>(best)] = true;
        res.S.push_back(best);
        ft = pin(mu.space(), ft, {best}, 1).values;
        const double p_next = mean(mu, ft);
        CoalitionStep step;
        step.coordinate = best;
        step.p_after = p_next;
        step.influence = best_inf;
        step.gain_bound = best_inf / (1.0 + b);
        res.steps.push_back(step);
        res.min_gain_slack = std::min(res.min_gain_slack, (p_next - p) - step.gain_bound);
        res.trajectory.push_back(p_next);
        p = p_next;
    }
    res.succeeded = true;
    if (std::isfinite(res.implied_alpha) && res.implied_alpha > 0.0 && logn > 0.0)
        res.budget_bound = 4.0 * (1.0 + b) * std::log(1.0 / (2.0 * epsilon)) / res.implied_alpha * n / logn;
    else if (res.S.empty())
        res.budget_bound = 0.0;
    return res;
}

}  // namespace glauber
