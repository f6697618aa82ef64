#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "glauber/functionals.hpp"

namespace glauber {

/// I_i(f) for boolean f: the nu-probability that some change of coordinate i
/// changes f. The pivotal set is a union of whole fibers, so one pass over
/// the fibers of i gives the exact value.
inline double influence(const GibbsMeasure& mu, const Eigen::VectorXd& f, int i) {
    const auto& space = mu.space();
    const int q = space.q();
    double mass = 0.0;
    bool boolean = true;
    space.for_each_fiber(i, [&](std::int64_t base, std::int64_t st) {
        const double v0 = f[base];
        bool constant = true;
        for (int s = 0; s < q; ++s) {
            const double v = f[base + s * st];
            if (v != 0.0 && v != 1.0) boolean = false;
            if (v != v0) constant = false;
        }
        if (!constant)
            for (int s = 0; s < q; ++s) mass += mu.prob(base + s * st);
    });
    if (!boolean) throw std::invalid_argument("influence is defined for boolean functions only");
    return mass;
}

inline Eigen::VectorXd all_influences(const GibbsMeasure& mu, const Eigen::VectorXd& f) {
    Eigen::VectorXd out(mu.n());
    for (int i = 0; i < mu.n(); ++i) out[i] = influence(mu, f, i);
    return out;
}

/// Effect e_i(f, nu) = Cov(f, x_i) with the +-1 embedding of a binary
/// alphabet (symbol 0 -> -1, symbol 1 -> +1). Only defined for q = 2.
inline double effect(const GibbsMeasure& mu, const Eigen::VectorXd& f, int i) {
    if (mu.q() != 2) throw std::invalid_argument("effect is defined for binary alphabets only");
    const auto& space = mu.space();
    double e_fx = 0.0, e_f = 0.0, e_x = 0.0;
    for (std::int64_t v = 0; v < mu.size(); ++v) {
        const double sigma = 2.0 * space.digit(v, i) - 1.0;
        const double p = mu.prob(v);
        e_fx += p * f[v] * sigma;
        e_f += p * f[v];
        e_x += p * sigma;
    }
    return e_fx - e_f * e_x;
}

/// (||L_i f||_1, ||L_i f||_2).
inline std::pair<double, double> derivative_norms(const GibbsMeasure& mu, const Eigen::VectorXd& f, int i) {
    const Eigen::VectorXd li = site_derivative(mu, f, i);
    return {lp_norm(mu, li, 1.0), lp_norm(mu, li, 2.0)};
}

struct InfluenceRow {
    int coordinate = 0;
    double influence = 0.0;
    std::optional<double> effect;  // only for q = 2
    double norm1 = 0.0;
    double norm2 = 0.0;
};

struct InfluenceReport {
    std::vector<InfluenceRow> rows;
    double max_influence = 0.0;
    int argmax = 0;  // ties broken toward the lowest coordinate
    double total_influence = 0.0;
};

inline InfluenceReport influence_report(const GibbsMeasure& mu, const Eigen::VectorXd& f) {
    InfluenceReport rep;
    for (int i = 0; i < mu.n(); ++i) {
        InfluenceRow row;
        row.coordinate = i;
        row.influence = influence(mu, f, i);
        if (mu.q() == 2) row.effect = effect(mu, f, i);
        std::tie(row.norm1, row.norm2) = derivative_norms(mu, f, i);
        rep.total_influence += row.influence;
        if (row.influence > rep.max_influence) {
            rep.max_influence = row.influence;
            rep.argmax = i;
        }
        rep.rows.push_back(row);
    }
    return rep;
}

struct SandwichReport {
    // slack of I_i >= E|L_i f|^p (upper) and E|L_i f|^p >= I_i/(qb)^p (lower),
    // minimized over coordinates
    double min_upper_slack = std::numeric_limits<double>::infinity();
    double min_lower_slack = std::numeric_limits<double>::infinity();
    bool holds = true;
};

/// Checks I_i >= E|L_i f|^p >= I_i / (qb)^p per coordinate with the exact b
/// of the measure.
inline SandwichReport sandwich_check(const GibbsMeasure& mu, const Eigen::VectorXd& f, double p,
                                     double tol = 1e-12) {
    if (p < 1.0) throw std::invalid_argument("sandwich_check: p must be >= 1");
    SandwichReport rep;
    const double qb = mu.q() * mu.pinned_ratio_bound();
    for (int i = 0; i < mu.n(); ++i) {
        const double I = influence(mu, f, i);
        const Eigen::VectorXd li = site_derivative(mu, f, i);
        const double moment = (mu.probs().array() * li.array().abs().pow(p)).sum();
        rep.min_upper_slack = std::min(rep.min_upper_slack, I - moment);
        rep.min_lower_slack = std::min(rep.min_lower_slack, moment - I / std::pow(qb, p));
    }
    rep.holds = rep.min_upper_slack >= -tol && rep.min_lower_slack >= -tol;
    return rep;
}

}  // namespace glauber
