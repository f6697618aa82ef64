#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "glauber/operators.hpp"

namespace glauber {

inline double mean(const GibbsMeasure& mu, const Eigen::VectorXd& f) { return mu.probs().dot(f); }

/// Weighted inner product <f,g> = E_nu[f g].
inline double inner(const GibbsMeasure& mu, const Eigen::VectorXd& f, const Eigen::VectorXd& g) {
    return (mu.probs().array() * f.array() * g.array()).sum();
}

/// Two-pass variance; accurate enough for the 1e-10 oracle comparisons.
inline double variance(const GibbsMeasure& mu, const Eigen::VectorXd& f) {
    const double m = mean(mu, f);
    return (mu.probs().array() * (f.array() - m).square()).sum();
}

/// ||f||_p = (E_nu |f|^p)^{1/p}, p >= 1.
inline double lp_norm(const GibbsMeasure& mu, const Eigen::VectorXd& f, double p) {
    if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
    const double s = (mu.probs().array() * f.array().abs().pow(p)).sum();
    return std::pow(s, 1.0 / p);
}

/// Ent[f] = E[f log f] - E[f] log E[f] for f >= 0, with 0 log 0 = 0.
inline double entropy(const GibbsMeasure& mu, const Eigen::VectorXd& f) {
    if (f.minCoeff() < 0.0) throw std::invalid_argument("entropy: f must be nonnegative");
    double e_flogf = 0.0;
    for (Eigen::Index x = 0; x < f.size(); ++x)
        if (f[x] > 0.0) e_flogf += mu.prob(x) * f[x] * std::log(f[x]);
    const double ef = mean(mu, f);
    return ef > 0.0 ? e_flogf - ef * std::log(ef) : 0.0;
}

/// Dirichlet form E(f,f), evaluated through both of its expressions
///   sum_i E[(L_i f)^2]   and   -E[f Lf],
/// which must agree to 1e-10; the gradient-sum value is returned.
inline double dirichlet_form(const GibbsMeasure& mu, const Eigen::VectorXd& f) {
    double grad = 0.0;
    Eigen::VectorXd lf = Eigen::VectorXd::Zero(f.size());
    for (int i = 0; i < mu.n(); ++i) {
        const Eigen::VectorXd li = site_derivative(mu, f, i);
        grad += (mu.probs().array() * li.array().square()).sum();
        lf += li;
    }
    const double viaL = -inner(mu, f, lf);
    if (std::abs(grad - viaL) > 1e-10 * std::max(1.0, std::abs(grad)))
        throw NumericalError("dirichlet_form: the two evaluation routes disagree");
    return grad;
}

}  // namespace glauber
