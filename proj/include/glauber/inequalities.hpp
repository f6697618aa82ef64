#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "glauber/functionals.hpp"
#include "glauber/influences.hpp"
#include "glauber/quadrature.hpp"
#include "glauber/semigroup.hpp"

namespace glauber {

/// Effective max degree used in the constant-side of the inequalities; an
/// edgeless graph would otherwise zero out the bound.
inline int effective_degree(const InteractionGraph& g) { return std::max(g.max_degree(), 1); }

/// Per-coordinate terms of the derivative functional
///   term_j = ||L_j f||_2^2 / (1 + log(||L_j f||_2 / ||L_j f||_1)),
/// their sum, and the implied constant
///   Var(f) * rho / (q^4 b^4 Delta^2 * sum).
struct TalagrandReport {
    Eigen::VectorXd terms;
    double sum = 0.0;
    double variance = 0.0;
    double implied_constant = 0.0;
    // parameters the constant was normalized with
    int q = 0;
    double b = 1.0;
    int delta = 1;
    double rho = 0.0;
};

inline TalagrandReport talagrand_functional(const GibbsMeasure& mu, const Eigen::VectorXd& f, double rho) {
    TalagrandReport rep;
    rep.terms.resize(mu.n());
    for (int j = 0; j < mu.n(); ++j) {
        const auto [n1, n2] = derivative_norms(mu, f, j);
        if (n2 == 0.0) {
            rep.terms[j] = 0.0;  // limit of the expression as the derivative vanishes
            continue;
        }
        const double log_ratio = std::max(0.0, std::log(n2 / n1));  // >= 0 up to rounding
        rep.terms[j] = n2 * n2 / (1.0 + log_ratio);
    }
    rep.sum = rep.terms.sum();
    rep.variance = variance(mu, f);
    rep.q = mu.q();
    rep.b = mu.pinned_ratio_bound();
    rep.delta = effective_degree(mu.graph());
    rep.rho = rho;
    const double scale = std::pow(rep.q, 4) * std::pow(rep.b, 4) * rep.delta * rep.delta / rho;
    if (rep.sum > 0.0)
        rep.implied_constant = rep.variance / (scale * rep.sum);
    else
        rep.implied_constant = rep.variance > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    return rep;
}

/// The time-integrated derivative functional
///   integral = int_0^T sum_j ||L_j f||_{1+e^{-2 rho t}}^2 dt
/// and the implied constant of Var <= c' q^2 b^2 / (1 - e^{-rho T}) * integral.
struct TechnicalReport {
    double integral = 0.0;
    double variance = 0.0;
    double implied_cprime = 0.0;
    double T = 0.0;
    double rho = 0.0;
    int quadrature_nodes = 0;
};

inline TechnicalReport technical_integral(const GibbsMeasure& mu, const Eigen::VectorXd& f, double T,
                                          double rho) {
    if (T <= 0.0) throw std::invalid_argument("technical_integral: T must be > 0");
    if (rho <= 0.0) throw std::invalid_argument("technical_integral: rho must be > 0");
    std::vector<Eigen::VectorXd> derivs;
    derivs.reserve(static_cast<std::size_t>(mu.n()));
    for (int j = 0; j < mu.n(); ++j) derivs.push_back(site_derivative(mu, f, j));
    auto integrand = [&](double t) {
        const double p = 1.0 + std::exp(-2.0 * rho * t);
        double s = 0.0;
        for (const auto& lj : derivs) {
            const double norm = lp_norm(mu, lj, p);
            s += norm * norm;
        }
        return s;
    };
    const auto quad = integrate_adaptive(integrand, 0.0, T);
    TechnicalReport rep;
    rep.integral = quad.value;
    rep.quadrature_nodes = quad.nodes;
    rep.variance = variance(mu, f);
    rep.T = T;
    rep.rho = rho;
    const double scale = mu.q() * mu.q() * mu.pinned_ratio_bound() * mu.pinned_ratio_bound() /
                         (1.0 - std::exp(-rho * T));
    if (rep.integral > 0.0)
        rep.implied_cprime = rep.variance / (scale * rep.integral);
    else
        rep.implied_cprime = rep.variance > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    return rep;
}

/// Largest influence, where it sits, and the ratio against Var(f) log(n)/n.
struct KklReport {
    int argmax = 0;
    double max_influence = 0.0;
    double variance = 0.0;
    double bound_functional = 0.0;  // Var(f) log(n) / n
    double implied_alpha = 0.0;
    bool degenerate = false;  // Var(f) = 0
};

inline KklReport kkl_extract(const GibbsMeasure& mu, const Eigen::VectorXd& f) {
    if (mu.n() < 2) throw std::invalid_argument("kkl_extract: needs n >= 2");
    KklReport rep;
    const auto I = all_influences(mu, f);
    rep.max_influence = I.maxCoeff();
    for (int i = 0; i < mu.n(); ++i)
        if (I[i] == rep.max_influence) { rep.argmax = i; break; }  // lowest index on ties
    rep.variance = variance(mu, f);
    if (rep.variance <= 0.0) {
        rep.degenerate = true;
        return rep;
    }
    rep.bound_functional = rep.variance * std::log(static_cast<double>(mu.n())) / mu.n();
    rep.implied_alpha = rep.max_influence / rep.bound_functional;
    return rep;
}

/// Both sides of Var(f) - Var(H_T f) = int_0^T E(H_t f, H_t f) dt.
struct VarianceDecompositionReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;  // |lhs - rhs|
    double relative = 0.0;  // residual / Var(f)
};

inline VarianceDecompositionReport variance_decomposition_check(const GibbsMeasure& mu,
                                                                const Semigroup& sg,
                                                                const Eigen::VectorXd& f, double T) {
    if (T <= 0.0) throw std::invalid_argument("variance_decomposition_check: T must be > 0");
    VarianceDecompositionReport rep;
    rep.lhs = variance(mu, f) - variance(mu, sg.apply(T, f));
    auto integrand = [&](double t) { return dirichlet_form(mu, sg.apply(t, f)); };
    rep.rhs = integrate_adaptive(integrand, 0.0, T).value;
    rep.residual = std::abs(rep.lhs - rep.rhs);
    const double var = variance(mu, f);
    rep.relative = var > 0.0 ? rep.residual / var : rep.residual;
    return rep;
}

}  // namespace glauber
