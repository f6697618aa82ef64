#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "glauber/functionals.hpp"
#include "glauber/semigroup.hpp"

namespace glauber {

struct PoincareResult {
    double lambda = 0.0;
    Eigen::VectorXd witness;  // eigenfunction achieving E(f,f)/Var(f) = lambda
};

/// lambda is the spectral gap of -L in L^2(nu); the witness is the
/// corresponding eigenfunction.
inline PoincareResult poincare_constant(const GibbsMeasure& mu, const Semigroup& sg) {
    PoincareResult res;
    res.lambda = sg.spectral_gap();
    res.witness = sg.eigenfunction(mu.size() - 2);
    return res;
}

struct LogSobolevOptions {
    int random_starts = 64;
    int max_iterations = 1200;
    double grad_tol = 1e-9;
    double var_floor = 1e-8;  // keeps Var(sqrt f) away from the constant functions
    std::uint64_t seed = 2024;
    int probe_sweep = 256;  // extra random probes evaluated after the descent
};

struct LogSobolevResult {
    double rho = 0.0;             // min of 2 E(sqrt f, sqrt f) / Ent(f) over all probes
    bool is_upper_bound = true;   // always: the true constant is an infimum
    bool converged = false;       // best start reached the gradient tolerance
    Eigen::VectorXd witness;      // the f >= 0 achieving the reported ratio
};

/// lambda, rho and their witnesses for one measure.
struct FunctionalConstants {
    PoincareResult poincare;
    LogSobolevResult log_sobolev;
};

namespace detail {

/// Working state for the ratio R(g) = 2 E(g,g) / Ent(g^2) on the sphere
/// E_nu[g^2] = 1 with g >= 0. R is scale invariant, so the sphere is only a
/// conditioning device; the binding constraints are positivity and the
/// variance floor.
class LsiObjective {
public:
    LsiObjective(const GibbsMeasure& mu, double var_floor) : mu_(mu), var_floor_(var_floor) {}

    /// Clamp to >= 0, renormalize, and keep Var(g) above the floor.
    Eigen::VectorXd project(Eigen::VectorXd g) const {
        g = g.cwiseMax(0.0);
        double norm2 = inner(mu_, g, g);
        if (norm2 <= 0.0) g = Eigen::VectorXd::Ones(g.size());
        g /= std::sqrt(inner(mu_, g, g));
        for (int pass = 0; pass < 4; ++pass) {
            const double m = mean(mu_, g);
            Eigen::VectorXd dev = g.array() - m;
            const double var = inner(mu_, dev, dev);
            if (var >= var_floor_) break;
            const double scale = std::sqrt(var_floor_ / std::max(var, 1e-300));
            g = (Eigen::VectorXd::Constant(g.size(), m) + scale * dev).cwiseMax(0.0);
            g /= std::sqrt(inner(mu_, g, g));
        }
        return g;
    }

    double ratio(const Eigen::VectorXd& g) const {
        double num = 0.0;
        for (int i = 0; i < mu_.n(); ++i) {
            const Eigen::VectorXd li = site_derivative(mu_, g, i);
            num += (mu_.probs().array() * li.array().square()).sum();
        }
        const double ent = entropy(mu_, g.array().square());
        if (ent <= 0.0) return std::numeric_limits<double>::infinity();
        return 2.0 * num / ent;
    }

    double ratio_and_gradient(const Eigen::VectorXd& g, Eigen::VectorXd& grad) const {
        Eigen::VectorXd lg = Eigen::VectorXd::Zero(g.size());
        double num = 0.0;
        for (int i = 0; i < mu_.n(); ++i) {
            const Eigen::VectorXd li = site_derivative(mu_, g, i);
            num += (mu_.probs().array() * li.array().square()).sum();
            lg += li;
        }
        num *= 2.0;  // num = 2 E(g,g)
        const Eigen::VectorXd f = g.array().square();
        const double ent = entropy(mu_, f);
        if (ent <= 0.0) {
            grad = Eigen::VectorXd::Zero(g.size());
            return std::numeric_limits<double>::infinity();
        }
        const double ef = mean(mu_, f);
        // d(2E)/dg = -4 nu .* Lg ; dEnt/dg_x = 2 nu_x g_x log(g_x^2 / E[f])
        Eigen::VectorXd dnum = -4.0 * (mu_.probs().array() * lg.array());
        Eigen::VectorXd dent(g.size());
        for (Eigen::Index x = 0; x < g.size(); ++x) {
            const double gx = g[x];
            dent[x] = gx > 0.0 ? 2.0 * mu_.prob(x) * gx * (std::log(gx * gx) - std::log(ef)) : 0.0;
        }
        const double r = num / ent;
        grad = (dnum - r * dent) / ent;
        return r;
    }

private:
    const GibbsMeasure& mu_;
    double var_floor_;
};

struct DescentOutcome {
    double value = std::numeric_limits<double>::infinity();
    bool converged = false;
    Eigen::VectorXd g;
};

inline DescentOutcome projected_gradient_descent(const LsiObjective& obj, Eigen::VectorXd g,
                                                 const LogSobolevOptions& opt) {
    DescentOutcome out;
    g = obj.project(std::move(g));
    Eigen::VectorXd grad;
    double r = obj.ratio_and_gradient(g, grad);
    double step = 0.1;
    for (int it = 0; it < opt.max_iterations; ++it) {
        if (!std::isfinite(r)) break;
        if (grad.norm() <= opt.grad_tol * std::max(1.0, std::abs(r))) {
            out.converged = true;
            break;
        }
        // Armijo backtracking along the projected path.
        bool moved = false;
        for (int bt = 0; bt < 40; ++bt) {
            Eigen::VectorXd cand = obj.project(g - step * grad);
            const double rc = obj.ratio(cand);
            if (rc < r - 1e-4 * step * grad.squaredNorm()) {
                g = std::move(cand);
                r = obj.ratio_and_gradient(g, grad);
                step = std::min(step * 2.0, 1e3);
                moved = true;
                break;
            }
            step *= 0.5;
            if (step < 1e-16) break;
        }
        if (!moved) {
            out.converged = grad.norm() <= 1e-6 * std::max(1.0, std::abs(r));
            break;
        }
    }
    out.value = r;
    out.g = std::move(g);
    return out;
}

}  // namespace detail

/// Estimates the log-Sobolev constant
///   rho = inf_{f >= 0 nonconstant} 2 E(sqrt f, sqrt f) / Ent(f)
/// by multi-start projected gradient descent plus a probe sweep. Every
/// candidate evaluated is a feasible function, so the reported value is an
/// honest UPPER bound on the true infimum; the flag records this.
inline LogSobolevResult log_sobolev_constant(const GibbsMeasure& mu, const Semigroup& sg,
                                             const LogSobolevOptions& opt = {}) {
    const auto N = mu.size();
    detail::LsiObjective obj(mu, opt.var_floor);
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> gauss;
    std::uniform_int_distribution<std::int64_t> pick_state(0, N - 1);

    std::vector<Eigen::VectorXd> starts;
    // Structured starts: small and large moves along the Poincare witness,
    // its absolute value (= sqrt of the witness squared), and spiked states.
    const Eigen::VectorXd phi = sg.eigenfunction(N - 2);
    for (double eps : {0.05, -0.05, 0.4, -0.4})
        starts.push_back(Eigen::VectorXd::Ones(N) + eps * phi);
    starts.push_back(phi.cwiseAbs().array() + 1e-3);
    Eigen::Index argmax, argmin;
    mu.probs().maxCoeff(&argmax);
    mu.probs().minCoeff(&argmin);
    for (Eigen::Index spike : {argmax, argmin}) {
        Eigen::VectorXd g = Eigen::VectorXd::Constant(N, 0.1);
        g[spike] = 1.0;
        starts.push_back(std::move(g));
    }
    for (int k = 0; k < opt.random_starts; ++k) {
        Eigen::VectorXd g(N);
        for (Eigen::Index x = 0; x < N; ++x) g[x] = std::exp(0.7 * gauss(rng));
        starts.push_back(std::move(g));
    }

    LogSobolevResult res;
    res.rho = std::numeric_limits<double>::infinity();
    for (const auto& s : starts) {
        auto run = detail::projected_gradient_descent(obj, s, opt);
        if (run.value < res.rho) {
            res.rho = run.value;
            res.converged = run.converged;
            res.witness = run.g.array().square();
        }
    }

    // Probe sweep: random functions plus the near-degenerate witness family
    // down at the variance floor, where the ratio approaches the
    // small-perturbation limit.
    auto consider = [&](const Eigen::VectorXd& g_raw) {
        const Eigen::VectorXd g = obj.project(g_raw);
        const double r = obj.ratio(g);
        if (r < res.rho) {
            res.rho = r;
            res.witness = g.array().square();
        }
    };
    const double eps_floor = 1.0001 * std::sqrt(opt.var_floor);
    for (double eps : {eps_floor, -eps_floor, 10 * eps_floor, -10 * eps_floor, 0.01, -0.01})
        consider(Eigen::VectorXd::Ones(N) + eps * phi);
    for (int k = 0; k < opt.probe_sweep; ++k) {
        Eigen::VectorXd g(N);
        for (Eigen::Index x = 0; x < N; ++x) g[x] = std::exp(0.7 * gauss(rng));
        consider(g);
    }
    for (int k = 0; k < 8; ++k) {
        Eigen::VectorXd g = Eigen::VectorXd::Constant(N, 0.2);
        g[pick_state(rng)] = 1.0;
        consider(g);
    }
    return res;
}

inline FunctionalConstants compute_constants(const GibbsMeasure& mu, const Semigroup& sg,
                                             const LogSobolevOptions& opt = {}) {
    return {poincare_constant(mu, sg), log_sobolev_constant(mu, sg, opt)};
}

struct HypercontractivityReport {
    bool passed = true;
    double worst_margin = std::numeric_limits<double>::infinity();  // min of ||f||_p (1+tol) - ||H_t f||_2
    double worst_t = 0.0;
    int trials = 0;
};

/// Checks ||H_t f||_2 <= ||f||_{1 + e^{-2 rho t}} (1 + 1e-9) on random
/// probe functions over a grid of times. A failure proves the supplied rho
/// is too large.
inline HypercontractivityReport check_hypercontractivity(
    const GibbsMeasure& mu, const Semigroup& sg, double rho, int trials, std::uint64_t seed = 7,
    std::vector<double> t_grid = {0.1, 0.25, 0.5, 1.0, 2.0}) {
    if (rho <= 0.0) throw std::invalid_argument("check_hypercontractivity: rho must be > 0");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    HypercontractivityReport rep;
    rep.trials = trials;
    for (int k = 0; k < trials; ++k) {
        Eigen::VectorXd f(mu.size());
        for (Eigen::Index x = 0; x < f.size(); ++x) f[x] = gauss(rng);
        if (k % 3 == 1) f = f.cwiseAbs();         // nonnegative probes
        if (k % 3 == 2) f = f.array().exp();      // positive, skewed probes
        for (double t : t_grid) {
            const double p = 1.0 + std::exp(-2.0 * rho * t);
            const double lhs = lp_norm(mu, sg.apply(t, f), 2.0);
            const double rhs = lp_norm(mu, f, p) * (1.0 + 1e-9);
            const double margin = rhs - lhs;
            if (margin < rep.worst_margin) {
                rep.worst_margin = margin;
                rep.worst_t = t;
            }
            if (margin < 0.0) rep.passed = false;
        }
    }
    return rep;
}

}  // namespace glauber
