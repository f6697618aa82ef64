#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <cstdint>
#include <vector>

#include "glauber/measure.hpp"
#include "glauber/observable.hpp"

namespace glauber {

/// (P_i f)(x) = E_nu[ f(X) | X_{-i} = x_{-i} ]: resample coordinate i from
/// its conditional law. Matrix-free, O(q^n) per call.
inline Eigen::VectorXd apply_resampling(const GibbsMeasure& mu, const Eigen::VectorXd& f, int i) {
    const auto& space = mu.space();
    if (f.size() != space.size()) throw std::invalid_argument("apply_resampling: wrong length");
    Eigen::VectorXd out(f.size());
    const int q = space.q();
    space.for_each_fiber(i, [&](std::int64_t base, std::int64_t st) {
        double mass = 0.0, acc = 0.0;
        for (int s = 0; s < q; ++s) {
            const double p = mu.prob(base + s * st);
            mass += p;
            acc += p * f[base + s * st];
        }
        const double m = acc / mass;
        for (int s = 0; s < q; ++s) out[base + s * st] = m;
    });
    return out;
}

/// L_i f = P_i f - f, the site-i derivative of f.
inline Eigen::VectorXd site_derivative(const GibbsMeasure& mu, const Eigen::VectorXd& f, int i) {
    return apply_resampling(mu, f, i) - f;
}

/// L f = sum_i L_i f, the generator of the continuous-time dynamics.
inline Eigen::VectorXd apply_generator(const GibbsMeasure& mu, const Eigen::VectorXd& f) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(f.size());
    for (int i = 0; i < mu.n(); ++i) out += site_derivative(mu, f, i);
    return out;
}

/// P_i as a sparse matrix; each row has the q entries of the conditional law
/// on the row's fiber. Rows sum to 1, nu-stationary, nu-self-adjoint,
/// idempotent.
inline Eigen::SparseMatrix<double> resampling_matrix(const GibbsMeasure& mu, int i) {
    const auto& space = mu.space();
    const int q = space.q();
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(space.size()) * static_cast<std::size_t>(q));
    space.for_each_fiber(i, [&](std::int64_t base, std::int64_t st) {
        double mass = 0.0;
        for (int s = 0; s < q; ++s) mass += mu.prob(base + s * st);
        for (int row = 0; row < q; ++row)
            for (int col = 0; col < q; ++col)
                trip.emplace_back(static_cast<int>(base + row * st), static_cast<int>(base + col * st),
                                  mu.prob(base + col * st) / mass);
    });
    Eigen::SparseMatrix<double> P(space.size(), space.size());
    P.setFromTriplets(trip.begin(), trip.end());
    return P;
}

/// L_i = P_i - I as a dense matrix.
inline Eigen::MatrixXd derivative_matrix(const GibbsMeasure& mu, int i) {
    Eigen::MatrixXd M = resampling_matrix(mu, i);
    M.diagonal().array() -= 1.0;
    return M;
}

/// L = sum_i (P_i - I) as a dense matrix. Row sums are 0.
inline Eigen::MatrixXd generator_matrix(const GibbsMeasure& mu) {
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(mu.size(), mu.size());
    for (int i = 0; i < mu.n(); ++i) L += resampling_matrix(mu, i);
    L.diagonal().array() -= static_cast<double>(mu.n());
    return L;
}

}  // namespace glauber
