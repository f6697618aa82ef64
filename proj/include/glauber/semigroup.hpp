#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "glauber/functionals.hpp"
#include "glauber/operators.hpp"

namespace glauber {

/// Heat semigroup H_t = e^{tL} of the single-site dynamics, realized through
/// one spectral factorization of the symmetrized generator
/// D^{1/2} L D^{-1/2} (D = diag(nu)), which is reused for every t. In the
/// nu-weighted inner product the eigenbasis is orthonormal, all eigenvalues
/// are <= 0, and full support forces a simple zero eigenvalue.
class Semigroup {
public:
    explicit Semigroup(const GibbsMeasure& mu) : probs_(mu.probs()) {
        const auto N = mu.size();
        root_ = probs_.array().sqrt();
        Eigen::MatrixXd sym = generator_matrix(mu);
        sym = root_.asDiagonal() * sym * root_.cwiseInverse().asDiagonal();
        sym = 0.5 * (sym + sym.transpose()).eval();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
        if (solver.info() != Eigen::Success) throw NumericalError("semigroup: eigensolver failed");
        eigenvalues_ = solver.eigenvalues();  // ascending; last entry ~ 0
        basis_ = solver.eigenvectors();
        if (std::abs(eigenvalues_[N - 1]) > 1e-8)
            throw NumericalError("semigroup: generator kernel not found");
    }

    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

    /// Smallest nonzero eigenvalue of -L. Throws if the zero eigenvalue is
    /// not simple (reducible chain).
    double spectral_gap() const {
        const auto N = eigenvalues_.size();
        const double gap = -eigenvalues_[N - 2];
        if (gap <= 1e-12) throw NumericalError("spectral gap vanishes: chain is reducible");
        return gap;
    }

    /// k-th eigenfunction of L, normalized to E_nu[phi^2] = 1.
    Eigen::VectorXd eigenfunction(Eigen::Index k) const {
        return basis_.col(k).cwiseQuotient(root_);
    }

    /// H_t f for t >= 0.
    Eigen::VectorXd apply(double t, const Eigen::VectorXd& f) const {
        if (t < 0.0) throw std::invalid_argument("semigroup: t must be >= 0");
        return flow(t, f);
    }

    /// Dense H_t for t >= 0.
    Eigen::MatrixXd matrix(double t) const {
        if (t < 0.0) throw std::invalid_argument("semigroup: t must be >= 0");
        return flow_matrix(t);
    }

    /// H_T^{-1} A H_T. The inverse flow amplifies the fast modes by up to
    /// e^{T * range}; conjugations beyond max_exponent are rejected as
    /// ill-conditioned.
    Eigen::MatrixXd conjugate_by_flow(double T, const Eigen::MatrixXd& A, double max_exponent = 40.0) const {
        if (T < 0.0) throw std::invalid_argument("semigroup: T must be >= 0");
        const double range = -eigenvalues_[0];
        if (T * range > max_exponent)
            throw NumericalError("conjugate_by_flow: T * spectral range = " + std::to_string(T * range) +
                                 " exceeds " + std::to_string(max_exponent));
        return flow_matrix(-T) * A * flow_matrix(T);
    }

private:
    Eigen::VectorXd flow(double t, const Eigen::VectorXd& f) const {
        Eigen::VectorXd c = basis_.transpose() * (root_.asDiagonal() * f);
        c.array() *= (t * eigenvalues_.array()).exp();
        return (basis_ * c).cwiseQuotient(root_);
    }

    Eigen::MatrixXd flow_matrix(double t) const {
        Eigen::MatrixXd scaled = basis_ * (t * eigenvalues_.array()).exp().matrix().asDiagonal() * basis_.transpose();
        return root_.cwiseInverse().asDiagonal() * scaled * root_.asDiagonal();
    }

    Eigen::VectorXd probs_;
    Eigen::VectorXd root_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd basis_;
};

}  // namespace glauber
