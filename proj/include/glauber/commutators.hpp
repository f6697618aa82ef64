#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <Eigen/SparseCore>
#include <cmath>
#include <vector>

#include "glauber/functionals.hpp"
#include "glauber/semigroup.hpp"

namespace glauber {

/// Index tuples (j_1,...,j_k) grown through the closed neighborhood of the
/// sites already used: j_m must lie in N^+({i, j_1, ..., j_{m-1}}). These
/// are exactly the tuples whose iterated commutators can survive; tuples
/// with vanishing commutators (repeats and the like) are included.
struct CommutatorIndexSet {
    int i = 0;
    int k = 0;
    std::vector<std::vector<int>> tuples;
};

inline CommutatorIndexSet enumerate_index_set(const InteractionGraph& graph, int i, int k,
                                              int max_order = 14) {
    if (k < 0) throw std::invalid_argument("enumerate_index_set: k must be >= 0");
    if (k > max_order)
        throw std::invalid_argument("enumerate_index_set: k exceeds the configured max of " +
                                    std::to_string(max_order));
    CommutatorIndexSet out;
    out.i = i;
    out.k = k;
    out.tuples = {{}};
    for (int m = 0; m < k; ++m) {
        std::vector<std::vector<int>> next;
        for (const auto& t : out.tuples) {
            std::vector<int> support = {i};
            support.insert(support.end(), t.begin(), t.end());
            for (int j : graph.closed_neighborhood(support)) {
                auto grown = t;
                grown.push_back(j);
                next.push_back(std::move(grown));
            }
        }
        out.tuples = std::move(next);
    }
    return out;
}

/// The upper bound (Delta+1)^k k^k on the index-set size (k = 0 counts 1).
inline double index_set_size_bound(int max_degree, int k) {
    if (k == 0) return 1.0;
    return std::pow(max_degree + 1.0, k) * std::pow(static_cast<double>(k), k);
}

/// Single-site resampling matrices plus the dense generator, built once so
/// that tuple sums do not rebuild them per tuple.
struct SiteOperators {
    std::vector<Eigen::SparseMatrix<double>> P;
    Eigen::MatrixXd L;
};

inline SiteOperators site_operators(const GibbsMeasure& mu) {
    SiteOperators ops;
    ops.P.reserve(static_cast<std::size_t>(mu.n()));
    for (int i = 0; i < mu.n(); ++i) ops.P.push_back(resampling_matrix(mu, i));
    ops.L = generator_matrix(mu);
    return ops;
}

/// Left-nested iterated commutator [...[[L_i, P_{j_1}], P_{j_2}], ..., P_{j_k}].
/// The empty tuple gives L_i = P_i - I (the order-0 term of the series);
/// since [P_i, X] = [L_i, X], the higher orders agree with nesting from P_i.
/// Products short-circuit once an intermediate vanishes identically.
inline Eigen::MatrixXd iterated_commutator(const SiteOperators& ops, int i, const std::vector<int>& tuple) {
    Eigen::MatrixXd C = Eigen::MatrixXd(ops.P[static_cast<std::size_t>(i)]);
    C.diagonal().array() -= 1.0;
    for (int j : tuple) {
        const auto& Pj = ops.P[static_cast<std::size_t>(j)];
        C = (C * Pj - Pj * C).eval();
        if (C.cwiseAbs().maxCoeff() == 0.0) return Eigen::MatrixXd::Zero(C.rows(), C.cols());
    }
    return C;
}

inline Eigen::MatrixXd iterated_commutator(const GibbsMeasure& mu, int i, const std::vector<int>& tuple) {
    return iterated_commutator(site_operators(mu), i, tuple);
}

/// Sum of iterated commutators over the whole index set, by direct tuple
/// enumeration. Exponential in k; meant for small k and for cross-checking
/// the generator recursion used by build_commutator_series.
inline Eigen::MatrixXd commutator_sum_via_tuples(const GibbsMeasure& mu, const SiteOperators& ops, int i,
                                                 int k) {
    const auto set = enumerate_index_set(mu.graph(), i, k);
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(mu.size(), mu.size());
    for (const auto& t : set.tuples) sum += iterated_commutator(ops, i, t);
    return sum;
}

/// Truncated series for the operator M_{T,i} that satisfies the exchange
/// identity L_i H_T = H_T M_{T,i}:
///   M_{T,i} = sum_k (T^k / k!) * C_k,   C_0 = L_i,  C_k = [C_{k-1}, L].
/// C_k equals the sum of iterated commutators over the order-k index set;
/// the recursion is exact and sidesteps the tuple blow-up.
struct CommutatorSeries {
    double T = 0.0;
    int i = 0;
    int K = 0;
    std::vector<Eigen::MatrixXd> partial_sums;         // M^{(0)}, ..., M^{(K)}
    std::vector<double> residuals;                     // ||L_i H_T - H_T M^{(k)}||_F per k
    std::vector<double> conjugation_residuals;         // ||M^{(k)} - H_T^{-1} L_i H_T||_F per k
    Eigen::MatrixXd reference;                         // exact conjugation H_T^{-1} L_i H_T
};

inline CommutatorSeries build_commutator_series(const GibbsMeasure& mu, const Semigroup& sg, int i,
                                                double T, int K, double max_exponent = 40.0) {
    if (T < 0.0) throw std::invalid_argument("build_commutator_series: T must be >= 0");
    if (K < 0 || K > 64) throw std::invalid_argument("build_commutator_series: K out of range");
    CommutatorSeries series;
    series.T = T;
    series.i = i;
    series.K = K;

    const Eigen::MatrixXd L = generator_matrix(mu);
    Eigen::MatrixXd Li = derivative_matrix(mu, i);
    const Eigen::MatrixXd Ht = sg.matrix(T);
    const Eigen::MatrixXd lhs = Li * Ht;
    series.reference = sg.conjugate_by_flow(T, Li, max_exponent);

    Eigen::MatrixXd Ck = Li;                  // order-k commutator
    Eigen::MatrixXd partial = Ck;             // k = 0 partial sum
    double coeff = 1.0;
    for (int k = 0;; ++k) {
        series.partial_sums.push_back(partial);
        series.residuals.push_back((lhs - Ht * partial).norm());
        series.conjugation_residuals.push_back((partial - series.reference).norm());
        if (k == K) break;
        Ck = (Ck * L - L * Ck).eval();
        coeff *= T / (k + 1);
        partial += coeff * Ck;
    }
    return series;
}

/// Residuals of the exchange identity at truncation order K.
struct IntertwiningReport {
    double T = 0.0;
    int i = 0;
    int K = 0;
    double frobenius = 0.0;
    double op_norm = 0.0;
    bool passed = false;
    std::vector<double> per_order;  // Frobenius residual after each order
};

inline IntertwiningReport verify_intertwining(const GibbsMeasure& mu, const Semigroup& sg, int i,
                                              double T, int K, double threshold = 1e-6) {
    const auto series = build_commutator_series(mu, sg, i, T, K);
    IntertwiningReport rep;
    rep.T = T;
    rep.i = i;
    rep.K = K;
    rep.per_order = series.residuals;
    rep.frobenius = series.residuals.back();
    const Eigen::MatrixXd diff =
        derivative_matrix(mu, i) * sg.matrix(T) - sg.matrix(T) * series.partial_sums.back();
    rep.op_norm = diff.jacobiSvd().singularValues()[0];
    rep.passed = rep.frobenius <= threshold;
    return rep;
}

/// Both sides of the order-k term bound
///   sum_{tuples} ||[...]f||_p^2
///     <= 2 (Delta+1)^k (k+1)^{k+4} (2qb)^{2k+2} max_{j : d(j,i) <= k} ||L_j f||_p^2.
struct TermBoundReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool holds = false;
};

inline TermBoundReport term_bound_check(const GibbsMeasure& mu, const SiteOperators& ops,
                                        const Eigen::VectorXd& f, int i, int k, double p) {
    if (p < 1.0) throw std::invalid_argument("term_bound_check: p must be >= 1");
    if (k < 0 || k > 4) throw std::invalid_argument("term_bound_check: k must be in [0, 4]");
    const auto set = enumerate_index_set(mu.graph(), i, k);
    TermBoundReport rep;
    for (const auto& t : set.tuples) {
        const double norm = lp_norm(mu, iterated_commutator(ops, i, t) * f, p);
        rep.lhs += norm * norm;
    }
    const int delta = mu.graph().max_degree();
    const double qb2 = 2.0 * mu.q() * mu.pinned_ratio_bound();
    double max_deriv = 0.0;
    for (int j = 0; j < mu.n(); ++j) {
        if (mu.graph().distance(i, j) > k) continue;
        max_deriv = std::max(max_deriv, lp_norm(mu, site_derivative(mu, f, j), p));
    }
    rep.rhs = 2.0 * std::pow(delta + 1.0, k) * std::pow(k + 1.0, k + 4) * std::pow(qb2, 2 * k + 2) *
              max_deriv * max_deriv;
    rep.slack = rep.rhs - rep.lhs;
    rep.holds = rep.slack >= -1e-12 * std::max(1.0, rep.rhs);
    return rep;
}

}  // namespace glauber
