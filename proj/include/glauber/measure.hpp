#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "glauber/graph.hpp"
#include "glauber/state_space.hpp"

namespace glauber {

/// Result of checking the Markov property of a measure against a graph:
/// for every site i, the conditional law of X_i given everything else may
/// depend on the neighbours of i only.
struct MarkovCheckResult {
    bool holds = false;
    double worst_tv = 0.0;  // largest TV gap between conditional laws that should agree
    int worst_site = -1;
};

namespace detail {

/// Exact L1 diameter of a small family of q-dimensional probability vectors,
/// via max over sign patterns of the spread of signed sums. Cost m * 2^q.
inline double l1_diameter(const std::vector<std::vector<double>>& pts, int q) {
    if (pts.size() < 2) return 0.0;
    double best = 0.0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << q); ++mask) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (const auto& p : pts) {
            double s = 0.0;
            for (int k = 0; k < q; ++k) s += (mask >> k & 1u) ? p[static_cast<std::size_t>(k)] : -p[static_cast<std::size_t>(k)];
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        best = std::max(best, hi - lo);
    }
    return best;
}

}  // namespace detail

/// A full-support probability measure on an enumerated state space, together
/// with the interaction graph it is Markov with respect to and the exact
/// bound b on probability ratios across single-site flips.
///
/// Weights are normalized in log space, so arbitrarily scaled inputs are
/// fine as long as the spread of log weights stays below ~500 (beyond that
/// the smallest states would underflow to zero and full support would be
/// lost; such inputs are rejected).
class GibbsMeasure {
public:
    GibbsMeasure(StateSpace space, InteractionGraph graph, Eigen::VectorXd probs)
        : space_(std::move(space)), graph_(std::move(graph)), probs_(std::move(probs)) {
        if (graph_.n() != space_.n()) throw SpecError("graph and state space disagree on n");
        if (probs_.size() != space_.size()) throw SpecError("probability vector has wrong length");
        if (probs_.minCoeff() <= 0.0) throw SpecError("measure must have full support");
        const double mass = probs_.sum();
        if (std::abs(mass - 1.0) > 1e-12) probs_ /= mass;
        b_ = compute_pinned_ratio_bound();
    }

    static GibbsMeasure from_log_weights(StateSpace space, InteractionGraph graph,
                                         const Eigen::VectorXd& logw) {
        const double hi = logw.maxCoeff();
        const double lo = logw.minCoeff();
        if (hi - lo > 500.0)
            throw SpecError("log-weight spread " + std::to_string(hi - lo) +
                            " exceeds 500; smallest states would underflow");
        Eigen::VectorXd shifted = (logw.array() - hi).exp();
        shifted /= shifted.sum();
        return GibbsMeasure(std::move(space), std::move(graph), std::move(shifted));
    }

    static GibbsMeasure uniform(StateSpace space) {
        const auto n = space.size();
        InteractionGraph g = InteractionGraph::edgeless(space.n());
        return GibbsMeasure(std::move(space), std::move(g),
                            Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n)));
    }

    const StateSpace& space() const { return space_; }
    const InteractionGraph& graph() const { return graph_; }
    const Eigen::VectorXd& probs() const { return probs_; }
    double prob(std::int64_t x) const { return probs_[x]; }
    std::int64_t size() const { return space_.size(); }
    int n() const { return space_.n(); }
    int q() const { return space_.q(); }

    /// Exact max of nu(x)/nu(y) over Hamming-distance-1 pairs; always >= 1.
    double pinned_ratio_bound() const { return b_; }

    /// Law of X_i given X_{-i} = x_{-i}: q positive entries summing to 1.
    /// Every entry is at least 1/(q*b).
    std::vector<double> conditional(std::int64_t x, int i) const {
        const std::int64_t st = space_.stride(i);
        const std::int64_t base = x - space_.digit(x, i) * st;
        std::vector<double> law(static_cast<std::size_t>(q()));
        double z = 0.0;
        for (int s = 0; s < q(); ++s) {
            law[static_cast<std::size_t>(s)] = probs_[base + s * st];
            z += law[static_cast<std::size_t>(s)];
        }
        for (auto& v : law) v /= z;
        return law;
    }

private:
    double compute_pinned_ratio_bound() const {
        double worst = 1.0;
        for (int i = 0; i < n(); ++i) {
            space_.for_each_fiber(i, [&](std::int64_t base, std::int64_t st) {
                double lo = probs_[base], hi = probs_[base];
                for (int s = 1; s < q(); ++s) {
                    const double p = probs_[base + s * st];
                    lo = std::min(lo, p);
                    hi = std::max(hi, p);
                }
                worst = std::max(worst, hi / lo);
            });
        }
        return worst;
    }

    StateSpace space_;
    InteractionGraph graph_;
    Eigen::VectorXd probs_;
    double b_ = 1.0;
};

/// Exact max of nu(x)/nu(y) over Hamming-1 pairs for a raw positive vector.
inline double pinned_ratio_bound(const StateSpace& space, const Eigen::VectorXd& probs) {
    if (probs.minCoeff() <= 0.0) throw SpecError("pinned_ratio_bound: zero-probability state");
    double worst = 1.0;
    for (int i = 0; i < space.n(); ++i) {
        space.for_each_fiber(i, [&](std::int64_t base, std::int64_t st) {
            double lo = probs[base], hi = probs[base];
            for (int s = 1; s < space.q(); ++s) {
                const double p = probs[base + s * st];
                lo = std::min(lo, p);
                hi = std::max(hi, p);
            }
            worst = std::max(worst, hi / lo);
        });
    }
    return worst;
}

/// Checks the Markov property of a full-support measure against a graph.
///
/// For each site i, conditional laws of X_i indexed by the full complement
/// configuration are grouped by their restriction to N(i); within a group
/// all laws must coincide. Reports the largest total-variation gap found
/// (exact over all pairs in a group, via the sign-pattern trick).
inline MarkovCheckResult verify_markov_property(const StateSpace& space, const Eigen::VectorXd& probs,
                                                const InteractionGraph& graph, double tol = 1e-10) {
    const int q = space.q();
    MarkovCheckResult res;
    for (int i = 0; i < space.n(); ++i) {
        // Key a fiber by the symbols on N(i); all other off-i coordinates are free.
        std::map<std::vector<int>, std::vector<std::vector<double>>> groups;
        const auto& nbrs = graph.neighbors(i);
        space.for_each_fiber(i, [&](std::int64_t base, std::int64_t st) {
            std::vector<int> key(nbrs.size());
            for (std::size_t k = 0; k < nbrs.size(); ++k) key[k] = space.digit(base, nbrs[k]);
            std::vector<double> law(static_cast<std::size_t>(q));
            double z = 0.0;
            for (int s = 0; s < q; ++s) {
                law[static_cast<std::size_t>(s)] = probs[base + s * st];
                z += law[static_cast<std::size_t>(s)];
            }
            for (auto& v : law) v /= z;
            groups[std::move(key)].push_back(std::move(law));
        });
        for (const auto& [key, laws] : groups) {
            const double tv = 0.5 * detail::l1_diameter(laws, q);
            if (tv > res.worst_tv) {
                res.worst_tv = tv;
                res.worst_site = i;
            }
        }
    }
    res.holds = res.worst_tv <= tol;
    return res;
}

inline MarkovCheckResult verify_markov_property(const GibbsMeasure& mu, const InteractionGraph& graph,
                                                double tol = 1e-10) {
    return verify_markov_property(mu.space(), mu.probs(), graph, tol);
}

/// Builds a measure from an explicit table of positive weights and a claimed
/// interaction graph. The Markov property is verified; violations beyond
/// tolerance reject the construction.
inline GibbsMeasure build_mrf_from_table(StateSpace space, const Eigen::VectorXd& weights,
                                         InteractionGraph graph, double markov_tol = 1e-10) {
    if (weights.size() != space.size()) throw SpecError("weight table has wrong length");
    if (weights.minCoeff() <= 0.0) throw SpecError("weights must be strictly positive");
    Eigen::VectorXd logw = weights.array().log();
    auto mu = GibbsMeasure::from_log_weights(std::move(space), std::move(graph), logw);
    const auto check = verify_markov_property(mu, mu.graph(), markov_tol);
    if (!check.holds)
        throw SpecError("weight table is not Markov w.r.t. the claimed graph (worst TV " +
                        std::to_string(check.worst_tv) + " at site " + std::to_string(check.worst_site) + ")");
    return mu;
}

}  // namespace glauber
