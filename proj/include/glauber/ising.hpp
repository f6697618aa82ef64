#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "glauber/measure.hpp"

namespace glauber {

/// Pairwise spin model on {-1,+1}^n:
///   nu(x) ~ exp( beta * sum_{(i,j) in E} J_ij x_i x_j + sum_i h_i x_i ).
/// Couplings live exactly on the edges of the graph; any sign of beta, J
/// and h is accepted.
struct IsingModel {
    InteractionGraph graph;
    std::map<std::pair<int, int>, double> couplings;  // keyed by (min,max) endpoint
    std::vector<double> field;                        // length n, zero if empty
    double beta = 1.0;

    IsingModel(InteractionGraph g, std::map<std::pair<int, int>, double> J,
               std::vector<double> h, double beta_)
        : graph(std::move(g)), couplings(std::move(J)), field(std::move(h)), beta(beta_) {
        if (field.empty()) field.assign(static_cast<std::size_t>(graph.n()), 0.0);
        if (static_cast<int>(field.size()) != graph.n()) throw SpecError("field has wrong length");
        for (const auto& [e, J] : couplings) {
            if (!graph.adjacent(e.first, e.second))
                throw SpecError("coupling on a non-edge (" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + ")");
            if (!std::isfinite(J)) throw SpecError("coupling must be finite");
        }
        for (double h : field)
            if (!std::isfinite(h)) throw SpecError("field must be finite");
        if (!std::isfinite(beta)) throw SpecError("beta must be finite");
    }

    /// Uniform coupling J on every edge of the graph.
    static IsingModel homogeneous(InteractionGraph g, double J, double beta) {
        std::map<std::pair<int, int>, double> c;
        for (auto e : g.edges()) c[e] = J;
        return IsingModel(std::move(g), std::move(c), {}, beta);
    }
};

/// Gibbs measure of an Ising model, built in log space. b is computed
/// exactly from the resulting table.
inline GibbsMeasure build_ising(const IsingModel& model, std::int64_t cap = StateSpace::kDefaultCap) {
    StateSpace space(model.graph.n(), Alphabet::spins(), cap);
    const auto N = space.size();
    Eigen::VectorXd logw(N);
    const int n = space.n();
    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (std::int64_t v = 0; v < N; ++v) {
        for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = 2 * space.digit(v, i) - 1;
        double energy = 0.0;
        for (const auto& [e, J] : model.couplings)
            energy += J * sigma[static_cast<std::size_t>(e.first)] * sigma[static_cast<std::size_t>(e.second)];
        double w = model.beta * energy;
        for (int i = 0; i < n; ++i) w += model.field[static_cast<std::size_t>(i)] * sigma[static_cast<std::size_t>(i)];
        logw[v] = w;
    }
    return GibbsMeasure::from_log_weights(std::move(space), model.graph, logw);
}

}  // namespace glauber
