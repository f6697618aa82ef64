#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cstdint>
#include <vector>

#include "glauber/measure.hpp"

namespace glauber {

/// Site-to-site sensitivity matrix: A_ij is the worst-case total-variation
/// move of the conditional law of X_i when only the value at site j changes.
/// Zero diagonal; operator norm below 1 is a classical mixing condition.
struct DobrushinMatrix {
    Eigen::MatrixXd entries;
    double op_norm = 0.0;
};

/// Exact computation by enumerating every boundary configuration and every
/// replacement symbol at j. Entries for non-neighbors of i vanish (up to
/// rounding) whenever the measure is Markov for its graph.
inline DobrushinMatrix dobrushin_matrix(const GibbsMeasure& mu) {
    const auto& space = mu.space();
    const int n = space.n();
    const int q = space.q();
    DobrushinMatrix out;
    out.entries = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            double worst = 0.0;
            space.for_each_fiber(i, [&](std::int64_t base, std::int64_t) {
                if (space.digit(base, j) != 0) return;  // one representative per j-fiber
                std::vector<std::vector<double>> laws;
                laws.reserve(static_cast<std::size_t>(q));
                for (int z = 0; z < q; ++z) laws.push_back(mu.conditional(space.with_digit(base, j, z), i));
                for (int a = 0; a < q; ++a)
                    for (int c = a + 1; c < q; ++c) {
                        double tv = 0.0;
                        for (int s = 0; s < q; ++s)
                            tv += std::abs(laws[static_cast<std::size_t>(a)][static_cast<std::size_t>(s)] -
                                           laws[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)]);
                        worst = std::max(worst, 0.5 * tv);
                    }
            });
            out.entries(i, j) = worst;
        }
    }
    out.op_norm = out.entries.jacobiSvd().singularValues()[0];
    return out;
}

}  // namespace glauber
