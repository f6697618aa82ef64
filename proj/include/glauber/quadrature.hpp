#pragma once

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

#include "glauber/errors.hpp"

namespace glauber {

struct QuadratureResult {
    double value = 0.0;
    int nodes = 0;
    bool converged = false;
};

/// Gauss-Legendre integration of f over [a, b], doubling the node count
/// from 16 until successive values agree to rel_tol. Throws when 1024 nodes
/// are not enough.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-9) {
    using boost::math::quadrature::gauss;
    auto eval = [&](int nodes) -> double {
        switch (nodes) {
            case 16: return gauss<double, 16>::integrate(f, a, b);
            case 32: return gauss<double, 32>::integrate(f, a, b);
            case 64: return gauss<double, 64>::integrate(f, a, b);
            case 128: return gauss<double, 128>::integrate(f, a, b);
            case 256: return gauss<double, 256>::integrate(f, a, b);
            case 512: return gauss<double, 512>::integrate(f, a, b);
            default: return gauss<double, 1024>::integrate(f, a, b);
        }
    };
    QuadratureResult res;
    double prev = eval(16);
    for (int nodes = 32; nodes <= 1024; nodes *= 2) {
        const double cur = eval(nodes);
        res.value = cur;
        res.nodes = nodes;
        if (std::abs(cur - prev) <= rel_tol * std::max(std::abs(cur), 1e-300)) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    throw NumericalError("quadrature did not converge at 1024 nodes");
}

}  // namespace glauber
