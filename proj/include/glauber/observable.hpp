#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "glauber/state_space.hpp"

namespace glauber {

/// A real observable f : Sigma^n -> R, tabulated over the enumerated space.
struct Observable {
    Eigen::VectorXd values;

    bool is_boolean() const {
        for (Eigen::Index i = 0; i < values.size(); ++i)
            if (values[i] != 0.0 && values[i] != 1.0) return false;
        return true;
    }
};

namespace observables {

inline Observable constant(const StateSpace& space, double c) {
    return {Eigen::VectorXd::Constant(space.size(), c)};
}

/// Indicator that coordinate k carries the top symbol (q=2: spin +1).
inline Observable dictator(const StateSpace& space, int k) {
    if (k < 0 || k >= space.n()) throw SpecError("dictator: coordinate out of range");
    Eigen::VectorXd v(space.size());
    const int top = space.q() - 1;
    for (std::int64_t x = 0; x < space.size(); ++x) v[x] = space.digit(x, k) == top ? 1.0 : 0.0;
    return {std::move(v)};
}

/// Majority of +1 spins over -1 spins (q=2 only). Exact ties go to the
/// value of coordinate 0, which keeps the function monotone for even n.
inline Observable majority(const StateSpace& space) {
    if (space.q() != 2) throw SpecError("majority needs a binary alphabet");
    Eigen::VectorXd v(space.size());
    for (std::int64_t x = 0; x < space.size(); ++x) {
        int sum = 0;
        for (int i = 0; i < space.n(); ++i) sum += 2 * space.digit(x, i) - 1;
        if (sum != 0)
            v[x] = sum > 0 ? 1.0 : 0.0;
        else
            v[x] = space.digit(x, 0) == 1 ? 1.0 : 0.0;
    }
    return {std::move(v)};
}

/// XOR of the bits in S (q=2 only); S empty means all coordinates.
inline Observable parity(const StateSpace& space, std::vector<int> S = {}) {
    if (space.q() != 2) throw SpecError("parity needs a binary alphabet");
    if (S.empty())
        for (int i = 0; i < space.n(); ++i) S.push_back(i);
    for (int i : S)
        if (i < 0 || i >= space.n()) throw SpecError("parity: coordinate out of range");
    Eigen::VectorXd v(space.size());
    for (std::int64_t x = 0; x < space.size(); ++x) {
        int bits = 0;
        for (int i : S) bits ^= space.digit(x, i);
        v[x] = bits;
    }
    return {std::move(v)};
}

/// OR of ANDs over consecutive blocks of width w (q=2 only; the last block
/// may be shorter).
inline Observable tribes(const StateSpace& space, int w) {
    if (space.q() != 2) throw SpecError("tribes needs a binary alphabet");
    if (w < 1) throw SpecError("tribes needs block width >= 1");
    Eigen::VectorXd v(space.size());
    for (std::int64_t x = 0; x < space.size(); ++x) {
        bool any = false;
        for (int start = 0; start < space.n() && !any; start += w) {
            bool all = true;
            for (int i = start; i < std::min(space.n(), start + w); ++i)
                if (space.digit(x, i) != 1) { all = false; break; }
            any = all;
        }
        v[x] = any ? 1.0 : 0.0;
    }
    return {std::move(v)};
}

/// Indicator of an explicit set of state indices.
inline Observable indicator_of_set(const StateSpace& space, const std::vector<std::int64_t>& states) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(space.size());
    for (auto x : states) {
        if (x < 0 || x >= space.size()) throw SpecError("indicator: state index out of range");
        v[x] = 1.0;
    }
    return {std::move(v)};
}

}  // namespace observables

}  // namespace glauber
