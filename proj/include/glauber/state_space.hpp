#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "glauber/errors.hpp"

namespace glauber {

/// Ordered finite alphabet of spin labels. Coordinates of a configuration
/// take values in [0, q) and are rendered with these labels.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
        if (symbols_.size() < 2) throw SpecError("alphabet needs at least 2 symbols");
        std::set<std::string> seen(symbols_.begin(), symbols_.end());
        if (seen.size() != symbols_.size()) throw SpecError("alphabet symbols must be distinct");
    }

    /// The binary spin alphabet {-1,+1}; symbol 0 is "-1", symbol 1 is "+1".
    static Alphabet spins() { return Alphabet({"-1", "+1"}); }

    static Alphabet labeled(int q) {
        std::vector<std::string> s;
        for (int i = 0; i < q; ++i) s.push_back(std::to_string(i));
        return Alphabet(std::move(s));
    }

    int q() const { return static_cast<int>(symbols_.size()); }
    const std::string& symbol(int s) const { return symbols_.at(static_cast<std::size_t>(s)); }
    const std::vector<std::string>& symbols() const { return symbols_; }

    bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

private:
    std::vector<std::string> symbols_;
};

/// One configuration: a length-n vector of symbol indices, each in [0, q).
using SpinConfig = std::vector<int>;

inline int hamming_distance(const SpinConfig& x, const SpinConfig& y) {
    if (x.size() != y.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) ++d;
    return d;
}

/// Explicit enumeration of the configuration space Sigma^n with a bijective
/// mixed-radix index (coordinate 0 is the least-significant digit, so
/// single-site neighbours of a state sit at stride q^i).
///
/// Construction refuses spaces with more than `cap` states; dense work
/// scales with the square of the state count, so the cap keeps memory
/// predictable. Immutable after construction.
class StateSpace {
public:
    static constexpr std::int64_t kDefaultCap = std::int64_t{1} << 24;

    StateSpace(int n, Alphabet alphabet, std::int64_t cap = kDefaultCap)
        : n_(n), alphabet_(std::move(alphabet)) {
        if (n < 1) throw SpecError("state space needs n >= 1 coordinates");
        const std::int64_t q = alphabet_.q();
        std::int64_t total = 1;
        strides_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            strides_[static_cast<std::size_t>(i)] = total;
            if (total > cap / q)
                throw CapError("state space q^n exceeds cap of " + std::to_string(cap) +
                               " states (raise the cap to enumerate anyway)");
            total *= q;
        }
        total_ = total;
    }

    int n() const { return n_; }
    int q() const { return alphabet_.q(); }
    const Alphabet& alphabet() const { return alphabet_; }
    std::int64_t size() const { return total_; }
    std::int64_t stride(int i) const { return strides_[static_cast<std::size_t>(i)]; }

    std::int64_t index_of(const SpinConfig& x) const {
        if (static_cast<int>(x.size()) != n_)
            throw std::invalid_argument("index_of: configuration has wrong length");
        std::int64_t idx = 0;
        for (int i = 0; i < n_; ++i) {
            const int s = x[static_cast<std::size_t>(i)];
            if (s < 0 || s >= q())
                throw std::invalid_argument("index_of: symbol out of range at coordinate " +
                                            std::to_string(i));
            idx += strides_[static_cast<std::size_t>(i)] * s;
        }
        return idx;
    }

    SpinConfig config_of(std::int64_t index) const {
        check_index(index);
        SpinConfig x(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            x[static_cast<std::size_t>(i)] = static_cast<int>((index / strides_[static_cast<std::size_t>(i)]) % q());
        }
        return x;
    }

    /// Symbol at coordinate i of the state with this index.
    int digit(std::int64_t index, int i) const {
        return static_cast<int>((index / stride(i)) % q());
    }

    /// Index of the same state with coordinate i overwritten by symbol s.
    std::int64_t with_digit(std::int64_t index, int i, int s) const {
        return index + (s - digit(index, i)) * stride(i);
    }

    /// Visits every single-site fiber of coordinate i exactly once.
    /// A fiber is the set of q states agreeing everywhere off coordinate i;
    /// its members are base, base + stride, ..., base + (q-1) * stride.
    template <class F>
    void for_each_fiber(int i, F&& fn) const {
        const std::int64_t st = stride(i);
        const std::int64_t block = st * q();
        for (std::int64_t hi = 0; hi < total_; hi += block)
            for (std::int64_t lo = 0; lo < st; ++lo) fn(hi + lo, st);
    }

private:
    void check_index(std::int64_t index) const {
        if (index < 0 || index >= total_) throw std::invalid_argument("state index out of range");
    }

    int n_;
    Alphabet alphabet_;
    std::int64_t total_ = 0;
    std::vector<std::int64_t> strides_;
};

/// The q configurations (including x itself) agreeing with x off coordinate i.
inline std::vector<SpinConfig> hamming_neighbors(const StateSpace& space, const SpinConfig& x, int i) {
    if (i < 0 || i >= space.n()) throw std::invalid_argument("hamming_neighbors: coordinate out of range");
    std::vector<SpinConfig> out;
    out.reserve(static_cast<std::size_t>(space.q()));
    for (int s = 0; s < space.q(); ++s) {
        SpinConfig y = x;
        y[static_cast<std::size_t>(i)] = s;
        out.push_back(std::move(y));
    }
    return out;
}

}  // namespace glauber
