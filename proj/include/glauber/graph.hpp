#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "glauber/errors.hpp"

namespace glauber {

/// Undirected interaction graph on vertices [0, n). No self-loops, no
/// parallel edges. Immutable after construction.
class InteractionGraph {
public:
    InteractionGraph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(static_cast<std::size_t>(n)) {
        if (n < 1) throw SpecError("graph needs at least one vertex");
        std::set<std::pair<int, int>> seen;
        for (auto [a, b] : edges) {
            if (a < 0 || a >= n || b < 0 || b >= n) throw SpecError("edge endpoint out of range");
            if (a == b) throw SpecError("self-loops are not allowed");
            auto e = std::minmax(a, b);
            if (!seen.insert({e.first, e.second}).second) continue;  // ignore duplicates
            adj_[static_cast<std::size_t>(a)].push_back(b);
            adj_[static_cast<std::size_t>(b)].push_back(a);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
        edges_.assign(seen.begin(), seen.end());
    }

    static InteractionGraph edgeless(int n) { return InteractionGraph(n, {}); }

    static InteractionGraph path(int n) {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
        return InteractionGraph(n, e);
    }

    static InteractionGraph cycle(int n) {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
        if (n > 2) e.push_back({n - 1, 0});
        return InteractionGraph(n, e);
    }

    /// Free-boundary grid on the integer points of a d-dimensional box with
    /// side length L, i.e. (L+1)^d vertices in row-major order.
    static InteractionGraph grid(int d, int L) {
        if (d < 1 || L < 1) throw SpecError("grid needs d >= 1 and L >= 1");
        const int side = L + 1;
        std::int64_t n = 1;
        for (int k = 0; k < d; ++k) n *= side;
        if (n > std::numeric_limits<int>::max()) throw SpecError("grid too large");
        std::vector<std::pair<int, int>> e;
        for (std::int64_t v = 0; v < n; ++v) {
            std::int64_t rem = v, stride = 1;
            for (int k = 0; k < d; ++k) {
                const int coord = static_cast<int>(rem % side);
                rem /= side;
                if (coord + 1 < side) e.push_back({static_cast<int>(v), static_cast<int>(v + stride)});
                stride *= side;
            }
        }
        return InteractionGraph(static_cast<int>(n), e);
    }

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int i) const { return adj_[static_cast<std::size_t>(i)]; }

    bool adjacent(int i, int j) const {
        const auto& nb = neighbors(i);
        return std::binary_search(nb.begin(), nb.end(), j);
    }

    int max_degree() const {
        std::size_t d = 0;
        for (const auto& nb : adj_) d = std::max(d, nb.size());
        return static_cast<int>(d);
    }

    int degree(int i) const { return static_cast<int>(neighbors(i).size()); }

    /// Graph distance; returns n() (an unreachable sentinel > any real
    /// distance) when i and j are in different components.
    int distance(int i, int j) const {
        if (i == j) return 0;
        std::vector<int> dist(static_cast<std::size_t>(n_), -1);
        std::queue<int> bfs;
        dist[static_cast<std::size_t>(i)] = 0;
        bfs.push(i);
        while (!bfs.empty()) {
            const int v = bfs.front();
            bfs.pop();
            for (int w : neighbors(v)) {
                if (dist[static_cast<std::size_t>(w)] >= 0) continue;
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                if (w == j) return dist[static_cast<std::size_t>(w)];
                bfs.push(w);
            }
        }
        return n_;
    }

    /// Closed neighborhood: U together with every neighbor of a vertex of U.
    std::vector<int> closed_neighborhood(const std::vector<int>& us) const {
        std::set<int> out(us.begin(), us.end());
        for (int u : us)
            for (int w : neighbors(u)) out.insert(w);
        return {out.begin(), out.end()};
    }

private:
    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

}  // namespace glauber
