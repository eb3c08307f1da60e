#ifndef ALLIANCEPOLY_GRAPH_HPP
#define ALLIANCEPOLY_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alliancepoly/errors.hpp"

namespace alliancepoly {

// Hard cap that keeps every vertex subset in one machine word.
inline constexpr int kMaxVertices = 64;

// Subset of the vertex indices 0..63, immutable value type.
class VertexSubset {
public:
    constexpr VertexSubset() = default;
    constexpr explicit VertexSubset(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSubset single(int v) {
        return VertexSubset(std::uint64_t{1} << v);
    }

    // {0, 1, ..., n-1}
    static constexpr VertexSubset first_n(int n) {
        return VertexSubset(n >= 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }

    constexpr VertexSubset with(int v) const {
        return VertexSubset(bits_ | (std::uint64_t{1} << v));
    }
    constexpr VertexSubset without(int v) const {
        return VertexSubset(bits_ & ~(std::uint64_t{1} << v));
    }
    constexpr VertexSubset unite(VertexSubset o) const {
        return VertexSubset(bits_ | o.bits_);
    }
    constexpr VertexSubset intersect(VertexSubset o) const {
        return VertexSubset(bits_ & o.bits_);
    }
    constexpr VertexSubset minus(VertexSubset o) const {
        return VertexSubset(bits_ & ~o.bits_);
    }
    // complement relative to a graph of order n
    constexpr VertexSubset complement_in(int n) const {
        return VertexSubset(first_n(n).bits_ & ~bits_);
    }
    int intersection_size(VertexSubset o) const {
        return std::popcount(bits_ & o.bits_);
    }
    int lowest() const { return std::countr_zero(bits_); }

    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b; b &= b - 1) {
            f(std::countr_zero(b));
        }
    }

    friend constexpr bool operator==(VertexSubset, VertexSubset) = default;

private:
    std::uint64_t bits_ = 0;
};

// Immutable simple undirected graph with adjacency rows as vertex subsets.
// Safe to share across threads once constructed.
class Graph {
public:
    Graph(int n, std::vector<VertexSubset> adjacency, std::string label = "")
        : n_(n), adj_(std::move(adjacency)), label_(std::move(label)) {
        int degree_sum = 0;
        for (int v = 0; v < n_; ++v) degree_sum += adj_[v].size();
        edge_count_ = degree_sum / 2;
    }

    int order() const { return n_; }
    int size() const { return edge_count_; }
    VertexSubset vertices() const { return VertexSubset::first_n(n_); }
    VertexSubset neighbors(int u) const { return adj_[u]; }
    int degree(int u) const { return adj_[u].size(); }
    bool has_edge(int u, int v) const { return adj_[u].contains(v); }
    const std::string& label() const { return label_; }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    // delta_S(u): neighbors of u inside s
    int degree_in(int u, VertexSubset s) const {
        return adj_[u].intersection_size(s);
    }

    std::vector<int> degree_multiset() const {
        std::vector<int> degs(n_);
        for (int v = 0; v < n_; ++v) degs[v] = degree(v);
        std::sort(degs.begin(), degs.end(), std::greater<int>());
        return degs;
    }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> edges;
        edges.reserve(edge_count_);
        for (int u = 0; u < n_; ++u) {
            adj_[u].for_each([&](int v) {
                if (u < v) edges.emplace_back(u, v);
            });
        }
        return edges;
    }

private:
    int n_;
    std::vector<VertexSubset> adj_;
    std::string label_;
    int edge_count_ = 0;
};

inline Graph graph_from_edge_list(int n,
                                  std::span<const std::pair<int, int>> edges,
                                  std::string label = "") {
    if (n < 1 || n > kMaxVertices) {
        throw DomainError("graph order must be in [1, 64], got " +
                          std::to_string(n));
    }
    std::vector<VertexSubset> adj(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw DomainError("edge endpoint out of range: (" +
                              std::to_string(u) + ", " + std::to_string(v) +
                              ") with n = " + std::to_string(n));
        }
        if (u == v) {
            throw DomainError("self-loop at vertex " + std::to_string(u));
        }
        adj[u] = adj[u].with(v);
        adj[v] = adj[v].with(u);
    }
    return Graph(n, std::move(adj), std::move(label));
}

inline Graph graph_from_edge_list(
    int n, std::initializer_list<std::pair<int, int>> edges,
    std::string label = "") {
    return graph_from_edge_list(
        n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()),
        std::move(label));
}

// h's vertices are shifted by g's order.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > kMaxVertices) {
        throw DomainError("disjoint union would exceed the 64-vertex cap");
    }
    std::vector<VertexSubset> adj(n);
    for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
    for (int v = 0; v < h.order(); ++v) {
        adj[g.order() + v] = VertexSubset(h.neighbors(v).bits() << g.order());
    }
    return Graph(n, std::move(adj));
}

// graph6, short form only (order <= 62). First byte encodes n as n+63; the
// remaining bytes pack the strict upper triangle x(i,j), i<j, column-major,
// 6 bits per byte most-significant first, zero padded.
inline Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw ParseError("graph6: empty line");
    for (char c : line) {
        if (c < 63 || c > 126) {
            throw ParseError("graph6: character out of range: '" +
                             std::string(1, c) + "'");
        }
    }
    if (line[0] == 126) {
        throw ParseError("graph6: extended format (order > 62) not supported");
    }
    int n = line[0] - 63;
    if (n < 1) throw ParseError("graph6: empty graph of order 0 rejected");
    int nbits = n * (n - 1) / 2;
    std::size_t need = (nbits + 5) / 6;
    if (line.size() - 1 < need) throw ParseError("graph6: truncated bit stream");
    if (line.size() - 1 > need) throw ParseError("graph6: trailing characters");

    auto bit = [&](int k) {
        int byte = line[1 + k / 6] - 63;
        return (byte >> (5 - k % 6)) & 1;
    };
    std::vector<VertexSubset> adj(n);
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (bit(k)) {
                adj[i] = adj[i].with(j);
                adj[j] = adj[j].with(i);
            }
        }
    }
    for (int p = nbits; p < static_cast<int>(need) * 6; ++p) {
        if (bit(p)) throw ParseError("graph6: nonzero padding bits");
    }
    return Graph(n, std::move(adj));
}

inline std::string encode_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) {
        throw DomainError("graph6 short form supports order <= 62 only");
    }
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, nacc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++nacc == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = nacc = 0;
            }
        }
    }
    if (nacc > 0) out.push_back(static_cast<char>((acc << (6 - nacc)) + 63));
    return out;
}

}  // namespace alliancepoly

#endif
