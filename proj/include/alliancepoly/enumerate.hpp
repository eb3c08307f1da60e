#ifndef ALLIANCEPOLY_ENUMERATE_HPP
#define ALLIANCEPOLY_ENUMERATE_HPP

#include <atomic>
#include <climits>
#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

#include "alliancepoly/bipoly.hpp"
#include "alliancepoly/errors.hpp"
#include "alliancepoly/graph.hpp"

namespace alliancepoly {

// f_y(S) = min over u in S of (delta_S(u) - delta_Sbar(u) + n).
struct AllianceValue {
    int value = 0;
    friend bool operator==(AllianceValue, AllianceValue) = default;
};

struct EnumConfig {
    std::uint64_t max_subgraphs = 50'000'000;  // guard, counted in visits
    bool parallel = false;
    bool verify_fy = false;  // cross-check incremental f_y at every visit
};

inline AllianceValue alliance_value(const Graph& g, VertexSubset s) {
    if (s.empty()) throw DomainError("alliance value of the empty set");
    if (!s.minus(g.vertices()).empty()) {
        throw DomainError("subset contains vertices outside the graph");
    }
    int n = g.order();
    int best = INT_MAX;
    s.for_each([&](int u) {
        int inside = g.degree_in(u, s);
        best = std::min(best, 2 * inside - g.degree(u));
    });
    return AllianceValue{best + n};
}

inline bool is_defensive_alliance(const Graph& g, VertexSubset s) {
    return alliance_value(g, s).value >= g.order() - 1;
}

inline bool is_strong_defensive_alliance(const Graph& g, VertexSubset s) {
    return alliance_value(g, s).value >= g.order();
}

inline bool is_defensive_k_alliance(const Graph& g, VertexSubset s, int k) {
    int max_deg = g.max_degree();
    if (k < -max_deg || k > max_deg) {
        throw DomainError("k must satisfy -max_degree <= k <= max_degree");
    }
    return alliance_value(g, s).value >= g.order() + k;
}

namespace detail {

struct StopEnumeration {};

struct GuardState {
    std::atomic<std::uint64_t> count{0};
    std::uint64_t limit = 0;
    std::atomic<bool> tripped{false};
};

inline unsigned worker_count(const EnumConfig& cfg, int n) {
    if (!cfg.parallel) return 1;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return std::max(1u, std::min(hw, static_cast<unsigned>(n)));
}

// Enumerates every vertex subset inducing a connected subgraph exactly once:
// sets are grown from their minimum vertex by attaching subsets of the
// current neighborhood, with already-expanded neighborhoods banned so no set
// is reached twice. delta_[u] tracks |adj(u) & S| incrementally.
template <class MaskVisitor>
class RootEnumerator {
public:
    RootEnumerator(const Graph& g, GuardState& guard, bool verify,
                   MaskVisitor& visit)
        : guard_(guard), visit_(visit), n_(g.order()), verify_(verify) {
        for (int v = 0; v < n_; ++v) {
            adj_[v] = g.neighbors(v).bits();
            deg_[v] = g.degree(v);
            delta_[v] = 0;
        }
    }

    void run_root(int v) {
        std::uint64_t s = std::uint64_t{1} << v;
        add_vertices(s);
        visit_set(s);
        std::uint64_t banned = s | (s - 1);
        recurse(s, adj_[v] & ~banned, banned);
        remove_vertices(s);
    }

private:
    void recurse(std::uint64_t s, std::uint64_t ext, std::uint64_t banned) {
        for (std::uint64_t t = ext; t; t = (t - 1) & ext) {
            std::uint64_t reached = add_vertices(t);
            visit_set(s | t);
            recurse(s | t, reached & ~(banned | ext), banned | ext);
            remove_vertices(t);
        }
    }

    std::uint64_t add_vertices(std::uint64_t t) {
        std::uint64_t reached = 0;
        for (std::uint64_t b = t; b; b &= b - 1) {
            std::uint64_t row = adj_[std::countr_zero(b)];
            reached |= row;
            for (; row; row &= row - 1) ++delta_[std::countr_zero(row)];
        }
        return reached;
    }

    void remove_vertices(std::uint64_t t) {
        for (std::uint64_t b = t; b; b &= b - 1) {
            std::uint64_t row = adj_[std::countr_zero(b)];
            for (; row; row &= row - 1) --delta_[std::countr_zero(row)];
        }
    }

    void visit_set(std::uint64_t s) {
        std::uint64_t c = guard_.count.fetch_add(1, std::memory_order_relaxed);
        if (c >= guard_.limit || guard_.tripped.load(std::memory_order_relaxed)) {
            guard_.tripped.store(true, std::memory_order_relaxed);
            throw StopEnumeration{};
        }
        int best = INT_MAX;
        for (std::uint64_t b = s; b; b &= b - 1) {
            int u = std::countr_zero(b);
            best = std::min(best, 2 * delta_[u] - deg_[u]);
        }
        int fy = best + n_;
        if (verify_) {
            int fresh = INT_MAX;
            for (std::uint64_t b = s; b; b &= b - 1) {
                int u = std::countr_zero(b);
                fresh = std::min(
                    fresh, 2 * std::popcount(adj_[u] & s) - deg_[u]);
            }
            if (fresh + n_ != fy) {
                throw InternalError("incremental f_y disagrees with "
                                    "from-scratch recomputation");
            }
        }
        visit_(s, fy);
    }

    GuardState& guard_;
    MaskVisitor& visit_;
    int n_;
    bool verify_;
    std::uint64_t adj_[kMaxVertices];
    int deg_[kMaxVertices];
    int delta_[kMaxVertices];
};

// Runs the root loop serially or across workers pulling roots from a shared
// counter. make_visitor(worker) must return the mask visitor that worker
// uses. Returns the number of subsets visited.
template <class MakeVisitor>
std::uint64_t run_over_roots(const Graph& g, const EnumConfig& cfg,
                             MakeVisitor&& make_visitor) {
    if (cfg.max_subgraphs < 1) throw DomainError("max_subgraphs must be >= 1");
    GuardState guard;
    guard.limit = cfg.max_subgraphs;
    int n = g.order();
    unsigned workers = worker_count(cfg, n);

    std::atomic<int> next_root{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};

    auto work = [&](unsigned worker) {
        auto visitor = make_visitor(worker);
        RootEnumerator<decltype(visitor)> enumerator(g, guard, cfg.verify_fy,
                                                     visitor);
        try {
            for (;;) {
                int v = next_root.fetch_add(1, std::memory_order_relaxed);
                if (v >= n || failed.load(std::memory_order_relaxed)) break;
                enumerator.run_root(v);
            }
        } catch (const StopEnumeration&) {
            // guard tripped; unwind quietly
        } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    if (failure) std::rethrow_exception(failure);
    std::uint64_t visited =
        std::min<std::uint64_t>(guard.count.load(), guard.limit);
    if (guard.tripped.load()) {
        throw GuardExceeded(visited, guard.limit);
    }
    return visited;
}

}  // namespace detail

// Invokes the visitor exactly once per nonempty S with G[S] connected, with
// the exact f_y(S). With cfg.parallel the visitor runs concurrently from
// several workers and must be reentrant.
template <class Visitor>
std::uint64_t enumerate_connected_subsets(const Graph& g, Visitor&& visitor,
                                          const EnumConfig& cfg = {}) {
    return detail::run_over_roots(g, cfg, [&](unsigned) {
        return [&visitor](std::uint64_t mask, int fy) {
            visitor(VertexSubset(mask), AllianceValue{fy});
        };
    });
}

// da(G;x,y) = sum over visited S of x^|S| y^(f_y(S)).
inline BiPoly defensive_alliance_polynomial(const Graph& g,
                                            const EnumConfig& cfg = {}) {
    int n = g.order();
    int width = 2 * n;  // y-exponents live in 1..2n-1
    unsigned slots = detail::worker_count(cfg, n);
    std::vector<std::vector<std::uint64_t>> grids(
        slots, std::vector<std::uint64_t>(static_cast<std::size_t>(n) * width));

    detail::run_over_roots(g, cfg, [&](unsigned worker) {
        auto* grid = grids[worker].data();
        return [grid, width](std::uint64_t mask, int fy) {
            grid[(std::popcount(mask) - 1) * width + fy] += 1;
        };
    });

    // Each worker accumulated privately; merge is a plain polynomial sum.
    BiPoly result;
    for (const auto& grid : grids) {
        BiPoly part;
        for (int a = 1; a <= n; ++a) {
            for (int b = 0; b < width; ++b) {
                std::uint64_t c = grid[(a - 1) * width + b];
                if (c) part.add_term(a, b, BigInt(c));
            }
        }
        result = poly_add(result, part);
    }
    return result;
}

}  // namespace alliancepoly

#endif
