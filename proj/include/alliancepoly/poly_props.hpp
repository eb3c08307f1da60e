#ifndef ALLIANCEPOLY_POLY_PROPS_HPP
#define ALLIANCEPOLY_POLY_PROPS_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "alliancepoly/bipoly.hpp"
#include "alliancepoly/errors.hpp"

namespace alliancepoly {

// Everything in this module reads a da polynomial alone -- deliberately no
// graph parameter, so the extractors double as validators for foreign
// polynomials (e.g. loaded from JSON).

namespace detail {

inline long long to_count(const BigInt& value, const char* what) {
    if (value < 0 || value > BigInt(1) << 62) {
        throw DomainError(std::string(what) +
                          " is not a plausible graph quantity");
    }
    return value.convert_to<long long>();
}

}  // namespace detail

// order = sum of coefficients of the x^1 slice (one singleton per vertex)
inline long long order_of(const BiPoly& da) {
    UniPoly s = slice_x(da, 1);
    if (s.is_zero()) {
        throw DomainError("zero x^1 slice: not the da of a nonempty graph");
    }
    return detail::to_count(s.coeff_sum(), "order");
}

inline long long size_of(const BiPoly& da) {
    return detail::to_count(slice_x(da, 2).coeff_sum(), "size");
}

inline bool is_connected_poly(const BiPoly& da) {
    return x_degree(da) == order_of(da);
}

// coefficient of x y^{n-k} counts the vertices of degree k
inline std::vector<int> degree_sequence_of(const BiPoly& da) {
    long long n = order_of(da);
    if (n > 1'000'000) {
        throw DomainError("order too large to materialize a degree sequence");
    }
    std::vector<int> degrees;
    degrees.reserve(static_cast<std::size_t>(n));
    for (const auto& [b, c] : slice_x(da, 1).terms()) {
        if (b < 1 || b > n) {
            throw DomainError("x^1 slice exponent " + std::to_string(b) +
                              " implies an impossible degree");
        }
        long long count = detail::to_count(c, "degree multiplicity");
        for (long long i = 0; i < count; ++i) {
            degrees.push_back(static_cast<int>(n - b));
        }
    }
    std::sort(degrees.begin(), degrees.end(), std::greater<int>());
    return degrees;
}

inline BigInt connected_k_subset_count(const BiPoly& da, int k) {
    return slice_x(da, k).coeff_sum();
}

// connected graphs only: n - [x^{n-1}] da(G;x,1)
inline long long cut_vertex_count(const BiPoly& da) {
    long long n = order_of(da);
    if (!is_connected_poly(da)) {
        throw DomainError("cut_vertex_count requires a connected polynomial");
    }
    BigInt survivors = connected_k_subset_count(da, static_cast<int>(n) - 1);
    if (survivors > n) {
        throw DomainError("x^{n-1} slice larger than the order");
    }
    return n - detail::to_count(survivors, "cut vertex complement");
}

// (maximum component order, number of components of that order)
inline std::pair<int, BigInt> max_component(const BiPoly& da) {
    order_of(da);  // validates nonzero x^1 slice
    int c = x_degree(da);
    return {c, connected_k_subset_count(da, c)};
}

// Delta if the x^1 slice is the single monomial n y^{n-Delta}, else none.
inline std::optional<int> regular_degree(const BiPoly& da) {
    UniPoly s = slice_x(da, 1);
    if (s.term_count() != 1) return std::nullopt;
    auto [b, c] = *s.terms().begin();
    if (c > (BigInt(1) << 31)) return std::nullopt;
    long long n = c.convert_to<long long>();
    long long delta = n - b;
    if (delta < 0 || delta > n - 1) return std::nullopt;
    return static_cast<int>(delta);
}

// regular graphs: number of components of cardinality k is
// [x^k y^{Delta+n}] da
inline BigInt regular_component_count(const BiPoly& da, int k) {
    auto delta = regular_degree(da);
    if (!delta) {
        throw DomainError(
            "regular_component_count requires a regular polynomial");
    }
    long long n = order_of(da);
    return da.coeff(k, static_cast<int>(n) + *delta);
}

struct TriangleCensus {
    BigInt k3;   // connected induced subgraphs of order 3
    BigInt s32;  // order-3 size-2 subgraphs (paths, not necessarily induced)
    BigInt s33;  // triangles
    friend bool operator==(const TriangleCensus&, const TriangleCensus&) =
        default;
};

// S_{3,2} = sum over v of C(deg v, 2) from the degree sequence,
// k_3 = [x^3] da(G;x,1), and triangles from k3 = s32 - 2 s33.
inline TriangleCensus triangle_census(const BiPoly& da) {
    TriangleCensus census;
    for (int d : degree_sequence_of(da)) {
        census.s32 += BigInt(d) * (d - 1) / 2;
    }
    census.k3 = connected_k_subset_count(da, 3);
    BigInt doubled = census.s32 - census.k3;
    if (doubled < 0 || doubled % 2 != 0) {
        throw DomainError("triangle census parity violated: not a da input");
    }
    census.s33 = doubled / 2;
    return census;
}

struct PropertyProfile {
    long long order = 0;
    long long size = 0;
    bool connected = false;
    std::vector<int> degrees;  // descending
    std::optional<long long> cut_vertices;  // connected graphs only
    int max_component_order = 0;
    BigInt max_component_count;
    BigInt k3, s32, s33;
};

inline PropertyProfile property_profile(const BiPoly& da) {
    PropertyProfile profile;
    profile.order = order_of(da);
    profile.size = size_of(da);
    profile.connected = is_connected_poly(da);
    profile.degrees = degree_sequence_of(da);
    if (profile.connected) profile.cut_vertices = cut_vertex_count(da);
    auto [c, count] = max_component(da);
    profile.max_component_order = c;
    profile.max_component_count = count;
    TriangleCensus census = triangle_census(da);
    profile.k3 = census.k3;
    profile.s32 = census.s32;
    profile.s33 = census.s33;
    return profile;
}

inline std::string to_json(const PropertyProfile& profile) {
    nlohmann::ordered_json doc;
    doc["order"] = profile.order;
    doc["size"] = profile.size;
    doc["connected"] = profile.connected;
    doc["degrees"] = profile.degrees;
    if (profile.cut_vertices) {
        doc["cut_vertices"] = *profile.cut_vertices;
    } else {
        doc["cut_vertices"] = nullptr;
    }
    doc["max_component"] = {{"order", profile.max_component_order},
                            {"count", profile.max_component_count.str()}};
    doc["k3"] = profile.k3.str();
    doc["s32"] = profile.s32.str();
    doc["s33"] = profile.s33.str();
    return doc.dump();
}

}  // namespace alliancepoly

#endif
