#ifndef ALLIANCEPOLY_FAMILIES_HPP
#define ALLIANCEPOLY_FAMILIES_HPP

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alliancepoly/errors.hpp"
#include "alliancepoly/graph.hpp"

namespace alliancepoly {

enum class Family {
    Path,
    Cycle,
    Star,
    DoubleStar,
    Complete,
    CompleteBipartite,
    Wheel,
    OpenWheel,
    Friendship,
    TriangularBook,
    QuadrilateralBook,
    AttachedComplete,
    Named,
};

// Tagged family descriptor. a/b hold the integer parameters; for Named,
// a is the index 1..4 of the fixed 8-vertex graphs G1..G4.
struct FamilySpec {
    Family family = Family::Path;
    int a = 0;
    int b = 0;

    friend auto operator<=>(const FamilySpec&, const FamilySpec&) = default;

    static FamilySpec path(int n) { return {Family::Path, n, 0}; }
    static FamilySpec cycle(int n) { return {Family::Cycle, n, 0}; }
    static FamilySpec star(int n) { return {Family::Star, n, 0}; }
    static FamilySpec double_star(int r, int t) {
        return {Family::DoubleStar, r, t};
    }
    static FamilySpec complete(int n) { return {Family::Complete, n, 0}; }
    static FamilySpec complete_bipartite(int n, int m) {
        return {Family::CompleteBipartite, n, m};
    }
    static FamilySpec wheel(int n) { return {Family::Wheel, n, 0}; }
    static FamilySpec open_wheel(int n) { return {Family::OpenWheel, n, 0}; }
    static FamilySpec friendship(int n) { return {Family::Friendship, n, 0}; }
    static FamilySpec triangular_book(int n) {
        return {Family::TriangularBook, n, 0};
    }
    static FamilySpec quadrilateral_book(int n) {
        return {Family::QuadrilateralBook, n, 0};
    }
    static FamilySpec attached_complete(int n, int r) {
        return {Family::AttachedComplete, n, r};
    }
    static FamilySpec named(int index) { return {Family::Named, index, 0}; }

    void validate() const {
        bool ok = true;
        switch (family) {
            case Family::Path: ok = a >= 2; break;
            case Family::Cycle: ok = a >= 3; break;
            case Family::Star: ok = a >= 1; break;
            case Family::DoubleStar: ok = a >= 1 && b >= 1; break;
            case Family::Complete: ok = a >= 1; break;
            case Family::CompleteBipartite: ok = a >= 1 && b >= 1; break;
            case Family::Wheel: ok = a >= 3; break;
            case Family::OpenWheel: ok = a >= 4; break;
            case Family::Friendship: ok = a >= 1; break;
            case Family::TriangularBook: ok = a >= 1; break;
            case Family::QuadrilateralBook: ok = a >= 1; break;
            case Family::AttachedComplete: ok = a >= 1 && b >= 0 && b <= a; break;
            case Family::Named: ok = a >= 1 && a <= 4; break;
        }
        if (!ok) {
            throw DomainError("family parameter out of bounds: " + to_string());
        }
    }

    int order() const {
        switch (family) {
            case Family::Path:
            case Family::Cycle:
            case Family::Complete: return a;
            case Family::Star:
            case Family::Wheel:
            case Family::OpenWheel:
            case Family::AttachedComplete: return a + 1;
            case Family::DoubleStar: return a + b + 2;
            case Family::CompleteBipartite: return a + b;
            case Family::Friendship: return 2 * a + 1;
            case Family::TriangularBook: return a + 2;
            case Family::QuadrilateralBook: return 2 * a + 2;
            case Family::Named: return 8;
        }
        return 0;
    }

    std::string to_string() const {
        switch (family) {
            case Family::Path: return "path:" + std::to_string(a);
            case Family::Cycle: return "cycle:" + std::to_string(a);
            case Family::Star: return "star:" + std::to_string(a);
            case Family::DoubleStar:
                return "double_star:" + std::to_string(a) + "," +
                       std::to_string(b);
            case Family::Complete: return "complete:" + std::to_string(a);
            case Family::CompleteBipartite:
                return "complete_bipartite:" + std::to_string(a) + "," +
                       std::to_string(b);
            case Family::Wheel: return "wheel:" + std::to_string(a);
            case Family::OpenWheel: return "open_wheel:" + std::to_string(a);
            case Family::Friendship: return "friendship:" + std::to_string(a);
            case Family::TriangularBook:
                return "triangular_book:" + std::to_string(a);
            case Family::QuadrilateralBook:
                return "quadrilateral_book:" + std::to_string(a);
            case Family::AttachedComplete:
                return "attached:" + std::to_string(a) + "," +
                       std::to_string(b);
            case Family::Named: return "G" + std::to_string(a);
        }
        return "?";
    }
};

// "name:params" with comma-separated integers, e.g. "path:4",
// "complete_bipartite:3,4", "attached:5,2"; also accepts "G1".."G4".
inline FamilySpec parse_family_spec(std::string_view text) {
    auto fail = [&] {
        throw ParseError("invalid family spec \"" + std::string(text) + "\"");
    };
    if (text.size() == 2 && text[0] == 'G' && text[1] >= '1' && text[1] <= '4') {
        return FamilySpec::named(text[1] - '0');
    }
    auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0) fail();
    std::string name(text.substr(0, colon));
    std::vector<int> params;
    std::size_t pos = colon + 1;
    while (pos <= text.size()) {
        auto next = text.find(',', pos);
        auto piece = text.substr(
            pos, next == std::string_view::npos ? text.size() - pos
                                                : next - pos);
        if (piece.empty() || piece.size() > 9) fail();
        int value = 0;
        for (char ch : piece) {
            if (ch < '0' || ch > '9') fail();
            value = value * 10 + (ch - '0');
        }
        params.push_back(value);
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }

    auto unary = [&](Family f) {
        if (params.size() != 1) fail();
        return FamilySpec{f, params[0], 0};
    };
    auto binary = [&](Family f) {
        if (params.size() != 2) fail();
        return FamilySpec{f, params[0], params[1]};
    };
    if (name == "path") return unary(Family::Path);
    if (name == "cycle") return unary(Family::Cycle);
    if (name == "star") return unary(Family::Star);
    if (name == "double_star") return binary(Family::DoubleStar);
    if (name == "complete") return unary(Family::Complete);
    if (name == "complete_bipartite") return binary(Family::CompleteBipartite);
    if (name == "wheel") return unary(Family::Wheel);
    if (name == "open_wheel") return unary(Family::OpenWheel);
    if (name == "friendship") return unary(Family::Friendship);
    if (name == "triangular_book") return unary(Family::TriangularBook);
    if (name == "quadrilateral_book") return unary(Family::QuadrilateralBook);
    if (name == "attached") return binary(Family::AttachedComplete);
    fail();
    return {};
}

// Fixed 8-vertex graphs read off the distinguishing-pair figures, vertices
// renumbered 0..7 in figure order.
inline Graph named_graph(std::string_view name) {
    using E = std::vector<std::pair<int, int>>;
    static const E g1{{0, 1}, {1, 3}, {3, 2}, {2, 0}, {0, 4},
                      {4, 6}, {6, 5}, {5, 7}, {7, 4}, {5, 1}};
    static const E g2{{0, 1}, {1, 3}, {3, 2}, {2, 0}, {0, 4},
                      {4, 5}, {5, 1}, {5, 6}, {6, 7}, {7, 3}};
    static const E g3{{0, 1}, {1, 2}, {2, 0}, {1, 3}, {1, 4},
                      {0, 5}, {5, 6}, {6, 7}, {7, 5}};
    static const E g4{{0, 1}, {1, 2}, {2, 0}, {5, 3}, {5, 4},
                      {1, 5}, {0, 6}, {6, 7}, {7, 0}};
    const E* edges = nullptr;
    if (name == "G1") edges = &g1;
    else if (name == "G2") edges = &g2;
    else if (name == "G3") edges = &g3;
    else if (name == "G4") edges = &g4;
    if (!edges) {
        throw DomainError("unknown named graph \"" + std::string(name) +
                          "\" (expected G1..G4)");
    }
    return graph_from_edge_list(8, *edges, std::string(name));
}

inline Graph make_family(const FamilySpec& spec) {
    spec.validate();
    if (spec.order() > kMaxVertices) {
        throw DomainError("family instance exceeds the 64-vertex cap: " +
                          spec.to_string());
    }
    std::vector<std::pair<int, int>> edges;
    int n = spec.a;
    switch (spec.family) {
        case Family::Path:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case Family::Cycle:
            for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
            break;
        case Family::Star:  // center 0, leaves 1..n
            for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
            break;
        case Family::DoubleStar: {
            // centers 0 and r+1, joined; leaves hang off each center
            int r = spec.a, t = spec.b;
            for (int i = 1; i <= r; ++i) edges.emplace_back(0, i);
            for (int i = 1; i <= t; ++i) edges.emplace_back(r + 1, r + 1 + i);
            edges.emplace_back(0, r + 1);
            break;
        }
        case Family::Complete:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            break;
        case Family::CompleteBipartite:
            for (int i = 0; i < spec.a; ++i)
                for (int j = 0; j < spec.b; ++j)
                    edges.emplace_back(i, spec.a + j);
            break;
        case Family::Wheel:  // C_n on 0..n-1 plus hub n
            for (int i = 0; i < n; ++i) {
                edges.emplace_back(i, (i + 1) % n);
                edges.emplace_back(i, n);
            }
            break;
        case Family::OpenWheel:  // P_n on 0..n-1 plus hub n
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            for (int i = 0; i < n; ++i) edges.emplace_back(i, n);
            break;
        case Family::Friendship:  // n triangles sharing vertex 0
            for (int i = 0; i < n; ++i) {
                int u = 1 + 2 * i, v = 2 + 2 * i;
                edges.emplace_back(0, u);
                edges.emplace_back(0, v);
                edges.emplace_back(u, v);
            }
            break;
        case Family::TriangularBook:  // spine 0-1, pages adjacent to both
            edges.emplace_back(0, 1);
            for (int i = 0; i < n; ++i) {
                edges.emplace_back(0, 2 + i);
                edges.emplace_back(1, 2 + i);
            }
            break;
        case Family::QuadrilateralBook:
            // n quadrilaterals 0-u-v-1 sharing the spine edge 0-1
            edges.emplace_back(0, 1);
            for (int i = 0; i < n; ++i) {
                int u = 2 + 2 * i, v = 3 + 2 * i;
                edges.emplace_back(0, u);
                edges.emplace_back(u, v);
                edges.emplace_back(v, 1);
            }
            break;
        case Family::AttachedComplete:
            // K_n on 0..n-1; vertex n adjacent to {0..r-1} (any r-subset of
            // K_n gives an isomorphic graph)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            for (int i = 0; i < spec.b; ++i) edges.emplace_back(i, n);
            break;
        case Family::Named:
            return named_graph(spec.to_string());
    }
    return graph_from_edge_list(spec.order(), edges, spec.to_string());
}

}  // namespace alliancepoly

#endif
