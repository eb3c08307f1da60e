#ifndef ALLIANCEPOLY_CLOSED_FORMS_HPP
#define ALLIANCEPOLY_CLOSED_FORMS_HPP

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "alliancepoly/bipoly.hpp"
#include "alliancepoly/errors.hpp"
#include "alliancepoly/families.hpp"

namespace alliancepoly {

// The star proposition as printed disagrees with the defining enumeration
// (its singleton-leaf and joined-set exponents are each off by one).
// Corrected is the default; PaperLiteral emits the printed form so the
// discrepancy stays visible and machine-checkable.
enum class ErrataMode { Corrected, PaperLiteral };

struct SliceConstraint {
    int x_power = 0;
    UniPoly expected;  // required [x^k] da, a polynomial in y
};

// A family's complete closed-form polynomial, or the partial set of
// x-slice constraints that is all the source proposition asserts.
class Fingerprint {
public:
    enum class Kind { Full, Slice };

    static Fingerprint full(FamilySpec spec, BiPoly poly) {
        Fingerprint fp;
        fp.spec_ = spec;
        fp.data_ = std::move(poly);
        return fp;
    }

    static Fingerprint slices(FamilySpec spec,
                              std::vector<SliceConstraint> constraints) {
        Fingerprint fp;
        fp.spec_ = spec;
        fp.data_ = std::move(constraints);
        return fp;
    }

    Kind kind() const {
        return std::holds_alternative<BiPoly>(data_) ? Kind::Full
                                                     : Kind::Slice;
    }
    const FamilySpec& spec() const { return spec_; }

    const BiPoly& poly() const {
        if (kind() != Kind::Full) {
            throw DomainError("fingerprint has no full polynomial");
        }
        return std::get<BiPoly>(data_);
    }

    const std::vector<SliceConstraint>& constraints() const {
        if (kind() != Kind::Slice) {
            throw DomainError("fingerprint has no slice constraints");
        }
        return std::get<std::vector<SliceConstraint>>(data_);
    }

private:
    FamilySpec spec_;
    std::variant<BiPoly, std::vector<SliceConstraint>> data_;
};

namespace detail {

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

// ((1 + x y^2)^n - 1) / y, realized as a shift on the expanded binomial
inline BiPoly complete_poly(int n) {
    BiPoly p = poly_pow(poly_add(BiPoly::monomial(0, 0, 1),
                                 BiPoly::monomial(1, 2, 1)),
                        n);
    BiPoly without_one;
    for (const auto& [m, c] : p.terms()) {
        if (m.x == 0 && m.y == 0) continue;
        without_one.add_term(m.x, m.y, c);
    }
    return shift_y(without_one, -1);
}

inline BiPoly star_poly(int n, ErrataMode mode) {
    BiPoly p;
    if (mode == ErrataMode::Corrected) {
        p.add_term(1, 1, 1);
        p.add_term(1, n, n);
        for (int i = 1; i <= n; ++i) {
            p.add_term(i + 1, std::min(2 * i + 1, n + 2), binomial(n, i));
        }
    } else {
        p.add_term(1, 1, 1);
        p.add_term(1, n - 1, n);
        for (int i = 1; i <= n / 2; ++i) {
            p.add_term(i + 1, 2 * i, binomial(n, i));
        }
        for (int i = (n + 2) / 2; i <= n; ++i) {
            p.add_term(i + 1, n + 1, binomial(n, i));
        }
    }
    return p;
}

inline BiPoly path_poly(int n) {
    BiPoly p;
    p.add_term(1, n - 1, 2);
    p.add_term(1, n - 2, n - 2);
    for (int i = 2; i <= n - 1; ++i) p.add_term(i, n, n - i + 1);
    p.add_term(n, n + 1, 1);
    return p;
}

inline BiPoly cycle_poly(int n) {
    BiPoly p;
    p.add_term(1, n - 2, n);
    for (int i = 2; i <= n - 1; ++i) p.add_term(i, n, n);
    p.add_term(n, n + 2, 1);
    return p;
}

inline BiPoly complete_bipartite_poly(int n, int m) {
    BiPoly p;
    p.add_term(1, n, n);
    p.add_term(1, m, m);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= m; ++j) {
            p.add_term(i + j, n + m + std::min(2 * i - n, 2 * j - m),
                       binomial(n, i) * binomial(m, j));
        }
    }
    return p;
}

inline BiPoly attached_complete_poly(int n, int r) {
    int s = n - r;
    BiPoly kr = complete_poly(r);
    BiPoly ks = complete_poly(s);
    BiPoly one_plus_xy2 = poly_add(BiPoly::monomial(0, 0, 1),
                                   BiPoly::monomial(1, 2, 1));
    BiPoly p = poly_mul(one_plus_xy2, kr);
    p = poly_add(p, shift_y(ks, 1));
    p = poly_add(p, shift_y(poly_mul(kr, ks), 1));
    p = poly_add(p, BiPoly::monomial(1, n + 1 - r, 1));
    BiPoly tail;  // sum_j C(s,j) x^j y^min(2j, s+1)
    for (int j = 1; j <= s; ++j) {
        tail.add_term(j, std::min(2 * j, s + 1), binomial(s, j));
    }
    p = poly_add(p, poly_mul(BiPoly::monomial(1, 1, 1), poly_mul(kr, tail)));
    return p;
}

}  // namespace detail

inline Fingerprint closed_form(const FamilySpec& spec,
                               ErrataMode mode = ErrataMode::Corrected) {
    spec.validate();
    auto slice = [](int k, std::vector<std::pair<int, BigInt>> terms) {
        SliceConstraint sc;
        sc.x_power = k;
        sc.expected = UniPoly(UniPoly::Var::Y);
        for (const auto& [e, c] : terms) sc.expected.add_term(e, c);
        return sc;
    };

    int n = spec.a;
    switch (spec.family) {
        case Family::Path:
            return Fingerprint::full(spec, detail::path_poly(n));
        case Family::Cycle:
            return Fingerprint::full(spec, detail::cycle_poly(n));
        case Family::Star:
            return Fingerprint::full(spec, detail::star_poly(n, mode));
        case Family::Complete:
            return Fingerprint::full(spec, detail::complete_poly(n));
        case Family::CompleteBipartite:
            return Fingerprint::full(
                spec, detail::complete_bipartite_poly(spec.a, spec.b));
        case Family::AttachedComplete:
            return Fingerprint::full(
                spec, detail::attached_complete_poly(spec.a, spec.b));
        case Family::DoubleStar: {
            int r = spec.a, t = spec.b;
            return Fingerprint::slices(
                spec,
                {slice(1, {{r + t + 1, r + t}, {r + 1, 1}, {t + 1, 1}}),
                 slice(r + t + 2, {{r + t + 3, 1}})});
        }
        case Family::Wheel:
            return Fingerprint::slices(
                spec, {slice(1, {{n - 2, n}, {1, 1}}),
                       slice(n, {{n + 2, n + 1}}),
                       slice(n + 1, {{n + 4, 1}})});
        case Family::OpenWheel:
            return Fingerprint::slices(
                spec, {slice(1, {{n - 1, 2}, {n - 2, n - 2}, {1, 1}}),
                       slice(n, {{n + 1, 3}, {n + 2, n - 2}}),
                       slice(n + 1, {{n + 3, 1}})});
        case Family::Friendship:
            return Fingerprint::slices(spec,
                                       {slice(1, {{2 * n - 1, 2 * n}, {1, 1}})});
        case Family::TriangularBook:
            return Fingerprint::slices(spec, {slice(1, {{1, 2}, {n, n}})});
        case Family::QuadrilateralBook:
            return Fingerprint::slices(
                spec, {slice(1, {{n + 1, 2}, {2 * n, 2 * n}}),
                       slice(2, {{2 * n + 2, n}, {n + 3, 2 * n + 1}}),
                       slice(2 * n + 1, {{2 * n + 2, 2 * n + 2}}),
                       slice(2 * n + 2, {{2 * n + 4, 1}})});
        case Family::Named:
            throw DomainError("no closed form for named graphs");
    }
    throw InternalError("unhandled family");
}

// da of a disjoint union from per-part da polynomials: each summand is
// shifted by y^(total order - own order), then summed.
inline BiPoly union_law(std::span<const std::pair<BiPoly, int>> parts) {
    int total = 0;
    for (const auto& [poly, order] : parts) {
        if (order < 1) throw DomainError("union_law: order must be >= 1");
        total += order;
    }
    BiPoly result;
    for (const auto& [poly, order] : parts) {
        result = poly_add(result, shift_y(poly, total - order));
    }
    return result;
}

inline BiPoly union_law(
    std::initializer_list<std::pair<BiPoly, int>> parts) {
    return union_law(
        std::span<const std::pair<BiPoly, int>>(parts.begin(), parts.size()));
}

inline bool matches(const Fingerprint& fp, const BiPoly& da) {
    if (fp.kind() == Fingerprint::Kind::Full) return fp.poly() == da;
    for (const auto& constraint : fp.constraints()) {
        if (slice_x(da, constraint.x_power) != constraint.expected) {
            return false;
        }
    }
    return true;
}

}  // namespace alliancepoly

#endif
