#ifndef ALLIANCEPOLY_DERIVED_HPP
#define ALLIANCEPOLY_DERIVED_HPP

#include "alliancepoly/bipoly.hpp"
#include "alliancepoly/errors.hpp"
#include "alliancepoly/poly_props.hpp"

namespace alliancepoly {

// A(G;y) = da(G;1,y)
inline UniPoly alliance_polynomial(const BiPoly& da) {
    return substitute_x_one(da);
}

// a(G;x) = sum_{k=0}^{n-1} [y^{n+k}] da(G;x,y): strong defensive alliances
// counted by cardinality
inline UniPoly strong_alliance_polynomial(const BiPoly& da, int n) {
    if (order_of(da) != n) {
        throw DomainError("strong_alliance_polynomial: order mismatch");
    }
    UniPoly a(UniPoly::Var::X);
    for (int k = 0; k < n; ++k) a = poly_add(a, slice_y(da, n + k));
    return a;
}

// q(G;x) = da(G;x,1)
inline UniPoly induced_connected_subgraph_polynomial(const BiPoly& da) {
    return substitute_y_one(da);
}

}  // namespace alliancepoly

#endif
