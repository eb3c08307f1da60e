#ifndef ALLIANCEPOLY_BIPOLY_HPP
#define ALLIANCEPOLY_BIPOLY_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "alliancepoly/errors.hpp"

namespace alliancepoly {

using BigInt = boost::multiprecision::cpp_int;

struct Monomial {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Sparse exact bivariate polynomial with nonnegative integer coefficients.
// Canonical: no stored zero coefficients, iteration sorted by (x, y).
class BiPoly {
public:
    BiPoly() = default;

    static BiPoly monomial(int a, int b, BigInt c = 1) {
        BiPoly p;
        p.add_term(a, b, c);
        return p;
    }

    void add_term(int a, int b, const BigInt& c) {
        if (c == 0) return;
        auto it = terms_.find(Monomial{a, b});
        if (it == terms_.end()) {
            terms_.emplace(Monomial{a, b}, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BigInt coeff(int a, int b) const {
        auto it = terms_.find(Monomial{a, b});
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, BigInt>& terms() const { return terms_; }

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    std::map<Monomial, BigInt> terms_;
};

// Sparse exact univariate polynomial. The variable tag is presentation
// only; equality compares terms, not the letter.
class UniPoly {
public:
    enum class Var { X, Y };

    UniPoly() = default;
    explicit UniPoly(Var v) : var_(v) {}

    static UniPoly monomial(Var v, int e, BigInt c = 1) {
        UniPoly p(v);
        p.add_term(e, c);
        return p;
    }

    void add_term(int e, const BigInt& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BigInt coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    Var var() const { return var_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<int, BigInt>& terms() const { return terms_; }

    int degree() const {
        if (terms_.empty()) throw DomainError("degree of the zero polynomial");
        return terms_.rbegin()->first;
    }

    BigInt coeff_sum() const {
        BigInt s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.terms_ == b.terms_;
    }

private:
    Var var_ = Var::X;
    std::map<int, BigInt> terms_;
};

inline BiPoly poly_add(const BiPoly& p, const BiPoly& q) {
    BiPoly r = p;
    for (const auto& [m, c] : q.terms()) r.add_term(m.x, m.y, c);
    return r;
}

inline UniPoly poly_add(const UniPoly& p, const UniPoly& q) {
    UniPoly r = p;
    for (const auto& [e, c] : q.terms()) r.add_term(e, c);
    return r;
}

inline BiPoly poly_mul(const BiPoly& p, const BiPoly& q) {
    BiPoly r;
    for (const auto& [mp, cp] : p.terms()) {
        for (const auto& [mq, cq] : q.terms()) {
            r.add_term(mp.x + mq.x, mp.y + mq.y, cp * cq);
        }
    }
    return r;
}

inline BiPoly poly_scale(const BiPoly& p, const BigInt& c) {
    if (c < 0) throw DomainError("poly_scale: negative scalar");
    BiPoly r;
    if (c == 0) return r;
    for (const auto& [m, k] : p.terms()) r.add_term(m.x, m.y, k * c);
    return r;
}

inline BiPoly poly_pow(const BiPoly& p, int e) {
    BiPoly r = BiPoly::monomial(0, 0, 1);
    for (int i = 0; i < e; ++i) r = poly_mul(r, p);
    return r;
}

// Multiplication by y^d; d may be negative as long as no exponent drops
// below zero.
inline BiPoly shift_y(const BiPoly& p, int d) {
    BiPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (m.y + d < 0) {
            throw DomainError("shift_y: negative y-exponent from shift by " +
                              std::to_string(d));
        }
        r.add_term(m.x, m.y + d, c);
    }
    return r;
}

inline BigInt coeff(const BiPoly& p, int a, int b) { return p.coeff(a, b); }

// [x^k]p as a polynomial in y
inline UniPoly slice_x(const BiPoly& p, int k) {
    UniPoly r(UniPoly::Var::Y);
    for (const auto& [m, c] : p.terms()) {
        if (m.x == k) r.add_term(m.y, c);
    }
    return r;
}

// terms with y-exponent l, as a polynomial in x
inline UniPoly slice_y(const BiPoly& p, int l) {
    UniPoly r(UniPoly::Var::X);
    for (const auto& [m, c] : p.terms()) {
        if (m.y == l) r.add_term(m.x, c);
    }
    return r;
}

inline UniPoly substitute_y_one(const BiPoly& p) {
    UniPoly r(UniPoly::Var::X);
    for (const auto& [m, c] : p.terms()) r.add_term(m.x, c);
    return r;
}

inline UniPoly substitute_x_one(const BiPoly& p) {
    UniPoly r(UniPoly::Var::Y);
    for (const auto& [m, c] : p.terms()) r.add_term(m.y, c);
    return r;
}

inline int x_degree(const BiPoly& p) {
    if (p.is_zero()) throw DomainError("x_degree of the zero polynomial");
    int d = 0;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m.x);
    return d;
}

namespace detail {

inline void render_var(std::ostream& os, const char* name, int e) {
    if (e == 0) return;
    os << name;
    if (e != 1) os << '^' << e;
}

}  // namespace detail

// Sorted monomials joined by " + "; coefficient 1 and exponent 1 elided,
// e.g. "2xy + x^2y^3".
inline std::string to_canonical_text(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        if (c != 1 || (m.x == 0 && m.y == 0)) os << c;
        detail::render_var(os, "x", m.x);
        detail::render_var(os, "y", m.y);
    }
    return os.str();
}

inline std::string to_canonical_text(const UniPoly& p) {
    if (p.is_zero()) return "0";
    const char* name = p.var() == UniPoly::Var::X ? "x" : "y";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        if (c != 1 || e == 0) os << c;
        detail::render_var(os, name, e);
    }
    return os.str();
}

// JSON schema: {"n": <order, optional>, "terms": [{"x": a, "y": b,
// "c": "<decimal>"}, ...]} with terms sorted (x asc, y asc). Coefficients
// travel as decimal strings to avoid 53-bit loss in consumers.
inline std::string to_json(const BiPoly& p, std::optional<int> n = {}) {
    nlohmann::ordered_json doc;
    if (n) doc["n"] = *n;
    doc["terms"] = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        doc["terms"].push_back(
            {{"x", m.x}, {"y", m.y}, {"c", c.str()}});
    }
    return doc.dump();
}

inline std::string to_json(const UniPoly& p) {
    nlohmann::ordered_json doc;
    doc["var"] = p.var() == UniPoly::Var::X ? "x" : "y";
    doc["terms"] = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        doc["terms"].push_back({{"e", e}, {"c", c.str()}});
    }
    return doc.dump();
}

namespace detail {

inline BigInt parse_coeff(const std::string& s) {
    if (s.empty()) throw ParseError("polynomial JSON: empty coefficient");
    for (char ch : s) {
        if (ch < '0' || ch > '9') {
            throw ParseError(
                "polynomial JSON: coefficient must be a nonnegative decimal "
                "string, got \"" + s + "\"");
        }
    }
    BigInt c(s);
    if (c == 0) {
        throw ParseError("polynomial JSON: zero coefficient is non-canonical");
    }
    return c;
}

}  // namespace detail

inline BiPoly bipoly_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("polynomial JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
        throw ParseError("polynomial JSON: expected {\"terms\": [...]}");
    }
    BiPoly p;
    std::optional<Monomial> prev;
    for (const auto& t : doc["terms"]) {
        if (!t.is_object() || !t.contains("x") || !t.contains("y") ||
            !t.contains("c") || !t["x"].is_number_integer() ||
            !t["y"].is_number_integer() || !t["c"].is_string()) {
            throw ParseError(
                "polynomial JSON: each term needs integer x, y and string c");
        }
        Monomial m{t["x"].get<int>(), t["y"].get<int>()};
        if (m.x < 0 || m.y < 0) {
            throw ParseError("polynomial JSON: negative exponent");
        }
        if (prev && !(*prev < m)) {
            throw ParseError(
                "polynomial JSON: terms must be strictly sorted by (x, y)");
        }
        prev = m;
        p.add_term(m.x, m.y, detail::parse_coeff(t["c"].get<std::string>()));
    }
    return p;
}

}  // namespace alliancepoly

#endif
