#include "braidex/laurent.hpp"

#include <sstream>

namespace braidex {

Laurent2 Laurent2::monomial(Int coeff, int z_power, int a_power) {
    Laurent2 p;
    if (coeff != 0) p.terms_[Key{a_power, z_power}] = std::move(coeff);
    return p;
}

Laurent2 Laurent2::unlink_factor() {
    Laurent2 p;
    p.add_term(1, -1, 1);
    p.add_term(-1, -1, -1);
    return p;
}

Laurent2 Laurent2::unlink_factor_pow(int n) {
    check(n >= 0, "unlink_factor_pow: negative exponent");
    Laurent2 p = one();
    const Laurent2 d = unlink_factor();
    for (int i = 0; i < n; ++i) p = p * d;
    return p;
}

void Laurent2::add_term(const Int& coeff, int z_power, int a_power) {
    if (coeff == 0) return;
    const Key k{a_power, z_power};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

Laurent2& Laurent2::operator+=(const Laurent2& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(c, k.z, k.a);
    return *this;
}

Laurent2& Laurent2::operator-=(const Laurent2& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(-c, k.z, k.a);
    return *this;
}

Laurent2 operator*(const Laurent2& lhs, const Laurent2& rhs) {
    Laurent2 out;
    for (const auto& [k1, c1] : lhs.terms_)
        for (const auto& [k2, c2] : rhs.terms_)
            out.add_term(c1 * c2, k1.z + k2.z, k1.a + k2.a);
    return out;
}

Laurent2 add(const Laurent2& p, const Laurent2& q) { return p + q; }

Laurent2 mul(const Laurent2& p, const Laurent2& q) { return p * q; }

Laurent2 mul_monomial(const Laurent2& p, const Int& coeff, int z_power,
                      int a_power) {
    check(coeff != 0, "mul_monomial: zero coefficient");
    Laurent2 out;
    for (const auto& [k, c] : p.terms())
        out.add_term(c * coeff, k.z + z_power, k.a + a_power);
    return out;
}

Laurent2 mirror_substitute(const Laurent2& p) {
    Laurent2 out;
    for (const auto& [k, c] : p.terms()) {
        const bool odd = (k.a % 2) != 0;
        out.add_term(odd ? Int(-c) : c, k.z, -k.a);
    }
    return out;
}

AExtremes a_extremes(const Laurent2& p) {
    check(!p.is_zero(), "a_extremes: zero polynomial");
    AExtremes ex;
    ex.min_a = p.terms().begin()->first.a;
    ex.max_a = p.terms().rbegin()->first.a;
    for (const auto& [k, c] : p.terms()) {
        if (k.a == ex.min_a) ex.low[k.z] = c;
        if (k.a == ex.max_a) ex.high[k.z] = c;
    }
    ex.high_lead = ZTerm{ex.high.rbegin()->second, ex.high.rbegin()->first};
    ex.low_lead = ZTerm{ex.low.rbegin()->second, ex.low.rbegin()->first};
    return ex;
}

std::string Laurent2::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << " z^" << k.z << " a^" << k.a;
    }
    return os.str();
}

std::string to_string(const ZPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [zp, c] : p) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << " z^" << zp;
    }
    return os.str();
}

}  // namespace braidex
