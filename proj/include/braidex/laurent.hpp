#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidex/errors.hpp"

namespace braidex {

using Int = boost::multiprecision::cpp_int;

// Exact integer Laurent polynomial in the two variables (z, a).
//
// Canonical form: the term map never stores a zero coefficient, so equality
// of values is equality of maps. Terms are kept ordered lexicographically by
// (a_power, z_power); serialization walks the map in that order.
class Laurent2 {
public:
    struct Key {
        int a = 0;
        int z = 0;
        friend bool operator<(const Key& l, const Key& r) {
            return l.a != r.a ? l.a < r.a : l.z < r.z;
        }
        friend bool operator==(const Key& l, const Key& r) = default;
    };
    using Terms = std::map<Key, Int>;

    Laurent2() = default;

    static Laurent2 zero() { return Laurent2(); }
    static Laurent2 one() { return monomial(1, 0, 0); }
    static Laurent2 monomial(Int coeff, int z_power, int a_power);
    // (a - a^-1) z^-1, the value of a split 2-component unlink
    static Laurent2 unlink_factor();
    static Laurent2 unlink_factor_pow(int n);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Int& coeff, int z_power, int a_power);

    Laurent2& operator+=(const Laurent2& rhs);
    Laurent2& operator-=(const Laurent2& rhs);
    friend Laurent2 operator+(Laurent2 lhs, const Laurent2& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend Laurent2 operator-(Laurent2 lhs, const Laurent2& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend Laurent2 operator*(const Laurent2& lhs, const Laurent2& rhs);
    friend bool operator==(const Laurent2& l, const Laurent2& r) {
        return l.terms_ == r.terms_;
    }

    std::string to_string() const;

private:
    Terms terms_;
};

Laurent2 add(const Laurent2& p, const Laurent2& q);
Laurent2 mul(const Laurent2& p, const Laurent2& q);

// Shift every term by (z_power, a_power) and scale by coeff. Rejects
// coeff == 0, which would silently destroy canonical-form bookkeeping.
Laurent2 mul_monomial(const Laurent2& p, const Int& coeff, int z_power,
                      int a_power);

// The substitution a -> -a^-1 of the mirror identity: c z^i a^j becomes
// c (-1)^j z^i a^-j. An involution and a ring homomorphism.
Laurent2 mirror_substitute(const Laurent2& p);

// Univariate Laurent polynomial in z, used for the coefficient of an
// extreme a-power.
using ZPoly = std::map<int, Int>;

struct ZTerm {
    Int coeff;
    int z_power = 0;
};

struct AExtremes {
    int max_a = 0;      // E(P): maximum a-power
    int min_a = 0;      // e(P): minimum a-power
    ZPoly high;         // coefficient polynomial of a^max_a
    ZPoly low;          // coefficient polynomial of a^min_a
    ZTerm high_lead;    // top z-term of high
    ZTerm low_lead;     // top z-term of low
};

// Extreme a-degrees with their z-coefficient polynomials. Rejects the zero
// polynomial.
AExtremes a_extremes(const Laurent2& p);

std::string to_string(const ZPoly& p);

}  // namespace braidex
