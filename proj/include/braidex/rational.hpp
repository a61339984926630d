#pragma once

#include <cstdint>
#include <vector>

#include "braidex/plat.hpp"

namespace braidex {

// A two-bridge fraction beta/alpha with 0 < beta < alpha and
// gcd(alpha, beta) = 1.
struct Fraction {
    long long alpha = 0;
    long long beta = 0;

    static Fraction make(long long alpha, long long beta);
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

// The unique odd-length all-positive continued fraction of beta/alpha:
// beta/alpha = 1/(a1 + 1/(a2 + ... + 1/an)) with n odd, every entry >= 1.
// The last entry may be 1.
std::vector<int> odd_continued_fraction(const Fraction& f);

// Exact reconstruction of the fraction from a continued-fraction vector.
Fraction fraction_of_cf(const std::vector<int>& cf);

// Continued-fraction entries with the crossing signs of an oriented
// standard diagram, plus the maximal same-sign runs (blocks).
struct SignedVector {
    std::vector<int> entries;
    struct Block {
        int first = 0, last = 0;  // inclusive 0-based entry range
        int sign = 0;
    };
    std::vector<Block> blocks;

    static SignedVector from_entries(std::vector<int> entries);
    int sign_first() const { return entries.front() > 0 ? 1 : -1; }
    int sign_last() const { return entries.back() > 0 ? 1 : -1; }
};

// Reads the signed vector off an oriented standard diagram: every crossing
// of one entry must carry the same sign.
SignedVector signed_vector(const FourPlat& plat);

enum class PlatForm { standard, mirrored };

// Braid index of a two-bridge link from the signed vector of its standard
// diagram (or of the mirrored standard form). The defining sum always
// lands on an integer for vectors traced from a real standard diagram;
// anything else is rejected.
long long braid_index_rational(const SignedVector& sv,
                               PlatForm form = PlatForm::standard);

}  // namespace braidex
