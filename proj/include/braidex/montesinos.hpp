#pragma once

#include <string>
#include <vector>

#include "braidex/geom.hpp"
#include "braidex/rational.hpp"

namespace braidex {

// Alternating Montesinos link M(b1/a1, ..., bk/ak, e) in normal form: every
// fraction strictly between 0 and 1 and e >= 0 half-twists. Inputs from the
// mirrored (all-negative) family are normalized before they get here and
// only remembered through the flag.
struct MontesinosPresentation {
    std::vector<Fraction> tangles;
    int e = 0;
    bool mirrored = false;

    static MontesinosPresentation make(std::vector<Fraction> tangles, int e,
                                       bool mirrored = false);
    std::string to_string() const;
};

// Exact quarter-integers; the tangle contributions live in (1/4)Z.
struct Quarters {
    long long q = 0;  // value * 4

    bool integral() const { return q % 4 == 0; }
    long long value() const {
        check(integral(), "Quarters: non-integer value");
        return q / 4;
    }
    Quarters& operator+=(Quarters o) {
        q += o.q;
        return *this;
    }
    std::string to_string() const;
};

enum class SeifertParity { p1 = 1, p2 = 2, p3 = 3 };
enum class MontesinosClass { M1, M2, B };

const char* to_string(MontesinosClass c);

struct TangleAnalysis {
    std::vector<int> cf;
    SignedVector sv;
    SeifertParity parity = SeifertParity::p1;
    Quarters delta;
};

struct MontesinosAnalysis {
    MontesinosPresentation presentation;
    int choice = 0;
    int orientation_count = 1;
    MontesinosClass link_class = MontesinosClass::B;
    int eta = 0;  // number of Seifert-parity-3 tangles
    std::vector<TangleAnalysis> tangles;
    long long delta0_value = 0;  // class B only
    long long braid_index = 0;
    OrientedDiagram diagram;
    int e_crossing_sign = 0;  // 0 when e = 0
};

// Number of orientation assignments honoring the top-strand convention:
// 2^(components - 1).
int montesinos_orientation_count(const MontesinosPresentation& p);

// Builds the normal standard diagram under the given orientation choice and
// computes signed vectors, Seifert parities, the class, the tangle
// contributions and the braid index.
MontesinosAnalysis analyze_montesinos(const MontesinosPresentation& p,
                                      int choice);

// Contribution of one tangle's medium and small Seifert circles, by parity.
// Validates the sign pattern: b1 < 0 for parities 1 and 2, b1 > 0 for 3.
Quarters delta_contribution(SeifertParity parity, const SignedVector& sv);

// Class-B cycle term: eta + e - min((eta + e)/2 - 1, e). Requires eta + e
// even and >= 2.
long long delta0(int eta, int e);

}  // namespace braidex
