#pragma once

#include <string>
#include <vector>

#include "braidex/homfly.hpp"
#include "braidex/montesinos.hpp"
#include "braidex/rational.hpp"

namespace braidex {

// Reduction number of one cycle of Seifert circles of length 2n carrying k
// lone crossings: min(k, n-1).
long long cycle_reduction(long long n, long long k);

struct ReductionReport {
    long long r_plus = 0;
    long long r_minus = 0;
    long long r_total() const { return r_plus + r_minus; }
    struct Item {
        std::string what;
        long long r_plus = 0, r_minus = 0;
    };
    std::vector<Item> items;
};

// Seifert-circle reduction numbers of a standard two-bridge diagram,
// accounted block by block: each block is an interlocked pattern whose lone
// crossings carry the block's sign, so positive blocks feed r+ and negative
// blocks r-. The totals satisfy s(D) - r = braid index.
ReductionReport reduction_rational(const SignedVector& sv);

// Reduction numbers of a normal standard Montesinos diagram: tangle-internal
// block reductions plus the structural terms (the anchor pair of class M2,
// the e-cycle of class B).
ReductionReport reduction_montesinos(const MontesinosAnalysis& an);

struct BaseEquationReport {
    int max_a = 0, min_a = 0;
    int s = 0, w = 0;
    long long r_plus = 0, r_minus = 0;
    bool high_ok = false;  // E = s - w - 1 - 2r-
    bool low_ok = false;   // e = -s - w + 1 + 2r+
    bool ok() const { return high_ok && low_ok; }
};

// Checks the base-diagram equations for the given sign split, with the
// HOMFLY polynomial computed by the engine.
BaseEquationReport verify_base_equations(const OrientedDiagram& d,
                                         long long r_plus, long long r_minus,
                                         HomflyEngine& engine);

}  // namespace braidex
