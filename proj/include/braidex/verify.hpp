#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidex/homfly.hpp"
#include "braidex/montesinos.hpp"
#include "braidex/rational.hpp"
#include "braidex/reduction.hpp"

namespace braidex {

// One formula-vs-oracle comparison. When the diagram exceeds the crossing
// cap the record is formula-only and carries no oracle fields.
struct VerificationRecord {
    std::string family;
    std::string presentation;
    int orientation_choice = 0;
    int orientation_count = 1;
    int crossings = 0;
    int s = 0;
    int w = 0;
    long long formula_b = 0;
    long long r_plus = 0;
    long long r_minus = 0;
    bool oracle_ran = false;
    int homfly_max_a = 0;
    int homfly_min_a = 0;
    long long mwf_b = 0;
    bool base_equations_hold = false;
    bool agree = false;  // oracle_ran && everything matches
    // kept out of the serialized line so reports stay byte-identical
    // across runs and thread counts
    double runtime_ms = 0;
};

// Serialized line; deterministic (no volatile fields).
nlohmann::json record_json(const VerificationRecord& rec);

// All two-bridge fractions whose odd continued fraction has entry sum at
// most max_crossings, ordered by (sum, vector) lexicographically. Every
// odd-length positive vector is the normal form of exactly one fraction,
// so this enumeration is duplicate-free by construction.
std::vector<Fraction> enumerate_rational(int max_crossings);

// All Montesinos presentations with k in [2, max_tangles] tangles, each
// fraction in (0,1), e >= 0 and total crossings at most max_crossings,
// ordered by (total, k, tangle vectors, e).
std::vector<MontesinosPresentation> enumerate_montesinos(int max_crossings,
                                                         int max_tangles);

VerificationRecord cross_check_rational(const Fraction& f, int choice,
                                        HomflyEngine& engine);
VerificationRecord cross_check_montesinos(const MontesinosPresentation& p,
                                          int choice, HomflyEngine& engine);

struct VerifyOptions {
    std::string family;  // "rational" or "montesinos"
    int max_crossings = 12;
    int max_tangles = 4;
    int crossing_cap = kDefaultCrossingCap;
    int threads = 0;  // 0: BRAIDEX_THREADS env or hardware concurrency
};

struct VerifySummary {
    long long records = 0;
    long long disagreements = 0;
    long long formula_only = 0;
    double elapsed_ms = 0;
    std::string first_failure;  // presentation of the first disagreement
};

// Runs the family enumeration across a worker pool and streams one JSON
// line per record, in enumeration order regardless of scheduling. On a
// disagreement the offending diagram's PD code (and for small diagrams the
// resolving-tree trace) is dumped to stderr and the run aborts.
VerifySummary run_verify(const VerifyOptions& opts, std::ostream& report);

int resolve_thread_count(int requested);

}  // namespace braidex
