#include "braidex/reduction.hpp"

#include <algorithm>
#include <sstream>

namespace braidex {

long long cycle_reduction(long long n, long long k) {
    check(n >= 2, "cycle_reduction: cycle length 2n needs n >= 2");
    check(k >= 0 && k <= 2 * n, "cycle_reduction: lone-crossing count out "
                                "of range");
    return std::min(k, n - 1);
}

namespace {

// Reduction of one block of a signed vector. Within a positive block the
// odd-position entries are attaching circles and the even-position entries
// are strings of lone crossings; within a negative block the roles swap.
// A block contributes (#attach - #lone) + sum(lone)/2 circles' worth of
// reduction, minus (1+sign)/4 at each end of the whole vector it touches.
long long block_reduction(const SignedVector& sv,
                          const SignedVector::Block& blk, bool first,
                          bool last) {
    long long attach = 0, lone = 0, lone_sum = 0;
    for (int i = blk.first; i <= blk.last; ++i) {
        const bool odd_position = (i + 1) % 2 == 1;
        const bool is_attach = (blk.sign > 0) == odd_position;
        if (is_attach) {
            ++attach;
        } else {
            ++lone;
            lone_sum += std::abs(static_cast<long long>(sv.entries[i]));
        }
    }
    long long quarters = 4 * (attach - lone) + 2 * lone_sum;
    if (first) quarters -= 1 + blk.sign;
    if (last) quarters -= 1 + blk.sign;
    check(quarters % 4 == 0 && quarters >= 0,
          "block_reduction: block reduction must be a nonnegative integer");
    return quarters / 4;
}

void add_blocks(const SignedVector& sv, const std::string& label,
                ReductionReport& rep) {
    const int m = static_cast<int>(sv.blocks.size());
    for (int bi = 0; bi < m; ++bi) {
        const auto& blk = sv.blocks[bi];
        const long long r =
            block_reduction(sv, blk, bi == 0, bi == m - 1);
        ReductionReport::Item item;
        std::ostringstream os;
        os << label << "block " << bi + 1 << " (sign "
           << (blk.sign > 0 ? "+" : "-") << ")";
        item.what = os.str();
        (blk.sign > 0 ? item.r_plus : item.r_minus) = r;
        rep.r_plus += item.r_plus;
        rep.r_minus += item.r_minus;
        rep.items.push_back(std::move(item));
    }
}

}  // namespace

ReductionReport reduction_rational(const SignedVector& sv) {
    ReductionReport rep;
    add_blocks(sv, "", rep);
    return rep;
}

ReductionReport reduction_montesinos(const MontesinosAnalysis& an) {
    ReductionReport rep;
    for (std::size_t j = 0; j < an.tangles.size(); ++j) {
        const TangleAnalysis& ta = an.tangles[j];
        SignedVector sv = ta.sv;
        if (ta.parity == SeifertParity::p1) {
            // a parity-1 tangle reduces like its parity-2 companion with
            // one more crossing in the first entry and one more circle
            sv.entries[0] -= 1;
            sv = SignedVector::from_entries(sv.entries);
        }
        std::ostringstream os;
        os << "tangle " << j + 1 << " ";
        add_blocks(sv, os.str(), rep);
    }
    if (an.link_class == MontesinosClass::M2) {
        // the anchor circles of the antiparallel assembly always give back
        // one circle on the negative side
        rep.items.push_back({"anchor pair", 0, 1});
        rep.r_minus += 1;
    } else if (an.link_class == MontesinosClass::B) {
        const long long r_cycle =
            an.eta + an.presentation.e - an.delta0_value;
        if (r_cycle > 0) {
            rep.items.push_back({"e-cycle", r_cycle, 0});
            rep.r_plus += r_cycle;
        }
    }
    return rep;
}

BaseEquationReport verify_base_equations(const OrientedDiagram& d,
                                         long long r_plus, long long r_minus,
                                         HomflyEngine& engine) {
    const Laurent2 h = engine.evaluate(d);
    const AExtremes ex = a_extremes(h);
    BaseEquationReport rep;
    rep.max_a = ex.max_a;
    rep.min_a = ex.min_a;
    rep.s = seifert_decompose(d).circle_count;
    rep.w = d.writhe();
    rep.r_plus = r_plus;
    rep.r_minus = r_minus;
    rep.high_ok = rep.max_a == rep.s - rep.w - 1 - 2 * r_minus;
    rep.low_ok = rep.min_a == -rep.s - rep.w + 1 + 2 * r_plus;
    return rep;
}

}  // namespace braidex
