#pragma once

#include <cstddef>
#include <iosfwd>
#include <list>
#include <mutex>
#include <string>
#include <unordered_map>

#include "braidex/diagram.hpp"
#include "braidex/laurent.hpp"
#include "braidex/seifert.hpp"

namespace braidex {

constexpr int kDefaultCrossingCap = 20;

struct HomflyOptions {
    int crossing_cap = kDefaultCrossingCap;
    std::size_t memo_capacity = std::size_t{1} << 20;
    bool use_memo = true;
    // When set, the resolving tree is emitted as JSON lines.
    std::ostream* trace = nullptr;
};

// Bounded LRU cache from canonical diagram keys to polynomials, sharded so
// it can be shared across threads with insert-or-get semantics. Any cached
// value is the exact invariant of its key, so concurrent use cannot change
// results.
class HomflyMemo {
public:
    explicit HomflyMemo(std::size_t capacity);
    bool get(const std::string& key, Laurent2& out);
    void put(const std::string& key, const Laurent2& value);
    std::size_t size() const;

private:
    static constexpr int kShards = 16;
    struct Shard {
        mutable std::mutex mutex;
        std::list<std::pair<std::string, Laurent2>> order;  // MRU first
        std::unordered_map<std::string,
                           std::list<std::pair<std::string, Laurent2>>::
                               iterator>
            map;
    };
    Shard shards_[kShards];
    std::size_t shard_capacity_;
};

// Exact HOMFLY polynomial by skein resolving trees over descending
// diagrams: walking the components from fixed basepoints, the first
// crossing met on its under-strand is switched and smoothed via the skein
// relation; a diagram with no such crossing is an unlink.
class HomflyEngine {
public:
    explicit HomflyEngine(HomflyOptions opts = {});

    Laurent2 evaluate(const OrientedDiagram& d);

    std::size_t nodes_evaluated() const { return nodes_; }
    std::size_t memo_hits() const { return memo_hits_; }
    const HomflyOptions& options() const { return opts_; }

private:
    Laurent2 eval(const OrientedDiagram& d, long long parent_id);
    long long trace_node(const OrientedDiagram& d, long long parent,
                         const char* kind, const Int& coeff, int zp, int ap,
                         const Laurent2* leaf);

    HomflyOptions opts_;
    HomflyMemo memo_;
    std::size_t nodes_ = 0;
    std::size_t memo_hits_ = 0;
    long long trace_counter_ = 0;
};

// Convenience wrapper with a throwaway engine.
Laurent2 homfly(const OrientedDiagram& d, HomflyOptions opts = {});

// Morton-Franks-Williams lower bound (E - e)/2 + 1. The spread E - e of a
// link polynomial is even; anything else is rejected as an engine bug.
int mwf_lower_bound(const Laurent2& h);

struct MortonReport {
    int max_a = 0, min_a = 0;
    int s = 0, w = 0;
    int high_slack = 0;  // (s - w - 1) - E
    int low_slack = 0;   // e - (-s - w + 1)
    bool ok() const { return high_slack >= 0 && low_slack >= 0; }
    bool tight() const { return high_slack == 0 && low_slack == 0; }
};

// Checks E <= s - w - 1 and e >= -s - w + 1 for p = homfly(d). A violation
// is a hard error: it cannot happen for a correct engine.
MortonReport morton_bounds_check(const OrientedDiagram& d, const Laurent2& p);

}  // namespace braidex
