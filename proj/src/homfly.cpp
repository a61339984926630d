#include "braidex/homfly.hpp"

#include <functional>
#include <ostream>

namespace braidex {

HomflyMemo::HomflyMemo(std::size_t capacity)
    : shard_capacity_(capacity / kShards + 1) {}

bool HomflyMemo::get(const std::string& key, Laurent2& out) {
    Shard& sh = shards_[std::hash<std::string>{}(key) % kShards];
    std::lock_guard<std::mutex> lock(sh.mutex);
    auto it = sh.map.find(key);
    if (it == sh.map.end()) return false;
    sh.order.splice(sh.order.begin(), sh.order, it->second);
    out = it->second->second;
    return true;
}

void HomflyMemo::put(const std::string& key, const Laurent2& value) {
    Shard& sh = shards_[std::hash<std::string>{}(key) % kShards];
    std::lock_guard<std::mutex> lock(sh.mutex);
    auto it = sh.map.find(key);
    if (it != sh.map.end()) {
        sh.order.splice(sh.order.begin(), sh.order, it->second);
        return;
    }
    sh.order.emplace_front(key, value);
    sh.map[key] = sh.order.begin();
    while (sh.map.size() > shard_capacity_) {
        sh.map.erase(sh.order.back().first);
        sh.order.pop_back();
    }
}

std::size_t HomflyMemo::size() const {
    std::size_t n = 0;
    for (const Shard& sh : shards_) {
        std::lock_guard<std::mutex> lock(sh.mutex);
        n += sh.map.size();
    }
    return n;
}

HomflyEngine::HomflyEngine(HomflyOptions opts)
    : opts_(opts), memo_(opts.memo_capacity) {}

Laurent2 homfly(const OrientedDiagram& d, HomflyOptions opts) {
    HomflyEngine engine(opts);
    return engine.evaluate(d);
}

namespace {

// First crossing whose first encounter along the fixed component walk is
// on the under-strand; -1 when the diagram is descending.
int first_bad_crossing(const OrientedDiagram& d) {
    std::vector<char> visited(d.crossings.size(), 0);
    for (const auto& cycle : d.components().cycles) {
        for (int e : cycle) {
            const auto& h = d.head(e);
            if (visited[h.crossing]) continue;
            visited[h.crossing] = 1;
            if (h.under) return h.crossing;
        }
    }
    return -1;
}

}  // namespace

long long HomflyEngine::trace_node(const OrientedDiagram& d, long long parent,
                                   const char* kind, const Int& coeff, int zp,
                                   int ap, const Laurent2* leaf) {
    const long long id = trace_counter_++;
    if (opts_.trace) {
        std::ostream& os = *opts_.trace;
        os << "{\"node\":" << id << ",\"parent\":" << parent << ",\"kind\":\""
           << kind << "\",\"crossings\":" << d.crossing_count()
           << ",\"weight\":{\"coeff\":\"" << coeff.str() << "\",\"z\":" << zp
           << ",\"a\":" << ap << "}";
        if (leaf) os << ",\"leaf\":\"" << leaf->to_string() << "\"";
        os << "}\n";
    }
    return id;
}

Laurent2 HomflyEngine::evaluate(const OrientedDiagram& d) {
    if (d.crossing_count() > opts_.crossing_cap)
        throw CapExceeded("homfly: diagram has " +
                          std::to_string(d.crossing_count()) +
                          " crossings, cap is " +
                          std::to_string(opts_.crossing_cap) +
                          " (raise with --cap)");
    return eval(remove_kinks(d), -1);
}

Laurent2 HomflyEngine::eval(const OrientedDiagram& d, long long parent_id) {
    ++nodes_;
    const int ncomp = d.components().count();
    check(ncomp >= 1, "homfly: empty diagram");

    if (d.crossings.empty()) {
        const Laurent2 value = Laurent2::unlink_factor_pow(ncomp - 1);
        trace_node(d, parent_id, "unlink", 1, 0, 0, &value);
        return value;
    }

    std::string key;
    if (opts_.use_memo) {
        key = d.canonical_key();
        Laurent2 cached;
        if (memo_.get(key, cached)) {
            ++memo_hits_;
            trace_node(d, parent_id, "memo", 1, 0, 0, &cached);
            return cached;
        }
    }

    const int bad = first_bad_crossing(d);
    if (bad < 0) {
        // descending: each component lies above the later ones and is
        // itself descending, so the diagram is an n-component unlink
        const Laurent2 value = Laurent2::unlink_factor_pow(ncomp - 1);
        trace_node(d, parent_id, "descending", 1, 0, 0, &value);
        if (opts_.use_memo) memo_.put(key, value);
        return value;
    }

    const int sign = d.crossings[bad].sign;
    const OrientedDiagram switched = remove_kinks(switch_crossing(d, bad));
    const OrientedDiagram smoothed = remove_kinks(smooth_crossing(d, bad));

    Laurent2 value;
    if (sign > 0) {
        // H(D+) = a^-2 H(D-) + a^-1 z H(D0)
        const long long id =
            trace_node(d, parent_id, "branch+", 1, 0, 0, nullptr);
        value = mul_monomial(eval(switched, id), 1, 0, -2) +
                mul_monomial(eval(smoothed, id), 1, 1, -1);
    } else {
        // H(D-) = a^2 H(D+) - a z H(D0)
        const long long id =
            trace_node(d, parent_id, "branch-", 1, 0, 0, nullptr);
        value = mul_monomial(eval(switched, id), 1, 0, 2) +
                mul_monomial(eval(smoothed, id), -1, 1, 1);
    }
    if (opts_.use_memo) memo_.put(key, value);
    return value;
}

int mwf_lower_bound(const Laurent2& h) {
    const AExtremes ex = a_extremes(h);
    const int spread = ex.max_a - ex.min_a;
    check(spread % 2 == 0,
          "mwf_lower_bound: odd a-spread, not a link polynomial");
    return spread / 2 + 1;
}

MortonReport morton_bounds_check(const OrientedDiagram& d,
                                 const Laurent2& p) {
    const AExtremes ex = a_extremes(p);
    MortonReport r;
    r.max_a = ex.max_a;
    r.min_a = ex.min_a;
    r.s = seifert_decompose(d).circle_count;
    r.w = d.writhe();
    r.high_slack = (r.s - r.w - 1) - r.max_a;
    r.low_slack = r.min_a - (-r.s - r.w + 1);
    check(r.ok(), "morton_bounds_check: Morton bound violated (engine bug)");
    return r;
}

}  // namespace braidex
