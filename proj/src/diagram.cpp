#include "braidex/diagram.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>

#include "braidex/plat.hpp"

namespace braidex {

void OrientedDiagram::finalize() {
    heads_.assign(edge_count, End{});
    tails_.assign(edge_count, End{});
    std::vector<int> in_seen(edge_count, 0), out_seen(edge_count, 0);
    auto set_in = [&](int e, int c, bool under) {
        check(e >= 0 && e < edge_count, "finalize: edge id out of range");
        heads_[e] = End{c, under};
        ++in_seen[e];
    };
    auto set_out = [&](int e, int c, bool under) {
        check(e >= 0 && e < edge_count, "finalize: edge id out of range");
        tails_[e] = End{c, under};
        ++out_seen[e];
    };
    for (int i = 0; i < crossing_count(); ++i) {
        const Crossing& x = crossings[i];
        check(x.sign == 1 || x.sign == -1, "finalize: crossing sign not +-1");
        set_in(x.under_in, i, true);
        set_in(x.over_in, i, false);
        set_out(x.under_out, i, true);
        set_out(x.over_out, i, false);
    }
    for (int e = 0; e < edge_count; ++e)
        check(in_seen[e] == out_seen[e] && in_seen[e] <= 1,
              "finalize: edge not used exactly once in each direction");
    comps_valid_ = false;
    finalized_ = true;
}

int OrientedDiagram::negative_crossing_count() const {
    int n = 0;
    for (const Crossing& x : crossings) n += x.sign < 0;
    return n;
}

int OrientedDiagram::writhe() const {
    int w = 0;
    for (const Crossing& x : crossings) w += x.sign;
    return w;
}

int OrientedDiagram::strand_next(int e) const {
    const End& h = heads_[e];
    check(h.crossing >= 0, "strand_next: loop edge");
    const Crossing& x = crossings[h.crossing];
    return h.under ? x.under_out : x.over_out;
}

int OrientedDiagram::seifert_next(int e) const {
    const End& h = heads_[e];
    check(h.crossing >= 0, "seifert_next: loop edge");
    const Crossing& x = crossings[h.crossing];
    return h.under ? x.over_out : x.under_out;
}

const OrientedDiagram::Components& OrientedDiagram::components() const {
    if (comps_valid_) return comps_;
    comps_ = Components{};
    comps_.component_of_edge.assign(edge_count, -1);
    for (int e = 0; e < edge_count; ++e) {
        if (heads_[e].crossing < 0) continue;  // loop, handled below
        if (comps_.component_of_edge[e] >= 0) continue;
        std::vector<int> cycle;
        int cur = e;
        do {
            cycle.push_back(cur);
            comps_.component_of_edge[cur] =
                static_cast<int>(comps_.cycles.size());
            cur = strand_next(cur);
        } while (cur != e);
        // e is the smallest unvisited edge, so the cycle already starts at
        // its minimal id
        comps_.cycles.push_back(std::move(cycle));
    }
    for (int e = 0; e < edge_count; ++e)
        if (heads_[e].crossing < 0) {
            comps_.component_of_edge[e] =
                static_cast<int>(comps_.cycles.size() + comps_.loops.size());
            comps_.loops.push_back(e);
        }
    comps_valid_ = true;
    return comps_;
}

bool OrientedDiagram::is_alternating() const {
    if (crossings.empty()) return true;
    for (const auto& cycle : components().cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const bool u0 = heads_[cycle[i]].under;
            const bool u1 = heads_[cycle[(i + 1) % cycle.size()]].under;
            if (u0 == u1) return false;
        }
    }
    return true;
}

std::string OrientedDiagram::canonical_key() const {
    // Relabel edges along the component traversal (cycles anchored at their
    // minimal original edge id), then serialize crossings sorted by their
    // relabeled under-in edge.
    std::vector<int> relabel(edge_count, -1);
    int next = 0;
    for (const auto& cycle : components().cycles)
        for (int e : cycle) relabel[e] = next++;
    const int loops = static_cast<int>(components().loops.size());

    std::vector<std::array<int, 5>> rows;
    rows.reserve(crossings.size());
    for (const Crossing& x : crossings)
        rows.push_back({relabel[x.under_in], relabel[x.under_out],
                        relabel[x.over_in], relabel[x.over_out], x.sign});
    std::sort(rows.begin(), rows.end());

    std::string key;
    key.reserve(8 + rows.size() * 20);
    auto put = [&key](int v) {
        key.append(reinterpret_cast<const char*>(&v), sizeof v);
    };
    put(static_cast<int>(rows.size()));
    put(loops);
    for (const auto& r : rows)
        for (int v : r) put(v);
    return key;
}

OrientedDiagram mirror(const OrientedDiagram& d) {
    OrientedDiagram out = d;
    for (Crossing& x : out.crossings) {
        std::swap(x.over_in, x.under_in);
        std::swap(x.over_out, x.under_out);
        x.sign = -x.sign;
    }
    out.finalize();
    return out;
}

OrientedDiagram switch_crossing(const OrientedDiagram& d, int crossing) {
    OrientedDiagram out = d;
    Crossing& x = out.crossings[crossing];
    std::swap(x.over_in, x.under_in);
    std::swap(x.over_out, x.under_out);
    x.sign = -x.sign;
    out.finalize();
    return out;
}

namespace {

struct EdgeUnion {
    std::vector<int> parent;
    explicit EdgeUnion(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;  // keep the smaller id as representative
    }
};

// Rebuilds a diagram from d with crossing `skip` removed, edge classes
// merged per `uf`, and the edges in `drop` deleted outright. Edge classes
// that end up referenced by no crossing survive as crossing-free loops
// unless dropped.
OrientedDiagram rebuild(const OrientedDiagram& d, int skip, EdgeUnion& uf,
                        const std::vector<int>& drop) {
    std::vector<char> dropped(d.edge_count, 0);
    for (int e : drop) dropped[uf.find(e)] = 1;

    std::vector<char> survives(d.edge_count, 0);
    for (int e = 0; e < d.edge_count; ++e) {
        const int r = uf.find(e);
        if (!dropped[r]) survives[r] = 1;
    }
    std::vector<int> dense(d.edge_count, -1);
    int next = 0;
    for (int e = 0; e < d.edge_count; ++e)
        if (survives[e]) dense[e] = next++;

    OrientedDiagram out;
    out.edge_count = next;
    for (int i = 0; i < d.crossing_count(); ++i) {
        if (i == skip) continue;
        Crossing x = d.crossings[i];
        x.over_in = dense[uf.find(x.over_in)];
        x.over_out = dense[uf.find(x.over_out)];
        x.under_in = dense[uf.find(x.under_in)];
        x.under_out = dense[uf.find(x.under_out)];
        out.crossings.push_back(x);
    }
    out.finalize();
    return out;
}

}  // namespace

OrientedDiagram smooth_crossing(const OrientedDiagram& d, int crossing) {
    const Crossing& x = d.crossings[crossing];
    EdgeUnion uf(d.edge_count);
    // Coherent smoothing: the under-in strand continues as over-out, the
    // over-in strand as under-out.
    uf.unite(x.under_in, x.over_out);
    uf.unite(x.over_in, x.under_out);
    return rebuild(d, crossing, uf, {});
}

OrientedDiagram remove_kinks(const OrientedDiagram& d) {
    OrientedDiagram cur = d;
    for (;;) {
        int kink = -1, loop_edge = -1, in_edge = -1, out_edge = -1;
        for (int i = 0; i < cur.crossing_count(); ++i) {
            const Crossing& x = cur.crossings[i];
            if (x.over_out == x.under_in) {
                kink = i;
                loop_edge = x.over_out;
                in_edge = x.over_in;
                out_edge = x.under_out;
                break;
            }
            if (x.under_out == x.over_in) {
                kink = i;
                loop_edge = x.under_out;
                in_edge = x.under_in;
                out_edge = x.over_out;
                break;
            }
        }
        if (kink < 0) return cur;
        EdgeUnion uf(cur.edge_count);
        uf.unite(in_edge, out_edge);
        cur = rebuild(cur, kink, uf, {loop_edge});
    }
}

OrientedDiagram reverse_components(const OrientedDiagram& d,
                                   const std::vector<int>& comps) {
    std::vector<char> rev_comp(d.components().count(), 0);
    for (int c : comps) rev_comp.at(c) = 1;
    const auto& of = d.components().component_of_edge;
    OrientedDiagram out = d;
    for (Crossing& x : out.crossings) {
        const bool ru = rev_comp[of[x.under_in]];
        const bool ro = rev_comp[of[x.over_in]];
        if (ru) std::swap(x.under_in, x.under_out);
        if (ro) std::swap(x.over_in, x.over_out);
        if (ru != ro) x.sign = -x.sign;
    }
    out.finalize();
    return out;
}

OrientedDiagram disjoint_union(const OrientedDiagram& d1,
                               const OrientedDiagram& d2) {
    OrientedDiagram out;
    out.edge_count = d1.edge_count + d2.edge_count;
    out.crossings = d1.crossings;
    const int off = d1.edge_count;
    for (Crossing x : d2.crossings) {
        x.over_in += off;
        x.over_out += off;
        x.under_in += off;
        x.under_out += off;
        out.crossings.push_back(x);
    }
    out.finalize();
    return out;
}

namespace {

OrientedDiagram delete_loop_edge(const OrientedDiagram& d, int e) {
    EdgeUnion uf(d.edge_count);
    return rebuild(d, -1, uf, {e});
}

}  // namespace

OrientedDiagram connected_sum(const OrientedDiagram& d1,
                              const OrientedDiagram& d2, int edge1,
                              int edge2) {
    check(edge1 >= 0 && edge1 < d1.edge_count, "connected_sum: bad edge1");
    check(edge2 >= 0 && edge2 < d2.edge_count, "connected_sum: bad edge2");

    // Splicing a crossing-free circle into a strand just extends the
    // strand, so an unknot summand drops its loop edge.
    const bool loop1 = d1.is_loop_edge(edge1);
    const bool loop2 = d2.is_loop_edge(edge2);
    if (loop1 && loop2) {
        OrientedDiagram out = disjoint_union(delete_loop_edge(d1, edge1),
                                             delete_loop_edge(d2, edge2));
        ++out.edge_count;  // the two circles splice into one
        out.finalize();
        return out;
    }
    if (loop1) return disjoint_union(delete_loop_edge(d1, edge1), d2);
    if (loop2) return disjoint_union(d1, delete_loop_edge(d2, edge2));

    OrientedDiagram out = disjoint_union(d1, d2);
    const int e2 = edge2 + d1.edge_count;
    // Cross-splice: tail(edge1) -> head(e2) keeps id edge1, and
    // tail(e2) -> head(edge1) keeps id e2.
    const auto h1 = d1.head(edge1);
    const auto h2 = d2.head(edge2);
    auto in_slot = [&](int ci, bool under) -> int& {
        Crossing& x = out.crossings[ci];
        return under ? x.under_in : x.over_in;
    };
    in_slot(h1.crossing, h1.under) = e2;
    in_slot(h2.crossing + d1.crossing_count(), h2.under) = edge1;
    out.finalize();
    return out;
}

OrientedDiagram build_elementary_torus(int m, bool parallel) {
    check(m >= 1, "build_elementary_torus: m must be >= 1");
    FourPlatSkeleton skel = build_4plat({m});
    const int nc = fourplat_orientation_count(skel);
    if (nc == 1) {
        check(parallel, "build_elementary_torus: odd m has no antiparallel "
                        "orientation");
        return orient_4plat(skel, 0).diagram;
    }
    for (int choice = 0; choice < 2; ++choice) {
        OrientedDiagram d = orient_4plat(skel, choice).diagram;
        const bool is_parallel = d.writhe() == m;
        if (is_parallel == parallel) return d;
    }
    throw CheckError("build_elementary_torus: no orientation matched");
}

}  // namespace braidex
