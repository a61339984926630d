#include "braidex/geom.hpp"

#include <algorithm>
#include <array>

namespace braidex {

int Skeleton::new_strand() {
    const int arc = static_cast<int>(arcs.size());
    arcs.push_back(Arc{});
    arc_alias_.push_back(arc);
    const int h = static_cast<int>(handles_.size());
    handles_.push_back(Handle{arc, 0, false});
    handles_.push_back(Handle{arc, 1, false});
    arcs[arc].end[0].handle = h;
    arcs[arc].end[1].handle = h + 1;
    return h;
}

int Skeleton::add_crossing(bool over_nwse, int tag) {
    crossings.push_back(GeoCrossing{});
    crossings.back().over_nwse = over_nwse;
    crossings.back().tag = tag;
    return static_cast<int>(crossings.size()) - 1;
}

int Skeleton::find_arc(int arc) const {
    while (arc_alias_[arc] != arc) arc = arc_alias_[arc];
    return arc;
}

int Skeleton::arc_of_handle(int handle) const {
    check(!handles_[handle].dead, "arc_of_handle: handle already consumed");
    return handles_[handle].arc;
}

void Skeleton::attach(int handle, int crossing, Q slot) {
    Handle& h = handles_[handle];
    check(!h.dead, "attach: handle already consumed");
    ArcEnd& e = arcs[h.arc].end[h.end];
    e.crossing = crossing;
    e.slot = slot;
    e.handle = -1;
    crossings[crossing].arc[static_cast<int>(slot)] = h.arc;
    h.dead = true;
}

void Skeleton::join(int h1, int h2) {
    Handle& a = handles_[h1];
    Handle& b = handles_[h2];
    check(!a.dead && !b.dead, "join: handle already consumed");
    if (a.arc == b.arc) {
        arcs[a.arc].circle = true;
        arcs[a.arc].end[0].handle = arcs[a.arc].end[1].handle = -1;
        a.dead = b.dead = true;
        return;
    }
    // Absorb arc b into arc a: a's joined end takes over b's far end.
    Arc& arc_a = arcs[a.arc];
    Arc& arc_b = arcs[b.arc];
    const ArcEnd far = arc_b.end[1 - b.end];
    arc_a.end[a.end] = far;
    if (far.crossing >= 0) {
        crossings[far.crossing].arc[static_cast<int>(far.slot)] = a.arc;
    } else {
        handles_[far.handle] = Handle{a.arc, a.end, false};
    }
    arc_b.dead = true;
    arc_alias_[b.arc] = a.arc;
    a.dead = b.dead = true;
}

Q Skeleton::partner(Q slot) {
    switch (slot) {
        case Q::NW: return Q::SE;
        case Q::SE: return Q::NW;
        case Q::NE: return Q::SW;
        case Q::SW: return Q::NE;
    }
    return Q::NW;
}

Skeleton::ChainEnds Skeleton::twist_east(int upper, int lower, int m,
                                         bool over_nwse, int tag) {
    for (int i = 0; i < m; ++i) {
        const int c = add_crossing(over_nwse, tag);
        attach(upper, c, Q::NW);
        attach(lower, c, Q::SW);
        const int s1 = new_strand();
        const int s2 = new_strand();
        attach(s1, c, Q::NE);
        attach(s2, c, Q::SE);
        upper = s1 + 1;
        lower = s2 + 1;
    }
    return ChainEnds{upper, lower};
}

Skeleton::ChainEnds Skeleton::twist_south(int left, int right, int m,
                                          bool over_nwse, int tag) {
    for (int i = 0; i < m; ++i) {
        const int c = add_crossing(over_nwse, tag);
        attach(left, c, Q::NW);
        attach(right, c, Q::NE);
        const int s1 = new_strand();
        const int s2 = new_strand();
        attach(s1, c, Q::SW);
        attach(s2, c, Q::SE);
        left = s1 + 1;
        right = s2 + 1;
    }
    return ChainEnds{left, right};
}

std::vector<std::vector<int>> Skeleton::component_arcs() const {
    std::vector<char> seen(arcs.size(), 0);
    std::vector<std::vector<int>> comps;
    for (std::size_t a0 = 0; a0 < arcs.size(); ++a0) {
        if (arcs[a0].dead || seen[a0]) continue;
        if (arcs[a0].circle) {
            seen[a0] = 1;
            comps.push_back({static_cast<int>(a0)});
            continue;
        }
        std::vector<int> cyc;
        int arc = static_cast<int>(a0);
        // walk "forward" out of end[1] of the base arc
        int leave_end = 1;
        do {
            check(!arcs[arc].dead, "component_arcs: dead arc in walk");
            seen[arc] = 1;
            cyc.push_back(arc);
            const ArcEnd& e = arcs[arc].end[leave_end];
            check(e.crossing >= 0, "component_arcs: open end in closed "
                                   "skeleton");
            const Q p = partner(e.slot);
            const int next = crossings[e.crossing].arc[static_cast<int>(p)];
            // the next arc leaves the crossing at slot p
            const int enter_end =
                (arcs[next].end[0].crossing == e.crossing &&
                 arcs[next].end[0].slot == p)
                    ? 0
                    : 1;
            arc = next;
            leave_end = 1 - enter_end;
        } while (arc != static_cast<int>(a0));
        comps.push_back(std::move(cyc));
    }
    return comps;
}

int Skeleton::component_count() const {
    return static_cast<int>(component_arcs().size());
}

Skeleton::Oriented Skeleton::orient(
    const std::vector<int>& head_end_of_base) const {
    const auto comps = component_arcs();
    check(head_end_of_base.size() == comps.size(),
          "orient: one head choice per component required");

    // head_end[arc]: which end the strand flows into
    std::vector<int> head_end(arcs.size(), -1);
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& cyc = comps[ci];
        if (arcs[cyc[0]].circle) continue;
        int arc = cyc[0];
        int head = head_end_of_base[ci];
        for (std::size_t step = 0; step < cyc.size(); ++step) {
            head_end[arc] = head;
            const ArcEnd& e = arcs[arc].end[head];
            const Q p = partner(e.slot);
            const int next = crossings[e.crossing].arc[static_cast<int>(p)];
            // next flows out of slot p, so its head is the other end
            const int tail_end =
                (arcs[next].end[0].crossing == e.crossing &&
                 arcs[next].end[0].slot == p)
                    ? 0
                    : 1;
            arc = next;
            head = 1 - tail_end;
        }
    }

    // dense edge ids for alive arcs
    Oriented out;
    out.edge_of_arc.assign(arcs.size(), -1);
    int next_edge = 0;
    for (std::size_t a = 0; a < arcs.size(); ++a)
        if (!arcs[a].dead) out.edge_of_arc[a] = next_edge++;
    out.diagram.edge_count = next_edge;

    // direction vector of a strand flowing into `slot`
    auto dir = [](Q into) -> std::array<int, 2> {
        switch (into) {
            case Q::NW: return {1, -1};   // NW -> SE
            case Q::SE: return {-1, 1};   // SE -> NW
            case Q::NE: return {-1, -1};  // NE -> SW
            case Q::SW: return {1, 1};    // SW -> NE
        }
        return {0, 0};
    };

    for (std::size_t c = 0; c < crossings.size(); ++c) {
        const GeoCrossing& g = crossings[c];
        const Q over_a = g.over_nwse ? Q::NW : Q::NE;
        const Q over_b = partner(over_a);
        const Q under_a = g.over_nwse ? Q::NE : Q::NW;
        const Q under_b = partner(under_a);

        auto flows_in = [&](Q slot) {
            const int arc = g.arc[static_cast<int>(slot)];
            check(arc >= 0, "orient: unbound crossing slot");
            const Arc& a = arcs[arc];
            const int end = (a.end[0].crossing == static_cast<int>(c) &&
                             a.end[0].slot == slot)
                                ? 0
                                : 1;
            check(a.end[end].crossing == static_cast<int>(c) &&
                      a.end[end].slot == slot,
                  "orient: slot binding mismatch");
            return head_end[arc] == end;
        };

        const Q over_in = flows_in(over_a) ? over_a : over_b;
        check(!flows_in(partner(over_in)),
              "orient: over strand flows in at both ends");
        const Q under_in = flows_in(under_a) ? under_a : under_b;
        check(!flows_in(partner(under_in)),
              "orient: under strand flows in at both ends");

        const auto ov = dir(over_in);
        const auto un = dir(under_in);
        const int cross_product = ov[0] * un[1] - ov[1] * un[0];

        Crossing x;
        x.over_in = out.edge_of_arc[g.arc[static_cast<int>(over_in)]];
        x.over_out =
            out.edge_of_arc[g.arc[static_cast<int>(partner(over_in))]];
        x.under_in = out.edge_of_arc[g.arc[static_cast<int>(under_in)]];
        x.under_out =
            out.edge_of_arc[g.arc[static_cast<int>(partner(under_in))]];
        x.sign = cross_product > 0 ? 1 : -1;
        x.tag = g.tag;
        out.diagram.crossings.push_back(x);
    }
    out.diagram.finalize();
    return out;
}

}  // namespace braidex
