#pragma once

#include <vector>

#include "braidex/diagram.hpp"

namespace braidex {

// Quadrant slots of a crossing, in the page frame of the standard drawings.
// The two strands of a crossing run along the diagonals NW-SE and NE-SW.
enum class Q { NW = 0, NE = 1, SW = 2, SE = 3 };

// An unoriented planar skeleton under construction. Arcs are strand pieces;
// each arc end is either bound to a crossing slot or still open. Builders
// create strands, feed open ends into twist chains, and join the leftovers;
// orientation comes afterwards.
class Skeleton {
public:
    struct GeoCrossing {
        int arc[4] = {-1, -1, -1, -1};  // arc id per Q slot
        bool over_nwse = false;  // true: the NW-SE strand passes over
        int tag = -1;
    };
    struct ArcEnd {
        int crossing = -1;  // bound when >= 0
        Q slot = Q::NW;
        int handle = -1;    // open-end handle while unbound
    };
    struct Arc {
        ArcEnd end[2];
        bool circle = false;  // closed with no crossings
        bool dead = false;    // absorbed by a merge
    };

    std::vector<GeoCrossing> crossings;
    std::vector<Arc> arcs;

    // Creates a fresh strand piece and returns the handles of its two open
    // ends (h and h+1).
    int new_strand();
    // Binds the open end behind `handle` to a crossing slot.
    void attach(int handle, int crossing, Q slot);
    // Splices the two open ends into one strand. Joining the two ends of a
    // single arc closes a crossing-free circle.
    void join(int h1, int h2);
    int add_crossing(bool over_nwse, int tag);

    // Representative alive arc id after merges.
    int find_arc(int arc) const;
    // Arc currently behind a live open-end handle.
    int arc_of_handle(int handle) const;

    // A horizontal twist chain of m crossings growing eastward: consumes
    // the open ends `upper` and `lower` (west side), returns the new open
    // ends on the east side.
    struct ChainEnds {
        int first, second;
    };
    ChainEnds twist_east(int upper, int lower, int m, bool over_nwse,
                         int tag);
    // A vertical twist chain of m crossings growing southward: consumes
    // `left` and `right` (north side), returns the south side ends.
    ChainEnds twist_south(int left, int right, int m, bool over_nwse,
                          int tag);

    int component_count() const;
    // Components as arc cycles (alive arcs; circles are singleton
    // components), ordered by minimal arc id, each cycle starting there.
    std::vector<std::vector<int>> component_arcs() const;

    // Orientation: picks a flow direction per component. For component i,
    // head_end_of_base[i] selects which end of the component's base arc
    // (minimal alive arc id) is the head. Returns the oriented diagram and
    // the dense edge id of each alive arc.
    struct Oriented {
        OrientedDiagram diagram;
        std::vector<int> edge_of_arc;  // -1 for dead arcs
    };
    Oriented orient(const std::vector<int>& head_end_of_base) const;

private:
    struct Handle {
        int arc = -1;
        int end = -1;
        bool dead = false;
    };
    std::vector<Handle> handles_;
    std::vector<int> arc_alias_;

    // Continue a strand walk through a crossing: the diagonal partner slot.
    static Q partner(Q slot);
};

}  // namespace braidex
