#pragma once

#include <string>
#include <vector>

#include "braidex/errors.hpp"

namespace braidex {

// One crossing of an oriented link diagram. Edges are directed arcs between
// crossings, identified by dense integer ids; *_in edges flow into the
// crossing, *_out edges leave it. sign is the usual right-hand convention:
// +1 when rotating the over-strand direction by -90 degrees gives the
// under-strand direction.
struct Crossing {
    int over_in = -1;
    int over_out = -1;
    int under_in = -1;
    int under_out = -1;
    int sign = 0;
    // Builder annotation identifying the twist region the crossing belongs
    // to (continued-fraction entry, tangle entry, e-region). -1 if untagged.
    int tag = -1;
};

// An oriented link diagram in PD style. Edge ids run 0..edge_count-1; an id
// that appears in no crossing is a closed crossing-free loop component (this
// is how the 0-crossing unknot is represented). Diagrams are treated as
// immutable once finalized; all operations return new diagrams.
class OrientedDiagram {
public:
    std::vector<Crossing> crossings;
    int edge_count = 0;

    // Builds the edge endpoint tables and validates closedness: every
    // referenced edge occurs exactly once as an in-edge and once as an
    // out-edge, and every sign is +-1.
    void finalize();

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int negative_crossing_count() const;
    int writhe() const;

    struct End {
        int crossing = -1;
        bool under = false;
    };
    bool is_loop_edge(int e) const { return heads_[e].crossing < 0; }
    const End& head(int e) const { return heads_[e]; }
    const End& tail(int e) const { return tails_[e]; }

    // Next edge when walking along the strand through the head crossing.
    int strand_next(int e) const;
    // Next edge when every crossing is smoothed coherently with orientation.
    int seifert_next(int e) const;

    struct Components {
        // Non-loop components as edge cycles; each cycle starts at its
        // minimal edge id and cycles are ordered by that id.
        std::vector<std::vector<int>> cycles;
        std::vector<int> loops;  // crossing-free loop edges, ascending
        std::vector<int> component_of_edge;
        int count() const {
            return static_cast<int>(cycles.size() + loops.size());
        }
    };
    const Components& components() const;

    bool is_alternating() const;

    // Deterministic relabeled serialization, used as memo key. Two diagrams
    // with equal keys are related by an edge relabeling, hence have equal
    // HOMFLY polynomials.
    std::string canonical_key() const;

private:
    std::vector<End> heads_, tails_;
    mutable Components comps_;
    mutable bool comps_valid_ = false;
    bool finalized_ = false;
};

OrientedDiagram mirror(const OrientedDiagram& d);
OrientedDiagram switch_crossing(const OrientedDiagram& d, int crossing);
OrientedDiagram smooth_crossing(const OrientedDiagram& d, int crossing);

// Removes Reidemeister-I kinks (a crossing whose over-out edge is its own
// under-in edge, or under-out its own over-in) until none remain. The
// HOMFLY polynomial is invariant under this.
OrientedDiagram remove_kinks(const OrientedDiagram& d);

// Reverses the orientation of the selected components (indices into
// components()). Crossing signs flip where exactly one strand is reversed.
OrientedDiagram reverse_components(const OrientedDiagram& d,
                                   const std::vector<int>& comps);

// Cuts edge1 of d1 and edge2 of d2 and cross-splices them, forming a
// diagram of the connected sum. Either edge may be a crossing-free loop, in
// which case that summand is an unknot and drops out.
OrientedDiagram connected_sum(const OrientedDiagram& d1,
                              const OrientedDiagram& d2, int edge1,
                              int edge2);

// Oriented elementary torus diagram: two strands twisting through m
// same-sign crossings. With parallel orientation the two Seifert circles
// run the same way and every crossing is positive. Antiparallel orientation
// exists only for even m (two components).
OrientedDiagram build_elementary_torus(int m, bool parallel = true);

}  // namespace braidex
