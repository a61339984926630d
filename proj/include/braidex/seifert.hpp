#pragma once

#include <vector>

#include "braidex/diagram.hpp"

namespace braidex {

// Seifert circle decomposition: smooth every crossing coherently with
// orientation and collect the resulting circles. Crossing-free loop edges
// count as circles of their own.
struct SeifertDecomposition {
    int circle_count = 0;  // s(D)
    std::vector<int> circle_of_edge;
    struct CrossingCircles {
        int c1 = -1, c2 = -1;  // c1 < c2
        int sign = 0;
    };
    std::vector<CrossingCircles> at_crossing;
};

SeifertDecomposition seifert_decompose(const OrientedDiagram& d);

// Multigraph on the Seifert circles: one multiedge per circle pair, with
// multiplicity and the crossings behind it.
struct SeifertGraph {
    int vertex_count = 0;
    struct MultiEdge {
        int c1 = -1, c2 = -1;
        int positive = 0, negative = 0;
        std::vector<int> crossings;
        int multiplicity() const { return positive + negative; }
        bool lone() const { return multiplicity() == 1; }
        // uniform sign of the group; 0 when mixed
        int sign() const {
            if (positive && negative) return 0;
            return positive ? 1 : -1;
        }
    };
    std::vector<MultiEdge> edges;

    int lone_count() const;
    int sigma_plus() const;   // pairs sharing multiple positive crossings
    int sigma_minus() const;  // pairs sharing multiple negative crossings
    bool connected() const;
    bool bipartite() const;
    // True when no cycle of the multigraph mixes crossing signs, i.e. each
    // biconnected block is single-signed. Expected on alternating diagrams.
    bool cycles_single_signed() const;
};

SeifertGraph seifert_graph(const SeifertDecomposition& sd);

}  // namespace braidex
