#pragma once

#include <vector>

#include "braidex/geom.hpp"

namespace braidex {

// Standard 4-plat diagram of a two-bridge link, built from an odd-length
// all-positive continued fraction vector. Four horizontal strings; the
// blocks of the vector become twist regions read right to left (the
// rightmost block is entry 1), alternating between the middle pair of
// strings (odd entries) and the top pair (even entries). The bottom string
// carries no crossings: the long bottom arc.
struct FourPlatSkeleton {
    Skeleton skel;
    std::vector<int> cf;
    int bottom_arc = -1;  // alive arc id of the long bottom strand
};

FourPlatSkeleton build_4plat(const std::vector<int>& cf);

// Number of components of the underlying link (1 or 2), which is the
// number of orientation choices exposed.
int fourplat_orientation_count(const FourPlatSkeleton& skel);

struct FourPlat {
    OrientedDiagram diagram;
    std::vector<int> cf;
    int choice = 0;
    int orientation_count = 1;
};

// Orients the skeleton. The component of the bottom long arc always flows
// in the fixed standard direction; for a two-component link, choice 0 and 1
// select the direction of the other component. Crossing tags are the
// 1-based continued-fraction entry indices.
FourPlat orient_4plat(const FourPlatSkeleton& skel, int choice);

}  // namespace braidex
