#pragma once

#include <string>

#include <json.hpp>

#include "braidex/diagram.hpp"

namespace braidex {

// PD-code JSON format, one diagram per file:
//   {"components": n,
//    "crossings": [{"edges": [a,b,c,d], "over": 0|1}, ...],
//    "orientations": [1, ...]}
// Edge numbers follow component traversal order (edge k flows into edge
// k+1 along its component). The edges of a crossing are listed
// counterclockwise starting at the incoming under-strand edge; "over" is 1
// when the over-strand enters at the last listed edge (a positive
// crossing) and 0 otherwise. An orientation entry of -1 means that
// component's edges are numbered against its flow. Writing renumbers
// deterministically, so write(read(j)) == j for files in written form.
nlohmann::json write_pd(const OrientedDiagram& d);
OrientedDiagram read_pd(const nlohmann::json& j);

nlohmann::json load_pd_file(const std::string& path);

}  // namespace braidex
