#include "braidex/pd_io.hpp"

#include <algorithm>
#include <fstream>

namespace braidex {

nlohmann::json write_pd(const OrientedDiagram& d) {
    // renumber edges along the component traversal
    std::vector<int> renum(d.edge_count, -1);
    int next = 0;
    for (const auto& cycle : d.components().cycles)
        for (int e : cycle) renum[e] = next++;
    for (int e : d.components().loops) renum[e] = next++;

    std::vector<std::pair<int, nlohmann::json>> rows;
    for (const Crossing& x : d.crossings) {
        const int a = renum[x.under_in];
        const int c = renum[x.under_out];
        // counterclockwise from the incoming under edge; for a positive
        // crossing the over strand enters at the last listed edge
        const int b = renum[x.sign > 0 ? x.over_out : x.over_in];
        const int dd = renum[x.sign > 0 ? x.over_in : x.over_out];
        nlohmann::json rec;
        rec["edges"] = {a, b, c, dd};
        rec["over"] = x.sign > 0 ? 1 : 0;
        rows.emplace_back(a, std::move(rec));
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });

    nlohmann::json j;
    j["components"] = d.components().count();
    j["crossings"] = nlohmann::json::array();
    for (auto& [key, rec] : rows) j["crossings"].push_back(std::move(rec));
    j["orientations"] =
        std::vector<int>(static_cast<std::size_t>(d.components().count()), 1);
    return j;
}

OrientedDiagram read_pd(const nlohmann::json& j) {
    if (!j.contains("components") || !j.contains("crossings") ||
        !j.contains("orientations"))
        throw InputError("PD json needs components, crossings, orientations");
    const int components = j["components"].get<int>();
    const auto& recs = j["crossings"];

    OrientedDiagram d;
    int max_edge = -1;
    for (const auto& rec : recs) {
        const auto& e = rec["edges"];
        if (e.size() != 4) throw InputError("PD crossing needs 4 edges");
        const int a = e[0].get<int>(), b = e[1].get<int>(),
                  c = e[2].get<int>(), dd = e[3].get<int>();
        const int over = rec["over"].get<int>();
        if (over != 0 && over != 1)
            throw InputError("PD crossing over flag must be 0 or 1");
        Crossing x;
        x.under_in = a;
        x.under_out = c;
        x.over_in = over ? dd : b;
        x.over_out = over ? b : dd;
        x.sign = over ? 1 : -1;
        d.crossings.push_back(x);
        max_edge = std::max({max_edge, a, b, c, dd});
    }
    d.edge_count = max_edge + 1;
    d.finalize();
    const int traversed = static_cast<int>(d.components().cycles.size());
    const int loops = components - traversed;
    if (loops < 0)
        throw InputError("PD components count below traversed strands");
    d.edge_count += loops;  // loop edges carry the highest ids
    d.finalize();

    const auto& orients = j["orientations"];
    if (static_cast<int>(orients.size()) != components)
        throw InputError("PD orientations length must match components");
    std::vector<int> to_reverse;
    for (int ci = 0; ci < components; ++ci) {
        const int o = orients[ci].get<int>();
        if (o != 1 && o != -1)
            throw InputError("PD orientation entries must be +-1");
        if (o == -1) to_reverse.push_back(ci);
    }
    if (!to_reverse.empty()) d = reverse_components(d, to_reverse);
    return d;
}

nlohmann::json load_pd_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open PD file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw InputError("PD file is not valid JSON: " + path + ": " +
                         ex.what());
    }
    return j;
}

}  // namespace braidex
