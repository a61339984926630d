#include "braidex/seifert.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <utility>

namespace braidex {

SeifertDecomposition seifert_decompose(const OrientedDiagram& d) {
    SeifertDecomposition sd;
    sd.circle_of_edge.assign(d.edge_count, -1);
    for (int e = 0; e < d.edge_count; ++e) {
        if (sd.circle_of_edge[e] >= 0 || d.is_loop_edge(e)) continue;
        int cur = e;
        do {
            sd.circle_of_edge[cur] = sd.circle_count;
            cur = d.seifert_next(cur);
        } while (cur != e);
        ++sd.circle_count;
    }
    for (int e = 0; e < d.edge_count; ++e)
        if (d.is_loop_edge(e)) sd.circle_of_edge[e] = sd.circle_count++;

    sd.at_crossing.reserve(d.crossings.size());
    for (const Crossing& x : d.crossings) {
        int c1 = sd.circle_of_edge[x.under_in];
        int c2 = sd.circle_of_edge[x.over_in];
        check(c1 != c2, "seifert_decompose: a Seifert circle crosses itself");
        if (c1 > c2) std::swap(c1, c2);
        sd.at_crossing.push_back({c1, c2, x.sign});
    }
    return sd;
}

SeifertGraph seifert_graph(const SeifertDecomposition& sd) {
    SeifertGraph g;
    g.vertex_count = sd.circle_count;
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i < static_cast<int>(sd.at_crossing.size()); ++i) {
        const auto& cc = sd.at_crossing[i];
        auto [it, fresh] = index.try_emplace({cc.c1, cc.c2},
                                             static_cast<int>(g.edges.size()));
        if (fresh) {
            SeifertGraph::MultiEdge e;
            e.c1 = cc.c1;
            e.c2 = cc.c2;
            g.edges.push_back(e);
        }
        SeifertGraph::MultiEdge& e = g.edges[it->second];
        (cc.sign > 0 ? e.positive : e.negative) += 1;
        e.crossings.push_back(i);
    }
    return g;
}

int SeifertGraph::lone_count() const {
    int n = 0;
    for (const auto& e : edges) n += e.lone();
    return n;
}

int SeifertGraph::sigma_plus() const {
    int n = 0;
    for (const auto& e : edges) n += e.positive >= 2;
    return n;
}

int SeifertGraph::sigma_minus() const {
    int n = 0;
    for (const auto& e : edges) n += e.negative >= 2;
    return n;
}

bool SeifertGraph::connected() const {
    if (vertex_count <= 1) return true;
    std::vector<std::vector<int>> adj(vertex_count);
    for (const auto& e : edges) {
        adj[e.c1].push_back(e.c2);
        adj[e.c2].push_back(e.c1);
    }
    std::vector<char> seen(vertex_count, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == vertex_count;
}

bool SeifertGraph::bipartite() const {
    std::vector<std::vector<int>> adj(vertex_count);
    for (const auto& e : edges) {
        adj[e.c1].push_back(e.c2);
        adj[e.c2].push_back(e.c1);
    }
    std::vector<int> color(vertex_count, -1);
    for (int s = 0; s < vertex_count; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int w : adj[v]) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Tarjan biconnected components over the pair-graph; two edges lie on a
// common cycle iff they share a block.
struct BlockFinder {
    const std::vector<std::vector<std::pair<int, int>>>& adj;  // (to, edge)
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> stack;  // edge stack as (edge, from)
    std::vector<std::vector<int>> blocks;
    int counter = 0;

    explicit BlockFinder(
        const std::vector<std::vector<std::pair<int, int>>>& a)
        : adj(a), num(a.size(), -1), low(a.size(), 0) {}

    void dfs(int v, int parent_edge) {
        num[v] = low[v] = counter++;
        for (auto [w, eid] : adj[v]) {
            if (eid == parent_edge) continue;
            if (num[w] < 0) {
                stack.push_back({eid, v});
                dfs(w, eid);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) pop_block(eid);
            } else if (num[w] < num[v]) {
                stack.push_back({eid, v});
                low[v] = std::min(low[v], num[w]);
            }
        }
    }

    void pop_block(int root_edge) {
        std::vector<int> blk;
        while (!stack.empty()) {
            auto [eid, from] = stack.back();
            stack.pop_back();
            blk.push_back(eid);
            if (eid == root_edge) break;
        }
        blocks.push_back(std::move(blk));
    }
};

}  // namespace

bool SeifertGraph::cycles_single_signed() const {
    // Parallel multiedges already form 2-cycles, so a mixed-sign multiedge
    // is itself a violation.
    std::vector<std::vector<std::pair<int, int>>> adj(vertex_count);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        if (edges[i].sign() == 0) return false;
        adj[edges[i].c1].push_back({edges[i].c2, i});
        adj[edges[i].c2].push_back({edges[i].c1, i});
    }
    BlockFinder bf(adj);
    for (int v = 0; v < vertex_count; ++v)
        if (bf.num[v] < 0) bf.dfs(v, -1);
    for (const auto& blk : bf.blocks) {
        if (blk.size() < 2) continue;  // bridge: on no cycle
        int pos = 0, neg = 0;
        for (int eid : blk) (edges[eid].sign() > 0 ? pos : neg) = 1;
        if (pos && neg) return false;
    }
    return true;
}

}  // namespace braidex
