#pragma once

// Test-side helpers and independent oracles. The oracles deliberately avoid
// the library's matroid-union / cycle-space code paths: ranks come from the
// partition formula, Eulerian subgraphs from plain subset loops.

#include <algorithm>
#include <climits>
#include <numeric>
#include <random>
#include <vector>

#include "treeconn/multigraph.hpp"
#include "treeconn/trails.hpp"
#include "treeconn/verify.hpp"

namespace tsupport {

using treeconn::Edge;
using treeconn::Multigraph;

inline Multigraph path_graph(int n) {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i + 1 < n; ++i) p.emplace_back(i, i + 1);
    return Multigraph::from_pairs(n, p);
}

inline Multigraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < n; ++i) p.emplace_back(i, (i + 1) % n);
    return Multigraph::from_pairs(n, p);
}

inline Multigraph complete_graph(int n) {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) p.emplace_back(i, j);
    return Multigraph::from_pairs(n, p);
}

inline Multigraph random_multigraph(std::mt19937& rng, int n, int edges) {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < edges; ++i) {
        int u = static_cast<int>(rng() % n);
        int v = static_cast<int>(rng() % n);
        while (v == u) v = static_cast<int>(rng() % n);
        p.emplace_back(u, v);
    }
    return Multigraph::from_pairs(n, p);
}

inline Multigraph random_simple_connected(std::mt19937& rng, int n, int extra_edges) {
    std::vector<std::pair<int, int>> p;
    for (int v = 1; v < n; ++v) p.emplace_back(static_cast<int>(rng() % v), v);  // random tree
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::find(p.begin(), p.end(), std::make_pair(i, j)) == p.end() &&
                std::find(p.begin(), p.end(), std::make_pair(j, i)) == p.end())
                all.emplace_back(i, j);
    std::shuffle(all.begin(), all.end(), rng);
    for (int i = 0; i < extra_edges && i < static_cast<int>(all.size()); ++i) p.push_back(all[i]);
    return Multigraph::from_pairs(n, p);
}

// rank oracle: min over all vertex partitions of m(n - |P|) + e_G(P)
inline long long rank_oracle(const Multigraph& g, int m) {
    long long best = LLONG_MAX;
    treeconn::for_each_partition(g.vertex_count(), [&](const std::vector<int>& idx, int parts) {
        long long cross = 0;
        for (const Edge& e : g.edges()) cross += idx[e.u] != idx[e.v];
        best = std::min(best, static_cast<long long>(m) * (g.vertex_count() - parts) + cross);
        return true;
    });
    return best;
}

// plain 2^|E| loop: does a spanning connected even subgraph (degrees >= 2,
// <= caps when given) exist?
inline bool eulerian_oracle(const Multigraph& g, const std::vector<int>* caps = nullptr) {
    int mcount = g.edge_count();
    if (g.vertex_count() == 1) return true;
    std::vector<Edge> es(g.edges().begin(), g.edges().end());
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << mcount); ++mask) {
        std::vector<int> deg(g.vertex_count(), 0);
        std::vector<int> ids;
        for (int i = 0; i < mcount; ++i)
            if (mask >> i & 1) {
                ++deg[es[i].u];
                ++deg[es[i].v];
                ids.push_back(es[i].id);
            }
        bool ok = true;
        for (int v = 0; v < g.vertex_count() && ok; ++v) {
            ok = deg[v] >= 2 && deg[v] % 2 == 0;
            if (ok && caps) ok = deg[v] <= (*caps)[v];
        }
        if (!ok) continue;
        if (treeconn::components(treeconn::edge_subgraph(g, ids)).count == 1) return true;
    }
    return false;
}

// all spanning trees as edge-id sets (for small graphs)
inline std::vector<std::vector<int>> spanning_trees(const Multigraph& g) {
    std::vector<std::vector<int>> out;
    int n = g.vertex_count(), mcount = g.edge_count();
    if (mcount < n - 1) return out;
    std::vector<Edge> es(g.edges().begin(), g.edges().end());
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            std::vector<int> parent(n);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int v) {
                while (parent[v] != v) v = parent[v] = parent[parent[v]];
                return v;
            };
            for (int i : pick) {
                int a = find(es[i].u), b = find(es[i].v);
                if (a == b) return;
                parent[a] = b;
            }
            std::vector<int> ids;
            for (int i : pick) ids.push_back(es[i].id);
            std::sort(ids.begin(), ids.end());
            out.push_back(ids);
            return;
        }
        for (int i = from; i + left <= mcount; ++i) {
            pick.push_back(i);
            self(self, i + 1, left - 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, n - 1);
    return out;
}

// replay a closed trail: adjacency chaining, closure, no edge reuse,
// spanning, and visit counts = d_L(v)/2
inline bool valid_closed_trail(const Multigraph& g, const treeconn::ClosedTrail& t) {
    if (t.edge_sequence.empty()) return g.vertex_count() == 1;
    std::vector<char> used(g.max_edge_id() + 1, 0);
    std::vector<int> deg(g.vertex_count(), 0);
    int at = t.start;
    for (int id : t.edge_sequence) {
        if (!g.has_edge_id(id) || used[id]) return false;
        used[id] = 1;
        const Edge& e = g.edge_by_id(id);
        if (e.u != at && e.v != at) return false;
        at = e.u == at ? e.v : e.u;
        ++deg[e.u];
        ++deg[e.v];
    }
    if (at != t.start) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (deg[v] == 0) return false;  // spanning
        if (deg[v] % 2) return false;
        if (t.visit_counts[v] != deg[v] / 2) return false;
    }
    return true;
}

// replay a closed walk: each original edge used at most twice
inline bool valid_closed_walk(const Multigraph& g, const treeconn::ClosedWalk& w,
                              const std::vector<int>& f) {
    if (w.edge_sequence.empty()) return g.vertex_count() == 1;
    std::vector<int> used(g.max_edge_id() + 1, 0);
    std::vector<int> deg(g.vertex_count(), 0);
    int at = w.start;
    for (int id : w.edge_sequence) {
        if (!g.has_edge_id(id)) return false;
        if (++used[id] > 2) return false;
        const Edge& e = g.edge_by_id(id);
        if (e.u != at && e.v != at) return false;
        at = e.u == at ? e.v : e.u;
        ++deg[e.u];
        ++deg[e.v];
    }
    if (at != w.start) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (deg[v] == 0) return false;
        if (deg[v] % 2) return false;
        if (deg[v] / 2 > f[v]) return false;
    }
    return true;
}

}  // namespace tsupport
