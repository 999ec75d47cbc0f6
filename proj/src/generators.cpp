#include "treeconn/generators.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <queue>

#include "treeconn/errors.hpp"
#include "treeconn/packing.hpp"
#include "treeconn/verify.hpp"

namespace treeconn {

namespace {

Multigraph canonical_graph(int n, std::vector<std::pair<int, int>> pairs) {
    for (auto& [u, v] : pairs)
        if (u > v) std::swap(u, v);
    std::stable_sort(pairs.begin(), pairs.end());
    return Multigraph::from_pairs(n, pairs);
}

}  // namespace

// Stoer-Wagner on the weighted quotient (weight = edge multiplicity); ties in
// the maximum-adjacency order break toward the lowest vertex id.
EdgeCut edge_connectivity(const Multigraph& g) {
    int n = g.vertex_count();
    if (n <= 1) return EdgeCut{0, {}, true};
    std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
    for (const Edge& e : g.edges()) {
        ++w[e.u][e.v];
        ++w[e.v][e.u];
    }
    std::vector<std::vector<int>> group(n);
    std::vector<int> active(n);
    std::iota(active.begin(), active.end(), 0);
    for (int v = 0; v < n; ++v) group[v] = {v};
    long long best = LLONG_MAX;
    std::vector<int> best_side;
    while (active.size() > 1) {
        std::vector<long long> tight(n, 0);
        std::vector<char> in_a(n, 0);
        std::vector<int> order;
        for (size_t step = 0; step < active.size(); ++step) {
            int pick = -1;
            for (int v : active)
                if (!in_a[v] && (pick == -1 || tight[v] > tight[pick])) pick = v;
            in_a[pick] = 1;
            order.push_back(pick);
            for (int v : active)
                if (!in_a[v]) tight[v] += w[pick][v];
        }
        int t = order.back();
        int s = order[order.size() - 2];
        long long phase = tight[t];
        if (phase < best) {
            best = phase;
            best_side = group[t];
        }
        // merge t into s
        for (int v : active)
            if (v != s && v != t) {
                w[s][v] += w[t][v];
                w[v][s] = w[s][v];
            }
        group[s].insert(group[s].end(), group[t].begin(), group[t].end());
        active.erase(std::find(active.begin(), active.end(), t));
    }
    std::sort(best_side.begin(), best_side.end());
    return EdgeCut{static_cast<int>(best), std::move(best_side), false};
}

EdgeCut essential_edge_connectivity(const Multigraph& g) {
    int n = g.vertex_count();
    if (n <= 1) return EdgeCut{0, {}, true};
    if (n > 24) throw capacity_error("essential edge connectivity is enumerated; capped at 24");
    long long best = LLONG_MAX;
    std::uint64_t best_mask = 0;
    // sides not containing vertex 0 cover every cut once
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << (n - 1)); ++mask) {
        std::uint64_t side = mask << 1;
        std::vector<int> cut;
        for (const Edge& e : g.edges())
            if (((side >> e.u) & 1) != ((side >> e.v) & 1)) cut.push_back(e.id);
        if (cut.empty()) continue;
        // coverable by one vertex? the cover must be an endpoint of every edge
        const Edge& first = g.edge_by_id(cut.front());
        bool coverable = false;
        for (int cand : {first.u, first.v}) {
            bool all = true;
            for (int id : cut) {
                const Edge& e = g.edge_by_id(id);
                if (e.u != cand && e.v != cand) {
                    all = false;
                    break;
                }
            }
            if (all) {
                coverable = true;
                break;
            }
        }
        if (coverable) continue;
        if (static_cast<long long>(cut.size()) < best) {
            best = cut.size();
            best_mask = side;
        }
    }
    if (best == LLONG_MAX) return EdgeCut{0, {}, true};
    std::vector<int> sidev;
    for (int v = 0; v < n; ++v)
        if (best_mask >> v & 1) sidev.push_back(v);
    return EdgeCut{static_cast<int>(best), std::move(sidev), false};
}

bool is_s_connected(const Multigraph& g, int s) {
    int n = g.vertex_count();
    if (n <= s) return false;
    if (n > 62) throw capacity_error("is_s_connected: brute force capped at 62 vertices");
    if (component_count_masked(g, 0) != 1) return false;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from, int left) -> bool {
        if (left == 0) {
            std::uint64_t mask = 0;
            for (int v : pick) mask |= std::uint64_t(1) << v;
            return component_count_masked(g, mask) == 1;
        }
        for (int v = from; v < n; ++v) {
            pick.push_back(v);
            bool ok = self(self, v + 1, left - 1);
            pick.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    for (int size = 1; size < s; ++size)
        if (!rec(rec, 0, size)) return false;
    return true;
}

int girth(const Multigraph& g) {
    int best = INT_MAX;
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> dist(g.vertex_count(), -1), via(g.vertex_count(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& inc : g.incident(v)) {
                if (inc.id == via[v]) continue;
                if (dist[inc.to] == -1) {
                    dist[inc.to] = dist[v] + 1;
                    via[inc.to] = inc.id;
                    q.push(inc.to);
                } else {
                    best = std::min(best, dist[v] + dist[inc.to] + 1);
                }
            }
        }
    }
    return best;
}

Multigraph petersen() {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i) {
        pairs.emplace_back(i, (i + 1) % 5);          // outer cycle
        pairs.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        pairs.emplace_back(i, i + 5);                // spokes
    }
    Multigraph p = canonical_graph(10, std::move(pairs));
    if (p.vertex_count() != 10 || p.edge_count() != 15) throw internal_error("petersen: counts");
    for (int v = 0; v < 10; ++v)
        if (p.degree(v) != 3) throw internal_error("petersen: not 3-regular");
    if (girth(p) != 5) throw internal_error("petersen: girth is not 5");
    return p;
}

Multigraph petersen_chain(int n) {
    if (n < 1) throw input_error("petersen_chain needs n >= 1");
    Multigraph base = petersen();
    // fixed edge x_i y_i = (0, 1); all x_i collapse to 0, all y_i to 1, and
    // the n parallel xy candidates collapse to one simple edge
    std::vector<std::pair<int, int>> pairs;
    pairs.emplace_back(0, 1);
    for (int i = 0; i < n; ++i) {
        auto map_vertex = [&](int v) { return v <= 1 ? v : 2 + 8 * i + (v - 2); };
        for (const Edge& e : base.edges()) {
            if ((e.u == 0 && e.v == 1) || (e.u == 1 && e.v == 0)) continue;
            pairs.emplace_back(map_vertex(e.u), map_vertex(e.v));
        }
    }
    Multigraph g = canonical_graph(8 * n + 2, std::move(pairs));
    if (g.edge_count() != 14 * n + 1) throw internal_error("petersen_chain: edge count");
    return g;
}

Multigraph circulant(int n, int m) {
    if (m < 1 || n < 2 * m + 1) throw input_error("circulant C_n(1..m) needs n >= 2m+1");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= m; ++j) pairs.emplace_back(i, (i + j) % n);
    return canonical_graph(n, std::move(pairs));
}

Multigraph sparse_threshold_graph(const Multigraph& base, int m) {
    if (m < 1) throw input_error("m must be positive");
    int n = base.vertex_count();
    for (int v = 0; v < n; ++v)
        if (base.degree(v) != 2 * m)
            throw input_error("sparse threshold base must be 2m-regular (vertex " +
                              std::to_string(v) + " has degree " + std::to_string(base.degree(v)) +
                              ")");
    if (component_count_masked(base, 0) != 1)
        throw input_error("sparse threshold base must be connected");
    EdgeCut ess = essential_edge_connectivity(base);
    if (!ess.infinite && ess.value < 2 * m + 2) {
        std::string side;
        for (int v : ess.side) side += " " + std::to_string(v);
        throw input_error("base is not essentially " + std::to_string(2 * m + 2) +
                          "-edge-connected: essential cut of size " + std::to_string(ess.value) +
                          " at side{" + side + " }");
    }

    // lexicographically first m+1 edges that do not share a common vertex
    std::vector<int> ids;
    for (const Edge& e : base.edges()) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    std::vector<int> removed;
    std::optional<std::vector<int>> found;
    auto star = [&](const std::vector<int>& set) {
        const Edge& first = base.edge_by_id(set.front());
        for (int cand : {first.u, first.v}) {
            bool all = true;
            for (int id : set) {
                const Edge& e = base.edge_by_id(id);
                if (e.u != cand && e.v != cand) all = false;
            }
            if (all) return true;
        }
        return false;
    };
    auto rec = [&](auto&& self, size_t from, int left) -> void {
        if (found) return;
        if (left == 0) {
            if (!star(removed)) found = removed;
            return;
        }
        for (size_t i = from; i + left <= ids.size(); ++i) {
            removed.push_back(ids[i]);
            self(self, i + 1, left - 1);
            removed.pop_back();
            if (found) return;
        }
    };
    rec(rec, 0, m + 1);
    if (!found) throw input_error("no m+1 edges avoid a common vertex");

    std::vector<Edge> kept;
    for (const Edge& e : base.edges())
        if (std::find(found->begin(), found->end(), e.id) == found->end()) kept.push_back(e);
    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : kept) pairs.emplace_back(e.u, e.v);
    Multigraph g = canonical_graph(n, std::move(pairs));

    if (g.edge_count() != m * (n - 1) - 1) throw internal_error("sparse threshold: edge count");
    if (omega_value(g, m) != m + 1) throw internal_error("sparse threshold: omega is not m+1");
    if (n <= 10) {
        // every partition with a non-singleton part keeps the full m(|P|-1)
        for_each_partition(n, [&](const std::vector<int>& idx, int parts) {
            long long cross = 0;
            for (const Edge& e : g.edges()) cross += idx[e.u] != idx[e.v];
            long long need = static_cast<long long>(m) * (parts - 1) - (parts == n ? 1 : 0);
            if (cross < need) throw internal_error("sparse threshold: partition bound violated");
            return true;
        });
    }
    return g;
}

Multigraph blowup_no_factor(const Multigraph& h, int n, int s, int p, int delta, BlowupKind kind) {
    (void)kind;  // both families share the construction; H carries the difference
    if (h.is_null()) throw input_error("blowup needs a nonnull pattern graph");
    if (n < 1 || s < 1 || p < 1 || delta < 1) throw input_error("blowup parameters must be positive");
    if (p <= delta * s) throw input_error("blowup needs p > delta * s");
    if (n < h.max_degree())
        throw input_error("blowup needs n >= max degree of H so clique vertices meet one H-edge");

    const int hv = h.vertex_count();
    const int copy_size = n * hv;
    const int total = p * copy_size + s;
    std::vector<std::pair<int, int>> pairs;
    auto block_vertex = [&](int copy, int hvertex, int slot) {
        return copy * copy_size + hvertex * n + slot;
    };
    // per H-vertex slot assignment so each clique vertex meets <= 1 H-edge
    std::vector<int> slot_counter(hv, 0);
    for (int copy = 0; copy < p; ++copy) {
        std::fill(slot_counter.begin(), slot_counter.end(), 0);
        for (int a = 0; a < hv; ++a)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    pairs.emplace_back(block_vertex(copy, a, i), block_vertex(copy, a, j));
        std::vector<int> ids;
        for (const Edge& e : h.edges()) ids.push_back(e.id);
        std::sort(ids.begin(), ids.end());
        for (int id : ids) {
            const Edge& e = h.edge_by_id(id);
            pairs.emplace_back(block_vertex(copy, e.u, slot_counter[e.u]++),
                               block_vertex(copy, e.v, slot_counter[e.v]++));
        }
    }
    // the cliques U_i (H-vertex 0's block) joined pairwise
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    pairs.emplace_back(block_vertex(a, 0, i), block_vertex(b, 0, j));
    // R_s complete and joined to everything else
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j)
            pairs.emplace_back(p * copy_size + i, p * copy_size + j);
        for (int v = 0; v < p * copy_size; ++v) pairs.emplace_back(p * copy_size + i, v);
    }
    Multigraph g = canonical_graph(total, std::move(pairs));
    if (g.vertex_count() != total) throw internal_error("blowup: vertex count");
    if (total <= 62 && s <= 4 && !is_s_connected(g, s))
        throw internal_error("blowup: output is not s-connected");
    return g;
}

}  // namespace treeconn
