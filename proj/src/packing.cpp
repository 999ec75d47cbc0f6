#include "treeconn/packing.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "treeconn/errors.hpp"

namespace treeconn {

int ForestPacking::rank() const {
    int r = 0;
    for (const auto& f : forests) r += static_cast<int>(f.size());
    return r;
}

bool ForestPacking::verify(const Multigraph& g) const {
    std::vector<char> used(g.max_edge_id() + 1, 0);
    for (const auto& forest : forests) {
        // acyclic: union-find over the forest's edges
        std::vector<int> parent(g.vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (int id : forest) {
            if (!g.has_edge_id(id) || used[id]) return false;
            used[id] = 1;
            const Edge& e = g.edge_by_id(id);
            int a = find(e.u), b = find(e.v);
            if (a == b) return false;
            parent[a] = b;
        }
    }
    ForestUnion fu(g, m);
    for (const auto& forest : forests)
        for (int id : forest)
            if (!fu.insert(id)) return false;
    // maximal: no remaining edge augments
    for (const Edge& e : g.edges())
        if (!used[e.id] && fu.insert(e.id)) return false;
    return true;
}

bool PartitionCertificate::verify(const Multigraph& g) const {
    if (!partition.is_partition_of(g.vertex_count())) return false;
    long long cross = edges_across(g, partition);
    return deficiency == static_cast<long long>(m) * (partition.size() - 1) - cross &&
           deficiency > 0;
}

ForestUnion::ForestUnion(const Multigraph& g, int m) : g_(&g), m_(m) {
    if (m < 1) throw input_error("packing multiplicity must be positive");
    assigned_.assign(g.edge_count(), -1);
    adj_.assign(m, std::vector<std::vector<int>>(g.vertex_count()));
    pos_of_id_.assign(g.max_edge_id() + 1, -1);
    for (int i = 0; i < g.edge_count(); ++i) pos_of_id_[g.edges()[i].id] = i;
}

int ForestUnion::forest_of_id(int edge_id) const {
    if (edge_id < 0 || edge_id >= static_cast<int>(pos_of_id_.size()) || pos_of_id_[edge_id] < 0)
        throw input_error("unknown edge id");
    return assigned_[pos_of_id_[edge_id]];
}

void ForestUnion::attach(int pos, int forest) {
    assigned_[pos] = forest;
    const Edge& e = g_->edges()[pos];
    adj_[forest][e.u].push_back(pos);
    adj_[forest][e.v].push_back(pos);
}

void ForestUnion::detach(int pos) {
    int forest = assigned_[pos];
    const Edge& e = g_->edges()[pos];
    auto& au = adj_[forest][e.u];
    au.erase(std::find(au.begin(), au.end(), pos));
    auto& av = adj_[forest][e.v];
    av.erase(std::find(av.begin(), av.end(), pos));
    assigned_[pos] = -1;
}

// Path between two vertices inside one forest, as edge positions. Returns
// false when they are in different trees.
bool ForestUnion::forest_path(int forest, int from, int to, std::vector<int>* path_out) const {
    if (from == to) {
        if (path_out) path_out->clear();
        return true;
    }
    std::vector<int> via_edge(g_->vertex_count(), -1);
    std::vector<int> via_vertex(g_->vertex_count(), -1);
    std::queue<int> q;
    q.push(from);
    via_vertex[from] = from;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int pos : adj_[forest][v]) {
            const Edge& e = g_->edges()[pos];
            int w = e.u == v ? e.v : e.u;
            if (via_vertex[w] != -1) continue;
            via_vertex[w] = v;
            via_edge[w] = pos;
            if (w == to) {
                if (path_out) {
                    path_out->clear();
                    for (int x = to; x != from; x = via_vertex[x]) path_out->push_back(via_edge[x]);
                }
                return true;
            }
            q.push(w);
        }
    }
    return false;
}

// Breadth-first augmentation from a (possibly virtual) new edge u-v.
// self_pos >= 0 names the real edge position so its own forest is skipped.
// On success the exchange chain is applied backwards: the fitting element
// enters the free forest, its discoverer takes the vacated slot, and so on
// up to the new edge.
bool ForestUnion::augment(int u, int v, int self_pos, bool apply) {
    struct Item {
        int pos;  // -1 when the root is virtual
        int u, v;
        int pred;  // discovering item, -1 at the root
    };
    std::vector<Item> items;
    std::vector<char> seen(g_->edge_count(), 0);
    if (self_pos >= 0) seen[self_pos] = 1;
    items.push_back({self_pos, u, v, -1});
    std::vector<int> path;
    for (size_t qi = 0; qi < items.size(); ++qi) {
        Item it = items[qi];  // copy: items grows below
        int own = it.pos >= 0 ? assigned_[it.pos] : -1;
        for (int f = 0; f < m_; ++f) {
            if (f == own) continue;
            if (forest_path(f, it.u, it.v, &path)) {
                std::sort(path.begin(), path.end(), [this](int a, int b) {
                    return g_->edges()[a].id < g_->edges()[b].id;
                });
                for (int pos : path) {
                    if (seen[pos]) continue;
                    seen[pos] = 1;
                    const Edge& e = g_->edges()[pos];
                    items.push_back({pos, e.u, e.v, static_cast<int>(qi)});
                }
                continue;
            }
            if (!apply) return true;
            int cur = static_cast<int>(qi);
            int target = f;
            while (cur >= 0) {
                Item& x = items[cur];
                int old_forest = x.pos >= 0 ? assigned_[x.pos] : -1;
                if (x.pos >= 0) {
                    if (old_forest >= 0) detach(x.pos);
                    attach(x.pos, target);
                }
                target = old_forest;
                cur = x.pred;
            }
            ++rank_;
            return true;
        }
    }
    return false;
}

bool ForestUnion::insert(int edge_id) {
    if (edge_id < 0 || edge_id >= static_cast<int>(pos_of_id_.size()) || pos_of_id_[edge_id] < 0)
        throw input_error("unknown edge id");
    int pos = pos_of_id_[edge_id];
    if (assigned_[pos] >= 0) return false;
    const Edge& e = g_->edges()[pos];
    return augment(e.u, e.v, pos, true);
}

void ForestUnion::insert_all() {
    std::vector<int> ids;
    ids.reserve(g_->edge_count());
    for (const Edge& e : g_->edges()) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    for (int id : ids)
        if (assigned_[pos_of_id_[id]] < 0) insert(id);
}

bool ForestUnion::can_insert_pair(int u, int v) const {
    if (u == v) return false;
    return const_cast<ForestUnion*>(this)->augment(u, v, -1, false);
}

ForestPacking ForestUnion::extract() const {
    ForestPacking p;
    p.m = m_;
    p.forests.assign(m_, {});
    for (int pos = 0; pos < g_->edge_count(); ++pos)
        if (assigned_[pos] >= 0) p.forests[assigned_[pos]].push_back(g_->edges()[pos].id);
    for (auto& f : p.forests) std::sort(f.begin(), f.end());
    return p;
}

int max_forest_rank(const Multigraph& g, int m) {
    if (g.is_null()) return 0;
    ForestUnion fu(g, m);
    fu.insert_all();
    return fu.rank();
}

ForestPacking max_forest_union(const Multigraph& g, int m) {
    if (g.is_null()) throw input_error("max_forest_union: null graph");
    ForestUnion fu(g, m);
    fu.insert_all();
    return fu.extract();
}

bool is_tree_connected_quick(const Multigraph& g, int m) {
    if (g.is_null()) throw input_error("tree-connectivity of the null graph is undefined");
    return max_forest_rank(g, m) == static_cast<long long>(m) * (g.vertex_count() - 1);
}

TreeConnectivity is_m_tree_connected(const Multigraph& g, int m) {
    if (g.is_null()) throw input_error("tree-connectivity of the null graph is undefined");
    ForestUnion fu(g, m);
    fu.insert_all();
    TreeConnectivity out;
    if (fu.rank() == m * (g.vertex_count() - 1)) {
        out.connected = true;
        out.packing = fu.extract();
        return out;
    }
    out.connected = false;
    PartitionCertificate cert;
    cert.partition = tree_connected_components(g, m);
    cert.m = m;
    cert.deficiency =
        static_cast<long long>(m) * (cert.partition.size() - 1) - edges_across(g, cert.partition);
    if (cert.deficiency <= 0) throw internal_error("deficient partition extraction failed");
    out.certificate = std::move(cert);
    return out;
}

long long omega_value(const Multigraph& g, int m) {
    if (g.is_null()) return 0;
    return static_cast<long long>(m) * g.vertex_count() - max_forest_rank(g, m);
}

VertexPartition tree_connected_components(const Multigraph& g, int m) {
    if (g.is_null()) return VertexPartition{};
    ForestUnion fu(g, m);
    fu.insert_all();
    // union-find; merging is driven by probes on distinct adjacent pairs
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Edge& e : g.edges()) {
        int a = find(e.u), b = find(e.v);
        if (a == b) continue;
        if (!fu.can_insert_pair(e.u, e.v)) parent[std::max(a, b)] = std::min(a, b);
    }
    VertexPartition p;
    p.ground = g.vertex_count();
    std::vector<std::vector<int>> groups(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) groups[find(v)].push_back(v);
    for (auto& grp : groups)
        if (!grp.empty()) p.parts.push_back(std::move(grp));
    p.canonicalize();
    return p;
}

OmegaValue omega(const Multigraph& g, int m) {
    OmegaValue out;
    out.m = m;
    out.value = omega_value(g, m);
    out.witness = tree_connected_components(g, m);
    return out;
}

SparsityResult is_m_sparse(const Multigraph& g, int m) {
    if (g.is_null()) throw input_error("sparsity of the null graph is undefined");
    ForestUnion fu(g, m);
    fu.insert_all();
    if (fu.rank() == g.edge_count()) return SparsityResult{true, {}};
    // lowest-id unpacked edge; its ends lie in one m-tree-connected component
    // of G - e, and that component spans strictly more than m|X| - m edges
    int bad_id = -1;
    std::vector<int> ids;
    for (const Edge& e : g.edges()) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    for (int id : ids)
        if (fu.forest_of_id(id) < 0) {
            bad_id = id;
            break;
        }
    const Edge bad = g.edge_by_id(bad_id);
    std::vector<Edge> rest;
    for (const Edge& e : g.edges())
        if (e.id != bad_id) rest.push_back(e);
    Multigraph g_minus(g.vertex_count(), std::move(rest));
    VertexPartition comps = tree_connected_components(g_minus, m);
    std::vector<int> witness;
    for (const auto& part : comps.parts)
        if (std::find(part.begin(), part.end(), bad.u) != part.end()) {
            witness = part;
            break;
        }
    if (edges_inside(g, witness) <= static_cast<long long>(m) * static_cast<long long>(witness.size()) - m)
        throw internal_error("sparsity witness extraction failed");
    return SparsityResult{false, std::move(witness)};
}

// Minimality here is subgraph minimality: at the fixpoint no proper induced
// subgraph of the host holds x and y and stays m-tree-connected, and the
// edge set is a basis (m(|V|-1) edges), so no single edge can be dropped
// either. Both are needed by the exchange arguments built on top.
SubgraphRef minimal_tc_subgraph(const Multigraph& h, int m, int x, int y) {
    if (x < 0 || x >= h.vertex_count() || y < 0 || y >= h.vertex_count())
        throw input_error("minimal_tc_subgraph: unknown vertex id");
    VertexPartition comps = tree_connected_components(h, m);
    std::vector<int> idx = comps.part_index();
    if (idx[x] != idx[y])
        throw domain_error("vertices lie in different m-tree-connected components");
    std::vector<int> xset = comps.parts[idx[x]];

    // shrink: drop one vertex at a time while some m-tree-connected component
    // of the rest still holds both x and y
    bool changed = true;
    while (changed && xset.size() > (x == y ? 1u : 2u)) {
        changed = false;
        for (int z : xset) {
            if (z == x || z == y) continue;
            std::vector<int> rest;
            for (int v : xset)
                if (v != z) rest.push_back(v);
            auto view = induced_subgraph_mapped(h, rest);
            VertexPartition sub_comps = tree_connected_components(view.graph, m);
            std::vector<int> sub_idx = sub_comps.part_index();
            std::vector<int> host_to_sub(h.vertex_count(), -1);
            for (int i = 0; i < static_cast<int>(view.to_host.size()); ++i)
                host_to_sub[view.to_host[i]] = i;
            if (sub_idx[host_to_sub[x]] != sub_idx[host_to_sub[y]]) continue;
            std::vector<int> next;
            for (int v : sub_comps.parts[sub_idx[host_to_sub[x]]]) next.push_back(view.to_host[v]);
            std::sort(next.begin(), next.end());
            xset = std::move(next);
            changed = true;
            break;
        }
    }

    // basis of the m-fold union on H[X], greedy by ascending edge id
    auto view = induced_subgraph_mapped(h, xset);
    ForestUnion fu(view.graph, m);
    fu.insert_all();
    if (fu.rank() != m * (view.graph.vertex_count() - 1))
        throw internal_error("minimal subgraph region lost tree-connectivity");
    SubgraphRef q;
    q.vertices = xset;
    for (const Edge& e : view.graph.edges())
        if (fu.forest_of_id(e.id) >= 0) q.edge_ids.push_back(e.id);
    std::sort(q.edge_ids.begin(), q.edge_ids.end());
    return q;
}

}  // namespace treeconn
