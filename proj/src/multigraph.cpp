#include "treeconn/multigraph.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <queue>

#include "treeconn/errors.hpp"

namespace treeconn {

Multigraph::Multigraph(int n) : n_(n) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    build_index();
}

Multigraph::Multigraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw input_error("edge endpoint out of range");
        if (e.u == e.v) throw input_error("loops are not allowed");
        if (e.id < 0) throw input_error("edge ids must be nonnegative");
    }
    build_index();
}

Multigraph Multigraph::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> es;
    es.reserve(pairs.size());
    int next = 0;
    for (auto [u, v] : pairs) es.push_back(Edge{u, v, next++});
    return Multigraph(n, std::move(es));
}

void Multigraph::build_index() {
    adj_.assign(n_, {});
    degree_.assign(n_, 0);
    max_id_ = -1;
    for (const Edge& e : edges_) max_id_ = std::max(max_id_, e.id);
    id_pos_.assign(max_id_ + 1, -1);
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        const Edge& e = edges_[i];
        if (id_pos_[e.id] != -1) throw input_error("duplicate edge id");
        id_pos_[e.id] = i;
        adj_[e.u].push_back({e.v, e.id});
        adj_[e.v].push_back({e.u, e.id});
        ++degree_[e.u];
        ++degree_[e.v];
    }
    for (auto& inc : adj_)
        std::sort(inc.begin(), inc.end(), [](const Inc& a, const Inc& b) { return a.id < b.id; });
}

const Edge& Multigraph::edge_by_id(int id) const {
    if (id < 0 || id > max_id_ || id_pos_[id] < 0) throw input_error("unknown edge id");
    return edges_[id_pos_[id]];
}

bool Multigraph::has_edge_id(int id) const {
    return id >= 0 && id <= max_id_ && id_pos_[id] >= 0;
}

int Multigraph::max_degree() const {
    int d = 0;
    for (int x : degree_) d = std::max(d, x);
    return d;
}

void Multigraph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw input_error("label table size mismatch");
    labels_ = std::move(labels);
}

VertexPartition VertexPartition::singletons(int n) {
    VertexPartition p;
    p.ground = n;
    p.parts.resize(n);
    for (int v = 0; v < n; ++v) p.parts[v] = {v};
    return p;
}

void VertexPartition::canonicalize() {
    for (auto& part : parts) std::sort(part.begin(), part.end());
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

bool VertexPartition::is_partition_of(int n) const {
    std::vector<char> seen(n, 0);
    for (const auto& part : parts) {
        if (part.empty()) return false;
        for (int v : part) {
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = 1;
        }
    }
    for (char c : seen)
        if (!c) return false;
    return true;
}

std::vector<int> VertexPartition::part_index() const {
    std::vector<int> idx(ground, -1);
    for (int i = 0; i < static_cast<int>(parts.size()); ++i)
        for (int v : parts[i]) idx[v] = i;
    return idx;
}

namespace {

std::vector<char> member_mask(int n, const std::vector<int>& s, const char* what) {
    std::vector<char> in(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n) throw input_error(std::string("unknown vertex id in ") + what);
        in[v] = 1;
    }
    return in;
}

}  // namespace

SubgraphView induced_subgraph_mapped(const Multigraph& g, const std::vector<int>& x) {
    if (x.empty()) throw input_error("induced subgraph needs a nonempty vertex set");
    auto in = member_mask(g.vertex_count(), x, "induced_subgraph");
    std::vector<int> to_host;
    std::vector<int> new_id(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (in[v]) {
            new_id[v] = static_cast<int>(to_host.size());
            to_host.push_back(v);
        }
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (in[e.u] && in[e.v]) es.push_back(Edge{new_id[e.u], new_id[e.v], e.id});
    SubgraphView out{Multigraph(static_cast<int>(to_host.size()), std::move(es)), std::move(to_host)};
    return out;
}

Multigraph induced_subgraph(const Multigraph& g, const std::vector<int>& x) {
    return induced_subgraph_mapped(g, x).graph;
}

SubgraphView delete_vertices_mapped(const Multigraph& g, const std::vector<int>& s) {
    auto in = member_mask(g.vertex_count(), s, "delete_vertices");
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in[v]) keep.push_back(v);
    if (keep.empty()) return SubgraphView{Multigraph(), {}};
    return induced_subgraph_mapped(g, keep);
}

Multigraph delete_vertices(const Multigraph& g, const std::vector<int>& s) {
    return delete_vertices_mapped(g, s).graph;
}

Multigraph contract(const Multigraph& g, const VertexPartition& p) {
    if (!p.is_partition_of(g.vertex_count()))
        throw input_error("contract: not a partition of the vertex set");
    VertexPartition cp = p;
    cp.canonicalize();
    cp.ground = g.vertex_count();
    std::vector<int> idx = cp.part_index();
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {
        int a = idx[e.u], b = idx[e.v];
        if (a != b) es.push_back(Edge{a, b, e.id});  // intra-part edges become loops: dropped
    }
    return Multigraph(static_cast<int>(cp.parts.size()), std::move(es));
}

DuplicatedGraph duplicate_edges(const Multigraph& g) {
    std::vector<Edge> es(g.edges().begin(), g.edges().end());
    int next = g.max_edge_id() + 1;
    std::vector<int> original_of(next + g.edge_count(), -1);
    for (const Edge& e : g.edges()) original_of[e.id] = e.id;
    std::vector<Edge> copies;
    for (const Edge& e : g.edges()) {
        copies.push_back(Edge{e.u, e.v, next});
        original_of[next] = e.id;
        ++next;
    }
    es.insert(es.end(), copies.begin(), copies.end());
    return DuplicatedGraph{Multigraph(g.vertex_count(), std::move(es)), std::move(original_of)};
}

ComponentInfo components(const Multigraph& g) {
    ComponentInfo out;
    out.partition.ground = g.vertex_count();
    std::vector<int> comp(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> part;
        std::queue<int> q;
        comp[s] = out.count;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            part.push_back(v);
            for (const auto& inc : g.incident(v))
                if (comp[inc.to] == -1) {
                    comp[inc.to] = out.count;
                    q.push(inc.to);
                }
        }
        std::sort(part.begin(), part.end());
        if (part.size() == 1 && g.degree(part[0]) == 0) ++out.isolated;
        out.partition.parts.push_back(std::move(part));
        ++out.count;
    }
    out.partition.canonicalize();
    return out;
}

Multigraph edge_subgraph(const Multigraph& g, const std::vector<int>& edge_ids) {
    std::vector<Edge> es;
    es.reserve(edge_ids.size());
    for (int id : edge_ids) es.push_back(g.edge_by_id(id));
    return Multigraph(g.vertex_count(), std::move(es));
}

long long edges_inside(const Multigraph& g, const std::vector<int>& s) {
    auto in = member_mask(g.vertex_count(), s, "edges_inside");
    long long cnt = 0;
    for (const Edge& e : g.edges())
        if (in[e.u] && in[e.v]) ++cnt;
    return cnt;
}

long long edges_across(const Multigraph& g, const VertexPartition& p) {
    if (!p.is_partition_of(g.vertex_count()))
        throw input_error("edges_across: not a partition of the vertex set");
    std::vector<int> idx = p.part_index();
    long long cnt = 0;
    for (const Edge& e : g.edges())
        if (idx[e.u] != idx[e.v]) ++cnt;
    return cnt;
}

int component_count_masked(const Multigraph& g, std::uint64_t removed) {
    return component_iso_masked(g, removed).first;
}

std::pair<int, int> component_iso_masked(const Multigraph& g, std::uint64_t removed) {
    int n = g.vertex_count();
    int comps = 0, iso = 0;
    // hot path of the subset-enumeration kernels: reuse per-thread scratch
    thread_local std::vector<int> seen;
    thread_local std::vector<int> stack;
    thread_local int epoch = 0;
    if (static_cast<int>(seen.size()) < n || epoch == INT_MAX) {
        seen.assign(std::max<size_t>(n, seen.size()), 0);
        epoch = 0;
    }
    int stamp = ++epoch;
    for (int s = 0; s < n; ++s) {
        if (seen[s] == stamp || (removed >> s & 1)) continue;
        ++comps;
        int size = 0;
        bool any_edge = false;
        seen[s] = stamp;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++size;
            for (const auto& inc : g.incident(v)) {
                if (removed >> inc.to & 1) continue;
                any_edge = true;
                if (seen[inc.to] != stamp) {
                    seen[inc.to] = stamp;
                    stack.push_back(inc.to);
                }
            }
        }
        if (size == 1 && !any_edge) ++iso;
    }
    return {comps, iso};
}

Multigraph subgraph_without_mask(const Multigraph& g, std::uint64_t removed) {
    std::vector<int> s;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (removed >> v & 1) s.push_back(v);
    return delete_vertices(g, s);
}

Multigraph subgraph_of_mask(const Multigraph& g, std::uint64_t kept) {
    std::vector<int> s;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (kept >> v & 1) s.push_back(v);
    if (s.empty()) return Multigraph();
    return induced_subgraph(g, s);
}

}  // namespace treeconn
