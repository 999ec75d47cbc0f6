#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace treeconn {

struct Edge {
    int u = -1;
    int v = -1;
    int id = -1;
};

// Loopless multigraph over dense vertex ids 0..n-1. Parallel edges are kept
// as separate records so that forests and factors are plain edge-id sets.
// Edge ids stay stable under subgraph operations: a subgraph's ids are a
// subset of the host's. Instances are immutable after construction and safe
// to share across threads.
class Multigraph {
public:
    Multigraph() = default;  // the null graph K0
    explicit Multigraph(int n);
    Multigraph(int n, std::vector<Edge> edges);

    // Fresh graph with edge ids 0..m-1 assigned in list order.
    static Multigraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool is_null() const { return n_ == 0; }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge_by_id(int id) const;
    bool has_edge_id(int id) const;
    int max_edge_id() const { return max_id_; }

    int degree(int v) const { return degree_[v]; }
    const std::vector<int>& degrees() const { return degree_; }
    int max_degree() const;

    struct Inc {
        int to;
        int id;
    };
    // Incident edges of v, ascending id.
    const std::vector<Inc>& incident(int v) const { return adj_[v]; }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Inc>> adj_;
    std::vector<int> degree_;
    std::vector<std::string> labels_;
    int max_id_ = -1;
    std::vector<int> id_pos_;  // edge id -> index into edges_, -1 if absent

    void build_index();
};

// A partition of {0..ground-1} into disjoint nonempty parts. Canonical form:
// every part sorted, parts ordered by their smallest element.
struct VertexPartition {
    int ground = 0;
    std::vector<std::vector<int>> parts;

    static VertexPartition singletons(int n);
    void canonicalize();
    bool is_partition_of(int n) const;
    std::vector<int> part_index() const;  // vertex -> part position
    int size() const { return static_cast<int>(parts.size()); }
};

struct ComponentInfo {
    VertexPartition partition;
    int count = 0;     // omega(G)
    int isolated = 0;  // iso(G): degree-0 singleton components
};

struct SubgraphView {
    Multigraph graph;
    std::vector<int> to_host;  // new vertex id -> host vertex id
};

struct DuplicatedGraph {
    Multigraph graph;
    std::vector<int> original_of;  // edge id -> original edge id (identity for originals)
};

Multigraph induced_subgraph(const Multigraph& g, const std::vector<int>& x);
SubgraphView induced_subgraph_mapped(const Multigraph& g, const std::vector<int>& x);
Multigraph delete_vertices(const Multigraph& g, const std::vector<int>& s);
SubgraphView delete_vertices_mapped(const Multigraph& g, const std::vector<int>& s);
Multigraph contract(const Multigraph& g, const VertexPartition& p);
DuplicatedGraph duplicate_edges(const Multigraph& g);
ComponentInfo components(const Multigraph& g);

// Spanning subgraph on the same vertex set keeping only the listed edge ids.
Multigraph edge_subgraph(const Multigraph& g, const std::vector<int>& edge_ids);

// Number of edges with both ends in s.
long long edges_inside(const Multigraph& g, const std::vector<int>& s);
// Number of edges whose ends lie in different parts of p.
long long edges_across(const Multigraph& g, const VertexPartition& p);

// omega / iso over G \ S with S given as a bit mask (n <= 62).
int component_count_masked(const Multigraph& g, std::uint64_t removed);
std::pair<int, int> component_iso_masked(const Multigraph& g, std::uint64_t removed);

Multigraph subgraph_without_mask(const Multigraph& g, std::uint64_t removed);
Multigraph subgraph_of_mask(const Multigraph& g, std::uint64_t kept);

// Canonical text format. Line 1 "graph <n>", then one "e <u> <v>" line per
// edge copy; '#' starts a comment, blank lines are ignored. The writer emits
// edges sorted by (min endpoint, max endpoint, input order); ids follow line
// order when parsing.
Multigraph read_graph_text(std::istream& in);
std::vector<Multigraph> read_graph_stream(std::istream& in);
void write_graph_text(std::ostream& out, const Multigraph& g,
                      const std::vector<std::string>& comments = {});

}  // namespace treeconn
