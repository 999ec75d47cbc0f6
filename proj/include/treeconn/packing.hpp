#pragma once

#include <optional>
#include <vector>

#include "treeconn/multigraph.hpp"

namespace treeconn {

struct ForestPacking {
    int m = 0;
    std::vector<std::vector<int>> forests;  // edge ids, ascending, pairwise disjoint
    int rank() const;
    // Disjointness, acyclicity and maximality (no single augmenting step
    // applies) against the host graph.
    bool verify(const Multigraph& g) const;
};

struct PartitionCertificate {
    VertexPartition partition;
    int m = 0;
    long long deficiency = 0;  // m(|P|-1) - e_G(P), positive
    bool verify(const Multigraph& g) const;
};

struct OmegaValue {
    int m = 0;
    long long value = 0;
    VertexPartition witness;  // the m-tree-connected components
};

struct TreeConnectivity {
    bool connected = false;
    std::optional<ForestPacking> packing;            // on yes: m spanning trees
    std::optional<PartitionCertificate> certificate;  // on no
};

struct SparsityResult {
    bool sparse = false;
    std::vector<int> witness;  // on no: S with e_G(S) > m|S| - m
};

// A subgraph of a host graph given in host coordinates.
struct SubgraphRef {
    std::vector<int> vertices;  // sorted host vertex ids
    std::vector<int> edge_ids;  // sorted host edge ids
};

// Incremental packing of edges into m edge-disjoint forests (matroid
// partition for the m-fold graphic matroid). Augmenting searches are
// breadth-first over the exchange digraph: an arc x -> y means y lies on the
// cycle closed by x in y's forest, so x may take y's slot. Candidates are
// scanned in ascending edge id and forests in ascending index, which makes
// every packing and certificate reproducible.
class ForestUnion {
public:
    ForestUnion(const Multigraph& g, int m);

    // Tries to add the edge with this id; true iff the rank grew.
    bool insert(int edge_id);
    // Inserts every edge not yet packed, ascending id.
    void insert_all();
    // Augmentation probe with a virtual u-v edge; does not mutate.
    bool can_insert_pair(int u, int v) const;

    int rank() const { return rank_; }
    int forest_of_id(int edge_id) const;  // -1 if unpacked
    ForestPacking extract() const;
    const Multigraph& host() const { return *g_; }

private:
    const Multigraph* g_;
    int m_ = 0;
    int rank_ = 0;
    std::vector<int> assigned_;                       // edge pos -> forest or -1
    std::vector<std::vector<std::vector<int>>> adj_;  // forest -> vertex -> edge positions
    std::vector<int> pos_of_id_;

    bool augment(int u, int v, int self_pos, bool apply);
    bool forest_path(int forest, int from, int to, std::vector<int>* path_out) const;
    void attach(int pos, int forest);
    void detach(int pos);
};

int max_forest_rank(const Multigraph& g, int m);
ForestPacking max_forest_union(const Multigraph& g, int m);
TreeConnectivity is_m_tree_connected(const Multigraph& g, int m);
bool is_tree_connected_quick(const Multigraph& g, int m);

// Omega_m(G) = m|V(G)| - max m-forest rank; 0 for the null graph.
long long omega_value(const Multigraph& g, int m);
OmegaValue omega(const Multigraph& g, int m);

// The unique partition into maximal vertex sets inducing m-tree-connected
// subgraphs. Two adjacent vertices share a part iff an extra parallel copy
// of the edge would leave the packing rank unchanged.
VertexPartition tree_connected_components(const Multigraph& g, int m);

SparsityResult is_m_sparse(const Multigraph& g, int m);

// Subgraph-minimal m-tree-connected subgraph of H containing x and y: no
// proper induced m-tree-connected subgraph of H holds both, and the edge set
// is a basis, so no single edge can be dropped either.
SubgraphRef minimal_tc_subgraph(const Multigraph& h, int m, int x, int y);

}  // namespace treeconn
