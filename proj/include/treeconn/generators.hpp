#pragma once

#include <optional>
#include <vector>

#include "treeconn/multigraph.hpp"

namespace treeconn {

struct EdgeCut {
    int value = 0;            // INT_MAX-like sentinel when no cut exists (n <= 1)
    std::vector<int> side;    // one side of a minimum cut (empty for the sentinel)
    bool infinite = false;
};

EdgeCut edge_connectivity(const Multigraph& g);

// Smallest edge cut whose edges are not all incident to one vertex; infinite
// when every cut is covered by a single vertex. Exhaustive over cut sides.
EdgeCut essential_edge_connectivity(const Multigraph& g);

// Brute-force vertex connectivity check: no vertex set of size < s disconnects
// (and n > s). Intended for toy-scale construction asserts.
bool is_s_connected(const Multigraph& g, int s);

int girth(const Multigraph& g);  // INT_MAX-ish for forests

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -> i+5. Construction
// asserts: 10 vertices, 15 edges, 3-regular, girth 5.
Multigraph petersen();

// n Petersen copies with a fixed edge x_i y_i, all x_i identified into x and
// all y_i into y; the n parallel xy candidates collapse to one simple edge.
// 8n+2 vertices, 14n+1 edges.
Multigraph petersen_chain(int n);

// Circulant C_n(1..m): 2m-regular default base family for the sparse
// threshold construction; validated per instance, never assumed.
Multigraph circulant(int n, int m);

// base minus a lexicographically-first set of m+1 edges that share no common
// vertex. Requires base 2m-regular, connected and essentially (2m+2)-edge-
// connected; the result has m(n-1)-1 edges and is never m-tree-connected.
Multigraph sparse_threshold_graph(const Multigraph& base, int m);

enum class BlowupKind { TreeConnectedFactor, Eulerian };

// p blown-up copies of H (each vertex replaced by K_n, every new vertex
// meeting at most one H-edge), the chosen cliques U_i pairwise joined, and a
// complete R_s joined to everything. s-connected by construction.
Multigraph blowup_no_factor(const Multigraph& h, int n, int s, int p, int delta, BlowupKind kind);

}  // namespace treeconn
