#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treeconn/factor.hpp"
#include "treeconn/verify.hpp"

namespace treeconn {

struct ClosedTrail {
    int start = 0;
    std::vector<int> edge_sequence;  // traversal order, no id repeats
    std::vector<int> visit_counts;   // per vertex, d_L(v)/2
    std::vector<int> edge_set() const;
};

struct ClosedWalk {
    int start = 0;
    std::vector<int> edge_sequence;  // original ids; an id may appear twice
    std::vector<int> visit_counts;
};

struct TrailOutcome {
    enum class Kind { Trail, Walk, Certificate, Witness, SearchFailure };
    Kind kind = Kind::SearchFailure;
    std::optional<ClosedTrail> trail;
    std::optional<ClosedWalk> walk;
    std::optional<PartitionCertificate> certificate;  // host not 2-tree-connected
    std::vector<int> witness_set;                     // hypothesis-violating S
    bool exhaustive_complete = false;  // negative certified by full object search
    std::string note;
};

// Forest whose odd-degree vertex set is exactly q (|q| even, g connected):
// spanning tree edges whose subtree holds an odd number of q-vertices.
std::vector<int> parity_forest(const Multigraph& g, const std::vector<int>& q);

// Spanning connected even subgraph of a 2-tree-connected host:
// T1 + parity_forest(T2, odd-degree set of T1). Throws certificate_error.
std::vector<int> spanning_eulerian_from_2tc(const Multigraph& h);

// Eulerian circuit, lowest-id unused edge first.
ClosedTrail hierholzer(const Multigraph& l, int start);

// Spanning closed trail meeting each v at most f(v) times: the 2-tree-
// connected factor pipeline with budget 2f+1, then an exhaustive cycle-space
// fallback, then a certified negative or witness.
TrailOutcome f_trail(const Multigraph& g, const std::vector<int>& f,
                     const SearchOptions& sopt = {}, const VerifyOptions& vopt = {});

// Spanning closed walk meeting each v at most f(v) times and traversing every
// edge of the matching; runs the trail machinery on the doubled graph.
TrailOutcome f_walk(const Multigraph& g, const std::vector<int>& f,
                    const std::vector<int>& matching, const SearchOptions& sopt = {},
                    const VerifyOptions& vopt = {});

// k >= 4: f-trail with f(v) = ceil((d(v)+k/2-4)/k)+1.
// k = 3: spanning tree + parity forest bootstrap through a 4-edge-connected
//        Eulerian supergraph, lifted back to a walk.
// k <= 2: f-walk with f(v) = ceil((d(v)-1)/k)+1.
TrailOutcome k_connected_trail_or_walk(const Multigraph& g, int k,
                                       const SearchOptions& sopt = {},
                                       const VerifyOptions& vopt = {});

struct TwoFourOutcome {
    enum class Kind { Factor, Witness, SearchFailure };
    Kind kind = Kind::SearchFailure;
    std::vector<int> factor_edges;
    std::vector<int> witness_set;
    bool counterexample_candidate = false;
    std::string note;
};

// Connected spanning subgraph with all degrees in {2,4}: the edge set of a
// spanning closed 2-trail. On search failure the toughness-type hypothesis is
// checked; hypothesis-true-but-certified-absent is flagged, never silent.
TwoFourOutcome connected_24_factor(const Multigraph& g, const SearchOptions& sopt = {},
                                   const VerifyOptions& vopt = {});

}  // namespace treeconn
