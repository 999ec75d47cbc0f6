#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "treeconn/packing.hpp"

namespace treeconn {

// Thrown when an operation needs an m-tree-connected input and the graph is
// not; carries the refuting partition.
struct certificate_error : std::runtime_error {
    PartitionCertificate certificate;
    explicit certificate_error(PartitionCertificate cert)
        : std::runtime_error("graph is not m-tree-connected"), certificate(std::move(cert)) {}
};

struct FactorResult {
    std::vector<int> edge_ids;  // H, sorted
    int m = 0;
    std::vector<int> forced;   // forced subgraph's edge ids, sorted
    std::vector<int> degrees;  // d_H per vertex
    std::vector<int> budget;   // the h the excess was measured against
    long long total_excess = 0;
};

struct StructureSet {
    std::vector<int> set;                  // S, sorted
    std::vector<std::vector<int>> chain;   // V_1 <= ... <= V_n producing it
};

struct FactorOutcome {
    enum class Kind { Factor, Witness, SearchFailure };
    Kind kind = Kind::SearchFailure;
    std::optional<FactorResult> factor;
    std::vector<int> witness_set;  // hypothesis-violating S, when one exists
    long long best_te = -1;        // for SearchFailure
};

struct SearchOptions {
    // exact enumeration of minimally m-tree-connected factors below these
    int exhaustive_n = 7;
    int exhaustive_edges = 24;
    // replacement-family searches are exhaustive up to this component size,
    // sampled above it (sample_factor * |E| exchange walks)
    int component_cap = 12;
    int sample_factor = 50;
    unsigned seed = 1;
    std::uint64_t max_nodes = 200'000'000;  // enumeration safety valve
};

long long total_excess(const std::vector<int>& degrees, const std::vector<int>& budget);

// Minimally m-tree-connected factor containing the forced edges, built by
// seeding the matroid union with them and augmenting in ascending id order.
FactorResult minimally_tc_factor(const Multigraph& g, int m, const std::vector<int>& forced_ids);

// The fixpoint subset of Theorem-of-structure searches: S contains every
// overloaded vertex, every member has d_H >= h, and G \ S and H \ S have the
// same tree-connectivity measure.
StructureSet structure_set(const Multigraph& g, int m, const FactorResult& h_factor,
                           const std::vector<int>& budget, const SearchOptions& opt = {});

// Minimally m-tree-connected factor containing the forced edges with minimum
// total excess from the budget: exact below the exhaustive threshold, else an
// exchange local search (single swaps plus the two-component composite move).
FactorResult min_excess_factor(const Multigraph& g, int m, const std::vector<int>& forced_ids,
                               const std::vector<int>& budget, const SearchOptions& opt = {});

// m-tree-connected factor H containing F with d_H(v) <= f(v) + max{0, d_F(v)-m}
// on x_set (all vertices when null). On failure emits a hypothesis-violating
// S when one exists, else a distinct search-failure report.
FactorOutcome degree_bounded_tc_factor(const Multigraph& g, int m, const std::vector<int>& f_ids,
                                       const std::vector<int>& f, const SearchOptions& opt = {},
                                       const std::vector<int>* x_set = nullptr);

struct ExtendReport {
    FactorResult factor;
    std::vector<int> intersection_sizes;  // |E(T0) & E(F)| per swap, strictly increasing
};

// Absorbs F into the factor: H = T0 + F where T0 comes from T by swaps that
// grow |E(T0) & E(F)|, giving d_H(v) <= d_T(v) + max{0, d_F(v) - m}.
// T.forced must be a maximal subgraph of F with maximum degree <= m.
ExtendReport extend_with_factor(const Multigraph& g, int m, const FactorResult& t,
                                const std::vector<int>& f_ids);

enum class ConnectivityRegime { EdgeConnected, TreeConnected };

// Degree bounds for k-edge-connected (k >= 2m) or k-tree-connected (k >= m)
// hosts, with the floor reduction at the flagged vertex u.
FactorOutcome edge_connected_factor(const Multigraph& g, int m, int k,
                                    const std::vector<int>& forced_ids, int u,
                                    ConnectivityRegime regime, const SearchOptions& opt = {});

}  // namespace treeconn
