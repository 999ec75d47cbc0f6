#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "treeconn/multigraph.hpp"
#include "treeconn/rational.hpp"

namespace treeconn {

std::string rational_string(const Rational& r);  // "7/2", "3"
Rational parse_rational(const std::string& s);   // "3", "7/2", "-1/2"

struct VerifyOptions {
    int cap_omega = 20;  // subset enumeration cap for omega/iso conditions
    int cap_rank = 14;   // cap when every subset costs a matroid-union run
    bool parallel = true;
    int cycle_space_cap = 22;  // exhaustive Eulerian search: cycle-space dimension
};

enum class Hypothesis { Thm4_3, Cor4_4, Cor4_5, Thm7_1, Thm1_5, Cor7_2, Thm7_10 };

const char* hypothesis_name(Hypothesis h);
std::optional<Hypothesis> hypothesis_by_name(const std::string& name);

struct ConditionReport {
    std::string condition;
    bool holds = true;
    std::optional<std::vector<int>> witness;  // violating S when holds is false
    Rational lhs{0}, rhs{0};                  // evaluated at the extremal S
    Rational slack{0};                        // min over enumerated S of rhs - lhs
    std::vector<int> extremal;                // the S attaining the slack
    std::uint64_t enumerated = 0;
};

// Exhaustive check of one toughness-type hypothesis with exact rational
// arithmetic. x_set restricts the enumeration domain (required independent
// for the Cor4_5 variant); trail variants fix m = 2.
ConditionReport check_hypothesis(const Multigraph& g, int m, const std::vector<int>& f,
                                 Hypothesis which, const std::vector<int>* x_set = nullptr,
                                 const VerifyOptions& opt = {});

enum class Lemma51Regime { EdgeConnected, TreeConnected };

ConditionReport check_lemma_5_1(const Multigraph& g, int m, int k, Lemma51Regime regime,
                                const VerifyOptions& opt = {});

struct Theorem63Report {
    ConditionReport hypothesis;
    ConditionReport conclusion;  // evaluated only when the hypothesis holds
    bool conclusion_checked = false;
    bool implication_failed = false;  // hypothesis true, conclusion false
};

Theorem63Report check_theorem_6_3(const Multigraph& g, int m, const Rational& eps,
                                  const Rational& c, const VerifyOptions& opt = {});

struct ToughnessValue {
    bool infinite = false;
    bool defined = true;  // strong toughness: false when no positive t works
    Rational value{0};
    std::vector<int> critical;  // an S attaining the value
};

ToughnessValue toughness(const Multigraph& g, const VerifyOptions& opt = {});
ToughnessValue strong_toughness(const Multigraph& g, int m, const VerifyOptions& opt = {});

// Set partitions of {0..n-1} as restricted growth strings. fn receives the
// part index per vertex and the part count; return false to stop early.
void for_each_partition(int n, const std::function<bool(const std::vector<int>&, int)>& fn);

// min over partitions with >= 2 parts of e_G(P) / (|P| - 1)
Rational min_partition_density(const Multigraph& g, const VerifyOptions& opt = {});

// Spanning connected even subgraph with d_L(v) <= max_deg[v] and every
// degree >= 2 (first hit of a Gray-code walk over the cycle space), or
// nullopt. require_one_of: edge-id groups of which at least one member must
// be picked (used to force matchings through duplicated graphs).
std::optional<std::vector<int>> find_spanning_eulerian(
    const Multigraph& g, const std::vector<int>& max_deg, const VerifyOptions& opt = {},
    const std::vector<std::vector<int>>* require_one_of = nullptr);
bool has_spanning_eulerian_subgraph(const Multigraph& g, const VerifyOptions& opt = {});

enum class Conjecture { C7_9, C7_11, Q7_14 };

std::optional<Conjecture> conjecture_by_name(const std::string& name);

struct ScanRow {
    int index = 0;
    bool hypothesis_holds = false;
    bool conclusion_holds = false;
    bool counterexample_candidate = false;
    bool skipped = false;  // capacity
    std::string note;
    std::optional<std::vector<int>> witness;
    Rational detail{0};  // Q7_14: min partition density
};

std::vector<ScanRow> conjecture_scan(const std::vector<Multigraph>& graphs, Conjecture which,
                                     const VerifyOptions& opt = {});

}  // namespace treeconn
