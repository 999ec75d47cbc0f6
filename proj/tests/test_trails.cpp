#include <doctest.h>

#include "support.hpp"
#include "treeconn/errors.hpp"
#include "treeconn/generators.hpp"
#include "treeconn/trails.hpp"

using namespace treeconn;
using namespace tsupport;

TEST_CASE("parity forest examples") {
    Multigraph p3 = path_graph(3);
    CHECK(parity_forest(p3, {}).empty());
    CHECK(parity_forest(p3, {0, 2}).size() == 2);  // both edges: degrees 1,2,1

    // star with center 0 and leaves 1,2,3; odd set {1,2}
    Multigraph star = Multigraph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}});
    std::vector<int> f = parity_forest(star, {1, 2});
    REQUIRE(f.size() == 2);
    for (int id : f) {
        const Edge& e = star.edge_by_id(id);
        CHECK((e.v == 1 || e.v == 2 || e.u == 1 || e.u == 2));
    }

    CHECK_THROWS_AS(parity_forest(p3, {0}), input_error);  // odd |Q|
    Multigraph split = Multigraph::from_pairs(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(parity_forest(split, {0, 1}), domain_error);
}

TEST_CASE("parity forest is acyclic with the exact odd set") {
    std::mt19937 rng(301);
    // exhaustive over even subsets at n = 6, random above
    Multigraph g6 = random_simple_connected(rng, 6, 4);
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        if (__builtin_popcountll(mask) % 2) continue;
        std::vector<int> q;
        for (int v = 0; v < 6; ++v)
            if (mask >> v & 1) q.push_back(v);
        std::vector<int> f = parity_forest(g6, q);
        std::vector<int> deg(6, 0);
        for (int id : f) {
            const Edge& e = g6.edge_by_id(id);
            ++deg[e.u];
            ++deg[e.v];
        }
        for (int v = 0; v < 6; ++v) CHECK((deg[v] % 2 == 1) == (mask >> v & 1));
        CHECK(components(edge_subgraph(g6, f)).count >= 6 - static_cast<int>(f.size()));
    }
    for (int it = 0; it < 20; ++it) {
        int n = 5 + static_cast<int>(rng() % 8);
        Multigraph g = random_simple_connected(rng, n, static_cast<int>(rng() % 6));
        std::vector<int> q;
        for (int v = 0; v < n; ++v)
            if (rng() % 2) q.push_back(v);
        if (q.size() % 2) q.pop_back();
        std::vector<int> f = parity_forest(g, q);
        std::vector<int> deg(n, 0);
        for (int id : f) {
            const Edge& e = g.edge_by_id(id);
            ++deg[e.u];
            ++deg[e.v];
        }
        std::vector<int> odd;
        for (int v = 0; v < n; ++v)
            if (deg[v] % 2) odd.push_back(v);
        std::sort(q.begin(), q.end());
        CHECK(odd == q);
        // acyclic: edges <= vertices - components
        CHECK(static_cast<int>(f.size()) == n - components(edge_subgraph(g, f)).count);
    }
}

TEST_CASE("jaeger-style spanning eulerian subgraph") {
    // doubled tree: every degree even already in the union of both copies
    DuplicatedGraph dt = duplicate_edges(path_graph(4));
    std::vector<int> l = spanning_eulerian_from_2tc(dt.graph);
    std::vector<int> deg(4, 0);
    for (int id : l) {
        const Edge& e = dt.graph.edge_by_id(id);
        ++deg[e.u];
        ++deg[e.v];
    }
    for (int v = 0; v < 4; ++v) CHECK(deg[v] % 2 == 0);

    CHECK_THROWS_AS(spanning_eulerian_from_2tc(cycle_graph(5)), certificate_error);
}

TEST_CASE("jaeger soundness on random 2-tree-connected hosts") {
    std::mt19937 rng(302);
    int done = 0;
    for (int it = 0; it < 120 && done < 25; ++it) {
        int n = 3 + static_cast<int>(rng() % 6);
        Multigraph g = random_multigraph(rng, n, 2 * n + static_cast<int>(rng() % 5));
        if (!is_tree_connected_quick(g, 2)) continue;
        ++done;
        std::vector<int> l = spanning_eulerian_from_2tc(g);
        Multigraph lg = edge_subgraph(g, l);
        CHECK(components(lg).count == 1);
        for (int v = 0; v < n; ++v) {
            CHECK(lg.degree(v) % 2 == 0);
            CHECK(lg.degree(v) >= 2);
            CHECK(lg.degree(v) <= g.degree(v));
        }
        ClosedTrail t = hierholzer(lg, 0);
        CHECK(valid_closed_trail(lg, t));
    }
    CHECK(done == 25);
}

TEST_CASE("hierholzer") {
    Multigraph tri = cycle_graph(3);
    ClosedTrail t = hierholzer(tri, 0);
    CHECK(t.edge_sequence.size() == 3);
    CHECK(valid_closed_trail(tri, t));

    // two triangles sharing vertex 0
    Multigraph bowtie =
        Multigraph::from_pairs(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    ClosedTrail bt = hierholzer(bowtie, 0);
    CHECK(bt.edge_sequence.size() == 6);
    CHECK(bt.visit_counts[0] == 2);
    CHECK(valid_closed_trail(bowtie, bt));

    Multigraph doubled = Multigraph::from_pairs(2, {{0, 1}, {0, 1}});
    ClosedTrail d = hierholzer(doubled, 0);
    CHECK(d.edge_sequence.size() == 2);

    CHECK_THROWS_AS(hierholzer(path_graph(3), 0), input_error);  // odd degrees
    Multigraph split = Multigraph::from_pairs(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}});
    CHECK_THROWS_AS(hierholzer(split, 0), input_error);  // disconnected
}

TEST_CASE("f-trail on doubled cycles, cliques, petersen") {
    for (int n : {3, 5, 7}) {
        DuplicatedGraph dc = duplicate_edges(cycle_graph(n));
        TrailOutcome out = f_trail(dc.graph, std::vector<int>(n, 1));
        REQUIRE(out.kind == TrailOutcome::Kind::Trail);
        CHECK(out.trail->edge_sequence.size() == static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) CHECK(out.trail->visit_counts[v] == 1);
        CHECK(valid_closed_trail(edge_subgraph(dc.graph, out.trail->edge_set()), *out.trail));
    }

    // K5 with f = 1: a Hamiltonian cycle (degree cap 3 forces degree 2)
    Multigraph k5 = complete_graph(5);
    TrailOutcome ham = f_trail(k5, std::vector<int>(5, 1));
    REQUIRE(ham.kind == TrailOutcome::Kind::Trail);
    CHECK(ham.trail->edge_sequence.size() == 5);
    for (int v = 0; v < 5; ++v) CHECK(ham.trail->visit_counts[v] == 1);

    // Petersen: no spanning Eulerian subgraph at all, certified negative
    Multigraph p = petersen();
    for (int fv : {1, 2, 3}) {
        TrailOutcome none = f_trail(p, std::vector<int>(10, fv));
        CHECK(none.kind != TrailOutcome::Kind::Trail);
        CHECK(none.exhaustive_complete);
    }
}

TEST_CASE("f-walk examples") {
    // a cycle is its own walk
    TrailOutcome c5 = f_walk(cycle_graph(5), std::vector<int>(5, 1), {});
    REQUIRE(c5.kind == TrailOutcome::Kind::Walk);
    CHECK(valid_closed_walk(cycle_graph(5), *c5.walk, std::vector<int>(5, 1)));
    CHECK(c5.walk->edge_sequence.size() == 5);

    // star: center met three times
    Multigraph star = Multigraph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}});
    std::vector<int> f{3, 1, 1, 1};
    TrailOutcome sw = f_walk(star, f, {});
    REQUIRE(sw.kind == TrailOutcome::Kind::Walk);
    CHECK(sw.walk->visit_counts[0] == 3);
    CHECK(valid_closed_walk(star, *sw.walk, f));

    // path with a forced end edge
    Multigraph p3 = path_graph(3);
    TrailOutcome pw = f_walk(p3, std::vector<int>{1, 2, 1}, {0});
    REQUIRE(pw.kind == TrailOutcome::Kind::Walk);
    CHECK(std::count(pw.walk->edge_sequence.begin(), pw.walk->edge_sequence.end(), 0) >= 1);
    CHECK(valid_closed_walk(p3, *pw.walk, std::vector<int>{1, 2, 1}));

    CHECK_THROWS_AS(f_walk(p3, std::vector<int>{1, 2, 1}, {0, 1}), input_error);  // not a matching
}

TEST_CASE("k-edge-connected trails and walks") {
    // C4 at k = 2: walk with f = 2
    TrailOutcome c4 = k_connected_trail_or_walk(cycle_graph(4), 2);
    REQUIRE(c4.kind == TrailOutcome::Kind::Walk);
    CHECK(valid_closed_walk(cycle_graph(4), *c4.walk, std::vector<int>(4, 2)));

    // K5 at k = 4: trail with f = 2
    TrailOutcome k5 = k_connected_trail_or_walk(complete_graph(5), 4);
    REQUIRE(k5.kind == TrailOutcome::Kind::Trail);
    for (int v = 0; v < 5; ++v) CHECK(k5.trail->visit_counts[v] <= 2);

    // 4-edge-connected 4-regular: a connected {2,4}-factor appears
    Multigraph c82 = circulant(8, 2);
    TrailOutcome reg = k_connected_trail_or_walk(c82, 4);
    REQUIRE(reg.kind == TrailOutcome::Kind::Trail);
    for (int v = 0; v < 8; ++v) CHECK(reg.trail->visit_counts[v] <= 2);

    // K4 at k = 3: the bootstrap through the Eulerian supergraph
    TrailOutcome k4 = k_connected_trail_or_walk(complete_graph(4), 3);
    REQUIRE(k4.kind == TrailOutcome::Kind::Walk);
    CHECK(valid_closed_walk(complete_graph(4), *k4.walk, std::vector<int>(4, 2)));

    // k = 1 on a tree: the doubled-tree walk
    TrailOutcome t = k_connected_trail_or_walk(path_graph(5), 1);
    REQUIRE(t.kind == TrailOutcome::Kind::Walk);
    std::vector<int> caps(5, 5);
    CHECK(valid_closed_walk(path_graph(5), *t.walk, caps));

    CHECK_THROWS_AS(k_connected_trail_or_walk(path_graph(3), 2), input_error);
}

TEST_CASE("theorem bound for k in {2,3,4} on random hosts") {
    std::mt19937 rng(303);
    int done = 0;
    for (int it = 0; it < 150 && done < 18; ++it) {
        int n = 4 + static_cast<int>(rng() % 5);
        Multigraph g = random_simple_connected(rng, n, n + static_cast<int>(rng() % 8));
        EdgeCut cut = edge_connectivity(g);
        int k = cut.infinite ? 4 : std::min(4, cut.value);
        if (k < 2) continue;
        ++done;
        TrailOutcome out = k_connected_trail_or_walk(g, k, {}, {});
        std::vector<int> f(n);
        for (int v = 0; v < n; ++v) {
            if (k >= 4)
                f[v] = static_cast<int>((2 * g.degree(v) + k - 8 + 2 * k - 1) / (2 * k)) + 1;
            else
                f[v] = (g.degree(v) - 1 + k - 1) / k + 1;
        }
        if (out.kind == TrailOutcome::Kind::Trail) {
            REQUIRE(k >= 4);
            for (int v = 0; v < n; ++v) CHECK(out.trail->visit_counts[v] <= f[v]);
        } else {
            REQUIRE(out.kind == TrailOutcome::Kind::Walk);
            CHECK(valid_closed_walk(g, *out.walk, f));
        }
    }
    CHECK(done == 18);
}

TEST_CASE("connected {2,4}-factors") {
    for (int n : {3, 4, 5, 6}) {
        TwoFourOutcome out = connected_24_factor(cycle_graph(n));
        REQUIRE(out.kind == TwoFourOutcome::Kind::Factor);
        CHECK(out.factor_edges.size() == static_cast<size_t>(n));
    }
    TwoFourOutcome k5 = connected_24_factor(complete_graph(5));
    REQUIRE(k5.kind == TwoFourOutcome::Kind::Factor);

    TwoFourOutcome pet = connected_24_factor(petersen());
    CHECK(pet.kind == TwoFourOutcome::Kind::Witness);
    CHECK_FALSE(pet.counterexample_candidate);

    CHECK_THROWS_AS(connected_24_factor(path_graph(2)), input_error);
}
