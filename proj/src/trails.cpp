#include "treeconn/trails.hpp"

#include <algorithm>
#include <numeric>

#include "treeconn/errors.hpp"
#include "treeconn/generators.hpp"

namespace treeconn {

std::vector<int> ClosedTrail::edge_set() const {
    std::vector<int> ids = edge_sequence;
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<int> parity_forest(const Multigraph& g, const std::vector<int>& q) {
    if (q.size() % 2 != 0) throw input_error("parity forest needs an even target set");
    if (g.is_null()) throw input_error("parity forest: null graph");
    ComponentInfo ci = components(g);
    if (ci.count != 1) throw domain_error("parity forest needs a connected graph");
    std::vector<char> in_q(g.vertex_count(), 0);
    for (int v : q) {
        if (v < 0 || v >= g.vertex_count()) throw input_error("unknown vertex in parity set");
        in_q[v] = 1;
    }
    // BFS tree from vertex 0 along lowest-id edges
    std::vector<int> parent_edge(g.vertex_count(), -1), order;
    std::vector<char> seen(g.vertex_count(), 0);
    order.push_back(0);
    seen[0] = 1;
    for (size_t i = 0; i < order.size(); ++i)
        for (const auto& inc : g.incident(order[i]))
            if (!seen[inc.to]) {
                seen[inc.to] = 1;
                parent_edge[inc.to] = inc.id;
                order.push_back(inc.to);
            }
    // include a tree edge iff its subtree holds an odd number of q-vertices
    std::vector<int> odd(g.vertex_count(), 0);
    std::vector<int> out;
    for (size_t i = order.size(); i-- > 1;) {
        int v = order[i];
        odd[v] ^= in_q[v];
        const Edge& e = g.edge_by_id(parent_edge[v]);
        int up = e.u == v ? e.v : e.u;
        if (odd[v]) out.push_back(parent_edge[v]);
        odd[up] ^= odd[v];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> spanning_eulerian_from_2tc(const Multigraph& h) {
    TreeConnectivity tc = is_m_tree_connected(h, 2);
    if (!tc.connected) throw certificate_error(std::move(*tc.certificate));
    const std::vector<int>& t1 = tc.packing->forests[0];
    const std::vector<int>& t2 = tc.packing->forests[1];
    std::vector<int> deg1(h.vertex_count(), 0);
    for (int id : t1) {
        const Edge& e = h.edge_by_id(id);
        ++deg1[e.u];
        ++deg1[e.v];
    }
    std::vector<int> q;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (deg1[v] % 2) q.push_back(v);
    std::vector<int> l = t1;
    if (h.vertex_count() > 1) {
        std::vector<int> f = parity_forest(edge_subgraph(h, t2), q);
        l.insert(l.end(), f.begin(), f.end());
    }
    std::sort(l.begin(), l.end());
    return l;
}

ClosedTrail hierholzer(const Multigraph& l, int start) {
    if (l.is_null()) throw input_error("hierholzer: null graph");
    if (start < 0 || start >= l.vertex_count()) throw input_error("hierholzer: unknown start");
    for (int v = 0; v < l.vertex_count(); ++v)
        if (l.degree(v) % 2) throw input_error("hierholzer: odd degree at vertex " + std::to_string(v));
    if (l.vertex_count() > 1 && components(l).count != 1)
        throw input_error("hierholzer: graph is not connected");

    std::vector<size_t> ptr(l.vertex_count(), 0);
    std::vector<char> used(l.max_edge_id() + 1, 0);
    struct Frame {
        int v;
        int via;  // edge taken to reach v, -1 at the root
    };
    std::vector<Frame> stack{{start, -1}};
    std::vector<int> circuit;
    while (!stack.empty()) {
        int v = stack.back().v;
        const auto& inc = l.incident(v);
        while (ptr[v] < inc.size() && used[inc[ptr[v]].id]) ++ptr[v];
        if (ptr[v] == inc.size()) {
            if (stack.back().via >= 0) circuit.push_back(stack.back().via);
            stack.pop_back();
        } else {
            const auto& step = inc[ptr[v]];
            used[step.id] = 1;
            stack.push_back({step.to, step.id});
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    if (static_cast<int>(circuit.size()) != l.edge_count())
        throw internal_error("hierholzer failed to use every edge");
    ClosedTrail t;
    t.start = start;
    t.edge_sequence = std::move(circuit);
    t.visit_counts.assign(l.vertex_count(), 0);
    for (int v = 0; v < l.vertex_count(); ++v) t.visit_counts[v] = l.degree(v) / 2;
    return t;
}

namespace {

void check_visits(const ClosedTrail& t, const std::vector<int>& f, const char* what) {
    for (size_t v = 0; v < f.size(); ++v)
        if (t.visit_counts[v] > f[v])
            throw internal_error(std::string(what) + ": visit bound violated");
}

ClosedTrail trail_from_edges(const Multigraph& g, const std::vector<int>& l_ids) {
    Multigraph l(g.vertex_count(), [&] {
        std::vector<Edge> es;
        for (int id : l_ids) es.push_back(g.edge_by_id(id));
        return es;
    }());
    int start = 0;  // lowest id; every vertex of a spanning even subgraph appears
    return hierholzer(l, start);
}

ClosedTrail trivial_trail() {
    ClosedTrail t;
    t.start = 0;
    t.visit_counts = {0};
    return t;
}

}  // namespace

TrailOutcome f_trail(const Multigraph& g, const std::vector<int>& f, const SearchOptions& sopt,
                     const VerifyOptions& vopt) {
    if (g.is_null()) throw input_error("f_trail: null graph");
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw input_error("f must be total on the vertex set");
    for (int x : f)
        if (x < 1) throw input_error("f must be positive");
    TrailOutcome out;
    if (g.vertex_count() == 1) {
        out.kind = TrailOutcome::Kind::Trail;
        out.trail = trivial_trail();
        return out;
    }

    TreeConnectivity tc = is_m_tree_connected(g, 2);
    if (tc.connected) {
        std::vector<int> budget(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) budget[v] = 2 * f[v] + 1;
        FactorOutcome fo = degree_bounded_tc_factor(g, 2, {}, budget, sopt);
        if (fo.kind == FactorOutcome::Kind::Factor) {
            std::vector<int> l = spanning_eulerian_from_2tc(edge_subgraph(g, fo.factor->edge_ids));
            ClosedTrail t = trail_from_edges(g, l);
            check_visits(t, f, "f_trail");
            out.kind = TrailOutcome::Kind::Trail;
            out.trail = std::move(t);
            return out;
        }
    } else {
        out.certificate = tc.certificate;
    }

    // the factor pipeline is sufficient, not necessary: exhaustive fallback
    bool exhaustive_done = false;
    try {
        std::vector<int> caps(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) caps[v] = 2 * f[v];
        auto l = find_spanning_eulerian(g, caps, vopt);
        exhaustive_done = true;
        if (l) {
            ClosedTrail t = trail_from_edges(g, *l);
            check_visits(t, f, "f_trail fallback");
            out.kind = TrailOutcome::Kind::Trail;
            out.trail = std::move(t);
            return out;
        }
    } catch (const capacity_error& e) {
        out.note = e.what();
    }
    out.exhaustive_complete = exhaustive_done;

    try {
        ConditionReport rep = check_hypothesis(g, 2, f, Hypothesis::Thm7_1, nullptr, vopt);
        if (!rep.holds) {
            out.kind = TrailOutcome::Kind::Witness;
            out.witness_set = *rep.witness;
            return out;
        }
        if (exhaustive_done) {
            // the sufficient condition holds yet no object exists: this would
            // falsify the theorem, so flag it as loudly as possible
            out.note = "POSSIBLE COUNTEREXAMPLE: trail hypothesis holds but exhaustive search "
                       "found no spanning closed f-trail";
        }
    } catch (const capacity_error& e) {
        if (out.note.empty()) out.note = e.what();
    }
    if (out.certificate) {
        out.kind = TrailOutcome::Kind::Certificate;
        return out;
    }
    out.kind = TrailOutcome::Kind::SearchFailure;
    return out;
}

TrailOutcome f_walk(const Multigraph& g, const std::vector<int>& f,
                    const std::vector<int>& matching, const SearchOptions& sopt,
                    const VerifyOptions& vopt) {
    if (g.is_null()) throw input_error("f_walk: null graph");
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw input_error("f must be total on the vertex set");
    for (int x : f)
        if (x < 1) throw input_error("f must be positive");
    std::vector<char> touched(g.vertex_count(), 0);
    for (int id : matching) {
        const Edge& e = g.edge_by_id(id);
        if (touched[e.u] || touched[e.v]) throw input_error("forced edges are not a matching");
        touched[e.u] = touched[e.v] = 1;
    }
    TrailOutcome out;
    if (g.vertex_count() == 1) {
        out.kind = TrailOutcome::Kind::Walk;
        out.walk = ClosedWalk{0, {}, {0}};
        return out;
    }

    DuplicatedGraph dup = duplicate_edges(g);
    const Multigraph& g2 = dup.graph;
    auto to_walk = [&](const ClosedTrail& t) {
        ClosedWalk w;
        w.start = t.start;
        for (int id : t.edge_sequence) w.edge_sequence.push_back(dup.original_of[id]);
        w.visit_counts = t.visit_counts;
        for (int id : matching) {
            if (std::count(w.edge_sequence.begin(), w.edge_sequence.end(), id) < 1)
                throw internal_error("f_walk: forced matching edge missing from the walk");
        }
        return w;
    };

    // forced factor: both copies of every matching edge
    std::vector<int> forced;
    for (int id : matching) forced.push_back(id);
    for (const Edge& e : g2.edges())
        if (dup.original_of[e.id] != e.id &&
            std::find(matching.begin(), matching.end(), dup.original_of[e.id]) != matching.end())
            forced.push_back(e.id);

    TreeConnectivity tc = is_m_tree_connected(g2, 2);
    if (tc.connected) {
        std::vector<int> budget(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) budget[v] = 2 * f[v] + 1;
        FactorOutcome fo = degree_bounded_tc_factor(g2, 2, forced, budget, sopt);
        if (fo.kind == FactorOutcome::Kind::Factor) {
            std::vector<int> l = spanning_eulerian_from_2tc(edge_subgraph(g2, fo.factor->edge_ids));
            ClosedTrail t = trail_from_edges(g2, l);
            check_visits(t, f, "f_walk");
            out.kind = TrailOutcome::Kind::Walk;
            out.walk = to_walk(t);
            return out;
        }
    } else {
        out.certificate = tc.certificate;  // g disconnected
    }

    bool exhaustive_done = false;
    try {
        std::vector<int> caps(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) caps[v] = 2 * f[v];
        std::vector<std::vector<int>> groups;
        for (int id : matching) {
            std::vector<int> pair{id};
            for (const Edge& e : g2.edges())
                if (e.id != id && dup.original_of[e.id] == id) pair.push_back(e.id);
            groups.push_back(std::move(pair));
        }
        auto l = find_spanning_eulerian(g2, caps, vopt, groups.empty() ? nullptr : &groups);
        exhaustive_done = true;
        if (l) {
            ClosedTrail t = trail_from_edges(g2, *l);
            check_visits(t, f, "f_walk fallback");
            out.kind = TrailOutcome::Kind::Walk;
            out.walk = to_walk(t);
            return out;
        }
    } catch (const capacity_error& e) {
        out.note = e.what();
    }
    out.exhaustive_complete = exhaustive_done;

    try {
        ConditionReport rep = check_hypothesis(g, 2, f, Hypothesis::Cor7_2, nullptr, vopt);
        if (!rep.holds) {
            out.kind = TrailOutcome::Kind::Witness;
            out.witness_set = *rep.witness;
            return out;
        }
        if (exhaustive_done)
            out.note = "POSSIBLE COUNTEREXAMPLE: walk hypothesis holds but exhaustive search "
                       "found no spanning closed f-walk";
    } catch (const capacity_error& e) {
        if (out.note.empty()) out.note = e.what();
    }
    if (out.certificate) {
        out.kind = TrailOutcome::Kind::Certificate;
        return out;
    }
    out.kind = TrailOutcome::Kind::SearchFailure;
    return out;
}

TrailOutcome k_connected_trail_or_walk(const Multigraph& g, int k, const SearchOptions& sopt,
                                       const VerifyOptions& vopt) {
    if (k < 1) throw input_error("k must be positive");
    if (g.is_null()) throw input_error("k_connected_trail_or_walk: null graph");
    EdgeCut cut = edge_connectivity(g);
    if (!cut.infinite && cut.value < k) {
        std::string side;
        for (int v : cut.side) side += " " + std::to_string(v);
        throw input_error("graph is not " + std::to_string(k) + "-edge-connected: cut of size " +
                          std::to_string(cut.value) + " at side{" + side + " }");
    }
    auto ceil_pos = [](long long a, long long b) { return a <= 0 ? 0 : (a + b - 1) / b; };
    if (g.vertex_count() == 1) {
        TrailOutcome out;
        if (k >= 4) {
            out.kind = TrailOutcome::Kind::Trail;
            out.trail = trivial_trail();
        } else {
            out.kind = TrailOutcome::Kind::Walk;
            out.walk = ClosedWalk{0, {}, {0}};
        }
        return out;
    }

    if (k >= 4) {
        std::vector<int> f(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            f[v] = static_cast<int>(ceil_pos(2LL * g.degree(v) + k - 8, 2LL * k)) + 1;
        return f_trail(g, f, sopt, vopt);
    }
    if (k == 2) {
        std::vector<int> f(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            f[v] = static_cast<int>(ceil_pos(g.degree(v) - 1, 2)) + 1;
        return f_walk(g, f, {}, sopt, vopt);
    }
    if (k == 1) {
        // doubled BFS spanning tree
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<int> order{0}, tree_ids;
        seen[0] = 1;
        for (size_t i = 0; i < order.size(); ++i)
            for (const auto& inc : g.incident(order[i]))
                if (!seen[inc.to]) {
                    seen[inc.to] = 1;
                    tree_ids.push_back(inc.id);
                    order.push_back(inc.to);
                }
        Multigraph t = edge_subgraph(g, tree_ids);
        DuplicatedGraph dup = duplicate_edges(t);
        ClosedTrail tr = hierholzer(dup.graph, 0);
        TrailOutcome out;
        out.kind = TrailOutcome::Kind::Walk;
        ClosedWalk w;
        w.start = tr.start;
        for (int id : tr.edge_sequence) w.edge_sequence.push_back(dup.original_of[id]);
        w.visit_counts = tr.visit_counts;
        out.walk = std::move(w);
        return out;
    }

    // k == 3 bootstrap: spanning tree with the edge-connected degree bound,
    // parity forest matching d_G mod 2, then the 4-edge-connected Eulerian
    // supergraph G + F and the k = 4 trail lifted back to a walk.
    std::vector<int> f_tree(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        f_tree[v] = static_cast<int>(ceil_pos(g.degree(v) - 2, 3)) + 2;
    FactorOutcome fo = degree_bounded_tc_factor(g, 1, {}, f_tree, sopt);
    if (fo.kind != FactorOutcome::Kind::Factor) {
        TrailOutcome out;
        out.kind = TrailOutcome::Kind::SearchFailure;
        out.note = "k=3 bootstrap could not build the degree-bounded spanning tree";
        return out;
    }
    std::vector<int> q;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2) q.push_back(v);
    std::vector<int> forest = parity_forest(edge_subgraph(g, fo.factor->edge_ids), q);

    std::vector<Edge> es(g.edges().begin(), g.edges().end());
    int next_id = g.max_edge_id() + 1;
    std::vector<int> original_of(next_id + forest.size());
    std::iota(original_of.begin(), original_of.begin() + next_id, 0);
    for (int id : forest) {
        const Edge& e = g.edge_by_id(id);
        es.push_back(Edge{e.u, e.v, next_id});
        original_of[next_id] = id;
        ++next_id;
    }
    Multigraph g2(g.vertex_count(), std::move(es));
    for (int v = 0; v < g2.vertex_count(); ++v)
        if (g2.degree(v) % 2) throw internal_error("k=3 bootstrap: augmented graph is not even");
    EdgeCut cut2 = edge_connectivity(g2);
    if (!cut2.infinite && cut2.value < 4)
        throw internal_error("k=3 bootstrap: augmented graph is not 4-edge-connected");

    std::vector<int> f2(g2.vertex_count());
    for (int v = 0; v < g2.vertex_count(); ++v)
        f2[v] = static_cast<int>(ceil_pos(g2.degree(v) - 2, 4)) + 1;
    TrailOutcome inner = f_trail(g2, f2, sopt, vopt);
    if (inner.kind != TrailOutcome::Kind::Trail) {
        inner.note = "k=3 bootstrap: inner k=4 trail failed; " + inner.note;
        return inner;
    }
    TrailOutcome out;
    out.kind = TrailOutcome::Kind::Walk;
    ClosedWalk w;
    w.start = inner.trail->start;
    for (int id : inner.trail->edge_sequence) w.edge_sequence.push_back(original_of[id]);
    w.visit_counts = inner.trail->visit_counts;
    // theorem bound for the walk, including the mod-3 case split
    for (int v = 0; v < g.vertex_count(); ++v)
        if (w.visit_counts[v] > ceil_pos(g.degree(v) - 1, 3) + 1)
            throw internal_error("k=3 bootstrap: walk bound violated");
    out.walk = std::move(w);
    return out;
}

TwoFourOutcome connected_24_factor(const Multigraph& g, const SearchOptions& sopt,
                                   const VerifyOptions& vopt) {
    if (g.vertex_count() < 3) throw input_error("a {2,4}-factor needs at least three vertices");
    std::vector<int> f(g.vertex_count(), 2);
    TrailOutcome tr = f_trail(g, f, sopt, vopt);
    TwoFourOutcome out;
    if (tr.kind == TrailOutcome::Kind::Trail) {
        out.kind = TwoFourOutcome::Kind::Factor;
        out.factor_edges = tr.trail->edge_set();
        std::vector<int> deg(g.vertex_count(), 0);
        for (int id : out.factor_edges) {
            const Edge& e = g.edge_by_id(id);
            ++deg[e.u];
            ++deg[e.v];
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            if (deg[v] != 2 && deg[v] != 4)
                throw internal_error("{2,4}-factor has a degree outside {2,4}");
        return out;
    }
    try {
        std::vector<int> dummy(g.vertex_count(), 0);
        ConditionReport rep = check_hypothesis(g, 2, dummy, Hypothesis::Thm7_10, nullptr, vopt);
        if (!rep.holds) {
            out.kind = TwoFourOutcome::Kind::Witness;
            out.witness_set = *rep.witness;
            out.note = tr.exhaustive_complete ? "no {2,4}-factor exists (exhaustive)" : "";
            return out;
        }
        if (tr.exhaustive_complete) {
            out.counterexample_candidate = true;
            out.note = "POSSIBLE COUNTEREXAMPLE: {2,4}-factor hypothesis holds but exhaustive "
                       "search found none";
        }
    } catch (const capacity_error& e) {
        out.note = e.what();
    }
    out.kind = TwoFourOutcome::Kind::SearchFailure;
    return out;
}

}  // namespace treeconn
