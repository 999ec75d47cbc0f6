// Times the OpenMP subset-lattice kernels against their serial reference on
// representative condition-verify workloads, checking that both modes agree
// before reporting the speedup.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "treeconn/generators.hpp"
#include "treeconn/multigraph.hpp"
#include "treeconn/verify.hpp"

using namespace treeconn;

namespace {

double seconds(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Multigraph with_chords(Multigraph base, int chords, unsigned seed) {
    std::vector<Edge> es(base.edges().begin(), base.edges().end());
    int next = base.max_edge_id() + 1;
    unsigned state = seed;
    auto rnd = [&state](int mod) {
        state = state * 1664525u + 1013904223u;
        return static_cast<int>((state >> 16) % mod);
    };
    for (int i = 0; i < chords; ++i) {
        int u = rnd(base.vertex_count()), v = rnd(base.vertex_count());
        if (u != v) es.push_back(Edge{u, v, next++});
    }
    return Multigraph(base.vertex_count(), es);
}

void row(const char* name, double serial, double parallel, bool agree) {
    printf("%-38s %9.3fs %9.3fs %7.2fx %s\n", name, serial, parallel,
           parallel > 0 ? serial / parallel : 0.0, agree ? "" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    printf("threads: %d\n", omp_get_max_threads());
#else
    printf("threads: 1 (compiled without OpenMP)\n");
#endif
    printf("%-38s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

    VerifyOptions ser, par;
    ser.parallel = false;
    par.parallel = true;

    {
        Multigraph g = with_chords(circulant(19, 2), 6, 7);
        std::vector<int> f(g.vertex_count(), 2);
        ConditionReport a, b;
        double ts = seconds([&] { a = check_hypothesis(g, 2, f, Hypothesis::Thm7_10, nullptr, ser); });
        double tp = seconds([&] { b = check_hypothesis(g, 2, f, Hypothesis::Thm7_10, nullptr, par); });
        row("component conditions (n=19, 2^19 S)", ts, tp,
            a.holds == b.holds && a.slack == b.slack && a.extremal == b.extremal);
    }
    {
        Multigraph g = with_chords(circulant(13, 2), 4, 11);
        std::vector<int> f(g.vertex_count(), 3);
        ConditionReport a, b;
        double ts = seconds([&] { a = check_hypothesis(g, 2, f, Hypothesis::Thm4_3, nullptr, ser); });
        double tp = seconds([&] { b = check_hypothesis(g, 2, f, Hypothesis::Thm4_3, nullptr, par); });
        row("measure conditions (n=13, rank per S)", ts, tp,
            a.holds == b.holds && a.slack == b.slack && a.extremal == b.extremal);
    }
    {
        Multigraph g = petersen_chain(2);  // 18 vertices
        ToughnessValue a, b;
        VerifyOptions sc = ser, pc = par;
        double ts = seconds([&] { a = toughness(g, sc); });
        double tp = seconds([&] { b = toughness(g, pc); });
        row("toughness (n=18, 2^18 S)", ts, tp, a.value == b.value && a.critical == b.critical);
    }
    {
        Multigraph g = with_chords(circulant(12, 2), 3, 13);
        ToughnessValue a, b;
        double ts = seconds([&] { a = strong_toughness(g, 2, ser); });
        double tp = seconds([&] { b = strong_toughness(g, 2, par); });
        row("strong toughness (n=12, rank per S)", ts, tp, a.value == b.value);
    }
    {
        std::vector<Multigraph> graphs;
        for (int n = 10; n <= 17; ++n) graphs.push_back(with_chords(circulant(n, 2), 3, n));
        std::vector<ScanRow> a, b;
        double ts = seconds([&] { a = conjecture_scan(graphs, Conjecture::C7_11, ser); });
        double tp = seconds([&] { b = conjecture_scan(graphs, Conjecture::C7_11, par); });
        bool agree = a.size() == b.size();
        for (size_t i = 0; agree && i < a.size(); ++i)
            agree = a[i].hypothesis_holds == b[i].hypothesis_holds &&
                    a[i].conclusion_holds == b[i].conclusion_holds;
        row("conjecture scan (8 graphs, n<=17)", ts, tp, agree);
    }
    return 0;
}
