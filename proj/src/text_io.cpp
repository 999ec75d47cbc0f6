#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "treeconn/errors.hpp"
#include "treeconn/multigraph.hpp"

namespace treeconn {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Single linear pass; works on non-seekable streams such as stdin.
std::vector<Multigraph> parse_stream(std::istream& in) {
    std::vector<Multigraph> out;
    int n = -1;
    std::vector<std::pair<int, int>> pairs;
    auto flush = [&] {
        if (n >= 0) out.push_back(Multigraph::from_pairs(n, pairs));
        pairs.clear();
    };
    std::string line;
    while (std::getline(in, line)) {
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        std::string extra;
        if (kw == "graph") {
            flush();
            if (!(ls >> n) || n < 1) throw input_error("bad vertex count in header: " + line);
            if (ls >> extra) throw input_error("trailing tokens after header: " + line);
        } else if (kw == "e") {
            if (n < 0) throw input_error("edge line before 'graph <n>' header: " + line);
            int u, v;
            if (!(ls >> u >> v)) throw input_error("malformed edge line: " + line);
            if (ls >> extra) throw input_error("trailing tokens on edge line: " + line);
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw input_error("edge endpoint out of range: " + line);
            if (u == v) throw input_error("loops are not allowed: " + line);
            pairs.emplace_back(u, v);
        } else {
            throw input_error("unrecognized line: " + line);
        }
    }
    flush();
    return out;
}

}  // namespace

Multigraph read_graph_text(std::istream& in) {
    auto gs = parse_stream(in);
    if (gs.empty()) throw input_error("empty input, expected a graph");
    if (gs.size() > 1) throw input_error("expected a single graph, got " + std::to_string(gs.size()));
    return std::move(gs.front());
}

std::vector<Multigraph> read_graph_stream(std::istream& in) { return parse_stream(in); }

void write_graph_text(std::ostream& out, const Multigraph& g,
                      const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "graph " << g.vertex_count() << "\n";
    struct Row {
        int lo, hi, order;
    };
    std::vector<Row> rows;
    rows.reserve(g.edge_count());
    int order = 0;
    for (const Edge& e : g.edges())
        rows.push_back({std::min(e.u, e.v), std::max(e.u, e.v), order++});
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        if (a.hi != b.hi) return a.hi < b.hi;
        return a.order < b.order;
    });
    for (const Row& r : rows) out << "e " << r.lo << " " << r.hi << "\n";
}

}  // namespace treeconn
