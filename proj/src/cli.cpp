#include "treeconn/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "treeconn/errors.hpp"
#include "treeconn/generators.hpp"
#include "treeconn/json_out.hpp"

namespace treeconn {

namespace {

Multigraph load_graph(const std::string& path, std::istream& in) {
    if (path == "-") return read_graph_text(in);
    std::ifstream file(path);
    if (!file) throw input_error("cannot open input file: " + path);
    return read_graph_text(file);
}

std::vector<Multigraph> load_stream(const std::string& path, std::istream& in) {
    if (path == "-") return read_graph_stream(in);
    std::ifstream file(path);
    if (!file) throw input_error("cannot open input file: " + path);
    return read_graph_stream(file);
}

// "--f 2" uniform, or "--f 2,0:5,3:1": bare int base, v:int overrides
std::vector<int> parse_vertex_function(const std::string& text, int n) {
    std::vector<int> f(n, INT_MIN);
    int base = INT_MIN;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto colon = tok.find(':');
        try {
            if (colon == std::string::npos) {
                base = std::stoi(tok);
            } else {
                int v = std::stoi(tok.substr(0, colon));
                if (v < 0 || v >= n) throw input_error("vertex function names unknown vertex " + tok);
                f[v] = std::stoi(tok.substr(colon + 1));
            }
        } catch (const std::invalid_argument&) {
            throw input_error("cannot parse vertex function entry: " + tok);
        } catch (const std::out_of_range&) {
            throw input_error("vertex function entry out of range: " + tok);
        }
    }
    for (int v = 0; v < n; ++v)
        if (f[v] == INT_MIN) {
            if (base == INT_MIN)
                throw input_error("vertex function leaves vertex " + std::to_string(v) +
                                  " unassigned (give a uniform base value)");
            f[v] = base;
        }
    return f;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw input_error("cannot parse id list entry: " + tok);
        }
    }
    return out;
}

void emit(std::ostream& out, bool as_json, const json& payload, const std::string& text) {
    if (as_json)
        out << payload.dump() << "\n";
    else
        out << text << "\n";
}

std::string join_ids(const std::vector<int>& ids) {
    std::string s;
    for (int id : ids) s += (s.empty() ? "" : " ") + std::to_string(id);
    return s;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"tree-connectivity toolkit: spanning tree packings, degree-bounded "
                 "tree-connected factors, spanning closed trails and toughness-type verifiers"};
    app.require_subcommand(1);

    std::string input = "-";
    bool as_json = false;
    int m = 1, k = 0, u = 0, cap = 0, jobs = 0;
    unsigned seed = 1;
    bool serial = false, factor24 = false;
    std::string f_text, force_text, variant, regime = "edge", eps_text = "1", c_text = "1";
    std::string family = "petersen", base_path, kind = "eulerian", conjecture = "7.11", x_text;
    int gen_n = 1, gen_s = 1, gen_p = 2, gen_delta = 4;

    auto add_common = [&](CLI::App* sub, bool graph_input = true) {
        if (graph_input) sub->add_option("input", input, "graph file or '-' for stdin");
        sub->add_flag("--json", as_json, "emit the JSON schema");
        sub->add_option("--cap", cap, "enumeration cap override");
        sub->add_option("--seed", seed, "seed for randomized search schedules only");
        sub->add_option("--jobs", jobs, "worker threads for subset/instance enumeration");
        sub->add_flag("--serial", serial, "force the serial reference kernels");
    };

    CLI::App* pack = app.add_subcommand("pack", "maximum m-forest packing");
    pack->add_option("--m", m, "packing multiplicity")->required();
    add_common(pack);

    CLI::App* omega_cmd = app.add_subcommand("omega", "tree-connectivity measure");
    omega_cmd->add_option("--m", m)->required();
    add_common(omega_cmd);

    CLI::App* comp = app.add_subcommand("components", "m-tree-connected components");
    comp->add_option("--m", m)->required();
    add_common(comp);

    CLI::App* sparse = app.add_subcommand("sparse", "m-sparsity with witness");
    sparse->add_option("--m", m)->required();
    add_common(sparse);

    CLI::App* factor = app.add_subcommand("factor", "degree-bounded m-tree-connected factor");
    factor->add_option("--m", m)->required();
    factor->add_option("--f", f_text, "degree bound: uniform int or v:int comma list");
    factor->add_option("--force-edges", force_text, "edge ids the factor must contain");
    factor->add_option("--k", k, "connectivity for the derived-bound regimes");
    factor->add_option("--regime", regime, "edge|tree (with --k)");
    factor->add_option("--u", u, "flagged vertex for the floor reduction (with --k)");
    add_common(factor);

    CLI::App* trail = app.add_subcommand("trail", "spanning closed f-trail");
    trail->add_option("--f", f_text, "visit bound");
    trail->add_option("--k", k, "k-edge-connected regime (k >= 4)");
    trail->add_flag("--factor-24", factor24, "connected {2,4}-factor pipeline");
    add_common(trail);

    CLI::App* walk = app.add_subcommand("walk", "spanning closed f-walk");
    walk->add_option("--f", f_text, "visit bound");
    walk->add_option("--k", k, "k-edge-connected regime (k <= 3)");
    walk->add_option("--force-edges", force_text, "matching the walk must traverse");
    add_common(walk);

    CLI::App* verify = app.add_subcommand("verify", "toughness-type condition checks");
    verify->add_option("--variant", variant,
                       "thm4.3|cor4.4|cor4.5|thm7.1|thm1.5|cor7.2|thm7.10|lem5.1edge|lem5.1tree|thm6.3")
        ->required();
    verify->add_option("--m", m);
    verify->add_option("--f", f_text);
    verify->add_option("--k", k);
    verify->add_option("--x", x_text, "restricted vertex set (cor4.5)");
    verify->add_option("--eps", eps_text, "epsilon as a rational (thm6.3)");
    verify->add_option("--c", c_text, "c as a rational (thm6.3)");
    add_common(verify);

    int strong_m = 0;
    CLI::App* tough = app.add_subcommand("toughness", "toughness / m-strong toughness");
    tough->add_option("--m", strong_m, "0 = classical toughness, else m-strong");
    add_common(tough);

    CLI::App* gen = app.add_subcommand("generate", "named graph constructions");
    gen->add_option("--family", family, "petersen|petersen-chain|circulant|sparse-threshold|blowup");
    gen->add_option("--n", gen_n, "order / copy count");
    gen->add_option("--m", m);
    gen->add_option("--s", gen_s);
    gen->add_option("--p", gen_p);
    gen->add_option("--delta", gen_delta);
    gen->add_option("--base", base_path, "base / pattern graph file");
    gen->add_option("--kind", kind, "eulerian|factor (blowup)");
    add_common(gen, false);

    CLI::App* scan = app.add_subcommand("scan", "conjecture counterexample scan over a graph stream");
    scan->add_option("--conjecture", conjecture, "7.9|7.11|7.14");
    add_common(scan);

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif
    VerifyOptions vopt;
    vopt.parallel = !serial;
    if (cap > 0) {
        vopt.cap_omega = cap;
        vopt.cap_rank = cap;
        vopt.cycle_space_cap = cap;
    }
    SearchOptions sopt;
    sopt.seed = seed;

    try {
        if (pack->parsed()) {
            Multigraph g = load_graph(input, in);
            ForestPacking p = max_forest_union(g, m);
            emit(out, as_json, packing_json(p), "rank " + std::to_string(p.rank()));
            return 0;
        }
        if (omega_cmd->parsed()) {
            Multigraph g = load_graph(input, in);
            OmegaValue o = omega(g, m);
            emit(out, as_json, omega_json(o), std::to_string(o.value));
            return 0;
        }
        if (comp->parsed()) {
            Multigraph g = load_graph(input, in);
            VertexPartition p = tree_connected_components(g, m);
            std::string text;
            for (const auto& part : p.parts) text += "[" + join_ids(part) + "] ";
            emit(out, as_json, partition_json(p), text);
            return 0;
        }
        if (sparse->parsed()) {
            Multigraph g = load_graph(input, in);
            SparsityResult s = is_m_sparse(g, m);
            emit(out, as_json, sparsity_json(s, m),
                 s.sparse ? "sparse" : "not sparse, witness S = [" + join_ids(s.witness) + "]");
            return s.sparse ? 0 : 1;
        }
        if (factor->parsed()) {
            Multigraph g = load_graph(input, in);
            std::vector<int> forced =
                force_text.empty() ? std::vector<int>{} : parse_int_list(force_text);
            FactorOutcome fo;
            if (k > 0) {
                ConnectivityRegime reg = regime == "tree" ? ConnectivityRegime::TreeConnected
                                                          : ConnectivityRegime::EdgeConnected;
                fo = edge_connected_factor(g, m, k, forced, u, reg, sopt);
            } else {
                if (f_text.empty()) throw input_error("factor needs --f (or --k)");
                std::vector<int> f = parse_vertex_function(f_text, g.vertex_count());
                fo = degree_bounded_tc_factor(g, m, forced, f, sopt);
            }
            if (fo.kind == FactorOutcome::Kind::Factor) {
                emit(out, as_json, factor_json(*fo.factor),
                     "factor [" + join_ids(fo.factor->edge_ids) + "]");
                return 0;
            }
            if (fo.kind == FactorOutcome::Kind::Witness) {
                emit(out, as_json, witness_json(fo.witness_set),
                     "no factor: hypothesis fails at S = [" + join_ids(fo.witness_set) + "]");
                return 1;
            }
            emit(out, as_json, search_failure_json(fo.best_te),
                 "search failure, best te " + std::to_string(fo.best_te));
            return 2;
        }
        if (trail->parsed() || walk->parsed()) {
            Multigraph g = load_graph(input, in);
            TrailOutcome t;
            if (factor24) {
                TwoFourOutcome tf = connected_24_factor(g, sopt, vopt);
                if (tf.kind == TwoFourOutcome::Kind::Factor) {
                    emit(out, as_json, json{{"schema", 1}, {"factor", tf.factor_edges}},
                         "factor [" + join_ids(tf.factor_edges) + "]");
                    return 0;
                }
                if (tf.kind == TwoFourOutcome::Kind::Witness) {
                    emit(out, as_json, witness_json(tf.witness_set),
                         "no factor: hypothesis fails at S = [" + join_ids(tf.witness_set) + "]");
                    return 1;
                }
                err << tf.note << "\n";
                return 2;
            }
            if (k > 0) {
                if (trail->parsed() && k < 4) throw input_error("trail regime needs k >= 4");
                if (walk->parsed() && k > 3) throw input_error("walk regime needs k <= 3");
                t = k_connected_trail_or_walk(g, k, sopt, vopt);
            } else {
                if (f_text.empty()) throw input_error("need --f (or --k)");
                std::vector<int> f = parse_vertex_function(f_text, g.vertex_count());
                if (trail->parsed()) {
                    t = f_trail(g, f, sopt, vopt);
                } else {
                    std::vector<int> matching =
                        force_text.empty() ? std::vector<int>{} : parse_int_list(force_text);
                    t = f_walk(g, f, matching, sopt, vopt);
                }
            }
            switch (t.kind) {
                case TrailOutcome::Kind::Trail:
                    emit(out, as_json, trail_json(*t.trail),
                         "trail [" + join_ids(t.trail->edge_sequence) + "]");
                    return 0;
                case TrailOutcome::Kind::Walk:
                    emit(out, as_json, walk_json(*t.walk),
                         "walk [" + join_ids(t.walk->edge_sequence) + "]");
                    return 0;
                case TrailOutcome::Kind::Witness:
                    emit(out, as_json, witness_json(t.witness_set),
                         "no object: hypothesis fails at S = [" + join_ids(t.witness_set) + "]");
                    return 1;
                case TrailOutcome::Kind::Certificate:
                    emit(out, as_json, certificate_json(*t.certificate),
                         "not 2-tree-connected, deficiency " +
                             std::to_string(t.certificate->deficiency));
                    return 1;
                case TrailOutcome::Kind::SearchFailure:
                    err << "search failure" << (t.note.empty() ? "" : ": " + t.note) << "\n";
                    return 2;
            }
        }
        if (verify->parsed()) {
            Multigraph g = load_graph(input, in);
            if (variant == "thm6.3") {
                Theorem63Report rep =
                    check_theorem_6_3(g, m, parse_rational(eps_text), parse_rational(c_text), vopt);
                json payload{{"schema", 1},
                             {"hypothesis", report_json(rep.hypothesis)},
                             {"implication_failed", rep.implication_failed}};
                if (rep.conclusion_checked) payload["conclusion"] = report_json(rep.conclusion);
                std::string text = rep.hypothesis.holds
                                       ? (rep.implication_failed
                                              ? "COUNTEREXAMPLE CANDIDATE: hypothesis holds, "
                                                "conclusion fails"
                                              : "hypothesis and conclusion hold")
                                       : "hypothesis fails";
                emit(out, as_json, payload, text);
                return rep.hypothesis.holds && !rep.implication_failed ? 0 : 1;
            }
            ConditionReport rep;
            if (variant == "lem5.1edge" || variant == "lem5.1tree") {
                if (k <= 0) throw input_error("lemma 5.1 needs --k");
                rep = check_lemma_5_1(g, m, k,
                                      variant == "lem5.1edge" ? Lemma51Regime::EdgeConnected
                                                              : Lemma51Regime::TreeConnected,
                                      vopt);
            } else {
                auto h = hypothesis_by_name(variant);
                if (!h) throw input_error("unknown variant: " + variant);
                std::vector<int> f(g.vertex_count(), 0);
                if (!f_text.empty()) f = parse_vertex_function(f_text, g.vertex_count());
                std::vector<int> xs;
                if (!x_text.empty()) xs = parse_int_list(x_text);
                rep = check_hypothesis(g, m, f, *h, x_text.empty() ? nullptr : &xs, vopt);
            }
            emit(out, as_json, report_json(rep),
                 rep.condition + (rep.holds ? " holds" : " fails at S = [" + join_ids(rep.extremal) +
                                                             "] (" + rational_string(rep.lhs) +
                                                             " > " + rational_string(rep.rhs) + ")"));
            return rep.holds ? 0 : 1;
        }
        if (tough->parsed()) {
            Multigraph g = load_graph(input, in);
            ToughnessValue t = strong_m >= 1 ? strong_toughness(g, strong_m, vopt) : toughness(g, vopt);
            emit(out, as_json, toughness_json(t, strong_m),
                 t.infinite ? "inf" : rational_string(t.value));
            return 0;
        }
        if (gen->parsed()) {
            Multigraph g;
            std::string header = "family=" + family;
            if (family == "petersen") {
                g = petersen();
            } else if (family == "petersen-chain") {
                g = petersen_chain(gen_n);
                header += " n=" + std::to_string(gen_n);
            } else if (family == "circulant") {
                g = circulant(gen_n, m);
                header += " n=" + std::to_string(gen_n) + " m=" + std::to_string(m);
            } else if (family == "sparse-threshold") {
                Multigraph base = base_path.empty() ? circulant(gen_n, m) : load_graph(base_path, in);
                g = sparse_threshold_graph(base, m);
                header += " m=" + std::to_string(m) +
                          (base_path.empty() ? " base=circulant(" + std::to_string(gen_n) + ")"
                                             : " base=" + base_path);
            } else if (family == "blowup") {
                Multigraph h = base_path.empty() ? petersen_chain(1) : load_graph(base_path, in);
                g = blowup_no_factor(h, gen_n, gen_s, gen_p, gen_delta,
                                     kind == "factor" ? BlowupKind::TreeConnectedFactor
                                                      : BlowupKind::Eulerian);
                header += " n=" + std::to_string(gen_n) + " s=" + std::to_string(gen_s) +
                          " p=" + std::to_string(gen_p) + " delta=" + std::to_string(gen_delta) +
                          " kind=" + kind;
            } else {
                throw input_error("unknown family: " + family);
            }
            write_graph_text(out, g, {header});
            return 0;
        }
        if (scan->parsed()) {
            std::vector<Multigraph> gs = load_stream(input, in);
            auto c = conjecture_by_name(conjecture);
            if (!c) throw input_error("unknown conjecture: " + conjecture);
            std::vector<ScanRow> rows = conjecture_scan(gs, *c, vopt);
            bool any = false;
            for (const ScanRow& r : rows) {
                any = any || r.counterexample_candidate;
                if (as_json) {
                    out << scan_row_json(r).dump() << "\n";
                } else {
                    out << "graph " << r.index << ": hypothesis "
                        << (r.skipped ? "skipped" : (r.hypothesis_holds ? "true" : "false"))
                        << ", conclusion " << (r.conclusion_holds ? "true" : "false")
                        << (r.counterexample_candidate ? "  << COUNTEREXAMPLE CANDIDATE" : "")
                        << (r.note.empty() ? "" : "  (" + r.note + ")") << "\n";
                }
            }
            return any ? 1 : 0;
        }
    } catch (const certificate_error& e) {
        if (as_json)
            out << certificate_json(e.certificate).dump() << "\n";
        else
            out << "not m-tree-connected, deficiency " << e.certificate.deficiency << "\n";
        return 1;
    } catch (const capacity_error& e) {
        err << "capacity: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "domain: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace treeconn
