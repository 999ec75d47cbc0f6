#include "treeconn/json_out.hpp"

namespace treeconn {

namespace {

json parts_json(const std::vector<std::vector<int>>& parts) {
    json arr = json::array();
    for (const auto& p : parts) arr.push_back(p);
    return arr;
}

}  // namespace

json packing_json(const ForestPacking& p) {
    return json{{"schema", 1}, {"kind", "packing"}, {"m", p.m}, {"forests", parts_json(p.forests)}};
}

json certificate_json(const PartitionCertificate& c) {
    return json{{"schema", 1},
                {"kind", "partition"},
                {"m", c.m},
                {"parts", parts_json(c.partition.parts)},
                {"deficiency", c.deficiency}};
}

json partition_json(const VertexPartition& p) {
    return json{{"schema", 1}, {"parts", parts_json(p.parts)}};
}

json omega_json(const OmegaValue& o) {
    return json{{"schema", 1},
                {"m", o.m},
                {"omega", o.value},
                {"components", parts_json(o.witness.parts)}};
}

json sparsity_json(const SparsityResult& s, int m) {
    json out{{"schema", 1}, {"m", m}, {"sparse", s.sparse}};
    if (!s.sparse) out["witness_S"] = s.witness;
    return out;
}

json factor_json(const FactorResult& f) {
    return json{{"schema", 1},        {"factor", f.edge_ids},          {"m", f.m},
                {"te", f.total_excess}, {"bound_violations", json::array()}, {"forced", f.forced}};
}

json witness_json(const std::vector<int>& s) { return json{{"schema", 1}, {"witness_S", s}}; }

json search_failure_json(long long best_te) {
    return json{{"schema", 1}, {"search_failure", true}, {"best_te", best_te}};
}

namespace {

json visits_json(const std::vector<int>& counts) {
    json obj = json::object();
    for (size_t v = 0; v < counts.size(); ++v) obj[std::to_string(v)] = counts[v];
    return obj;
}

}  // namespace

json trail_json(const ClosedTrail& t) {
    return json{{"schema", 1},
                {"kind", "trail"},
                {"start", t.start},
                {"edges", t.edge_sequence},
                {"visits", visits_json(t.visit_counts)}};
}

json walk_json(const ClosedWalk& w) {
    return json{{"schema", 1},
                {"kind", "walk"},
                {"start", w.start},
                {"edges", w.edge_sequence},
                {"visits", visits_json(w.visit_counts)}};
}

json report_json(const ConditionReport& r) {
    json out{{"schema", 1},
             {"condition", r.condition},
             {"holds", r.holds},
             {"lhs", rational_string(r.lhs)},
             {"rhs", rational_string(r.rhs)},
             {"slack", rational_string(r.slack)},
             {"extremal_S", r.extremal},
             {"enumerated", r.enumerated}};
    if (r.witness) out["witness_S"] = *r.witness;
    return out;
}

json toughness_json(const ToughnessValue& t, int m) {
    json out{{"schema", 1}, {"m", m}};
    if (t.infinite) {
        out["toughness"] = "inf";
    } else {
        out["toughness"] = rational_string(t.value);
        out["critical_S"] = t.critical;
    }
    return out;
}

json scan_row_json(const ScanRow& r) {
    json out{{"schema", 1},
             {"index", r.index},
             {"hypothesis", r.hypothesis_holds},
             {"conclusion", r.conclusion_holds},
             {"counterexample_candidate", r.counterexample_candidate}};
    if (r.skipped) out["skipped"] = true;
    if (!r.note.empty()) out["note"] = r.note;
    if (r.witness) out["witness_S"] = *r.witness;
    return out;
}

}  // namespace treeconn
