#pragma once

#include <json.hpp>

#include "treeconn/factor.hpp"
#include "treeconn/packing.hpp"
#include "treeconn/trails.hpp"
#include "treeconn/verify.hpp"

namespace treeconn {

using json = nlohmann::json;

json packing_json(const ForestPacking& p);
json certificate_json(const PartitionCertificate& c);
json omega_json(const OmegaValue& o);
json partition_json(const VertexPartition& p);
json sparsity_json(const SparsityResult& s, int m);
json factor_json(const FactorResult& f);
json witness_json(const std::vector<int>& s);
json search_failure_json(long long best_te);
json trail_json(const ClosedTrail& t);
json walk_json(const ClosedWalk& w);
json report_json(const ConditionReport& r);
json toughness_json(const ToughnessValue& t, int m);
json scan_row_json(const ScanRow& r);

}  // namespace treeconn
