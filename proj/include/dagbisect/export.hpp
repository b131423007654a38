#pragma once

#include <string>
#include <vector>

#include "dagbisect/bisect_state.hpp"
#include "dagbisect/strategy.hpp"

namespace dagbisect {

struct DotOptions {
    const BisectState* state = nullptr;  // eliminated vertices drawn dotted
    std::vector<VertexId> highlights;    // drawn filled
};

/// Graphviz digraph; every vertex is labelled "id a/na" with its ancestor and
/// non-ancestor counts. With default options no styling attributes are
/// emitted at all.
std::string export_dot(const Dag& dag, const DotOptions& options = {});

/// Strategy tree as a Graphviz digraph: circles for queries, boxes for
/// leaves, edges labelled b (bugged) and c (clean).
std::string strategy_tree_to_dot(const StrategyTree& tree);

/// Strategy tree as JSON: {"query": q, "bugged": ..., "clean": ...} at inner
/// nodes, {"leaf": id} or {"leaf": "no-fault"} at leaves.
std::string strategy_tree_to_json(const StrategyTree& tree);

}  // namespace dagbisect
