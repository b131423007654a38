#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "dagbisect/bisect_state.hpp"
#include "dagbisect/exactmath.hpp"

namespace dagbisect {

// Binary decision tree over queries. At an inner node the left subtree is
// taken when the queried vertex is bugged, the right one when it is clean.
// Leaves name the identified faulty commit; a no-fault leaf is the extra
// outcome of the confined problem variant.
struct StrategyNode {
    VertexId query = -1;  // -1 at leaves
    std::unique_ptr<StrategyNode> bugged;
    std::unique_ptr<StrategyNode> clean;
    VertexId leaf = -1;
    bool no_fault = false;

    bool is_leaf() const { return query < 0; }
};

class StrategyTree {
public:
    StrategyTree() = default;
    explicit StrategyTree(std::unique_ptr<StrategyNode> root) : root_(std::move(root)) {}

    static std::unique_ptr<StrategyNode> leaf(VertexId v);
    static std::unique_ptr<StrategyNode> no_fault_leaf();
    static std::unique_ptr<StrategyNode> inner(VertexId query, std::unique_ptr<StrategyNode> bugged,
                                               std::unique_ptr<StrategyNode> clean);

    const StrategyNode* root() const { return root_.get(); }
    bool empty() const { return root_ == nullptr; }

    /// Worst-case number of queries: 0 for a bare leaf.
    int height() const;

    /// Leaves in left-to-right order (-1 stands for a no-fault leaf).
    std::vector<VertexId> leaves() const;

private:
    std::unique_ptr<StrategyNode> root_;
};

/// A deterministic decision rule: state with ≥ 2 candidates -> vertex to query.
using Picker = std::function<VertexId(const BisectState&)>;

/// The vertex of maximum score, ties broken by smallest id.
VertexId git_bisect_pick(const BisectState& state);

// The three vertex sets behind the golden fallback rule, all relative to the
// live candidate set: V≥ holds the vertices with strictly more live ancestors
// than live non-ancestors, B≥ its members with no live parent in V≥, and B<
// the live parents of B≥ members.
struct BoundarySets {
    std::vector<VertexId> v_ge;
    std::vector<VertexId> b_ge;
    std::vector<VertexId> b_lt;
};

BoundarySets boundary_sets(const BisectState& state);

/// Maximum-score pick when the best score reaches n/φ², otherwise the best
/// scoring member of B≥ ∪ B<. Ties broken by smallest id in both regimes.
VertexId golden_bisect_pick(const BisectState& state);

Picker git_picker();
Picker golden_picker();
Picker picker_by_name(const std::string& name);  // "git" | "golden"

/// Expands the picker against both verdicts until single candidates remain.
StrategyTree build_strategy_tree(const Picker& picker, const BisectState& state);

/// Height of the picker's strategy tree for the marked bugged vertex.
int worst_case_queries(const Picker& picker, const Dag& dag, const AncestorTable& anc);

/// Checks the strategy-tree invariants against the graph's ancestor relation:
/// every root-to-leaf path is verdict-consistent and the leaves are exactly
/// the candidates, each one once.
bool verify_tree(const StrategyTree& tree, const Dag& dag, const AncestorTable& anc);

/// The golden rule's two-step guarantee on a state with n candidates: each
/// branch of the first golden query either drops to at most n/φ candidates or
/// every branch of the follow-up golden query drops to at most n/φ². Holds
/// for binary graphs with n ≥ 14; the known 13-vertex exception violates it.
bool golden_two_step_reduction_holds(const BisectState& state);

}  // namespace dagbisect
