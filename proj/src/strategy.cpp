#include "dagbisect/strategy.hpp"

#include <algorithm>
#include <limits>

namespace dagbisect {

std::unique_ptr<StrategyNode> StrategyTree::leaf(VertexId v) {
    auto n = std::make_unique<StrategyNode>();
    n->leaf = v;
    return n;
}

std::unique_ptr<StrategyNode> StrategyTree::no_fault_leaf() {
    auto n = std::make_unique<StrategyNode>();
    n->no_fault = true;
    return n;
}

std::unique_ptr<StrategyNode> StrategyTree::inner(VertexId query,
                                                  std::unique_ptr<StrategyNode> bugged,
                                                  std::unique_ptr<StrategyNode> clean) {
    auto n = std::make_unique<StrategyNode>();
    n->query = query;
    n->bugged = std::move(bugged);
    n->clean = std::move(clean);
    return n;
}

namespace {

int node_height(const StrategyNode* n) {
    if (n == nullptr || n->is_leaf()) return 0;
    return 1 + std::max(node_height(n->bugged.get()), node_height(n->clean.get()));
}

void collect_leaves(const StrategyNode* n, std::vector<VertexId>& out) {
    if (n == nullptr) return;
    if (n->is_leaf()) {
        out.push_back(n->no_fault ? -1 : n->leaf);
        return;
    }
    collect_leaves(n->bugged.get(), out);
    collect_leaves(n->clean.get(), out);
}

}  // namespace

int StrategyTree::height() const { return node_height(root_.get()); }

std::vector<VertexId> StrategyTree::leaves() const {
    std::vector<VertexId> out;
    collect_leaves(root_.get(), out);
    return out;
}

VertexId git_bisect_pick(const BisectState& state) {
    if (state.live_count() < 2)
        throw ValidationError("git_bisect_pick requires at least two candidates");
    int best_score = -1;
    VertexId best = -1;
    state.candidates().for_each_set([&](std::size_t v) {
        int s = state.score(static_cast<VertexId>(v));
        if (s > best_score) {
            best_score = s;
            best = static_cast<VertexId>(v);
        }
    });
    return best;  // iteration is in id order, so first max wins ties
}

BoundarySets boundary_sets(const BisectState& state) {
    if (state.live_count() < 1) throw ValidationError("boundary_sets on empty state");
    const int n_live = state.live_count();
    BoundarySets sets;
    Bitset in_v_ge(static_cast<std::size_t>(state.dag().vertex_count()));
    state.candidates().for_each_set([&](std::size_t v) {
        if (2 * state.live_ancestors(static_cast<VertexId>(v)) > n_live) {
            in_v_ge.set(v);
            sets.v_ge.push_back(static_cast<VertexId>(v));
        }
    });
    Bitset in_b_lt(static_cast<std::size_t>(state.dag().vertex_count()));
    for (VertexId v : sets.v_ge) {
        bool boundary = true;
        for (VertexId p : state.dag().parents(v))
            if (state.is_live(p) && in_v_ge.test(static_cast<std::size_t>(p))) {
                boundary = false;
                break;
            }
        if (!boundary) continue;
        sets.b_ge.push_back(v);
        for (VertexId p : state.dag().parents(v))
            if (state.is_live(p)) in_b_lt.set(static_cast<std::size_t>(p));
    }
    in_b_lt.for_each_set([&](std::size_t p) { sets.b_lt.push_back(static_cast<VertexId>(p)); });
    return sets;
}

VertexId golden_bisect_pick(const BisectState& state) {
    if (state.live_count() < 2)
        throw ValidationError("golden_bisect_pick requires at least two candidates");
    VertexId git_pick = git_bisect_pick(state);
    if (golden_threshold(state.live_count(), state.score(git_pick))) return git_pick;

    BoundarySets sets = boundary_sets(state);
    int best_score = -1;
    VertexId best = std::numeric_limits<VertexId>::max();
    auto consider = [&](VertexId v) {
        int s = state.score(v);
        if (s > best_score || (s == best_score && v < best)) {
            best_score = s;
            best = v;
        }
    };
    for (VertexId v : sets.b_ge) consider(v);
    for (VertexId v : sets.b_lt) consider(v);
    return best;
}

Picker git_picker() {
    return [](const BisectState& s) { return git_bisect_pick(s); };
}

Picker golden_picker() {
    return [](const BisectState& s) { return golden_bisect_pick(s); };
}

Picker picker_by_name(const std::string& name) {
    if (name == "git") return git_picker();
    if (name == "golden") return golden_picker();
    throw ValidationError("unknown strategy '" + name + "' (expected git or golden)");
}

namespace {

std::unique_ptr<StrategyNode> build_node(const Picker& picker, const BisectState& state) {
    if (state.live_count() == 1) return StrategyTree::leaf(state.sole_candidate());
    VertexId q = picker(state);
    return StrategyTree::inner(q, build_node(picker, state.apply_verdict(q, Verdict::Bugged)),
                               build_node(picker, state.apply_verdict(q, Verdict::Clean)));
}

}  // namespace

StrategyTree build_strategy_tree(const Picker& picker, const BisectState& state) {
    if (state.live_count() < 1) throw ValidationError("cannot build a strategy for an empty state");
    return StrategyTree(build_node(picker, state));
}

int worst_case_queries(const Picker& picker, const Dag& dag, const AncestorTable& anc) {
    auto state = BisectState::prune_to_ancestors(dag, anc, dag.bugged_or_throw());
    return build_strategy_tree(picker, state).height();
}

namespace {

bool verify_node(const StrategyNode* n, const Dag& dag, const AncestorTable& anc,
                 const Bitset& candidates) {
    if (n == nullptr) return false;
    if (n->is_leaf()) {
        if (n->no_fault) return false;  // no-fault outcomes do not exist here
        if (!dag.has_vertex(n->leaf)) return false;
        return candidates.count() == 1 &&
               candidates.test(static_cast<std::size_t>(n->leaf));
    }
    if (!dag.has_vertex(n->query)) return false;
    Bitset on_bugged = candidates;
    on_bugged &= anc.ancestors(n->query);
    Bitset on_clean = candidates;
    on_clean.subtract(anc.ancestors(n->query));
    return verify_node(n->bugged.get(), dag, anc, on_bugged) &&
           verify_node(n->clean.get(), dag, anc, on_clean);
}

}  // namespace

bool verify_tree(const StrategyTree& tree, const Dag& dag, const AncestorTable& anc) {
    if (tree.empty()) return false;
    VertexId b;
    try {
        b = dag.bugged_or_throw();
    } catch (const ValidationError&) {
        return false;
    }
    return verify_node(tree.root(), dag, anc, anc.ancestors(b));
}

bool golden_two_step_reduction_holds(const BisectState& state) {
    const int n = state.live_count();
    if (n < 2) return true;
    VertexId q1 = golden_bisect_pick(state);
    for (Verdict v1 : {Verdict::Bugged, Verdict::Clean}) {
        BisectState s1 = state.apply_verdict(q1, v1);
        if (le_n_over_phi(s1.live_count(), n)) continue;
        if (s1.live_count() < 2) return false;
        VertexId q2 = golden_bisect_pick(s1);
        for (Verdict v2 : {Verdict::Bugged, Verdict::Clean}) {
            BisectState s2 = s1.apply_verdict(q2, v2);
            if (!le_n_over_phi2(s2.live_count(), n)) return false;
        }
    }
    return true;
}

}  // namespace dagbisect
