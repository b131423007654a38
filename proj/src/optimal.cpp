#include "dagbisect/optimal.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <unordered_map>

namespace dagbisect {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

int popcount64(std::uint64_t x) { return std::popcount(x); }

// Exact minimax search over candidate masks. Candidates are remapped to bit
// positions 0..m-1; every graph vertex contributes a query whose effect on a
// state S is (S & amask, S & ~amask). Queries with identical masks collapse
// to the smallest vertex id.
class ExactSolver {
public:
    ExactSolver(const Dag& dag, const AncestorTable& anc, std::vector<VertexId> candidates,
                const SolverOptions& opt)
        : opt_(opt), candidates_(std::move(candidates)) {
        const int m = static_cast<int>(candidates_.size());
        if (m > opt_.cap)
            throw SolverLimitError("exact solve needs " + std::to_string(m) +
                                   " candidates, cap is " + std::to_string(opt_.cap));
        if (m > 63) throw SolverLimitError("exact solve supports at most 63 candidates");

        std::vector<int> slot(dag.vertex_count(), -1);
        for (int i = 0; i < m; ++i) slot[candidates_[i]] = i;

        // One query per distinct ancestor mask, smallest vertex id wins.
        std::unordered_map<std::uint64_t, VertexId> rep;
        for (VertexId v = 0; v < dag.vertex_count(); ++v) {
            std::uint64_t mask = 0;
            anc.ancestors(v).for_each_set([&](std::size_t u) {
                int s = slot[static_cast<VertexId>(u)];
                if (s >= 0) mask |= std::uint64_t{1} << s;
            });
            auto [it, inserted] = rep.try_emplace(mask, v);
            if (!inserted && v < it->second) it->second = v;
        }
        queries_.reserve(rep.size());
        for (auto& [mask, v] : rep) queries_.push_back({mask, v});
        std::sort(queries_.begin(), queries_.end(),
                  [](const Query& a, const Query& b) { return a.vertex < b.vertex; });
    }

    std::uint64_t full_mask() const {
        return candidates_.empty() ? 0 : ~std::uint64_t{0} >> (64 - candidates_.size());
    }

    VertexId candidate_at(int slot) const { return candidates_[slot]; }

    // ---- plain search problem: find the faulty commit among S ----

    int solve(std::uint64_t s) {
        const int count = popcount64(s);
        if (count <= 1) return 0;
        if (auto it = memo_.find(s); it != memo_.end()) return it->second.value;
        if (memo_.size() >= opt_.memo_limit)
            throw SolverLimitError("memo table exceeded " + std::to_string(opt_.memo_limit) +
                                   " entries");

        const int lb = ceil_log2(static_cast<std::uint64_t>(count));
        auto splits = collect_splits(s);

        int best = kInf;
        VertexId best_query = -1;
        for (const auto& sp : splits) {
            if (1 + sp.worst_lb >= best) break;  // sorted: nothing better follows
            std::uint64_t a = sp.mask, b = s & ~sp.mask;
            std::uint64_t first = popcount64(a) >= popcount64(b) ? a : b;
            std::uint64_t second = first == a ? b : a;
            int v1 = solve(first);
            if (1 + v1 >= best) continue;
            int v2 = solve(second);
            int value = 1 + std::max(v1, v2);
            if (value < best) {
                best = value;
                best_query = sp.vertex;
                if (best == lb) break;
            }
        }
        memo_.emplace(s, Entry{best, best_query});
        return best;
    }

    std::unique_ptr<StrategyNode> extract(std::uint64_t s) {
        if (popcount64(s) == 1) return StrategyTree::leaf(candidate_at(std::countr_zero(s)));
        const Entry& e = memo_.at(s);
        std::uint64_t a = query_mask(e.query) & s;
        return StrategyTree::inner(e.query, extract(a), extract(s & ~a));
    }

    // ---- confined variant: outcomes are S plus an optional no-fault flag ----

    int solve_confined(std::uint64_t s, bool no_fault_possible) {
        const int outcomes = popcount64(s) + (no_fault_possible ? 1 : 0);
        if (outcomes <= 1) return 0;
        const std::uint64_t key = (s << 1) | (no_fault_possible ? 1 : 0);
        if (auto it = cmemo_.find(key); it != cmemo_.end()) return it->second.value;
        if (cmemo_.size() >= opt_.memo_limit)
            throw SolverLimitError("memo table exceeded " + std::to_string(opt_.memo_limit) +
                                   " entries");

        const int lb = ceil_log2(static_cast<std::uint64_t>(outcomes));
        int best = kInf;
        VertexId best_query = -1;
        // A bugged answer clears the flag, so the two branches are not
        // symmetric; deduplication is on the bugged-side mask only.
        std::vector<CSplit> splits;
        {
            std::unordered_map<std::uint64_t, VertexId> dedup;
            for (const auto& q : queries_) {
                std::uint64_t a = q.mask & s;
                if (a == 0) continue;
                int ou_clean = popcount64(s & ~a) + (no_fault_possible ? 1 : 0);
                if (ou_clean == 0) continue;
                auto [it, inserted] = dedup.try_emplace(a, q.vertex);
                if (!inserted) continue;
                int worst = std::max(
                    ceil_log2(static_cast<std::uint64_t>(popcount64(a))),
                    ceil_log2(static_cast<std::uint64_t>(ou_clean)));
                splits.push_back({a, q.vertex, worst});
            }
        }
        std::sort(splits.begin(), splits.end(), [](const CSplit& x, const CSplit& y) {
            return x.worst_lb != y.worst_lb ? x.worst_lb < y.worst_lb
                                            : (x.mask != y.mask ? x.mask < y.mask
                                                                : x.vertex < y.vertex);
        });
        for (const auto& sp : splits) {
            if (1 + sp.worst_lb >= best) break;
            int v1 = solve_confined(sp.mask, false);
            if (1 + v1 >= best) continue;
            int v2 = solve_confined(s & ~sp.mask, no_fault_possible);
            int value = 1 + std::max(v1, v2);
            if (value < best) {
                best = value;
                best_query = sp.vertex;
                if (best == lb) break;
            }
        }
        cmemo_.emplace(key, Entry{best, best_query});
        return best;
    }

    std::unique_ptr<StrategyNode> extract_confined(std::uint64_t s, bool no_fault_possible) {
        const int outcomes = popcount64(s) + (no_fault_possible ? 1 : 0);
        if (outcomes == 1) {
            if (s != 0) return StrategyTree::leaf(candidate_at(std::countr_zero(s)));
            return StrategyTree::no_fault_leaf();
        }
        const Entry& e = cmemo_.at((s << 1) | (no_fault_possible ? 1 : 0));
        std::uint64_t a = query_mask(e.query) & s;
        return StrategyTree::inner(e.query, extract_confined(a, false),
                                   extract_confined(s & ~a, no_fault_possible));
    }

private:
    struct Query {
        std::uint64_t mask;
        VertexId vertex;
    };
    struct Entry {
        int value;
        VertexId query;
    };
    struct Split {
        std::uint64_t mask;
        VertexId vertex;
        int worst_lb;
    };
    struct CSplit {
        std::uint64_t mask;
        VertexId vertex;
        int worst_lb;
    };

    std::uint64_t query_mask(VertexId v) const {
        for (const auto& q : queries_)
            if (q.vertex == v) return q.mask;
        throw ValidationError("internal: query vertex lost");
    }

    std::vector<Split> collect_splits(std::uint64_t s) const {
        std::vector<Split> splits;
        std::unordered_map<std::uint64_t, VertexId> dedup;  // keyed on min(A, B)
        for (const auto& q : queries_) {
            std::uint64_t a = q.mask & s;
            std::uint64_t b = s & ~a;
            if (a == 0 || b == 0) continue;
            auto [it, inserted] = dedup.try_emplace(std::min(a, b), q.vertex);
            if (!inserted) continue;
            int worst_lb = ceil_log2(
                static_cast<std::uint64_t>(std::max(popcount64(a), popcount64(b))));
            splits.push_back({a, q.vertex, worst_lb});
        }
        std::sort(splits.begin(), splits.end(), [](const Split& x, const Split& y) {
            return x.worst_lb != y.worst_lb ? x.worst_lb < y.worst_lb
                                            : (x.mask != y.mask ? x.mask < y.mask
                                                                : x.vertex < y.vertex);
        });
        return splits;
    }

    SolverOptions opt_;
    std::vector<VertexId> candidates_;
    std::vector<Query> queries_;
    std::unordered_map<std::uint64_t, Entry> memo_;
    std::unordered_map<std::uint64_t, Entry> cmemo_;
};

std::vector<VertexId> rsp_candidates(const Dag& dag, const AncestorTable& anc) {
    std::vector<VertexId> out;
    anc.ancestors(dag.bugged_or_throw()).for_each_set([&](std::size_t v) {
        out.push_back(static_cast<VertexId>(v));
    });
    return out;
}

}  // namespace

int optimal_queries(const Dag& dag, const AncestorTable& anc, const SolverOptions& opt) {
    ExactSolver solver(dag, anc, rsp_candidates(dag, anc), opt);
    return solver.solve(solver.full_mask());
}

StrategyTree optimal_strategy(const Dag& dag, const AncestorTable& anc,
                              const SolverOptions& opt) {
    ExactSolver solver(dag, anc, rsp_candidates(dag, anc), opt);
    solver.solve(solver.full_mask());
    return StrategyTree(solver.extract(solver.full_mask()));
}

int crsp_optimal_queries(const CrspInstance& inst, const SolverOptions& opt) {
    AncestorTable anc(inst.dag);
    ExactSolver solver(inst.dag, anc, inst.non_innocent(), opt);
    return solver.solve_confined(solver.full_mask(), true);
}

StrategyTree crsp_optimal_strategy(const CrspInstance& inst, const SolverOptions& opt) {
    AncestorTable anc(inst.dag);
    ExactSolver solver(inst.dag, anc, inst.non_innocent(), opt);
    solver.solve_confined(solver.full_mask(), true);
    return StrategyTree(solver.extract_confined(solver.full_mask(), true));
}

namespace {

void check_comb_labelling(const CombDag& comb) {
    const auto& lab = comb.labelling;
    const int n = static_cast<int>(lab.base_order.size());
    if (n < 1 || static_cast<int>(lab.comb_vertices.size()) != n ||
        comb.dag.vertex_count() != 2 * n)
        throw ValidationError("comb strategy: labelling does not match the graph");
    std::set<std::pair<VertexId, VertexId>> arcs(comb.dag.arcs().begin(), comb.dag.arcs().end());
    for (int i = 0; i < n; ++i) {
        if (!arcs.count({lab.base_order[i], lab.comb_vertices[i]}))
            throw ValidationError("comb strategy: missing tooth arc");
        if (i + 1 < n && !arcs.count({lab.comb_vertices[i], lab.comb_vertices[i + 1]}))
            throw ValidationError("comb strategy: missing chain arc");
    }
    if (comb.dag.marked_bugged() != std::optional<VertexId>(lab.comb_vertices[n - 1]))
        throw ValidationError("comb strategy: marked vertex is not the last chain vertex");
}

// Candidates in range [lo, hi] of chain positions: {v_lo..v_hi, u_lo..u_hi}.
std::unique_ptr<StrategyNode> comb_node(const CombLabelling& lab, int lo, int hi) {
    if (lo == hi) {
        return StrategyTree::inner(lab.base_order[lo], StrategyTree::leaf(lab.base_order[lo]),
                                   StrategyTree::leaf(lab.comb_vertices[lo]));
    }
    int size = hi - lo + 1;
    int mid = lo + (size + 1) / 2 - 1;  // query u at the ceiling half
    return StrategyTree::inner(lab.comb_vertices[mid], comb_node(lab, lo, mid),
                               comb_node(lab, mid + 1, hi));
}

}  // namespace

StrategyTree comb_strategy(const CombDag& comb) {
    check_comb_labelling(comb);
    return StrategyTree(comb_node(comb.labelling, 0,
                                  static_cast<int>(comb.labelling.base_order.size()) - 1));
}

namespace {

std::unique_ptr<StrategyNode> fib_node(int i, int offset);
std::unique_ptr<StrategyNode> fib_prime_node(int i, int offset, VertexId extra_sink);

std::unique_ptr<StrategyNode> fib_node(int i, int offset) {
    if (i == 1) return StrategyTree::leaf(offset);
    if (i == 2)
        return StrategyTree::inner(offset, StrategyTree::leaf(offset),
                                   StrategyTree::leaf(offset + 1));
    int left = static_cast<int>(fib_tree_size(i - 1));
    VertexId left_sink = offset + left - 1;
    VertexId own_sink = offset + static_cast<int>(fib_tree_size(i)) - 1;
    return StrategyTree::inner(left_sink, fib_node(i - 1, offset),
                               fib_prime_node(i - 2, offset + left, own_sink));
}

std::unique_ptr<StrategyNode> fib_prime_node(int i, int offset, VertexId extra_sink) {
    VertexId sub_sink = offset + static_cast<int>(fib_tree_size(i)) - 1;
    return StrategyTree::inner(sub_sink, fib_node(i, offset), StrategyTree::leaf(extra_sink));
}

}  // namespace

StrategyTree fibonacci_strategy(FibKind kind, int i) {
    if (i < 1) throw ValidationError("fibonacci_strategy: index must be >= 1");
    if (kind == FibKind::Tree) return StrategyTree(fib_node(i, 0));
    return StrategyTree(fib_prime_node(i, 0, static_cast<VertexId>(fib_tree_size(i))));
}

}  // namespace dagbisect
