#pragma once

#include <cstdint>

#include "dagbisect/crsp.hpp"
#include "dagbisect/generators.hpp"
#include "dagbisect/strategy.hpp"

namespace dagbisect {

/// Exact solve aborted: too many candidates or the memo table grew past its
/// configured limit.
struct SolverLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverOptions {
    int cap = 24;                          // max candidate count solved exactly
    std::size_t memo_limit = 1u << 24;     // memo entries before aborting
};

/// Minimax-optimal worst-case query count for the marked bugged vertex.
/// Any vertex of the graph may be queried, including eliminated ones; the
/// recursion is memoized on the candidate mask and pruned against the
/// ⌈log2 |S|⌉ lower bound.
int optimal_queries(const Dag& dag, const AncestorTable& anc, const SolverOptions& opt = {});

/// One optimal tree extracted from the memo; passes verify_tree and has
/// height equal to optimal_queries.
StrategyTree optimal_strategy(const Dag& dag, const AncestorTable& anc,
                              const SolverOptions& opt = {});

/// Minimax optimum for a confined instance. A bugged answer rules out the
/// no-fault outcome; terminal states have a single outcome (one candidate
/// and no no-fault possibility, or no candidate with no-fault possible).
int crsp_optimal_queries(const CrspInstance& inst, const SolverOptions& opt = {});

/// Optimal confined tree; leaves are candidates plus one no-fault leaf per
/// all-clean path.
StrategyTree crsp_optimal_strategy(const CrspInstance& inst, const SolverOptions& opt = {});

/// The halving strategy for a comb graph: query u_⌈n/2⌉, recurse on the
/// matching half. Height is ⌈log2(2n)⌉, which meets the information-theoretic
/// lower bound, so the tree is optimal. Validates that the labelling matches
/// the graph.
StrategyTree comb_strategy(const CombDag& comb);

enum class FibKind { Tree, Prime };  // F_i, or F'_i = F_i plus a child sink

/// The recursive strategy for Fibonacci trees: in F_{i+1} query the sink of
/// the F_i subtree; in F'_i query the parent of the extra sink. Height is
/// exactly i-1 for F_i and i for F'_i.
StrategyTree fibonacci_strategy(FibKind kind, int i);

}  // namespace dagbisect
