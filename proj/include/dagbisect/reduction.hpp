#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dagbisect/crsp.hpp"
#include "dagbisect/strategy.hpp"

namespace dagbisect {

// CNF with clauses of 2 or 3 literals and every variable in at most 3
// clauses. Literals are signed 1-based variable indices (DIMACS style).
struct BsatFormula {
    int variable_count = 0;
    std::vector<std::vector<int>> clauses;
};

/// Parses DIMACS CNF and validates the bounded-occurrence shape.
BsatFormula parse_bsat(const std::string& dimacs);
std::string bsat_to_dimacs(const BsatFormula& f);

/// True when every literal (not just variable) occurs in at most `limit`
/// clauses.
bool literal_occurrences_within(const BsatFormula& f, int limit);

/// Drops the clauses of any literal occurring in 3 clauses: its opposite is
/// absent, so those clauses can be satisfied outright. Equisatisfiable, and
/// afterwards every literal occurs at most twice. The variable count is kept.
BsatFormula preprocess_pure_literals(const BsatFormula& f);

bool satisfies(const BsatFormula& f, const std::vector<bool>& assignment);

/// First satisfying assignment in increasing binary order, if any.
std::optional<std::vector<bool>> brute_force_sat(const BsatFormula& f);

// Vertex ids of the hardness gadget: per variable a literal pair, two
// branching vertices and one control vertex; per clause one source vertex;
// plus three isolated terminals. Layout is variables first (5 ids per
// variable, in the order x, x̄, b, b̄, ct), then clauses, then terminals.
struct GadgetMap {
    std::vector<VertexId> x, x_bar, b, b_bar, ct;
    std::vector<VertexId> clause_vertex;
    std::array<VertexId, 3> terminals{};
};

struct ReductionResult {
    CrspInstance instance;
    GadgetMap map;
};

/// Builds the confined instance whose optimum is n+3 exactly when the
/// formula is satisfiable. Requires a preprocessed formula (every literal in
/// at most 2 clauses); the output is binary with 5n + m + 3 vertices and
/// budget n + 3.
ReductionResult reduce_bsat_to_crsp(const BsatFormula& f);

/// Adds a new bugged sink fed by every non-innocent vertex. Preserves the
/// optimum when no innocent vertex is an ancestor of a non-innocent one
/// (which holds for every instance this library produces).
Dag crsp_to_rsp(const CrspInstance& inst);

/// Deletes the bugged vertex and its descendants and marks the former
/// non-ancestors innocent. Preserves the optimum.
CrspInstance rsp_to_crsp(const Dag& dag, VertexId b, int budget);

/// The proof-recipe strategy for a satisfying assignment: query one literal
/// per variable, then the three terminals; a bugged literal answer is chased
/// through at most two clause vertices with the control vertex as fallback.
/// Height is at most n + 3. Throws if the assignment does not satisfy f.
StrategyTree satisfying_assignment_to_strategy(const BsatFormula& f,
                                               const std::vector<bool>& assignment,
                                               const GadgetMap& map);

/// CRSP analogue of verify_tree: every branch keeps at least one outcome,
/// leaves are exactly the feasible outcomes (one candidate, or no-fault).
bool verify_crsp_tree(const StrategyTree& tree, const CrspInstance& inst);

}  // namespace dagbisect
