#include "doctest.h"

#include <functional>

#include "dagbisect/ancestry.hpp"
#include "dagbisect/generators.hpp"
#include "dagbisect/optimal.hpp"
#include "dagbisect/reduction.hpp"

using namespace dagbisect;

namespace {

const char* kExampleCnf = "p cnf 3 2\n1 -2 0\n-1 -2 -3 0\n";

int depth_of_no_fault_leaf(const StrategyNode* node, int depth = 0) {
    if (node == nullptr) return -1;
    if (node->is_leaf()) return node->no_fault ? depth : -1;
    int left = depth_of_no_fault_leaf(node->bugged.get(), depth + 1);
    if (left >= 0) return left;
    return depth_of_no_fault_leaf(node->clean.get(), depth + 1);
}

}  // namespace

TEST_SUITE("reduction") {

TEST_CASE("dimacs parsing") {
    BsatFormula f = parse_bsat(kExampleCnf);
    CHECK(f.variable_count == 3);
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0] == std::vector<int>{1, -2});
    CHECK(f.clauses[1] == std::vector<int>{-1, -2, -3});

    CHECK_THROWS_AS(parse_bsat("p cnf 2 1\n1 0\n"), ValidationError);          // unit clause
    CHECK_THROWS_AS(parse_bsat("p cnf 4 1\n1 2 3 4 0\n"), ValidationError);    // 4 literals
    CHECK_THROWS_AS(parse_bsat("p cnf 2 4\n1 2 0\n1 -2 0\n1 2 0\n-1 2 0\n"),
                    ValidationError);                                          // var in 4 clauses
    CHECK_THROWS_AS(parse_bsat("p cnf 2 1\n1 5 0\n"), ValidationError);        // out of range
    CHECK_THROWS_AS(parse_bsat("1 2 0\n"), ValidationError);                   // no header
    CHECK_THROWS_AS(parse_bsat("p cnf 2 2\n1 2 0\n"), ValidationError);        // count mismatch
    CHECK_THROWS_AS(parse_bsat("p cnf 2 1\n1 1 0\n"), ValidationError);        // repeated var
    CHECK(parse_bsat(bsat_to_dimacs(f)).clauses == f.clauses);
}

TEST_CASE("pure-literal preprocessing") {
    // x1 occurs positively in three clauses and never negatively
    BsatFormula f = parse_bsat("p cnf 3 4\n1 2 0\n1 3 0\n1 -2 0\n2 -3 0\n");
    BsatFormula g = preprocess_pure_literals(f);
    CHECK(g.variable_count == 3);
    REQUIRE(g.clauses.size() == 1);
    CHECK(g.clauses[0] == std::vector<int>{2, -3});
    CHECK(literal_occurrences_within(g, 2));

    BsatFormula stable = parse_bsat(kExampleCnf);
    CHECK(preprocess_pure_literals(stable).clauses == stable.clauses);

    // dropping everything leaves an empty, trivially satisfiable formula
    BsatFormula all = parse_bsat("p cnf 2 3\n1 2 0\n1 -2 0\n2 1 0\n");
    BsatFormula cleared = preprocess_pure_literals(all);
    CHECK(cleared.clauses.empty());
    CHECK(brute_force_sat(cleared).has_value());
}

TEST_CASE("brute-force satisfiability") {
    CHECK(brute_force_sat(parse_bsat(kExampleCnf)).has_value());
    BsatFormula unsat;
    unsat.variable_count = 4;
    unsat.clauses = {{1, 2}, {1, -2}, {-1, 3}, {-3, 4}, {-3, -4}};
    CHECK_FALSE(brute_force_sat(unsat).has_value());
    auto model = brute_force_sat(parse_bsat(kExampleCnf));
    REQUIRE(model.has_value());
    CHECK(satisfies(parse_bsat(kExampleCnf), *model));
}

TEST_CASE("reduction of the worked formula") {
    BsatFormula f = parse_bsat(kExampleCnf);
    ReductionResult red = reduce_bsat_to_crsp(f);
    const CrspInstance& inst = red.instance;

    CHECK(inst.dag.vertex_count() == 20);  // 5n + m + 3
    CHECK(inst.innocent.count() == 12);
    CHECK(inst.budget == 6);
    CHECK(is_binary(inst.dag));
    CHECK(red.map.x == std::vector<VertexId>{0, 5, 10});
    CHECK(red.map.clause_vertex == std::vector<VertexId>{15, 16});
    CHECK(red.map.terminals == std::array<VertexId, 3>{17, 18, 19});

    // clause 1 = (x1 v ~x2): arcs into b_1 and b-bar_2
    AncestorTable anc(inst.dag);
    CHECK(anc.is_ancestor(red.map.clause_vertex[0], red.map.x[0]));
    CHECK(anc.is_ancestor(red.map.clause_vertex[0], red.map.x_bar[1]));
    CHECK_FALSE(anc.is_ancestor(red.map.clause_vertex[0], red.map.x_bar[0]));

    CHECK(crsp_optimal_queries(inst) == 6);

    // empty formula: gadgets only
    BsatFormula empty;
    empty.variable_count = 3;
    ReductionResult none = reduce_bsat_to_crsp(empty);
    CHECK(none.instance.dag.vertex_count() == 18);  // 5n + 3
    CHECK(crsp_optimal_queries(none.instance) <= 6);

    // a literal with three occurrences must be preprocessed away first
    BsatFormula raw;
    raw.variable_count = 3;
    raw.clauses = {{1, 2}, {1, 3}, {1, -2}};
    CHECK_THROWS_AS(reduce_bsat_to_crsp(raw), ValidationError);
}

TEST_CASE("instance text round-trip") {
    ReductionResult red = reduce_bsat_to_crsp(parse_bsat(kExampleCnf));
    CrspInstance parsed = parse_crsp(crsp_to_text(red.instance));
    CHECK(parsed.dag.arcs() == red.instance.dag.arcs());
    CHECK(parsed.innocent == red.instance.innocent);
    CHECK(parsed.budget == red.instance.budget);
    CHECK_THROWS_AS(parse_crsp("dag 2 0\ninnocent 5\nbudget 1\n"), ValidationError);
}

TEST_CASE("transform to the plain problem") {
    ReductionResult red = reduce_bsat_to_crsp(parse_bsat(kExampleCnf));
    Dag rsp = crsp_to_rsp(red.instance);
    CHECK(rsp.vertex_count() == 21);
    CHECK(rsp.marked_bugged() == 20);
    CHECK(rsp.parents(20).size() == 8);  // one arc per non-innocent vertex

    CrspInstance all_innocent;
    all_innocent.dag = gen_path(3);
    all_innocent.innocent = Bitset(3);
    for (std::size_t v = 0; v < 3; ++v) all_innocent.innocent.set(v);
    Dag trivial = crsp_to_rsp(all_innocent);
    AncestorTable anc(trivial);
    CHECK(optimal_queries(trivial, anc) == 0);
}

TEST_CASE("transform from the plain problem") {
    Dag path = gen_path(3);
    CrspInstance inst = rsp_to_crsp(path, 2, 5);
    CHECK(inst.dag.vertex_count() == 2);
    CHECK(inst.innocent.count() == 0);
    CHECK(inst.budget == 5);

    // a marked vertex off the main line leaves innocent bystanders:
    // in 0 -> {1, 2} -> 3 with b = 1, vertices 1 and 3 are dropped and the
    // surviving non-ancestor 2 becomes innocent
    Dag diamond = Dag::from_arcs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, 3);
    CrspInstance mid = rsp_to_crsp(diamond, 1, 2);
    CHECK(mid.dag.vertex_count() == 2);
    CHECK(mid.innocent.count() == 1);
}

TEST_CASE("assignment-to-strategy follows the proof recipe") {
    BsatFormula f = parse_bsat(kExampleCnf);
    ReductionResult red = reduce_bsat_to_crsp(f);
    std::vector<bool> assignment{true, false, false};
    REQUIRE(satisfies(f, assignment));

    StrategyTree tree = satisfying_assignment_to_strategy(f, assignment, red.map);
    CHECK(tree.height() <= 6);
    CHECK(verify_crsp_tree(tree, red.instance));
    CHECK(depth_of_no_fault_leaf(tree.root()) == 6);  // exactly n+3 on the all-clean path

    // every satisfying assignment of the worked formula yields a valid tree
    for (std::uint32_t bits = 0; bits < 8; ++bits) {
        std::vector<bool> a{(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0};
        if (!satisfies(f, a)) continue;
        StrategyTree t = satisfying_assignment_to_strategy(f, a, red.map);
        CHECK(t.height() <= 6);
        CHECK(verify_crsp_tree(t, red.instance));
    }

    std::vector<bool> falsifying{false, true, true};
    REQUIRE_FALSE(satisfies(f, falsifying));
    CHECK_THROWS_AS(satisfying_assignment_to_strategy(f, falsifying, red.map), ValidationError);
}

TEST_CASE("crsp tree verification rejects mutations") {
    BsatFormula f = parse_bsat(kExampleCnf);
    ReductionResult red = reduce_bsat_to_crsp(f);
    std::vector<bool> assignment{true, false, false};
    StrategyTree tree = satisfying_assignment_to_strategy(f, assignment, red.map);
    REQUIRE(verify_crsp_tree(tree, red.instance));

    // rebuild with two terminal leaves swapped: inconsistent
    StrategyTree broken = satisfying_assignment_to_strategy(f, assignment, red.map);
    StrategyNode* node = const_cast<StrategyNode*>(broken.root());
    while (!node->is_leaf()) node = node->clean.get();
    node->no_fault = false;
    node->leaf = red.map.terminals[0];
    CHECK_FALSE(verify_crsp_tree(broken, red.instance));
}

TEST_CASE("reduction size and shape on random bounded formulas") {
    SplitMix64 rng(99);
    int built = 0;
    for (int round = 0; round < 200 && built < 60; ++round) {
        BsatFormula f;
        f.variable_count = 4;
        int m = 1 + static_cast<int>(rng.below(5));
        for (int j = 0; j < m; ++j) {
            int len = 2 + static_cast<int>(rng.below(2));
            std::vector<int> clause;
            std::vector<int> vars{1, 2, 3, 4};
            for (int t = 0; t < len; ++t) {
                int pick = static_cast<int>(rng.below(vars.size()));
                int var = vars[pick];
                vars.erase(vars.begin() + pick);
                clause.push_back(rng.below(2) ? var : -var);
            }
            f.clauses.push_back(clause);
        }
        bool bounded = true;
        try {
            if (!literal_occurrences_within(f, 2)) bounded = false;
            if (bounded) {
                ReductionResult red = reduce_bsat_to_crsp(f);
                CHECK(red.instance.dag.vertex_count() ==
                      5 * f.variable_count + static_cast<int>(f.clauses.size()) + 3);
                CHECK(is_binary(red.instance.dag));
                bool sat = brute_force_sat(f).has_value();
                int opt = crsp_optimal_queries(red.instance);
                CHECK(sat == (opt <= f.variable_count + 3));
                ++built;
            }
        } catch (const ValidationError&) {
            // occurrence-bound violations are skipped
        }
    }
    CHECK(built >= 30);
}

}  // TEST_SUITE
