#include "doctest.h"

#include <bit>
#include <set>

#include "dagbisect/exactmath.hpp"
#include "dagbisect/generators.hpp"
#include "dagbisect/optimal.hpp"
#include "dagbisect/reduction.hpp"

using namespace dagbisect;

namespace {

// Test-side reference: plain minimax recursion, no memo, no pruning.
int brute_rec(const std::vector<std::uint64_t>& masks, std::uint64_t s) {
    if (std::popcount(s) <= 1) return 0;
    int best = 1 << 20;
    std::set<std::uint64_t> seen;
    for (std::uint64_t mask : masks) {
        std::uint64_t a = mask & s;
        if (a == 0 || a == s) continue;
        if (!seen.insert(std::min(a, s & ~a)).second) continue;
        best = std::min(best, 1 + std::max(brute_rec(masks, a), brute_rec(masks, s & ~a)));
    }
    return best;
}

int brute_optimal(const Dag& dag) {
    AncestorTable anc(dag);
    std::vector<VertexId> candidates;
    anc.ancestors(dag.bugged_or_throw()).for_each_set([&](std::size_t v) {
        candidates.push_back(static_cast<VertexId>(v));
    });
    std::vector<int> slot(dag.vertex_count(), -1);
    for (std::size_t i = 0; i < candidates.size(); ++i) slot[candidates[i]] = static_cast<int>(i);
    std::set<std::uint64_t> masks;
    for (VertexId v = 0; v < dag.vertex_count(); ++v) {
        std::uint64_t mask = 0;
        anc.ancestors(v).for_each_set([&](std::size_t u) {
            if (slot[u] >= 0) mask |= std::uint64_t{1} << slot[u];
        });
        masks.insert(mask);
    }
    std::vector<std::uint64_t> list(masks.begin(), masks.end());
    return brute_rec(list, ~std::uint64_t{0} >> (64 - candidates.size()));
}

int solve(const Dag& dag) {
    AncestorTable anc(dag);
    return optimal_queries(dag, anc);
}

}  // namespace

TEST_SUITE("optimal") {

TEST_CASE("named optima") {
    CHECK(solve(gen_path(5)) == 3);
    CHECK(solve(gen_path(4)) == 2);
    CHECK(solve(gen_octopus(6)) == 5);
    CHECK(solve(gen_claw()) == 3);
    CHECK(solve(gen_fibonacci(5)) == 4);             // 12 vertices
    CHECK(solve(gen_pathological(4).dag) == 4);      // 14 vertices, ceil(log2 14)
}

TEST_CASE("optimal strategies verify and match the value") {
    for (const Dag& d : {gen_path(4), gen_claw(), gen_fibonacci(4), gen_pathological(3).dag,
                         gen_random_binary(12, 77)}) {
        AncestorTable anc(d);
        StrategyTree tree = optimal_strategy(d, anc);
        CHECK(verify_tree(tree, d, anc));
        CHECK(tree.height() == optimal_queries(d, anc));
    }
    AncestorTable claw_anc(gen_claw());
    CHECK(optimal_strategy(gen_claw(), claw_anc).height() == 3);
    AncestorTable f4_anc(gen_fibonacci(4));
    CHECK(optimal_strategy(gen_fibonacci(4), f4_anc).height() == 3);
}

TEST_CASE("solver matches the memo-free reference") {
    std::vector<Dag> corpus;
    for (int n = 1; n <= 10; ++n) corpus.push_back(gen_path(n));
    for (int n = 2; n <= 7; ++n) corpus.push_back(gen_octopus(n));
    corpus.push_back(gen_claw());
    for (int n = 4; n <= 10; ++n) corpus.push_back(gen_random_binary(n, 21));
    for (const Dag& d : corpus) CHECK(solve(d) == brute_optimal(d));
}

TEST_CASE("sandwich and binary refinement on random graphs") {
    for (int t = 0; t < 30; ++t) {
        int n = 2 + t % 15;
        Dag d = gen_random_delta(n, 4, static_cast<std::uint64_t>(t));
        int opt = solve(d);
        CHECK(opt >= ceil_log2(static_cast<std::uint64_t>(n)));
        CHECK(opt <= n - 1);
    }
    for (int t = 0; t < 30; ++t) {
        int n = 2 + t % 15;
        Dag d = gen_random_binary(n, static_cast<std::uint64_t>(t));
        CHECK(solve(d) <= ceil_log_phi(n));
    }
}

TEST_CASE("caps abort cleanly") {
    Dag big = gen_path(30);
    AncestorTable anc(big);
    CHECK_THROWS_AS(optimal_queries(big, anc), SolverLimitError);  // default cap 24

    SolverOptions tight;
    tight.memo_limit = 4;
    Dag mid = gen_random_binary(16, 3);
    AncestorTable mid_anc(mid);
    CHECK_THROWS_AS(optimal_queries(mid, mid_anc, tight), SolverLimitError);
}

TEST_CASE("confined solver on tiny instances") {
    // one isolated non-innocent vertex: one query decides fault vs no fault
    CrspInstance lone;
    lone.dag = gen_path(1);
    lone.innocent = Bitset(1);
    lone.budget = 1;
    CHECK(crsp_optimal_queries(lone) == 1);

    // everything innocent: the no-fault outcome is the only one
    CrspInstance silent;
    silent.dag = gen_path(3);
    silent.innocent = Bitset(3);
    for (std::size_t v = 0; v < 3; ++v) silent.innocent.set(v);
    silent.budget = 0;
    CHECK(crsp_optimal_queries(silent) == 0);
    StrategyTree tree = crsp_optimal_strategy(silent);
    REQUIRE(tree.root() != nullptr);
    CHECK(tree.root()->no_fault);
}

TEST_CASE("confined optimum equals the plain optimum plus the no-fault outcome") {
    // a path with every vertex suspect: k candidates + no-fault = k+1 outcomes
    for (int n : {1, 2, 5, 9}) {
        CrspInstance inst;
        inst.dag = gen_path(n);
        inst.innocent = Bitset(static_cast<std::size_t>(n));
        inst.budget = n;
        CHECK(crsp_optimal_queries(inst) == ceil_log2(static_cast<std::uint64_t>(n) + 1));
    }
}

TEST_CASE("comb strategy") {
    CombDag c3 = gen_comb(gen_path(3));
    StrategyTree t3 = comb_strategy(c3);
    CHECK(t3.height() == 3);  // ceil(log2 6)
    AncestorTable anc3(c3.dag);
    CHECK(verify_tree(t3, c3.dag, anc3));
    CHECK(t3.height() == optimal_queries(c3.dag, anc3));

    CombDag c7 = gen_pathological(4);  // comb over octopus(7)
    CHECK(comb_strategy(c7).height() == 4);

    CombDag c1 = gen_comb(gen_path(1));
    CHECK(comb_strategy(c1).height() == 1);

    // a labelling that does not match its graph is rejected
    CombDag broken = gen_comb(gen_path(3));
    broken.labelling.base_order[0] = 1;
    broken.labelling.base_order[1] = 0;
    CHECK_THROWS_AS(comb_strategy(broken), ValidationError);
}

TEST_CASE("comb strategy is optimal across a mixed corpus") {
    for (int n : {2, 3, 5, 6, 9}) {
        CombDag comb = gen_comb(gen_random_binary(n, 13));
        StrategyTree tree = comb_strategy(comb);
        CHECK(tree.height() == ceil_log2(static_cast<std::uint64_t>(2 * n)));
        AncestorTable anc(comb.dag);
        CHECK(tree.height() == optimal_queries(comb.dag, anc));
    }
}

TEST_CASE("fibonacci strategies") {
    CHECK(fibonacci_strategy(FibKind::Tree, 2).height() == 1);
    CHECK(fibonacci_strategy(FibKind::Tree, 6).height() == 5);
    CHECK(fibonacci_strategy(FibKind::Prime, 3).height() == 3);

    for (int i = 1; i <= 10; ++i) {
        StrategyTree tree = fibonacci_strategy(FibKind::Tree, i);
        CHECK(tree.height() == i - 1);
        Dag d = gen_fibonacci(i);
        AncestorTable anc(d);
        CHECK(verify_tree(tree, d, anc));

        StrategyTree prime = fibonacci_strategy(FibKind::Prime, i);
        CHECK(prime.height() == i);
        Dag dp = gen_fibonacci_prime(i);
        AncestorTable anc_p(dp);
        CHECK(verify_tree(prime, dp, anc_p));
    }
    for (int i = 1; i <= 5; ++i) CHECK(solve(gen_fibonacci(i)) == i - 1);
}

TEST_CASE("even comb tweak keeps a near-logarithmic optimum") {
    // optimum within ceil(log2(2n)+1) for small even bases, checked exactly
    for (int n : {2, 4, 6, 8, 10}) {
        Dag base = gen_random_binary(n, 31);
        Dag tweaked = gen_comb_even_tweak(base);
        AncestorTable anc(tweaked);
        int opt = optimal_queries(tweaked, anc);
        CHECK(opt <= ceil_log2(static_cast<std::uint64_t>(2 * n)) + 1);
        CHECK(opt >= ceil_log2(static_cast<std::uint64_t>(2 * n)));
    }
    // and the greedy pays the extra query on an even octopus-like base
    for (int n : {4, 6, 8}) {
        Dag base = gen_octopus(n);
        AncestorTable base_anc(base);
        int base_wc = worst_case_queries(git_picker(), base, base_anc);
        Dag tweaked = gen_comb_even_tweak(base);
        AncestorTable anc(tweaked);
        CHECK(worst_case_queries(git_picker(), tweaked, anc) == base_wc + 1);
    }
}

TEST_CASE("transform round-trips preserve the optimum") {
    for (int t = 0; t < 10; ++t) {
        int n = 4 + t % 7;
        Dag base = gen_random_binary(n, static_cast<std::uint64_t>(800 + t));
        VertexId b = static_cast<VertexId>((t * 3) % n);
        Dag marked = Dag::from_arcs(n, base.arcs(), b);
        AncestorTable anc(marked);
        int direct = optimal_queries(marked, anc);
        CrspInstance inst = rsp_to_crsp(marked, b, direct);
        CHECK(crsp_optimal_queries(inst) == direct);
        Dag back = crsp_to_rsp(inst);
        AncestorTable anc_back(back);
        CHECK(optimal_queries(back, anc_back) == direct);
    }
}

}  // TEST_SUITE
