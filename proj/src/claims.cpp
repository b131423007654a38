#include "dagbisect/claims.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>

#include "dagbisect/exactmath.hpp"
#include "dagbisect/generators.hpp"
#include "dagbisect/optimal.hpp"
#include "dagbisect/reduction.hpp"
#include "dagbisect/session.hpp"
#include "dagbisect/strategy.hpp"

namespace dagbisect::claims {

namespace {

struct Check {
    std::vector<std::string> failures;
    int checked = 0;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok) failures.push_back(what);
    }

    ClaimResult result(const std::string& name, const std::string& summary) const {
        ClaimResult r;
        r.name = name;
        r.pass = failures.empty();
        if (r.pass) {
            r.details = summary + " (" + std::to_string(checked) + " checks)";
        } else {
            std::ostringstream out;
            out << failures.size() << " of " << checked << " checks failed: " << failures.front();
            if (failures.size() > 1) out << " (+" << failures.size() - 1 << " more)";
            r.details = out.str();
        }
        return r;
    }
};

int worst_case(const Picker& picker, const Dag& dag) {
    AncestorTable anc(dag);
    return worst_case_queries(picker, dag, anc);
}

int exact_optimum(const Dag& dag, int cap = 24) {
    AncestorTable anc(dag);
    SolverOptions opt;
    opt.cap = cap;
    return optimal_queries(dag, anc, opt);
}

std::string fmt(std::int64_t v) { return std::to_string(v); }

// ---------------------------------------------------------------- claim 1

ClaimResult claim_pathological() {
    Check c;
    for (int k = 3; k <= 6; ++k) {
        CombDag g = gen_pathological(k);
        int expected = (1 << (k - 1)) - 1;
        int wc = worst_case(git_picker(), g.dag);
        c.expect(wc == expected, "greedy worst case on pathological(k=" + fmt(k) + ") is " +
                                     fmt(wc) + ", expected " + fmt(expected));
    }
    for (int k = 3; k <= 4; ++k) {
        int opt = exact_optimum(gen_pathological(k).dag);
        c.expect(opt == k, "optimal on pathological(k=" + fmt(k) + ") is " + fmt(opt) +
                               ", expected " + fmt(k));
    }
    return c.result("pathological", "greedy needs 2^(k-1)-1 queries, optimum k, for k=3..6");
}

// ---------------------------------------------------------------- claim 2

ClaimResult claim_comb() {
    Check c;
    std::vector<std::pair<std::string, Dag>> bases;
    for (int n : {1, 3, 5, 7, 9, 11}) bases.emplace_back("path(" + fmt(n) + ")", gen_path(n));
    for (int n : {3, 5, 7, 9, 11}) bases.emplace_back("octopus(" + fmt(n) + ")", gen_octopus(n));
    for (int n : {3, 5, 7, 9, 11})
        for (std::uint64_t seed : {1, 2, 3})
            bases.emplace_back("random(" + fmt(n) + "," + fmt(seed) + ")",
                               gen_random_binary(n, seed));

    for (const auto& [label, base] : bases) {
        const int n = base.vertex_count();
        CombDag comb = gen_comb(base);
        StrategyTree tree = comb_strategy(comb);
        AncestorTable comb_anc(comb.dag);
        int lower = ceil_log2(static_cast<std::uint64_t>(2 * n));
        c.expect(tree.height() == lower, "comb strategy on " + label + " has height " +
                                             fmt(tree.height()) + ", expected " + fmt(lower));
        c.expect(verify_tree(tree, comb.dag, comb_anc),
                 "comb strategy tree on " + label + " is inconsistent");
        int base_wc = worst_case(git_picker(), base);
        int comb_wc = worst_case(git_picker(), comb.dag);
        c.expect(comb_wc == base_wc + 1, "greedy worst case on comb(" + label + ") is " +
                                             fmt(comb_wc) + ", expected " + fmt(base_wc + 1));
    }
    return c.result("comb", "comb strategy is optimal and the comb costs greedy one extra query");
}

// ---------------------------------------------------------------- claim 3

ClaimResult claim_figures() {
    Check c;
    Dag fig4 = gen_fig4();
    AncestorTable anc4(fig4);
    auto full4 = BisectState::prune_to_ancestors(fig4, anc4, fig4.bugged_or_throw());

    c.expect(worst_case(git_picker(), fig4) == 6, "git worst case on the 21-vertex example");
    c.expect(git_bisect_pick(full4) == 17, "git first pick should be the score-8 vertex (id 17)");
    c.expect(worst_case(golden_picker(), fig4) == 5, "golden worst case on the 21-vertex example");
    VertexId gpick = golden_bisect_pick(full4);
    c.expect(gpick == 6 || gpick == 13, "golden first pick must be one of the score-7 boundary "
                                        "vertices (ids 6 or 13), got " + fmt(gpick));
    c.expect(full4.score(gpick) == 7, "golden first pick must have score 7");
    return c.result("figures", "worked 21-vertex example: git 6 queries from vertex id 17, "
                               "golden 5 from a score-7 boundary vertex");
}

// ---------------------------------------------------------------- claim 4

ClaimResult claim_table1() {
    Check c;
    static const int F[14] = {0, 0, 1, 2, 3, 3, 4, 4, 4, 5, 5, 5, 5, 6};  // F[n] for n=1..13
    for (int n = 1; n <= 13; ++n) {
        for (int t = 0; t < 200; ++t) {
            Dag d = gen_random_binary(n, static_cast<std::uint64_t>(n) * 1000 + t);
            AncestorTable anc(d);
            int git_wc = worst_case_queries(git_picker(), d, anc);
            int golden_wc = worst_case_queries(golden_picker(), d, anc);
            c.expect(git_wc <= F[n], "git worst case " + fmt(git_wc) + " exceeds F(" + fmt(n) +
                                         ")=" + fmt(F[n]) + " at seed " + fmt(n * 1000 + t));
            c.expect(golden_wc <= F[n], "golden worst case " + fmt(golden_wc) + " exceeds F(" +
                                            fmt(n) + ")=" + fmt(F[n]) + " at seed " +
                                            fmt(n * 1000 + t));
        }
    }
    return c.result("table1", "both strategies stay within the small-size table F(n), n <= 13, "
                              "200 random binary graphs per size");
}

// ---------------------------------------------------------------- claim 5

ClaimResult claim_scale_bounds() {
    Check c;
    for (int t = 0; t < 500; ++t) {
        int n = 2 + (t * 37) % 299;  // spreads over 2..300
        Dag d = gen_random_binary(n, static_cast<std::uint64_t>(t));
        AncestorTable anc(d);
        int git_wc = worst_case_queries(git_picker(), d, anc);
        int golden_wc = worst_case_queries(golden_picker(), d, anc);
        c.expect(within_ratio_log_bound(git_wc, n, 2),
                 "git bound violated at n=" + fmt(n) + " seed=" + fmt(t) + " wc=" + fmt(git_wc));
        c.expect(within_golden_log_bound(golden_wc, n),
                 "golden bound violated at n=" + fmt(n) + " seed=" + fmt(t) + " wc=" +
                     fmt(golden_wc));
    }
    for (int delta : {3, 4}) {
        for (int t = 0; t < 200; ++t) {
            int n = 2 + (t * 41) % 299;
            Dag d = gen_random_delta(n, delta, static_cast<std::uint64_t>(10000 * delta + t));
            int wc = worst_case(git_picker(), d);
            c.expect(within_ratio_log_bound(wc, n, delta),
                     "git bound violated on delta=" + fmt(delta) + " n=" + fmt(n) + " seed=" +
                         fmt(t) + " wc=" + fmt(wc));
        }
    }
    return c.result("scale-bounds", "git <= log2(n)/log2(3/2) and golden <= log_phi(n)+1 on 500 "
                                    "binary graphs up to n=300; delta-ary git bound on 400 more");
}

// ---------------------------------------------------------------- claim 6

ClaimResult claim_jk() {
    Check c;
    for (int k = 1; k <= 6; ++k) {
        JkDag jk = gen_jk(k);
        int expected = k + ceil_log2(static_cast<std::uint64_t>(k + 1)) + 2;
        int wc = worst_case(git_picker(), jk.dag);
        c.expect(wc == expected, "greedy worst case on J_" + fmt(k) + " is " + fmt(wc) +
                                     ", expected " + fmt(expected));
        int comb_wc = worst_case(git_picker(), gen_comb(jk.dag).dag);
        c.expect(comb_wc == expected + 1, "greedy worst case on comb(J_" + fmt(k) + ") is " +
                                              fmt(comb_wc) + ", expected " + fmt(expected + 1));
        c.expect(jk.dag.vertex_count() % 2 == 1, "J_" + fmt(k) + " must have an odd size");
        c.expect(is_binary(jk.dag), "J_" + fmt(k) + " must be binary");

        for (std::size_t d = 1; d < jk.info.ell.size(); ++d)
            c.expect(jk.info.ell[d] > jk.info.ell[d - 1],
                     "attachment lengths must strictly increase in J_" + fmt(k));

        // Stagewise invariants: the three backbone scores agree at (n_d-1)/3
        // and each z'_i keeps score 3*l_i.
        for (int d = 0; d <= k; ++d) {
            JkDag stage = gen_jk_stage(k, 2, d, d == k);
            AncestorTable anc(stage.dag);
            int nd = stage.dag.vertex_count();
            int third = (nd - 1) / 3;
            c.expect((nd - 1) % 3 == 0, "stage size must be 1 mod 3");
            for (const auto& arm : stage.info.arms)
                c.expect(anc.count(arm[k - 1]) == third,
                         "arm tip ancestor count at stage " + fmt(d) + " of J_" + fmt(k));
            c.expect(nd - anc.count(stage.info.c) == third,
                     "central non-ancestor count at stage " + fmt(d) + " of J_" + fmt(k));
            for (std::size_t i = 0; i < stage.info.z_prime.size(); ++i)
                c.expect(anc.count(stage.info.z_prime[i]) == 3 * stage.info.ell[i],
                         "z' ancestor count at stage " + fmt(d) + " of J_" + fmt(k));
        }
    }
    return c.result("jk", "greedy needs k + ceil(log2(k+1)) + 2 queries on J_k (+1 with a comb) "
                          "and the stagewise score structure holds, k=1..6");
}

// ---------------------------------------------------------------- claim 7

ClaimResult claim_fibonacci() {
    Check c;
    for (int i = 1; i <= 6; ++i) {
        int opt = exact_optimum(gen_fibonacci(i));
        c.expect(opt == i - 1, "optimal on fibonacci tree " + fmt(i) + " is " + fmt(opt) +
                                   ", expected " + fmt(i - 1));
    }
    for (int i = 1; i <= 12; ++i) {
        Dag d = gen_fibonacci(i);
        AncestorTable anc(d);
        StrategyTree tree = fibonacci_strategy(FibKind::Tree, i);
        c.expect(tree.height() == i - 1, "fibonacci strategy height at i=" + fmt(i));
        c.expect(verify_tree(tree, d, anc), "fibonacci strategy tree invalid at i=" + fmt(i));
    }
    for (int i = 4; i <= 12; ++i) {
        c.expect(ceil_log_phi(fib_tree_size(i)) - 2 == i - 1,
                 "ceil(log_phi |F_i|) - 2 != i - 1 at i=" + fmt(i));
    }
    return c.result("fibonacci", "optimum i-1 (exhaustive to i=6), constructive strategy to i=12, "
                                 "and the log_phi sharpness identity");
}

// ---------------------------------------------------------------- claim 8

ClaimResult claim_golden_two_step() {
    Check c;
    for (int t = 0; t < 500; ++t) {
        int n = 14 + (t * 23) % 287;  // 14..300
        Dag d = gen_random_binary(n, static_cast<std::uint64_t>(40000 + t));
        AncestorTable anc(d);
        auto state = BisectState::prune_to_ancestors(d, anc, d.bugged_or_throw());
        c.expect(golden_two_step_reduction_holds(state),
                 "two-step reduction violated at n=" + fmt(n) + " seed=" + fmt(40000 + t));
    }

    // The published 13-vertex exception: worst-case live sizes 13 -> 9 -> 5,
    // which beat both n/phi and n/phi^2.
    Dag fig9 = gen_fig9();
    AncestorTable anc9(fig9);
    auto s0 = BisectState::prune_to_ancestors(fig9, anc9, fig9.bugged_or_throw());
    c.expect(s0.live_count() == 13, "13-vertex example size");
    c.expect(!golden_two_step_reduction_holds(s0), "the 13-vertex example must violate the lemma");

    VertexId q1 = golden_bisect_pick(s0);
    BisectState b1 = s0.apply_verdict(q1, Verdict::Bugged);
    BisectState c1 = s0.apply_verdict(q1, Verdict::Clean);
    BisectState s1 = b1.live_count() >= c1.live_count() ? b1 : c1;
    c.expect(s1.live_count() == 9, "first worst-case live size should be 9, got " +
                                       fmt(s1.live_count()));
    VertexId q2 = golden_bisect_pick(s1);
    BisectState b2 = s1.apply_verdict(q2, Verdict::Bugged);
    BisectState c2 = s1.apply_verdict(q2, Verdict::Clean);
    int s2 = std::max(b2.live_count(), c2.live_count());
    c.expect(s2 == 5, "second worst-case live size should be 5, got " + fmt(s2));
    c.expect(!le_n_over_phi(s1.live_count(), 13), "9 must exceed 13/phi");
    c.expect(!le_n_over_phi2(s2, 13), "5 must exceed 13/phi^2");
    return c.result("golden-two-step", "no violation on 500 binary graphs with 14 <= n <= 300; "
                                       "the 13-vertex exception shows live sizes 13 -> 9 -> 5");
}

// ---------------------------------------------------------------- claim 9

namespace bsat_search {

// Canonical clause pools over a fixed variable count: all 2-literal clauses
// first, then all 3-literal ones, lexicographic by variable tuple and sign.
std::vector<std::vector<int>> clause_pool(int vars) {
    std::vector<std::vector<int>> pool;
    for (int a = 1; a <= vars; ++a)
        for (int b = a + 1; b <= vars; ++b)
            for (int sa : {+1, -1})
                for (int sb : {+1, -1}) pool.push_back({sa * a, sb * b});
    for (int a = 1; a <= vars; ++a)
        for (int b = a + 1; b <= vars; ++b)
            for (int cv = b + 1; cv <= vars; ++cv)
                for (int sa : {+1, -1})
                    for (int sb : {+1, -1})
                        for (int sc : {+1, -1}) pool.push_back({sa * a, sb * b, sc * cv});
    return pool;
}

bool within_occurrence_limits(std::vector<int>& var_occ, std::vector<int>& lit_occ,
                              const std::vector<int>& clause, int vars, bool apply) {
    for (int lit : clause) {
        int v = std::abs(lit) - 1;
        int li = 2 * v + (lit > 0 ? 0 : 1);
        if (var_occ[v] + 1 > 3 || lit_occ[li] + 1 > 2) {
            (void)vars;
            return false;
        }
    }
    if (apply)
        for (int lit : clause) {
            var_occ[std::abs(lit) - 1]++;
            lit_occ[2 * (std::abs(lit) - 1) + (lit > 0 ? 0 : 1)]++;
        }
    return true;
}

// First (in deterministic order) unsatisfiable preprocessed bounded formula
// over `vars` variables and at most `max_clauses` clauses.
std::optional<BsatFormula> find_unsat(int vars, int max_clauses) {
    auto pool = clause_pool(vars);
    std::vector<int> var_occ(vars, 0), lit_occ(2 * vars, 0);
    std::vector<int> chosen;

    std::function<std::optional<BsatFormula>(int, int)> rec =
        [&](int from, int remaining) -> std::optional<BsatFormula> {
        if (remaining == 0) {
            BsatFormula f;
            f.variable_count = vars;
            for (int idx : chosen) f.clauses.push_back(pool[idx]);
            if (!brute_force_sat(f)) return f;
            return std::nullopt;
        }
        for (int i = from; i < static_cast<int>(pool.size()); ++i) {
            if (!within_occurrence_limits(var_occ, lit_occ, pool[i], vars, true)) continue;
            chosen.push_back(i);
            if (auto found = rec(i + 1, remaining - 1)) return found;
            chosen.pop_back();
            for (int lit : pool[i]) {
                var_occ[std::abs(lit) - 1]--;
                lit_occ[2 * (std::abs(lit) - 1) + (lit > 0 ? 0 : 1)]--;
            }
        }
        return std::nullopt;
    };

    for (int m = 1; m <= max_clauses; ++m) {
        if (auto found = rec(0, m)) return found;
    }
    return std::nullopt;
}

}  // namespace bsat_search

ClaimResult claim_reduction() {
    Check c;

    // The worked formula (x1 v ~x2) & (~x1 v ~x2 v ~x3).
    BsatFormula example = parse_bsat("p cnf 3 2\n1 -2 0\n-1 -2 -3 0\n");
    ReductionResult red = reduce_bsat_to_crsp(example);
    c.expect(red.instance.dag.vertex_count() == 20, "example reduction has 5n+m+3 = 20 vertices");
    c.expect(static_cast<int>(red.instance.innocent.count()) == 12,
             "example reduction has 12 innocent vertices");
    c.expect(red.instance.budget == 6, "example reduction budget is n+3 = 6");
    c.expect(is_binary(red.instance.dag), "reduction output must be binary");
    int opt = crsp_optimal_queries(red.instance);
    c.expect(opt == 6, "confined optimum of the example reduction is " + fmt(opt) +
                           ", expected 6");

    // All preprocessed bounded formulas over 3 variables with at most 4
    // clauses: satisfiable iff the confined optimum is within n+3.
    auto pool = bsat_search::clause_pool(3);
    int sat_count = 0, unsat_count = 0;
    std::vector<int> stack;
    std::function<void(int, int)> enumerate = [&](int from, int remaining) {
        BsatFormula f;
        f.variable_count = 3;
        for (int idx : stack) f.clauses.push_back(pool[idx]);
        bool bounded = true;
        {
            std::vector<int> var_occ(3, 0), lit_occ(6, 0);
            for (auto& clause : f.clauses)
                if (!bsat_search::within_occurrence_limits(var_occ, lit_occ, clause, 3, true)) {
                    bounded = false;
                    break;
                }
        }
        if (!bounded) return;  // supersets stay out of bounds
        int confined = crsp_optimal_queries(reduce_bsat_to_crsp(f).instance);
        if (brute_force_sat(f)) {
            ++sat_count;
            c.expect(confined <= 6, "satisfiable 3-var formula needs " + fmt(confined) +
                                        " > n+3 queries: " + bsat_to_dimacs(f));
        } else {
            ++unsat_count;
            c.expect(confined >= 7, "unsatisfiable 3-var formula solved in " + fmt(confined) +
                                        " <= n+3 queries: " + bsat_to_dimacs(f));
        }
        if (remaining == 0) return;
        for (int i = from; i < static_cast<int>(pool.size()); ++i) {
            stack.push_back(i);
            enumerate(i + 1, remaining - 1);
            stack.pop_back();
        }
    };
    enumerate(0, 4);

    // A brute-force-discovered unsatisfiable instance (none exists over 3
    // variables; the search finds one at 4 variables, 5 clauses).
    auto unsat = bsat_search::find_unsat(4, 5);
    c.expect(unsat.has_value(), "expected an unsatisfiable bounded formula over 4 variables");
    if (unsat) {
        c.expect(!brute_force_sat(*unsat), "discovered instance must be unsatisfiable");
        c.expect(literal_occurrences_within(*unsat, 2), "discovered instance must be preprocessed");
        int u_opt = crsp_optimal_queries(reduce_bsat_to_crsp(*unsat).instance);
        c.expect(u_opt >= unsat->variable_count + 4,
                 "unsatisfiable instance solved in " + fmt(u_opt) + " < n+4 queries: " +
                     bsat_to_dimacs(*unsat));
    }
    return c.result("reduction",
                    "example formula reduces to confined optimum 6; " + fmt(sat_count) +
                        " satisfiable enumerated formulas stay within n+3 (" + fmt(unsat_count) +
                        " unsatisfiable beyond); discovered unsat instance needs n+4");
}

// ---------------------------------------------------------------- claim 10

ClaimResult claim_transform_equivalence() {
    Check c;
    for (int t = 0; t < 50; ++t) {
        int n = 4 + t % 9;
        Dag base = gen_random_binary(n, static_cast<std::uint64_t>(5000 + t));
        VertexId b = static_cast<VertexId>(t % n);
        Dag marked = Dag::from_arcs(n, base.arcs(), b);
        int rsp_opt = exact_optimum(marked);
        CrspInstance inst = rsp_to_crsp(marked, b, rsp_opt);
        int crsp_opt = crsp_optimal_queries(inst);
        c.expect(crsp_opt == rsp_opt, "rsp->crsp changed the optimum at seed " + fmt(5000 + t) +
                                          ": " + fmt(rsp_opt) + " vs " + fmt(crsp_opt));
    }
    for (int t = 0; t < 50; ++t) {
        int n = 4 + t % 9;
        Dag base = gen_random_binary(n, static_cast<std::uint64_t>(6000 + t));
        AncestorTable anc(base);
        // Non-innocent sets must be ancestor-closed for the reverse transform
        // to be exact; take a union of ancestor cones.
        Bitset non_innocent(static_cast<std::size_t>(n));
        non_innocent |= anc.ancestors(static_cast<VertexId>(t % n));
        non_innocent |= anc.ancestors(static_cast<VertexId>((3 * t + 1) % n));
        CrspInstance inst;
        inst.dag = base;
        inst.innocent = Bitset(static_cast<std::size_t>(n));
        for (VertexId v = 0; v < n; ++v)
            if (!non_innocent.test(static_cast<std::size_t>(v)))
                inst.innocent.set(static_cast<std::size_t>(v));
        inst.budget = n;
        int crsp_opt = crsp_optimal_queries(inst);
        int rsp_opt = exact_optimum(crsp_to_rsp(inst));
        c.expect(rsp_opt == crsp_opt, "crsp->rsp changed the optimum at seed " + fmt(6000 + t) +
                                          ": " + fmt(crsp_opt) + " vs " + fmt(rsp_opt));
    }
    return c.result("transform-equivalence",
                    "the two problem transforms preserve the exact optimum on 100 instances");
}

// ---------------------------------------------------------------- claim 11

namespace {

// Memo-free minimax reference: plain recursion over candidate subsets,
// no bound pruning, no cache.
int bruteforce_optimal(const std::vector<std::uint64_t>& query_masks, std::uint64_t s) {
    if (std::popcount(s) <= 1) return 0;
    int best = 1 << 20;
    std::set<std::uint64_t> seen;
    for (std::uint64_t mask : query_masks) {
        std::uint64_t a = mask & s;
        if (a == 0 || a == s) continue;
        if (!seen.insert(std::min(a, s & ~a)).second) continue;
        int value = 1 + std::max(bruteforce_optimal(query_masks, a),
                                 bruteforce_optimal(query_masks, s & ~a));
        best = std::min(best, value);
    }
    return best;
}

int bruteforce_optimal(const Dag& dag) {
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
    std::vector<std::uint64_t> query_masks(masks.begin(), masks.end());
    return bruteforce_optimal(query_masks,
                              candidates.empty()
                                  ? 0
                                  : ~std::uint64_t{0} >> (64 - candidates.size()));
}

}  // namespace

ClaimResult claim_solver_oracle() {
    Check c;
    std::vector<std::pair<std::string, Dag>> corpus;
    for (int n = 1; n <= 10; ++n) corpus.emplace_back("path(" + fmt(n) + ")", gen_path(n));
    for (int n = 2; n <= 8; ++n) corpus.emplace_back("octopus(" + fmt(n) + ")", gen_octopus(n));
    corpus.emplace_back("claw", gen_claw());
    for (int i = 1; i <= 4; ++i)
        corpus.emplace_back("fibonacci(" + fmt(i) + ")", gen_fibonacci(i));
    for (int n = 4; n <= 10; ++n)
        for (std::uint64_t seed : {1, 2})
            corpus.emplace_back("random(" + fmt(n) + "," + fmt(seed) + ")",
                                gen_random_binary(n, seed));
    for (int n : {5, 8})
        corpus.emplace_back("random3(" + fmt(n) + ")", gen_random_delta(n, 3, 9));

    for (const auto& entry : corpus) {
        const std::string& label = entry.first;
        const Dag& dag = entry.second;
        int opt = exact_optimum(dag);
        int brute = bruteforce_optimal(dag);
        c.expect(opt == brute, "solver disagrees with brute force on " + label + ": " + fmt(opt) +
                                   " vs " + fmt(brute));

        AncestorTable anc(dag);
        auto initial = BisectState::prune_to_ancestors(dag, anc, dag.bugged_or_throw());
        for (const auto& strat : {std::pair<std::string, Picker>{"git", git_picker()},
                                  std::pair<std::string, Picker>{"golden", golden_picker()}}) {
            const Picker& picker = strat.second;
            int height = build_strategy_tree(picker, initial).height();
            int max_session = 0;
            initial.candidates().for_each_set([&](std::size_t faulty) {
                max_session = std::max(
                    max_session,
                    run_session(picker, dag, anc, static_cast<VertexId>(faulty)).queries);
            });
            c.expect(height == max_session, strat.first + " tree height differs from the session "
                                                          "maximum on " + label);
        }
    }
    return c.result("solver-oracle", "memoized solver matches a memo-free reference and tree "
                                     "heights match session maxima on the whole small corpus");
}

using ClaimFn = ClaimResult (*)();

const std::vector<std::pair<std::string, ClaimFn>>& registry() {
    static const std::vector<std::pair<std::string, ClaimFn>> reg = {
        {"pathological", claim_pathological},
        {"comb", claim_comb},
        {"figures", claim_figures},
        {"table1", claim_table1},
        {"scale-bounds", claim_scale_bounds},
        {"jk", claim_jk},
        {"fibonacci", claim_fibonacci},
        {"golden-two-step", claim_golden_two_step},
        {"reduction", claim_reduction},
        {"transform-equivalence", claim_transform_equivalence},
        {"solver-oracle", claim_solver_oracle},
    };
    return reg;
}

}  // namespace

const std::vector<std::string>& claim_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

ClaimResult run_claim(const std::string& name) {
    for (auto& [claim_name, fn] : registry())
        if (claim_name == name) return fn();
    std::string known;
    for (auto& [claim_name, fn] : registry()) known += " " + claim_name;
    throw ValidationError("unknown claim '" + name + "'; known claims:" + known);
}

std::vector<ClaimResult> run_all() {
    std::vector<ClaimResult> out;
    for (auto& [name, fn] : registry()) out.push_back(fn());
    return out;
}

}  // namespace dagbisect::claims
