#include "doctest.h"

#include <functional>
#include <string>

#include "dagbisect/ancestry.hpp"
#include "dagbisect/bisect_state.hpp"
#include "dagbisect/export.hpp"
#include "dagbisect/generators.hpp"

using namespace dagbisect;

namespace {

// Independent transitive-closure oracle: per-pair path existence by DFS.
bool reaches(const Dag& dag, VertexId from, VertexId to) {
    if (from == to) return true;
    std::vector<bool> visited(dag.vertex_count(), false);
    std::function<bool(VertexId)> dfs = [&](VertexId v) {
        if (v == to) return true;
        visited[v] = true;
        for (VertexId c : dag.children(v))
            if (!visited[c] && dfs(c)) return true;
        return false;
    };
    return dfs(from);
}

int count_occurrences(const std::string& text, const std::string& needle) {
    int count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_SUITE("dag-core") {

TEST_CASE("parse: path with sink") {
    Dag d = parse_dag("dag 5 4\narc 0 1\narc 1 2\narc 2 3\narc 3 4\nsink 4\n");
    CHECK(d.vertex_count() == 5);
    CHECK(d.marked_bugged() == 4);
    CHECK(d.parents(1) == std::vector<VertexId>{0});
}

TEST_CASE("parse: comments and sink auto-detection") {
    Dag d = parse_dag("# a path\ndag 3 2\narc 0 1  # mid\narc 1 2\n");
    CHECK(d.marked_bugged() == 2);  // unique sink
    Dag two_sinks = parse_dag("dag 3 1\narc 0 1\n");
    CHECK_FALSE(two_sinks.marked_bugged().has_value());
}

TEST_CASE("parse: the 21-vertex example round-trips") {
    Dag fig4 = gen_fig4();
    CHECK(fig4.vertex_count() == 21);
    Dag reparsed = parse_dag(dag_to_text(fig4));
    CHECK(reparsed.arcs() == fig4.arcs());
    CHECK(reparsed.marked_bugged() == fig4.marked_bugged());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_dag("dag 4 1\narc 3 3\n"), ValidationError);          // self-loop
    CHECK_THROWS_AS(parse_dag("dag 2 2\narc 0 1\narc 1 0\n"), ValidationError);  // cycle
    CHECK_THROWS_AS(parse_dag("dag 2 1\narc 0 5\n"), ValidationError);          // dangling id
    CHECK_THROWS_AS(parse_dag("dag 2 2\narc 0 1\narc 0 1\n"), ValidationError);  // duplicate
    CHECK_THROWS_AS(parse_dag("dag 2 1\narc 0\n"), ValidationError);            // malformed
    CHECK_THROWS_AS(parse_dag("arc 0 1\n"), ValidationError);                   // no header
    CHECK_THROWS_AS(parse_dag("dag 2 2\narc 0 1\n"), ValidationError);          // count mismatch
    CHECK_THROWS_AS(parse_dag("dag 2 1\narc 0 1\nsink 9\n"), ValidationError);  // bad sink
}

TEST_CASE("ancestor counts on the named families") {
    Dag path = gen_path(5);
    AncestorTable path_anc(path);
    for (int i = 0; i < 5; ++i) CHECK(path_anc.count(i) == i + 1);

    // label 5 = id 4 has ancestors 1..5
    AncestorTable fig4_anc(gen_fig4());
    CHECK(fig4_anc.count(4) == 5);

    Dag octo = gen_octopus(6);
    AncestorTable octo_anc(octo);
    CHECK(octo_anc.count(5) == 6);
    for (int i = 0; i < 5; ++i) CHECK(octo_anc.count(i) == 1);

    for (int n : {1, 4, 7}) {
        CombDag comb = gen_comb(gen_random_binary(n, 3));
        AncestorTable base_anc(gen_random_binary(n, 3));
        AncestorTable comb_anc(comb.dag);
        for (int i = 0; i < n; ++i) {
            CHECK(comb_anc.count(comb.labelling.comb_vertices[i]) == 2 * (i + 1));
            CHECK(comb_anc.count(comb.labelling.base_order[i]) ==
                  base_anc.count(comb.labelling.base_order[i]));
        }
    }
}

TEST_CASE("ancestor table equals the transitive-closure oracle") {
    for (int n : {1, 5, 13, 29, 50}) {
        for (std::uint64_t seed : {1, 2}) {
            Dag d = gen_random_delta(n, 3, seed);
            AncestorTable anc(d);
            for (VertexId v = 0; v < n; ++v) {
                int count = 0;
                for (VertexId u = 0; u < n; ++u) {
                    bool expected = reaches(d, u, v);
                    CHECK(anc.is_ancestor(u, v) == expected);
                    count += expected;
                }
                CHECK(anc.count(v) == count);
            }
        }
    }
}

TEST_CASE("scores on the full 21-vertex state") {
    Dag fig4 = gen_fig4();
    AncestorTable anc(fig4);
    auto state = BisectState::prune_to_ancestors(fig4, anc, 20);
    CHECK(state.live_count() == 21);
    CHECK(state.score(4) == 5);    // label 5
    CHECK(state.score(17) == 8);   // label 18, the maximum
    CHECK(state.score(20) == 0);   // the sink
    CHECK_THROWS_AS((void)state.apply_verdict(17, Verdict::Clean).score(17), ValidationError);
}

TEST_CASE("score stays within [0, n/2] on random states") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Dag d = gen_random_binary(40, seed);
        AncestorTable anc(d);
        auto state = BisectState::prune_to_ancestors(d, anc, d.bugged_or_throw());
        state.candidates().for_each_set([&](std::size_t v) {
            int s = state.score(static_cast<VertexId>(v));
            CHECK(s >= 0);
            CHECK(2 * s <= state.live_count());
        });
    }
}

TEST_CASE("prune_to_ancestors") {
    Dag path = gen_path(5);
    AncestorTable anc(path);
    CHECK(BisectState::prune_to_ancestors(path, anc, 2).live_count() == 3);

    Dag fig4 = gen_fig4();
    AncestorTable fig4_anc(fig4);
    CHECK(BisectState::prune_to_ancestors(fig4, fig4_anc, 20).live_count() == 21);

    Dag octo = gen_octopus(6);
    AncestorTable octo_anc(octo);
    CHECK(BisectState::prune_to_ancestors(octo, octo_anc, 0).live_count() == 1);

    // pruning to the same vertex twice changes nothing
    auto once = BisectState::prune_to_ancestors(path, anc, 3);
    CHECK(once.candidates() == anc.ancestors(3));
}

TEST_CASE("apply_verdict") {
    Dag fig4 = gen_fig4();
    AncestorTable anc(fig4);
    auto state = BisectState::prune_to_ancestors(fig4, anc, 20);

    // label 18 clean removes its 8 ancestors
    CHECK(state.apply_verdict(17, Verdict::Clean).live_count() == 13);
    // the sink bugged removes nothing
    CHECK(state.apply_verdict(20, Verdict::Bugged).live_count() == 21);

    Dag path = gen_path(5);
    AncestorTable path_anc(path);
    auto mid = BisectState::prune_to_ancestors(path, path_anc, 4)
                   .apply_verdict(2, Verdict::Clean);
    CHECK(mid.live_count() == 2);
    CHECK(mid.is_live(3));
    CHECK(mid.is_live(4));

    // contradictory verdicts on the same vertex are a hard error
    auto bugged = state.apply_verdict(17, Verdict::Bugged);
    CHECK_THROWS_AS(bugged.apply_verdict(17, Verdict::Clean), InconsistentOracleError);
}

TEST_CASE("indegree") {
    CHECK(max_indegree(gen_octopus(6)) == 5);
    CHECK_FALSE(is_binary(gen_octopus(6)));
    CHECK(max_indegree(gen_path(1)) == 0);
    CHECK(is_binary(gen_fig4()));
}

TEST_CASE("dot export") {
    std::string plain = export_dot(gen_path(3));
    CHECK(count_occurrences(plain, "label=") == 3);
    CHECK(count_occurrences(plain, "->") == 2);
    CHECK(plain.find("style") == std::string::npos);  // no styling without options

    std::string fig4 = export_dot(gen_fig4());
    CHECK(count_occurrences(fig4, "->") == 23);

    Dag path = gen_path(3);
    AncestorTable anc(path);
    auto state = BisectState::prune_to_ancestors(path, anc, 2).apply_verdict(0, Verdict::Clean);
    DotOptions options;
    options.state = &state;
    options.highlights = {1};
    std::string styled = export_dot(path, options);
    CHECK(styled.find("style=dotted") != std::string::npos);
    CHECK(styled.find("style=filled") != std::string::npos);
}

}  // TEST_SUITE
