#pragma once

#include <cstdint>
#include <vector>

#include "dagbisect/dag.hpp"

namespace dagbisect {

// Deterministic pseudo-random sequence for the test corpora. splitmix64 with
// modulo-bounded draws, fully reproducible across platforms.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

/// Directed path 0 -> 1 -> ... -> n-1, sink marked.
Dag gen_path(int n);

/// One sink (id n-1) with all other vertices as its parents.
Dag gen_octopus(int n);

/// Two parents -> middle -> sink (4 vertices).
Dag gen_claw();

// Bookkeeping for a comb addition over a base graph of n vertices. Base ids
// are preserved; the parallel chain u_1..u_n takes ids n..2n-1, attached by
// arcs base_order[i] -> n+i. The new marked bugged vertex is u_n = 2n-1.
struct CombLabelling {
    std::vector<VertexId> base_order;     // v_1..v_n (topological)
    std::vector<VertexId> comb_vertices;  // u_1..u_n
};

struct CombDag {
    Dag dag;
    CombLabelling labelling;
};

/// Comb addition. Uses `order` if given (must be topological), the id order
/// when that is topological, and the deterministic smallest-id Kahn order
/// otherwise.
CombDag gen_comb(const Dag& base, const std::vector<VertexId>* order = nullptr);

/// Comb addition for even n with the arc v_{n/2} -> u_{n/2} removed.
Dag gen_comb_even_tweak(const Dag& base, const std::vector<VertexId>* order = nullptr);

/// comb(octopus(2^(k-1) - 1)) — the family where the greedy strategy needs
/// exponentially more queries than the optimum. Requires k >= 3.
CombDag gen_pathological(int k);

// The adversarial family for the greedy bound on Δ-ary graphs. The backbone
// merges Δ+1 directed paths at a central vertex c; stage d attaches new
// ℓ_d-vertex paths at distance d. Ids: arm 1 (x_1..x_k), arm 2, ..., arm Δ,
// then c, then z_1..z_k, then the stage-d paths in increasing d (arm paths
// first, z-path last, heads before tails).
struct JkInfo {
    int k = 0;
    int delta = 2;
    std::vector<std::vector<VertexId>> arms;  // arms[a] = that arm's vertices, source first
    VertexId c = -1;
    std::vector<VertexId> z;        // z_1..z_k
    std::vector<VertexId> z_prime;  // z'_1..z'_d for the stages built
    std::vector<int> ell;           // ℓ_1..ℓ_d
    std::vector<int> stage_sizes;   // n_0..n_d
    bool parity_bump = false;       // ℓ_k was raised by one to make the size odd
};

struct JkDag {
    Dag dag;
    JkInfo info;
};

/// Binary family member J_k (Δ = 2). With `parity_fix`, ℓ_k is bumped when
/// the total vertex count would be even.
JkDag gen_jk(int k, bool parity_fix = true);

/// Δ-ary generalization; ℓ_d = floor(n_{d-1} / (Δ(Δ+1))) + 1.
JkDag gen_jk_delta(int k, int delta, bool parity_fix = true);

/// Construction prefix J_k^d (stages 1..d applied), never parity-fixed for
/// d < k. Used to check the stagewise score invariants.
JkDag gen_jk_stage(int k, int delta, int d, bool parity_fix_last = false);

/// Number of vertices of the i-th Fibonacci tree: fib(i+2) - 1.
std::int64_t fib_tree_size(int i);

/// Fibonacci tree F_i: F_1 is a vertex, F_2 an arc, and F_{i+1} a sink whose
/// two parents are the sinks of an F_i and an F_{i-1}. Sub-blocks are laid
/// out F_{i-1} first, then F_{i-2}, then the sink, so each subtree's sink is
/// the last id of its block.
Dag gen_fibonacci(int i);

/// F'_i: F_i plus one extra sink below F_i's sink.
Dag gen_fibonacci_prime(int i);

/// The 21-vertex worked example (ids are the published labels minus one;
/// sink id 20).
Dag gen_fig4();

/// The 13-vertex two-arm example where the golden two-step guarantee fails
/// (ids are the published labels minus one; sink id 12).
Dag gen_fig9();

/// Random single-sink DAG with max indegree ≤ delta. Walking ids from high
/// to low, each non-sink vertex gets one arc to a uniformly chosen later
/// vertex with spare indegree (so the sink n-1 is reachable from everywhere),
/// then 2n extra arcs are attempted uniformly subject to the indegree cap.
Dag gen_random_delta(int n, int delta, std::uint64_t seed);

Dag gen_random_binary(int n, std::uint64_t seed);

}  // namespace dagbisect
