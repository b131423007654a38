#include "dagbisect/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace dagbisect {

Dag gen_path(int n) {
    if (n < 1) throw ValidationError("gen_path: n must be >= 1");
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (VertexId v = 0; v + 1 < n; ++v) arcs.emplace_back(v, v + 1);
    return Dag::from_arcs(n, std::move(arcs), n - 1);
}

Dag gen_octopus(int n) {
    if (n < 1) throw ValidationError("gen_octopus: n must be >= 1");
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (VertexId v = 0; v + 1 < n; ++v) arcs.emplace_back(v, n - 1);
    return Dag::from_arcs(n, std::move(arcs), n - 1);
}

Dag gen_claw() {
    return Dag::from_arcs(4, {{0, 2}, {1, 2}, {2, 3}}, 3);
}

namespace {

bool id_order_is_topological(const Dag& dag) {
    for (auto [u, v] : dag.arcs())
        if (u > v) return false;
    return true;
}

std::vector<VertexId> comb_order(const Dag& base, const std::vector<VertexId>* order) {
    const int n = base.vertex_count();
    if (order != nullptr) {
        if (static_cast<int>(order->size()) != n)
            throw ValidationError("comb order must list every vertex once");
        std::vector<int> pos(n, -1);
        for (int i = 0; i < n; ++i) {
            VertexId v = (*order)[i];
            if (!base.has_vertex(v) || pos[v] != -1)
                throw ValidationError("comb order must be a permutation of the vertices");
            pos[v] = i;
        }
        for (auto [u, v] : base.arcs())
            if (pos[u] > pos[v]) throw ValidationError("comb order is not topological");
        return *order;
    }
    if (id_order_is_topological(base)) {
        std::vector<VertexId> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = i;
        return ids;
    }
    return base.topo_order();
}

}  // namespace

CombDag gen_comb(const Dag& base, const std::vector<VertexId>* order) {
    const int n = base.vertex_count();
    CombLabelling lab;
    lab.base_order = comb_order(base, order);
    lab.comb_vertices.resize(n);
    auto arcs = base.arcs();
    for (int i = 0; i < n; ++i) {
        VertexId u = n + i;
        lab.comb_vertices[i] = u;
        arcs.emplace_back(lab.base_order[i], u);
        if (i + 1 < n) arcs.emplace_back(u, u + 1);
    }
    return {Dag::from_arcs(2 * n, std::move(arcs), 2 * n - 1), std::move(lab)};
}

Dag gen_comb_even_tweak(const Dag& base, const std::vector<VertexId>* order) {
    const int n = base.vertex_count();
    if (n % 2 != 0) throw ValidationError("comb even tweak requires an even base size");
    CombDag comb = gen_comb(base, order);
    VertexId v_half = comb.labelling.base_order[n / 2 - 1];
    VertexId u_half = comb.labelling.comb_vertices[n / 2 - 1];
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (auto arc : comb.dag.arcs())
        if (arc != std::make_pair(v_half, u_half)) arcs.push_back(arc);
    return Dag::from_arcs(2 * n, std::move(arcs), 2 * n - 1);
}

CombDag gen_pathological(int k) {
    if (k < 3) throw ValidationError("gen_pathological: k must be >= 3");
    return gen_comb(gen_octopus((1 << (k - 1)) - 1));
}

JkDag gen_jk_stage(int k, int delta, int upto_d, bool parity_fix_last) {
    if (k < 1) throw ValidationError("gen_jk: k must be >= 1");
    if (delta < 2) throw ValidationError("gen_jk: delta must be >= 2");
    if (upto_d < 0 || upto_d > k) throw ValidationError("gen_jk: stage out of range");

    JkInfo info;
    info.k = k;
    info.delta = delta;

    std::vector<std::pair<VertexId, VertexId>> arcs;
    int next_id = 0;

    info.arms.resize(delta);
    for (int a = 0; a < delta; ++a) {
        for (int i = 0; i < k; ++i) info.arms[a].push_back(next_id++);
        for (int i = 0; i + 1 < k; ++i) arcs.emplace_back(info.arms[a][i], info.arms[a][i + 1]);
    }
    info.c = next_id++;
    for (int a = 0; a < delta; ++a) arcs.emplace_back(info.arms[a][k - 1], info.c);
    for (int i = 0; i < k; ++i) info.z.push_back(next_id++);
    arcs.emplace_back(info.c, info.z[0]);
    for (int i = 0; i + 1 < k; ++i) arcs.emplace_back(info.z[i], info.z[i + 1]);

    info.stage_sizes.push_back(next_id);  // n_0 = (delta+1)k + 1

    for (int d = 1; d <= upto_d; ++d) {
        int prev = info.stage_sizes.back();
        int ell = delta == 2 ? prev / 6 + 1 : prev / (delta * (delta + 1)) + 1;
        if (d == k && parity_fix_last) {
            // Raise ℓ_k once if the final size would be even.
            if ((prev + (delta + 1) * ell) % 2 == 0) {
                ++ell;
                info.parity_bump = true;
            }
        }
        info.ell.push_back(ell);

        VertexId z_path_head = -1;
        std::vector<VertexId> arm_tails;
        for (int a = 0; a <= delta; ++a) {
            // Arms first, then the z-side path.
            VertexId head = next_id;
            for (int i = 0; i < ell; ++i) ++next_id;
            VertexId tail = next_id - 1;
            for (VertexId v = head; v < tail; ++v) arcs.emplace_back(v, v + 1);
            if (a < delta) {
                arcs.emplace_back(tail, info.arms[a][k - d]);
                arm_tails.push_back(tail);
            } else {
                z_path_head = head;
                arcs.emplace_back(tail, info.z[d - 1]);
                info.z_prime.push_back(tail);
            }
        }
        for (VertexId t : arm_tails) arcs.emplace_back(t, z_path_head);
        info.stage_sizes.push_back(next_id);
    }

    return {Dag::from_arcs(next_id, std::move(arcs), info.z[k - 1]), std::move(info)};
}

JkDag gen_jk(int k, bool parity_fix) { return gen_jk_stage(k, 2, k, parity_fix); }

JkDag gen_jk_delta(int k, int delta, bool parity_fix) {
    return gen_jk_stage(k, delta, k, parity_fix);
}

std::int64_t fib_tree_size(int i) {
    if (i < 1) throw ValidationError("fibonacci tree index must be >= 1");
    // fib(i+2) - 1 with fib(1) = fib(2) = 1
    std::int64_t a = 1, b = 1;
    for (int t = 3; t <= i + 2; ++t) {
        std::int64_t c = a + b;
        a = b;
        b = c;
    }
    return b - 1;
}

namespace {

void fib_arcs(int i, int offset, std::vector<std::pair<VertexId, VertexId>>& arcs) {
    if (i <= 1) return;
    if (i == 2) {
        arcs.emplace_back(offset, offset + 1);
        return;
    }
    int left = static_cast<int>(fib_tree_size(i - 1));
    int right = static_cast<int>(fib_tree_size(i - 2));
    fib_arcs(i - 1, offset, arcs);
    fib_arcs(i - 2, offset + left, arcs);
    VertexId sink = offset + left + right;  // == offset + |F_i| - 1
    arcs.emplace_back(offset + left - 1, sink);
    arcs.emplace_back(offset + left + right - 1, sink);
}

}  // namespace

Dag gen_fibonacci(int i) {
    int n = static_cast<int>(fib_tree_size(i));
    std::vector<std::pair<VertexId, VertexId>> arcs;
    fib_arcs(i, 0, arcs);
    return Dag::from_arcs(n, std::move(arcs), n - 1);
}

Dag gen_fibonacci_prime(int i) {
    int n = static_cast<int>(fib_tree_size(i));
    std::vector<std::pair<VertexId, VertexId>> arcs;
    fib_arcs(i, 0, arcs);
    arcs.emplace_back(n - 1, n);
    return Dag::from_arcs(n + 1, std::move(arcs), n);
}

Dag gen_fig4() {
    // Published labels 1..21 shifted to ids 0..20.
    static const std::pair<int, int> labelled[] = {
        {1, 2},   {2, 3},   {3, 4},   {4, 5},   {5, 7},   {6, 7},   {7, 14},  {8, 9},
        {9, 10},  {10, 11}, {11, 12}, {12, 13}, {13, 14}, {14, 15}, {15, 16}, {16, 21},
        {17, 18}, {18, 19}, {19, 20}, {20, 21}, {4, 17},  {9, 17},  {14, 19}};
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (auto [u, v] : labelled) arcs.emplace_back(u - 1, v - 1);
    return Dag::from_arcs(21, std::move(arcs), 20);
}

Dag gen_fig9() {
    static const std::pair<int, int> labelled[] = {{1, 2}, {2, 3},  {3, 4},   {5, 6},
                                                   {6, 7}, {7, 8},  {4, 9},   {8, 9},
                                                   {9, 10}, {10, 11}, {11, 12}, {12, 13}};
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (auto [u, v] : labelled) arcs.emplace_back(u - 1, v - 1);
    return Dag::from_arcs(13, std::move(arcs), 12);
}

Dag gen_random_delta(int n, int delta, std::uint64_t seed) {
    if (n < 1) throw ValidationError("gen_random_delta: n must be >= 1");
    if (delta < 1) throw ValidationError("gen_random_delta: delta must be >= 1");
    SplitMix64 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> arcs;
    std::vector<int> indeg(n, 0);
    std::set<std::pair<VertexId, VertexId>> seen;

    // Walk high to low so a later vertex with spare indegree always exists.
    for (VertexId v = n - 2; v >= 0; --v) {
        std::vector<VertexId> eligible;
        for (VertexId w = v + 1; w < n; ++w)
            if (indeg[w] < delta) eligible.push_back(w);
        VertexId t = eligible[rng.below(eligible.size())];
        arcs.emplace_back(v, t);
        seen.insert({v, t});
        indeg[t]++;
    }
    for (int attempt = 0; attempt < 2 * n && n > 1; ++attempt) {
        VertexId v = 1 + static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n - 1)));
        VertexId u = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(v)));
        if (indeg[v] >= delta || seen.count({u, v})) continue;
        arcs.emplace_back(u, v);
        seen.insert({u, v});
        indeg[v]++;
    }
    return Dag::from_arcs(n, std::move(arcs), n - 1);
}

Dag gen_random_binary(int n, std::uint64_t seed) { return gen_random_delta(n, 2, seed); }

}  // namespace dagbisect
