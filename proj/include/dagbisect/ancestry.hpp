#pragma once

#include <vector>

#include "dagbisect/bitset.hpp"
#include "dagbisect/dag.hpp"

namespace dagbisect {

// Dense per-vertex ancestor bit-vectors. A vertex is an ancestor of itself.
// Filled in topological order: anc(v) = {v} ∪ ⋃_{p parent of v} anc(p).
// Immutable after construction; shareable across threads.
class AncestorTable {
public:
    explicit AncestorTable(const Dag& dag);

    const Bitset& ancestors(VertexId v) const { return anc_[v]; }
    int count(VertexId v) const { return counts_[v]; }
    bool is_ancestor(VertexId u, VertexId v) const { return anc_[v].test(u); }
    int vertex_count() const { return static_cast<int>(anc_.size()); }

private:
    std::vector<Bitset> anc_;
    std::vector<int> counts_;
};

}  // namespace dagbisect
