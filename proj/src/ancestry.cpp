#include "dagbisect/ancestry.hpp"

namespace dagbisect {

AncestorTable::AncestorTable(const Dag& dag) {
    const int n = dag.vertex_count();
    anc_.assign(n, Bitset(static_cast<std::size_t>(n)));
    counts_.assign(n, 0);
    for (VertexId v : dag.topo_order()) {
        Bitset& a = anc_[v];
        a.set(static_cast<std::size_t>(v));
        for (VertexId p : dag.parents(v)) a |= anc_[p];
        counts_[v] = static_cast<int>(a.count());
    }
}

}  // namespace dagbisect
