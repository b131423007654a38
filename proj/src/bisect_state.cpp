#include "dagbisect/bisect_state.hpp"

#include <algorithm>

namespace dagbisect {

BisectState BisectState::prune_to_ancestors(const Dag& dag, const AncestorTable& anc,
                                            VertexId b) {
    if (!dag.has_vertex(b)) throw ValidationError("bugged vertex out of range");
    BisectState s;
    s.dag_ = &dag;
    s.anc_ = &anc;
    s.candidates_ = anc.ancestors(b);
    s.n_live_ = anc.count(b);
    return s;
}

int BisectState::live_ancestors(VertexId v) const {
    return static_cast<int>(anc_->ancestors(v).and_count(candidates_));
}

int BisectState::score(VertexId v) const {
    if (!dag_->has_vertex(v) || !is_live(v))
        throw ValidationError("score: vertex " + std::to_string(v) + " is not live");
    int a = live_ancestors(v);
    return std::min(a, n_live_ - a);
}

VertexId BisectState::sole_candidate() const {
    if (n_live_ != 1) throw ValidationError("state does not have a single candidate");
    return static_cast<VertexId>(candidates_.find_first());
}

BisectState BisectState::apply_verdict(VertexId q, Verdict verdict) const {
    if (!dag_->has_vertex(q) || !is_live(q))
        throw ValidationError("apply_verdict: vertex " + std::to_string(q) + " is not live");
    BisectState next = *this;
    if (verdict == Verdict::Bugged) {
        next.candidates_ &= anc_->ancestors(q);
    } else {
        next.candidates_.subtract(anc_->ancestors(q));
    }
    next.n_live_ = static_cast<int>(next.candidates_.count());
    if (next.n_live_ == 0)
        throw InconsistentOracleError("verdict on vertex " + std::to_string(q) +
                                      " leaves no candidate faulty commit");
    return next;
}

}  // namespace dagbisect
