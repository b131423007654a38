#pragma once

#include "dagbisect/ancestry.hpp"
#include "dagbisect/bitset.hpp"
#include "dagbisect/dag.hpp"

namespace dagbisect {

enum class Verdict { Bugged, Clean };

// A live search state: the candidate set for the faulty commit, as a mask
// over the original vertices. Value type: applying a verdict yields a new
// state and never mutates this one. The candidate mask is always of the form
// (ancestors of the last bugged-verified vertex) minus (ancestors of the
// clean-verified vertices), so ancestor counts restricted to the mask agree
// with ancestor counts in the induced subgraph.
class BisectState {
public:
    /// Initial state: candidates are exactly the ancestors of `b`.
    static BisectState prune_to_ancestors(const Dag& dag, const AncestorTable& anc, VertexId b);

    int live_count() const { return n_live_; }
    bool is_live(VertexId v) const { return candidates_.test(static_cast<std::size_t>(v)); }
    const Bitset& candidates() const { return candidates_; }
    const Dag& dag() const { return *dag_; }
    const AncestorTable& ancestry() const { return *anc_; }

    /// Live ancestors of v: |anc(v) ∩ candidates|. v need not be live.
    int live_ancestors(VertexId v) const;

    /// min(a, n_live - a) with a = live_ancestors(v). Throws if v is not live.
    int score(VertexId v) const;

    /// The unique remaining candidate; valid only when live_count() == 1.
    VertexId sole_candidate() const;

    /// New state after an oracle verdict on q. Throws InconsistentOracleError
    /// if the result would be empty, ValidationError if q is not live.
    BisectState apply_verdict(VertexId q, Verdict verdict) const;

private:
    const Dag* dag_ = nullptr;
    const AncestorTable* anc_ = nullptr;
    Bitset candidates_;
    int n_live_ = 0;
};

}  // namespace dagbisect
