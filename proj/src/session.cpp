#include "dagbisect/session.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace dagbisect {

Verdict StreamOracle::answer(VertexId query) {
    (*out_) << "? " << query << std::endl;
    std::string reply;
    while (*in_ >> reply) {
        if (reply == "b" || reply == "bugged") return Verdict::Bugged;
        if (reply == "c" || reply == "clean") return Verdict::Clean;
        (*out_) << "! expected b or c" << std::endl;
    }
    throw InconsistentOracleError("oracle stream closed before answering");
}

SessionResult run_session(const Picker& picker, const Dag& dag, const AncestorTable& anc,
                          Oracle& oracle) {
    auto state = BisectState::prune_to_ancestors(dag, anc, dag.bugged_or_throw());
    SessionResult result;
    result.queries = 0;
    while (state.live_count() > 1) {
        VertexId q = picker(state);
        Verdict v = oracle.answer(q);
        state = state.apply_verdict(q, v);
        result.transcript.push_back({q, v, state.live_count()});
        ++result.queries;
    }
    result.faulty = state.sole_candidate();
    return result;
}

SessionResult run_session(const Picker& picker, const Dag& dag, const AncestorTable& anc,
                          VertexId faulty) {
    auto initial = BisectState::prune_to_ancestors(dag, anc, dag.bugged_or_throw());
    if (!dag.has_vertex(faulty) || !initial.is_live(faulty))
        throw ValidationError("faulty vertex " + std::to_string(faulty) + " is not a candidate");
    SimulatedOracle oracle(anc, faulty);
    return run_session(picker, dag, anc, oracle);
}

}  // namespace dagbisect
