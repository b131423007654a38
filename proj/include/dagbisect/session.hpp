#pragma once

#include <iosfwd>
#include <vector>

#include "dagbisect/strategy.hpp"

namespace dagbisect {

class Oracle {
public:
    virtual ~Oracle() = default;
    virtual Verdict answer(VertexId query) = 0;
};

/// Answers from a known faulty commit: bugged iff the faulty vertex is an
/// ancestor of the query.
class SimulatedOracle final : public Oracle {
public:
    SimulatedOracle(const AncestorTable& anc, VertexId faulty) : anc_(&anc), faulty_(faulty) {}
    Verdict answer(VertexId query) override {
        return anc_->ancestors(query).test(static_cast<std::size_t>(faulty_)) ? Verdict::Bugged
                                                                              : Verdict::Clean;
    }

private:
    const AncestorTable* anc_;
    VertexId faulty_;
};

/// Stream protocol: writes "? <vertex-id>" per query, reads "b" or "c".
class StreamOracle final : public Oracle {
public:
    StreamOracle(std::istream& in, std::ostream& out) : in_(&in), out_(&out) {}
    Verdict answer(VertexId query) override;

private:
    std::istream* in_;
    std::ostream* out_;
};

struct TranscriptEntry {
    VertexId query;
    Verdict verdict;
    int live_after;
};

struct SessionResult {
    VertexId faulty;
    int queries;
    std::vector<TranscriptEntry> transcript;
};

/// Runs the picker loop against an oracle until one candidate remains.
/// Throws InconsistentOracleError when an answer empties the candidate set.
SessionResult run_session(const Picker& picker, const Dag& dag, const AncestorTable& anc,
                          Oracle& oracle);

/// Simulated run; validates that `faulty` is a candidate.
SessionResult run_session(const Picker& picker, const Dag& dag, const AncestorTable& anc,
                          VertexId faulty);

}  // namespace dagbisect
