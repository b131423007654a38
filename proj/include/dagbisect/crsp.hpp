#pragma once

#include <string>
#include <vector>

#include "dagbisect/bitset.hpp"
#include "dagbisect/dag.hpp"

namespace dagbisect {

// Confined search instance: the faulty commit, if any, lies outside the
// innocent set, and the graph may contain no fault at all.
struct CrspInstance {
    Dag dag;
    Bitset innocent;  // sized to dag.vertex_count()
    int budget = 0;

    std::vector<VertexId> non_innocent() const;
    int candidate_count() const;
};

/// Text format: the DAG format plus `innocent <v>` lines and `budget <k>`.
CrspInstance parse_crsp(const std::string& text);
std::string crsp_to_text(const CrspInstance& inst);

}  // namespace dagbisect
