#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dagbisect {

using VertexId = int;

/// Malformed or inconsistent input (bad file, invalid graph, impossible
/// parameters). The CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An oracle answer that leaves no possible faulty commit.
struct InconsistentOracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable commit graph. Vertices are dense ids 0..n-1; an arc (u, v) makes
// u a parent of v. Construction validates acyclicity, rejects self-loops and
// duplicate arcs, and computes a topological order. Safe to share across
// threads once built.
class Dag {
public:
    /// Validates and builds. If `marked_bugged` is empty and the graph has
    /// exactly one sink, that sink becomes the marked bugged vertex.
    static Dag from_arcs(int n, std::vector<std::pair<VertexId, VertexId>> arcs,
                         std::optional<VertexId> marked_bugged = std::nullopt);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<VertexId, VertexId>>& arcs() const { return arcs_; }
    const std::vector<VertexId>& parents(VertexId v) const { return parents_[v]; }
    const std::vector<VertexId>& children(VertexId v) const { return children_[v]; }
    const std::vector<VertexId>& topo_order() const { return topo_; }
    std::optional<VertexId> marked_bugged() const { return marked_; }

    /// Marked bugged vertex, or throws if the graph has none.
    VertexId bugged_or_throw() const;

    bool has_vertex(VertexId v) const { return v >= 0 && v < n_; }

private:
    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> arcs_;
    std::vector<std::vector<VertexId>> parents_;
    std::vector<std::vector<VertexId>> children_;
    std::vector<VertexId> topo_;
    std::optional<VertexId> marked_;
};

int max_indegree(const Dag& dag);
bool is_binary(const Dag& dag);

/// Parses the DAG text format:
///   dag <n> <m>
///   arc <u> <v>     (m lines, 0-based ids, u parent of v)
///   sink <b>        (optional)
/// `#` starts a comment; blank lines are ignored.
Dag parse_dag(const std::string& text);

/// Serializes back to the text format (deterministic arc order).
std::string dag_to_text(const Dag& dag);

}  // namespace dagbisect
