#include "dagbisect/dag.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace dagbisect {

Dag Dag::from_arcs(int n, std::vector<std::pair<VertexId, VertexId>> arcs,
                   std::optional<VertexId> marked_bugged) {
    if (n < 1) throw ValidationError("dag must have at least one vertex");

    Dag d;
    d.n_ = n;
    d.parents_.resize(n);
    d.children_.resize(n);

    std::set<std::pair<VertexId, VertexId>> seen;
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw ValidationError("arc endpoint out of range: " + std::to_string(u) + " -> " +
                                  std::to_string(v));
        }
        if (u == v) throw ValidationError("self-loop on vertex " + std::to_string(u));
        if (!seen.insert({u, v}).second) {
            throw ValidationError("duplicate arc " + std::to_string(u) + " -> " +
                                  std::to_string(v));
        }
        d.parents_[v].push_back(u);
        d.children_[u].push_back(v);
    }
    d.arcs_ = std::move(arcs);

    // Kahn with a min-heap so the order is deterministic.
    std::vector<int> indeg(n, 0);
    for (auto& [u, v] : d.arcs_) indeg[v]++;
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    d.topo_.reserve(n);
    while (!ready.empty()) {
        VertexId v = ready.top();
        ready.pop();
        d.topo_.push_back(v);
        for (VertexId c : d.children_[v])
            if (--indeg[c] == 0) ready.push(c);
    }
    if (static_cast<int>(d.topo_.size()) != n) throw ValidationError("cycle detected");

    if (marked_bugged) {
        if (*marked_bugged < 0 || *marked_bugged >= n)
            throw ValidationError("marked bugged vertex out of range");
        d.marked_ = marked_bugged;
    } else {
        std::optional<VertexId> sink;
        for (VertexId v = 0; v < n; ++v) {
            if (d.children_[v].empty()) {
                if (sink) {
                    sink.reset();
                    break;
                }
                sink = v;
            }
        }
        d.marked_ = sink;  // unset when the sink is not unique
    }
    return d;
}

VertexId Dag::bugged_or_throw() const {
    if (!marked_) throw ValidationError("dag has no marked bugged vertex");
    return *marked_;
}

int max_indegree(const Dag& dag) {
    int best = 0;
    for (VertexId v = 0; v < dag.vertex_count(); ++v)
        best = std::max(best, static_cast<int>(dag.parents(v).size()));
    return best;
}

bool is_binary(const Dag& dag) { return max_indegree(dag) <= 2; }

namespace {

std::vector<std::string> tokenize_line(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

long parse_int(const std::string& tok, const char* what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(std::string("malformed ") + what + ": '" + tok + "'");
    }
}

}  // namespace

Dag parse_dag(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<VertexId, VertexId>> arcs;
    std::optional<VertexId> sink;

    while (std::getline(in, line)) {
        auto toks = tokenize_line(line);
        if (toks.empty()) continue;
        if (toks[0] == "dag") {
            if (n >= 0) throw ValidationError("duplicate dag header");
            if (toks.size() != 3) throw ValidationError("malformed dag header");
            n = static_cast<int>(parse_int(toks[1], "vertex count"));
            m = static_cast<int>(parse_int(toks[2], "arc count"));
        } else if (toks[0] == "arc") {
            if (n < 0) throw ValidationError("arc before dag header");
            if (toks.size() != 3) throw ValidationError("malformed arc line: " + line);
            arcs.emplace_back(static_cast<VertexId>(parse_int(toks[1], "arc endpoint")),
                              static_cast<VertexId>(parse_int(toks[2], "arc endpoint")));
        } else if (toks[0] == "sink") {
            if (toks.size() != 2) throw ValidationError("malformed sink line: " + line);
            if (sink) throw ValidationError("duplicate sink line");
            sink = static_cast<VertexId>(parse_int(toks[1], "sink id"));
        } else {
            throw ValidationError("unrecognized line: " + line);
        }
    }
    if (n < 0) throw ValidationError("missing dag header");
    if (static_cast<int>(arcs.size()) != m)
        throw ValidationError("arc count mismatch: header says " + std::to_string(m) + ", got " +
                              std::to_string(arcs.size()));
    return Dag::from_arcs(n, std::move(arcs), sink);
}

std::string dag_to_text(const Dag& dag) {
    std::ostringstream out;
    out << "dag " << dag.vertex_count() << ' ' << dag.arcs().size() << '\n';
    for (auto [u, v] : dag.arcs()) out << "arc " << u << ' ' << v << '\n';
    if (dag.marked_bugged()) out << "sink " << *dag.marked_bugged() << '\n';
    return out.str();
}

}  // namespace dagbisect
