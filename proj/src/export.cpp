#include "dagbisect/export.hpp"

#include <sstream>

#include "json.hpp"

namespace dagbisect {

std::string export_dot(const Dag& dag, const DotOptions& options) {
    AncestorTable anc(dag);
    Bitset highlighted(static_cast<std::size_t>(dag.vertex_count()));
    for (VertexId v : options.highlights) {
        if (!dag.has_vertex(v)) throw ValidationError("highlight vertex out of range");
        highlighted.set(static_cast<std::size_t>(v));
    }

    std::ostringstream out;
    out << "digraph dag {\n";
    for (VertexId v = 0; v < dag.vertex_count(); ++v) {
        int a = anc.count(v);
        out << "  v" << v << " [label=\"" << v << "\\n" << a << '/'
            << dag.vertex_count() - a << '"';
        if (options.state != nullptr && !options.state->is_live(v))
            out << " style=dotted color=gray";
        if (highlighted.test(static_cast<std::size_t>(v)))
            out << " style=filled fillcolor=lightblue";
        out << "];\n";
    }
    for (auto [u, v] : dag.arcs()) out << "  v" << u << " -> v" << v << ";\n";
    out << "}\n";
    return out.str();
}

namespace {

int dot_tree_node(const StrategyNode* node, int& next_id, std::ostringstream& out) {
    int id = next_id++;
    if (node->is_leaf()) {
        out << "  n" << id << " [shape=box label=\"";
        if (node->no_fault)
            out << "no fault";
        else
            out << node->leaf;
        out << "\"];\n";
        return id;
    }
    out << "  n" << id << " [label=\"" << node->query << "\"];\n";
    int b = dot_tree_node(node->bugged.get(), next_id, out);
    int c = dot_tree_node(node->clean.get(), next_id, out);
    out << "  n" << id << " -> n" << b << " [label=\"b\"];\n";
    out << "  n" << id << " -> n" << c << " [label=\"c\"];\n";
    return id;
}

nlohmann::ordered_json json_tree_node(const StrategyNode* node) {
    nlohmann::ordered_json j;
    if (node->is_leaf()) {
        if (node->no_fault)
            j["leaf"] = "no-fault";
        else
            j["leaf"] = node->leaf;
        return j;
    }
    j["query"] = node->query;
    j["bugged"] = json_tree_node(node->bugged.get());
    j["clean"] = json_tree_node(node->clean.get());
    return j;
}

}  // namespace

std::string strategy_tree_to_dot(const StrategyTree& tree) {
    if (tree.empty()) throw ValidationError("cannot export an empty strategy tree");
    std::ostringstream out;
    out << "digraph strategy {\n";
    int next_id = 0;
    dot_tree_node(tree.root(), next_id, out);
    out << "}\n";
    return out.str();
}

std::string strategy_tree_to_json(const StrategyTree& tree) {
    if (tree.empty()) throw ValidationError("cannot export an empty strategy tree");
    return json_tree_node(tree.root()).dump();
}

}  // namespace dagbisect
