#include "dagbisect/crsp.hpp"

#include <sstream>

namespace dagbisect {

std::vector<VertexId> CrspInstance::non_innocent() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < dag.vertex_count(); ++v)
        if (!innocent.test(static_cast<std::size_t>(v))) out.push_back(v);
    return out;
}

int CrspInstance::candidate_count() const {
    return dag.vertex_count() - static_cast<int>(innocent.count());
}

CrspInstance parse_crsp(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::ostringstream dag_text;
    std::vector<VertexId> innocent_ids;
    int budget = 0;
    bool have_budget = false;

    while (std::getline(in, line)) {
        std::string body = line.substr(0, line.find('#'));
        std::istringstream toks(body);
        std::string head;
        if (!(toks >> head)) continue;
        if (head == "innocent") {
            VertexId v;
            if (!(toks >> v)) throw ValidationError("malformed innocent line: " + line);
            innocent_ids.push_back(v);
        } else if (head == "budget") {
            if (have_budget) throw ValidationError("duplicate budget line");
            if (!(toks >> budget) || budget < 0)
                throw ValidationError("malformed budget line: " + line);
            have_budget = true;
        } else {
            dag_text << line << '\n';
        }
    }

    CrspInstance inst;
    inst.dag = parse_dag(dag_text.str());
    inst.innocent = Bitset(static_cast<std::size_t>(inst.dag.vertex_count()));
    for (VertexId v : innocent_ids) {
        if (!inst.dag.has_vertex(v))
            throw ValidationError("innocent vertex out of range: " + std::to_string(v));
        inst.innocent.set(static_cast<std::size_t>(v));
    }
    inst.budget = budget;
    return inst;
}

std::string crsp_to_text(const CrspInstance& inst) {
    std::ostringstream out;
    out << "dag " << inst.dag.vertex_count() << ' ' << inst.dag.arcs().size() << '\n';
    for (auto [u, v] : inst.dag.arcs()) out << "arc " << u << ' ' << v << '\n';
    inst.innocent.for_each_set([&](std::size_t v) { out << "innocent " << v << '\n'; });
    out << "budget " << inst.budget << '\n';
    return out.str();
}

}  // namespace dagbisect
