#include "dagbisect/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dagbisect/ancestry.hpp"

namespace dagbisect {

namespace {

void validate_bsat(const BsatFormula& f) {
    if (f.variable_count < 1) throw ValidationError("formula needs at least one variable");
    std::vector<int> clause_presence(f.variable_count + 1, 0);
    for (const auto& clause : f.clauses) {
        if (clause.size() < 2 || clause.size() > 3)
            throw ValidationError("clause size must be 2 or 3, got " +
                                  std::to_string(clause.size()));
        std::set<int> vars;
        for (int lit : clause) {
            int var = std::abs(lit);
            if (lit == 0 || var > f.variable_count)
                throw ValidationError("literal out of range: " + std::to_string(lit));
            if (!vars.insert(var).second)
                throw ValidationError("variable " + std::to_string(var) +
                                      " repeated within a clause");
        }
        for (int var : vars) {
            if (++clause_presence[var] > 3)
                throw ValidationError("variable " + std::to_string(var) +
                                      " occurs in more than 3 clauses");
        }
    }
}

}  // namespace

BsatFormula parse_bsat(const std::string& dimacs) {
    std::istringstream in(dimacs);
    std::string line;
    BsatFormula f;
    int declared_clauses = -1;
    std::vector<int> current;

    while (std::getline(in, line)) {
        if (!line.empty() && (line[0] == 'c' || line[0] == '%')) continue;
        std::istringstream toks(line);
        std::string first;
        if (!(toks >> first)) continue;
        if (first == "p") {
            std::string fmt;
            if (declared_clauses >= 0 || !(toks >> fmt >> f.variable_count >> declared_clauses) ||
                fmt != "cnf" || f.variable_count < 0 || declared_clauses < 0)
                throw ValidationError("malformed DIMACS header: " + line);
            continue;
        }
        if (declared_clauses < 0) throw ValidationError("clause before DIMACS header");
        std::istringstream nums(line);
        int lit;
        while (nums >> lit) {
            if (lit == 0) {
                f.clauses.push_back(current);
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
        if (nums.fail() && !nums.eof()) throw ValidationError("malformed clause line: " + line);
    }
    if (declared_clauses < 0) throw ValidationError("missing DIMACS header");
    if (!current.empty()) throw ValidationError("clause not terminated by 0");
    if (static_cast<int>(f.clauses.size()) != declared_clauses)
        throw ValidationError("clause count mismatch: header says " +
                              std::to_string(declared_clauses) + ", got " +
                              std::to_string(f.clauses.size()));
    validate_bsat(f);
    return f;
}

std::string bsat_to_dimacs(const BsatFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

namespace {

std::map<int, int> literal_counts(const BsatFormula& f) {
    std::map<int, int> counts;
    for (const auto& clause : f.clauses)
        for (int lit : clause) counts[lit]++;
    return counts;
}

}  // namespace

bool literal_occurrences_within(const BsatFormula& f, int limit) {
    for (auto& [lit, count] : literal_counts(f))
        if (count > limit) return false;
    return true;
}

BsatFormula preprocess_pure_literals(const BsatFormula& f) {
    validate_bsat(f);
    auto counts = literal_counts(f);
    std::set<int> satisfied_literals;
    for (auto& [lit, count] : counts) {
        // Three same-sign occurrences exhaust the variable's budget, so the
        // opposite literal is absent and the clauses can be dropped.
        if (count >= 3) satisfied_literals.insert(lit);
    }
    BsatFormula out;
    out.variable_count = f.variable_count;
    for (const auto& clause : f.clauses) {
        bool drop = false;
        for (int lit : clause)
            if (satisfied_literals.count(lit)) {
                drop = true;
                break;
            }
        if (!drop) out.clauses.push_back(clause);
    }
    return out;
}

bool satisfies(const BsatFormula& f, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != f.variable_count)
        throw ValidationError("assignment size mismatch");
    for (const auto& clause : f.clauses) {
        bool ok = false;
        for (int lit : clause) {
            bool value = assignment[static_cast<std::size_t>(std::abs(lit) - 1)];
            if ((lit > 0) == value) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

std::optional<std::vector<bool>> brute_force_sat(const BsatFormula& f) {
    if (f.variable_count > 24) throw ValidationError("brute-force SAT limited to 24 variables");
    const std::uint32_t limit = 1u << f.variable_count;
    std::vector<bool> assignment(static_cast<std::size_t>(f.variable_count));
    for (std::uint32_t bits = 0; bits < limit; ++bits) {
        for (int i = 0; i < f.variable_count; ++i) assignment[i] = (bits >> i) & 1;
        if (satisfies(f, assignment)) return assignment;
    }
    return std::nullopt;
}

ReductionResult reduce_bsat_to_crsp(const BsatFormula& f) {
    validate_bsat(f);
    if (!literal_occurrences_within(f, 2))
        throw ValidationError("reduction requires a preprocessed formula "
                              "(every literal in at most 2 clauses)");
    const int n = f.variable_count;
    const int m = static_cast<int>(f.clauses.size());
    const int total = 5 * n + m + 3;

    GadgetMap map;
    for (int i = 0; i < n; ++i) {
        map.x.push_back(5 * i);
        map.x_bar.push_back(5 * i + 1);
        map.b.push_back(5 * i + 2);
        map.b_bar.push_back(5 * i + 3);
        map.ct.push_back(5 * i + 4);
    }
    for (int j = 0; j < m; ++j) map.clause_vertex.push_back(5 * n + j);
    map.terminals = {5 * n + m, 5 * n + m + 1, 5 * n + m + 2};

    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (int i = 0; i < n; ++i) {
        arcs.emplace_back(map.b[i], map.x[i]);
        arcs.emplace_back(map.ct[i], map.x[i]);
        arcs.emplace_back(map.b_bar[i], map.x_bar[i]);
        arcs.emplace_back(map.ct[i], map.x_bar[i]);
    }
    for (int j = 0; j < m; ++j)
        for (int lit : f.clauses[j]) {
            int i = std::abs(lit) - 1;
            arcs.emplace_back(map.clause_vertex[j], lit > 0 ? map.b[i] : map.b_bar[i]);
        }

    CrspInstance inst;
    inst.dag = Dag::from_arcs(total, std::move(arcs));
    inst.innocent = Bitset(static_cast<std::size_t>(total));
    for (int i = 0; i < n; ++i) {
        inst.innocent.set(static_cast<std::size_t>(map.x[i]));
        inst.innocent.set(static_cast<std::size_t>(map.x_bar[i]));
        inst.innocent.set(static_cast<std::size_t>(map.b[i]));
        inst.innocent.set(static_cast<std::size_t>(map.b_bar[i]));
    }
    inst.budget = n + 3;
    return {std::move(inst), std::move(map)};
}

Dag crsp_to_rsp(const CrspInstance& inst) {
    const int n = inst.dag.vertex_count();
    auto arcs = inst.dag.arcs();
    for (VertexId v : inst.non_innocent()) arcs.emplace_back(v, n);
    return Dag::from_arcs(n + 1, std::move(arcs), n);
}

CrspInstance rsp_to_crsp(const Dag& dag, VertexId b, int budget) {
    if (!dag.has_vertex(b)) throw ValidationError("bugged vertex out of range");
    AncestorTable anc(dag);
    const int n = dag.vertex_count();

    // Keep everything except b and its descendants; descendants are the
    // vertices that have b as an ancestor.
    std::vector<int> new_id(n, -1);
    int kept = 0;
    for (VertexId v = 0; v < n; ++v)
        if (!anc.ancestors(v).test(static_cast<std::size_t>(b))) new_id[v] = kept++;

    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (auto [u, v] : dag.arcs())
        if (new_id[u] >= 0 && new_id[v] >= 0) arcs.emplace_back(new_id[u], new_id[v]);

    CrspInstance inst;
    inst.dag = kept == 0 ? Dag::from_arcs(1, {})  // degenerate: b was the whole graph
                         : Dag::from_arcs(kept, std::move(arcs));
    inst.innocent = Bitset(static_cast<std::size_t>(inst.dag.vertex_count()));
    if (kept == 0) {
        inst.innocent.set(0);
    } else {
        const Bitset& candidates = anc.ancestors(b);
        for (VertexId v = 0; v < n; ++v)
            if (new_id[v] >= 0 && !candidates.test(static_cast<std::size_t>(v)))
                inst.innocent.set(static_cast<std::size_t>(new_id[v]));
    }
    inst.budget = budget;
    return inst;
}

StrategyTree satisfying_assignment_to_strategy(const BsatFormula& f,
                                               const std::vector<bool>& assignment,
                                               const GadgetMap& map) {
    if (!satisfies(f, assignment))
        throw ValidationError("assignment does not satisfy the formula");
    ReductionResult red = reduce_bsat_to_crsp(f);
    AncestorTable anc(red.instance.dag);

    // Live candidate set, tracked explicitly so already-cleared clause
    // vertices are skipped and every branch stays feasible.
    std::vector<VertexId> initial = red.instance.non_innocent();
    std::set<VertexId> live(initial.begin(), initial.end());

    // Bugged literal answer: remaining possibilities are the live clause
    // parents of its branching vertex plus the control vertex.
    auto chase_bugged = [&](int var_index, std::set<VertexId> cands) {
        std::vector<VertexId> clause_cands;
        for (VertexId c : cands)
            if (c != map.ct[var_index]) clause_cands.push_back(c);
        std::unique_ptr<StrategyNode> clean_tail = StrategyTree::leaf(map.ct[var_index]);
        for (auto it = clause_cands.rbegin(); it != clause_cands.rend(); ++it)
            clean_tail = StrategyTree::inner(*it, StrategyTree::leaf(*it), std::move(clean_tail));
        return clean_tail;
    };

    // All-clean spine: one literal query per variable, then the terminals.
    std::unique_ptr<StrategyNode> tail = StrategyTree::no_fault_leaf();
    for (int t = 2; t >= 0; --t)
        tail = StrategyTree::inner(map.terminals[t], StrategyTree::leaf(map.terminals[t]),
                                   std::move(tail));

    std::vector<std::pair<VertexId, std::set<VertexId>>> spine;  // (query, bugged-side candidates)
    for (int i = 0; i < f.variable_count; ++i) {
        VertexId q = assignment[i] ? map.x[i] : map.x_bar[i];
        std::set<VertexId> bugged_side;
        for (VertexId c : live)
            if (anc.ancestors(q).test(static_cast<std::size_t>(c))) bugged_side.insert(c);
        spine.emplace_back(q, bugged_side);
        for (VertexId c : bugged_side) live.erase(c);
    }
    for (int i = f.variable_count - 1; i >= 0; --i)
        tail = StrategyTree::inner(spine[i].first, chase_bugged(i, spine[i].second),
                                   std::move(tail));
    return StrategyTree(std::move(tail));
}

namespace {

bool verify_crsp_node(const StrategyNode* node, const AncestorTable& anc,
                      std::set<VertexId> candidates, bool no_fault_possible) {
    if (node == nullptr) return false;
    if (node->is_leaf()) {
        if (node->no_fault) return candidates.empty() && no_fault_possible;
        return !no_fault_possible && candidates.size() == 1 && *candidates.begin() == node->leaf;
    }
    if (node->query < 0 || node->query >= anc.vertex_count()) return false;
    std::set<VertexId> bugged_side, clean_side;
    for (VertexId c : candidates) {
        if (anc.ancestors(node->query).test(static_cast<std::size_t>(c)))
            bugged_side.insert(c);
        else
            clean_side.insert(c);
    }
    return verify_crsp_node(node->bugged.get(), anc, std::move(bugged_side), false) &&
           verify_crsp_node(node->clean.get(), anc, std::move(clean_side), no_fault_possible);
}

}  // namespace

bool verify_crsp_tree(const StrategyTree& tree, const CrspInstance& inst) {
    if (tree.empty()) return false;
    AncestorTable anc(inst.dag);
    auto cands = inst.non_innocent();
    return verify_crsp_node(tree.root(), anc, std::set<VertexId>(cands.begin(), cands.end()),
                            true);
}

}  // namespace dagbisect
