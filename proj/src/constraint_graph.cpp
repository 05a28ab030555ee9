#include "wsp/constraint_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wsp {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::variant<ConstraintGraph, NoInstance> contract_equalities(const WorkflowInstance& inst) {
    const int k = inst.num_steps();
    const int n = inst.num_users();

    UnionFind uf(k);
    for (const auto& c : inst.constraints)
        if (c.kind == ConstraintKind::Eq) uf.unite(c.s1, c.s2);

    for (const auto& c : inst.constraints) {
        if (c.kind == ConstraintKind::Eq) continue;
        if (uf.find(c.s1) == uf.find(c.s2)) {
            std::ostringstream why;
            why << to_string(c.kind) << " constraint between '" << inst.step_names[c.s1]
                << "' and '" << inst.step_names[c.s2]
                << "' joins steps forced equal by the equality constraints";
            return NoInstance{why.str()};
        }
    }

    // Superstep ids ordered by smallest member step.
    std::vector<int> root_of(k), super_of_root(k, -1);
    for (int s = 0; s < k; ++s) root_of[s] = uf.find(s);
    ConstraintGraph cg;
    cg.num_users = n;
    for (int s = 0; s < k; ++s) {
        if (super_of_root[root_of[s]] == -1) {
            super_of_root[root_of[s]] = cg.num_supersteps();
            cg.members.emplace_back();
        }
        cg.members[super_of_root[root_of[s]]].push_back(s);
    }

    cg.auth = BitMatrix(cg.num_supersteps(), n);
    for (int q = 0; q < cg.num_supersteps(); ++q) {
        auto& row = cg.members[q];
        for (std::size_t w = 0; w < cg.auth.words_per_row(); ++w)
            cg.auth.row(q)[w] = inst.auth.row(row[0])[w];
        for (std::size_t i = 1; i < row.size(); ++i)
            bitrows::active().and_into(cg.auth.row(q), inst.auth.row(row[i]),
                                       cg.auth.words_per_row());
    }

    auto super_of = [&](int s) { return super_of_root[root_of[s]]; };
    for (const auto& c : inst.constraints) {
        if (c.kind == ConstraintKind::Eq) continue;
        int a = super_of(c.s1), b = super_of(c.s2);
        if (c.kind == ConstraintKind::Neq) {
            auto e = std::minmax(a, b);
            std::pair<int, int> edge{e.first, e.second};
            if (std::find(cg.neq_edges.begin(), cg.neq_edges.end(), edge) == cg.neq_edges.end())
                cg.neq_edges.push_back(edge);
        } else {
            std::pair<int, int> arc{a, b};
            if (std::find(cg.lt_arcs.begin(), cg.lt_arcs.end(), arc) == cg.lt_arcs.end())
                cg.lt_arcs.push_back(arc);
        }
    }
    return cg;
}

Plan expand_plan(const ConstraintGraph& graph, const Plan& superplan) {
    int k = 0;
    for (const auto& m : graph.members) k += static_cast<int>(m.size());
    Plan plan(k, -1);
    for (int q = 0; q < graph.num_supersteps(); ++q)
        for (int s : graph.members[q]) plan[s] = superplan[q];
    return plan;
}

std::string ConstraintGraph::dot_dump(const WorkflowInstance& inst) const {
    std::ostringstream out;
    out << "graph constraint_graph {\n";
    for (int q = 0; q < num_supersteps(); ++q) {
        out << "  q" << q << " [label=\"";
        for (std::size_t i = 0; i < members[q].size(); ++i)
            out << (i ? "," : "") << inst.step_names[members[q][i]];
        out << "\"]\n";
    }
    for (const auto& [a, b] : neq_edges)
        out << "  q" << a << " -- q" << b << " [label=\"!=\"]\n";
    for (const auto& [a, b] : lt_arcs)
        out << "  q" << a << " -> q" << b << " [label=\"<\"]\n";
    out << "}\n";
    return out.str();
}

}  // namespace wsp
