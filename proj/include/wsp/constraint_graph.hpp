#pragma once

#include <string>
#include <variant>
#include <vector>

#include "wsp/instance.hpp"

namespace wsp {

// Mixed graph over supersteps after equality contraction: undirected edges
// carry the disequality constraints, arcs carry the seniority constraints.
struct ConstraintGraph {
    int num_users = 0;
    std::vector<std::vector<int>> members;  // superstep -> original steps, ascending
    BitMatrix auth;                         // superstep x user, intersection of member lists
    std::vector<std::pair<int, int>> neq_edges;  // unordered, stored lo < hi
    std::vector<std::pair<int, int>> lt_arcs;    // ordered

    int num_supersteps() const { return static_cast<int>(members.size()); }
    std::string dot_dump(const WorkflowInstance& inst) const;
};

struct NoInstance {
    std::string reason;
};

// Contracts equality components into supersteps (union-find, superstep ids
// ordered by smallest member). Returns NoInstance when a disequality or
// seniority constraint joins two steps of the same component.
std::variant<ConstraintGraph, NoInstance> contract_equalities(const WorkflowInstance& inst);

// Lifts a plan over supersteps back to the original steps.
Plan expand_plan(const ConstraintGraph& graph, const Plan& superplan);

}  // namespace wsp
