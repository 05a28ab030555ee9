#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsp/bitrows.hpp"
#include "wsp/poset.hpp"

namespace wsp {

struct ParseError : std::runtime_error {
    ParseError(int line_, const std::string& what_)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_ : what_),
          line(line_) {}
    int line;  // 0 when not tied to a single line
};

enum class ConstraintKind { Eq, Neq, Lt };

struct Constraint {
    ConstraintKind kind;
    int s1;
    int s2;
    bool operator==(const Constraint&) const = default;
};

// A total assignment of users to steps, indexed by StepId.
using Plan = std::vector<int>;

struct WorkflowInstance {
    std::vector<std::string> user_names;
    std::vector<std::string> step_names;
    UserPoset users;
    BitMatrix auth;  // step x user, auth.test(s, u) iff u in L(s)
    std::vector<Constraint> constraints;

    int num_users() const { return static_cast<int>(user_names.size()); }
    int num_steps() const { return static_cast<int>(step_names.size()); }
    bool authorized(int step, int user) const { return auth.test(step, user); }

    std::optional<int> user_id(const std::string& name) const;
    std::optional<int> step_id(const std::string& name) const;

    bool operator==(const WorkflowInstance& other) const;
};

struct Diagnostic {
    enum class Severity { Error, Advisory };
    Severity severity;
    std::string message;
};

// Builds an instance from already-resolved parts; order arcs may be any DAG,
// the poset derives reduction and closure. Duplicate constraints are dropped.
WorkflowInstance make_instance(std::vector<std::string> user_names,
                               std::vector<std::string> step_names,
                               const std::vector<Arc>& order_arcs,
                               const std::vector<std::vector<int>>& auth_lists,
                               std::vector<Constraint> constraints);

WorkflowInstance parse_instance(const std::string& text);
std::string serialize_instance(const WorkflowInstance& inst);

std::vector<Diagnostic> validate_instance(const WorkflowInstance& inst);
bool has_error(const std::vector<Diagnostic>& diags);

const char* to_string(ConstraintKind k);  // "eq" | "neq" | "lt"

}  // namespace wsp
