#include "wsp/instance.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace wsp {

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

std::vector<Constraint> dedup_constraints(std::vector<Constraint> cs) {
    std::vector<Constraint> out;
    for (const auto& c : cs)
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    return out;
}

}  // namespace

std::optional<int> WorkflowInstance::user_id(const std::string& name) const {
    for (int i = 0; i < num_users(); ++i)
        if (user_names[i] == name) return i;
    return std::nullopt;
}

std::optional<int> WorkflowInstance::step_id(const std::string& name) const {
    for (int i = 0; i < num_steps(); ++i)
        if (step_names[i] == name) return i;
    return std::nullopt;
}

bool WorkflowInstance::operator==(const WorkflowInstance& other) const {
    return user_names == other.user_names && step_names == other.step_names &&
           users.cover_arcs() == other.users.cover_arcs() && auth == other.auth &&
           constraints == other.constraints;
}

WorkflowInstance make_instance(std::vector<std::string> user_names,
                               std::vector<std::string> step_names,
                               const std::vector<Arc>& order_arcs,
                               const std::vector<std::vector<int>>& auth_lists,
                               std::vector<Constraint> constraints) {
    WorkflowInstance inst;
    inst.user_names = std::move(user_names);
    inst.step_names = std::move(step_names);
    const int n = inst.num_users();
    const int k = inst.num_steps();
    inst.users = UserPoset(n, order_arcs);
    inst.auth = BitMatrix(k, n);
    for (int s = 0; s < std::min<int>(k, static_cast<int>(auth_lists.size())); ++s)
        for (int u : auth_lists[s]) inst.auth.set(s, u);
    inst.constraints = dedup_constraints(std::move(constraints));
    return inst;
}

WorkflowInstance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    int n = -1, k = -1;
    std::vector<std::string> user_names, step_names;
    std::map<std::string, int> user_ids, step_ids;
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> auth_lists;
    std::vector<char> auth_seen;
    std::vector<Constraint> constraints;
    int last_o_line = 0;

    auto need_header = [&](int line) {
        if (n < 0) throw ParseError(line, "expected 'p wsp <n_users> <k_steps>' before this line");
    };
    auto lookup = [&](const std::map<std::string, int>& ids, const std::string& name, int line,
                      const char* what) {
        auto it = ids.find(name);
        if (it == ids.end())
            throw ParseError(line, std::string("unknown ") + what + " name '" + name + "'");
        return it->second;
    };

    while (std::getline(in, raw)) {
        ++lineno;
        if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
        auto toks = tokenize(raw);
        if (toks.empty()) continue;
        const std::string& tag = toks[0];

        if (tag == "p") {
            if (n >= 0) throw ParseError(lineno, "duplicate 'p' line");
            if (toks.size() != 4 || toks[1] != "wsp")
                throw ParseError(lineno, "malformed problem line, expected 'p wsp <n> <k>'");
            try {
                n = std::stoi(toks[2]);
                k = std::stoi(toks[3]);
            } catch (const std::exception&) {
                throw ParseError(lineno, "problem line counts must be integers");
            }
            if (n < 0 || k < 0) throw ParseError(lineno, "negative counts in problem line");
            auth_lists.assign(k, {});
            auth_seen.assign(k, 0);
        } else if (tag == "u") {
            need_header(lineno);
            if (toks.size() != 2 || !valid_name(toks[1]))
                throw ParseError(lineno, "malformed user line");
            if (static_cast<int>(user_names.size()) >= n)
                throw ParseError(lineno, "more 'u' lines than declared users");
            if (!user_ids.emplace(toks[1], user_names.size()).second)
                throw ParseError(lineno, "duplicate user name '" + toks[1] + "'");
            user_names.push_back(toks[1]);
        } else if (tag == "s") {
            need_header(lineno);
            if (toks.size() != 2 || !valid_name(toks[1]))
                throw ParseError(lineno, "malformed step line");
            if (static_cast<int>(step_names.size()) >= k)
                throw ParseError(lineno, "more 's' lines than declared steps");
            if (!step_ids.emplace(toks[1], step_names.size()).second)
                throw ParseError(lineno, "duplicate step name '" + toks[1] + "'");
            step_names.push_back(toks[1]);
        } else if (tag == "a") {
            need_header(lineno);
            if (toks.size() < 2) throw ParseError(lineno, "malformed authorization line");
            int s = lookup(step_ids, toks[1], lineno, "step");
            if (auth_seen[s])
                throw ParseError(lineno, "duplicate authorization list for step '" + toks[1] + "'");
            auth_seen[s] = 1;
            for (std::size_t i = 2; i < toks.size(); ++i)
                auth_lists[s].push_back(lookup(user_ids, toks[i], lineno, "user"));
        } else if (tag == "o") {
            need_header(lineno);
            if (toks.size() != 3) throw ParseError(lineno, "malformed order line");
            int lo = lookup(user_ids, toks[1], lineno, "user");
            int hi = lookup(user_ids, toks[2], lineno, "user");
            arcs.emplace_back(lo, hi);
            last_o_line = lineno;
        } else if (tag == "c") {
            need_header(lineno);
            if (toks.size() != 4) throw ParseError(lineno, "malformed constraint line");
            ConstraintKind kind;
            if (toks[1] == "eq") kind = ConstraintKind::Eq;
            else if (toks[1] == "neq") kind = ConstraintKind::Neq;
            else if (toks[1] == "lt") kind = ConstraintKind::Lt;
            else throw ParseError(lineno, "unknown constraint kind '" + toks[1] + "'");
            int s1 = lookup(step_ids, toks[2], lineno, "step");
            int s2 = lookup(step_ids, toks[3], lineno, "step");
            constraints.push_back({kind, s1, s2});
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
    }

    if (n < 0) throw ParseError(0, "missing 'p wsp' problem line");
    if (static_cast<int>(user_names.size()) != n)
        throw ParseError(0, "declared " + std::to_string(n) + " users but found " +
                                std::to_string(user_names.size()) + " 'u' lines");
    if (static_cast<int>(step_names.size()) != k)
        throw ParseError(0, "declared " + std::to_string(k) + " steps but found " +
                                std::to_string(step_names.size()) + " 's' lines");

    try {
        return make_instance(std::move(user_names), std::move(step_names), arcs, auth_lists,
                             std::move(constraints));
    } catch (const CycleError&) {
        throw ParseError(last_o_line, "cyclic order declaration");
    }
}

std::string serialize_instance(const WorkflowInstance& inst) {
    std::ostringstream out;
    out << "p wsp " << inst.num_users() << ' ' << inst.num_steps() << '\n';
    for (const auto& u : inst.user_names) out << "u " << u << '\n';
    for (const auto& s : inst.step_names) out << "s " << s << '\n';
    for (int s = 0; s < inst.num_steps(); ++s) {
        auto members = inst.auth.row_members(s);
        if (members.empty()) continue;
        out << "a " << inst.step_names[s];
        for (int u : members) out << ' ' << inst.user_names[u];
        out << '\n';
    }
    auto cover = inst.users.cover_arcs();
    std::sort(cover.begin(), cover.end());
    for (const auto& [lo, hi] : cover)
        out << "o " << inst.user_names[lo] << ' ' << inst.user_names[hi] << '\n';
    for (const auto& c : inst.constraints)
        out << "c " << to_string(c.kind) << ' ' << inst.step_names[c.s1] << ' '
            << inst.step_names[c.s2] << '\n';
    return out.str();
}

std::vector<Diagnostic> validate_instance(const WorkflowInstance& inst) {
    std::vector<Diagnostic> diags;
    const int n = inst.num_users();
    const int k = inst.num_steps();

    std::set<std::string> unames(inst.user_names.begin(), inst.user_names.end());
    if (static_cast<int>(unames.size()) != n)
        diags.push_back({Diagnostic::Severity::Error, "duplicate user names"});
    std::set<std::string> snames(inst.step_names.begin(), inst.step_names.end());
    if (static_cast<int>(snames.size()) != k)
        diags.push_back({Diagnostic::Severity::Error, "duplicate step names"});

    for (const auto& c : inst.constraints) {
        if (c.s1 < 0 || c.s1 >= k || c.s2 < 0 || c.s2 >= k) {
            diags.push_back({Diagnostic::Severity::Error, "constraint references step out of range"});
            continue;
        }
        if (c.s1 == c.s2 && c.kind == ConstraintKind::Neq)
            diags.push_back({Diagnostic::Severity::Error,
                             "reflexive disequality on step '" + inst.step_names[c.s1] +
                                 "' (trivially unsatisfiable)"});
        if (c.s1 == c.s2 && c.kind == ConstraintKind::Lt)
            diags.push_back({Diagnostic::Severity::Error,
                             "reflexive seniority constraint on step '" + inst.step_names[c.s1] +
                                 "' (trivially unsatisfiable)"});
    }
    for (const auto& [lo, hi] : inst.users.cover_arcs())
        if (lo < 0 || lo >= n || hi < 0 || hi >= n)
            diags.push_back({Diagnostic::Severity::Error, "order arc references user out of range"});

    for (int s = 0; s < k; ++s)
        if (inst.auth.row_popcount(s) == 0)
            diags.push_back({Diagnostic::Severity::Advisory,
                             "no authorized user for step '" + inst.step_names[s] +
                                 "' (trivially unsatisfiable)"});
    return diags;
}

bool has_error(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
        return d.severity == Diagnostic::Severity::Error;
    });
}

const char* to_string(ConstraintKind k) {
    switch (k) {
        case ConstraintKind::Eq: return "eq";
        case ConstraintKind::Neq: return "neq";
        case ConstraintKind::Lt: return "lt";
    }
    return "?";
}

}  // namespace wsp
