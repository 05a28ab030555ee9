#include "wsp/poset.hpp"

#include <algorithm>
#include <queue>

namespace wsp {

std::vector<int> topological_order(int n, const std::vector<Arc>& arcs) {
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0);
    for (const auto& [x, y] : arcs) {
        succ[x].push_back(y);
        ++indeg[y];
    }
    std::vector<int> order;
    order.reserve(n);
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;  // stable output
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : succ[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != n) throw CycleError("order arcs contain a cycle");
    return order;
}

namespace {

// Closure rows as a bit matrix, rows indexed by vertex.
BitMatrix closure_matrix(int n, const std::vector<Arc>& arcs) {
    auto order = topological_order(n, arcs);
    std::vector<std::vector<int>> succ(n);
    for (const auto& [x, y] : arcs) succ[x].push_back(y);
    BitMatrix reach(n, n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int u = *it;
        for (int v : succ[u]) {
            reach.set(u, v);
            reach.or_row(u, v);
        }
    }
    return reach;
}

std::vector<Arc> matrix_arcs(const BitMatrix& m) {
    std::vector<Arc> out;
    for (std::size_t u = 0; u < m.rows(); ++u)
        for (int v : m.row_members(u)) out.emplace_back(static_cast<int>(u), v);
    return out;
}

// Sparse closure: sorted successor sets, merged in reverse topological order.
std::vector<std::vector<int>> closure_sets(int n, const std::vector<Arc>& arcs) {
    auto order = topological_order(n, arcs);
    std::vector<std::vector<int>> succ(n);
    for (const auto& [x, y] : arcs) succ[x].push_back(y);
    std::vector<std::vector<int>> reach(n);
    std::vector<int> scratch;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int u = *it;
        auto& ru = reach[u];
        for (int v : succ[u]) {
            scratch.assign(1, v);
            scratch.insert(scratch.end(), reach[v].begin(), reach[v].end());
            std::sort(scratch.begin(), scratch.end());
            std::vector<int> merged;
            merged.reserve(ru.size() + scratch.size());
            std::set_union(ru.begin(), ru.end(), scratch.begin(), scratch.end(),
                           std::back_inserter(merged));
            ru = std::move(merged);
        }
    }
    return reach;
}

bool sorted_contains(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

std::vector<Arc> transitive_closure(int n, const std::vector<Arc>& arcs) {
    if (n <= UserPoset::kDenseLimit) return matrix_arcs(closure_matrix(n, arcs));
    auto sets = closure_sets(n, arcs);
    std::vector<Arc> out;
    for (int u = 0; u < n; ++u)
        for (int v : sets[u]) out.emplace_back(u, v);
    return out;
}

std::vector<Arc> transitive_reduction(int n, const std::vector<Arc>& arcs) {
    if (n <= UserPoset::kDenseLimit) {
        BitMatrix fwd = closure_matrix(n, arcs);
        BitMatrix bwd(n, n);
        for (int u = 0; u < n; ++u)
            for (int v : fwd.row_members(u)) bwd.set(v, u);
        std::vector<Arc> out;
        for (int u = 0; u < n; ++u)
            for (int v : fwd.row_members(u))
                // (u,v) is redundant iff some w has u < w < v.
                if (!bitrows::active().intersects(fwd.row(u), bwd.row(v), fwd.words_per_row()))
                    out.emplace_back(u, v);
        return out;
    }
    auto sets = closure_sets(n, arcs);
    std::vector<Arc> out;
    for (int u = 0; u < n; ++u) {
        for (int v : sets[u]) {
            bool redundant = false;
            for (int w : sets[u]) {
                if (w != v && sorted_contains(sets[w], v)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) out.emplace_back(u, v);
        }
    }
    return out;
}

const char* to_string(RelationSymbol s) {
    switch (s) {
        case RelationSymbol::LT: return "[<]";
        case RelationSymbol::GT: return "[>]";
        case RelationSymbol::INC: return "[~]";
    }
    return "?";
}

UserPoset::UserPoset(int n, const std::vector<Arc>& arcs) : n_(n) {
    dense_ = n <= kDenseLimit;
    if (dense_) {
        fwd_ = closure_matrix(n, arcs);
        bwd_ = BitMatrix(n, n);
        cover_.clear();
        for (int u = 0; u < n; ++u)
            for (int v : fwd_.row_members(u)) bwd_.set(v, u);
        for (int u = 0; u < n; ++u)
            for (int v : fwd_.row_members(u))
                if (!bitrows::active().intersects(fwd_.row(u), bwd_.row(v), fwd_.words_per_row()))
                    cover_.emplace_back(u, v);
    } else {
        succ_sets_ = closure_sets(n, arcs);
        std::vector<Arc> closed;
        for (int u = 0; u < n; ++u)
            for (int v : succ_sets_[u]) closed.emplace_back(u, v);
        cover_ = transitive_reduction(n, closed);
    }
    cover_succ_.assign(n, {});
    for (const auto& [x, y] : cover_) cover_succ_[x].push_back(y);
    for (auto& s : cover_succ_) std::sort(s.begin(), s.end());
}

std::vector<Arc> UserPoset::closure_arcs() const {
    if (dense_) return matrix_arcs(fwd_);
    std::vector<Arc> out;
    for (int u = 0; u < n_; ++u)
        for (int v : succ_sets_[u]) out.emplace_back(u, v);
    return out;
}

bool UserPoset::less(int u, int v) const {
    if (dense_) return fwd_.test(u, v);
    return sorted_contains(succ_sets_[u], v);
}

RelationSymbol UserPoset::compare(int u, int v) const {
    if (u == v) throw std::invalid_argument("compare: reflexive comparison");
    if (less(u, v)) return RelationSymbol::LT;
    if (less(v, u)) return RelationSymbol::GT;
    return RelationSymbol::INC;
}

RelationTuple UserPoset::relation_tuple(int v, const std::vector<int>& bag) const {
    RelationTuple out;
    out.reserve(bag.size());
    for (int b : bag) {
        if (b == v) throw std::invalid_argument("relation_tuple: user is in the bag");
        out.push_back(compare(v, b));
    }
    return out;
}

bool UserPoset::separates(const std::vector<int>& barrier, int y, int z) const {
    if (y == z) throw std::invalid_argument("separates: identical endpoints");
    std::vector<char> blocked(n_, 0);
    for (int b : barrier) {
        if (b == y || b == z) throw std::invalid_argument("separates: endpoint in barrier");
        blocked[b] = 1;
    }
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{y};
    seen[y] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (u == z) return false;
        for (int w : cover_succ_[u]) {
            if (!seen[w] && !blocked[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return true;
}

int degeneracy(int n, const std::vector<Arc>& edges) {
    if (n == 0) return 0;
    std::vector<std::vector<int>> adj(n);
    for (const auto& [x, y] : edges) {
        if (x == y) continue;
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());
    std::vector<char> removed(n, 0);
    int result = 0;
    for (int peeled = 0; peeled < n; ++peeled) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || degree[v] < degree[best])) best = v;
        result = std::max(result, degree[best]);
        removed[best] = 1;
        for (int w : adj[best])
            if (!removed[w]) --degree[w];
    }
    return result;
}

}  // namespace wsp
