#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wsp/bitrows.hpp"

namespace wsp {

using Arc = std::pair<int, int>;

struct CycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Topological order of 0..n-1 under the given arcs; throws CycleError.
std::vector<int> topological_order(int n, const std::vector<Arc>& arcs);

// (x,y) in the result iff a directed path x -> ... -> y exists.
std::vector<Arc> transitive_closure(int n, const std::vector<Arc>& arcs);

// Unique minimal arc set with the same closure (input must be a DAG).
std::vector<Arc> transitive_reduction(int n, const std::vector<Arc>& arcs);

enum class RelationSymbol : std::uint8_t { LT = 0, GT = 1, INC = 2 };

const char* to_string(RelationSymbol s);  // "[<]", "[>]", "[~]"

using RelationTuple = std::vector<RelationSymbol>;

// Strict partial order over users 0..n-1, built from an arbitrary DAG of
// order arcs. Stores the Hasse diagram (cover arcs) and the closure; the
// closure sits in a bit matrix up to kDenseLimit users and in sorted
// adjacency vectors above that.
class UserPoset {
public:
    static constexpr int kDenseLimit = 4096;

    UserPoset() = default;
    UserPoset(int n, const std::vector<Arc>& arcs);  // throws CycleError

    int size() const { return n_; }
    const std::vector<Arc>& cover_arcs() const { return cover_; }
    std::vector<Arc> closure_arcs() const;

    // u < v in the order.
    bool less(int u, int v) const;

    // Trichotomy over distinct users; throws std::invalid_argument if u == v.
    RelationSymbol compare(int u, int v) const;

    // phi(v, b) for each bag member b, in bag order; v must not be in bag.
    RelationTuple relation_tuple(int v, const std::vector<int>& bag) const;

    // True iff D - barrier has no directed path y -> z (directional).
    bool separates(const std::vector<int>& barrier, int y, int z) const;

    // Cover-arc successors of u in the Hasse diagram.
    const std::vector<int>& cover_successors(int u) const { return cover_succ_[u]; }

private:
    int n_ = 0;
    std::vector<Arc> cover_;
    std::vector<std::vector<int>> cover_succ_;
    bool dense_ = true;
    BitMatrix fwd_;  // fwd_(u,v) iff u < v
    BitMatrix bwd_;  // bwd_(v,u) iff u < v
    std::vector<std::vector<int>> succ_sets_;  // sorted, sparse representation
};

// Minimum l such that every induced subgraph of the undirected graph has a
// vertex of degree <= l (min-degree peeling). Arc orientation is ignored.
int degeneracy(int n, const std::vector<Arc>& edges);

}  // namespace wsp
