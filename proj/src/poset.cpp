#include "domlab/poset.hpp"

#include <algorithm>
#include <set>

namespace domlab {

DominationDAG DominationDAG::build(std::vector<ClassNode> nodes, const std::string& root_id,
                                   const Predicate& dominates, const Predicate& proper) {
    DominationDAG dag;
    dag.nodes_ = std::move(nodes);
    const std::size_t n = dag.nodes_.size();

    std::set<std::string> seen;
    for (const ClassNode& node : dag.nodes_) {
        if (!seen.insert(node.id).second)
            throw InternalError("duplicate class id in DAG: " + node.id);
    }
    dag.root_ = dag.index_of(root_id);
    if (dag.root_ >= n)
        throw InternalError("root id not among DAG nodes: " + root_id);

    dag.edge_.assign(n, std::vector<char>(n, 0));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) continue;
            if (proper(dag.nodes_[u], dag.nodes_[v])) {
                if (!dominates(dag.nodes_[u], dag.nodes_[v]))
                    throw InternalError("proper domination without domination: " +
                                        dag.nodes_[u].id + " over " + dag.nodes_[v].id);
                dag.edge_[u][v] = 1;
            }
        }
    }

    // A mutual edge is exactly a d-equal pair of distinct (hence non-isomorphic) classes.
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (dag.edge_[u][v] && dag.edge_[v][u])
                throw CycleDetected("d-equal but non-isomorphic classes: " + dag.nodes_[u].id +
                                    " and " + dag.nodes_[v].id);

    // Transitive closure (Warshall). Running it before the cycle check below keeps
    // longer cycles detectable as mutual edges.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t u = 0; u < n; ++u) {
            if (!dag.edge_[u][k]) continue;
            for (std::size_t v = 0; v < n; ++v)
                if (dag.edge_[k][v]) dag.edge_[u][v] = 1;
        }

    for (std::size_t u = 0; u < n; ++u) {
        if (dag.edge_[u][u])
            throw CycleDetected("domination cycle through class " + dag.nodes_[u].id);
        for (std::size_t v = u + 1; v < n; ++v)
            if (dag.edge_[u][v] && dag.edge_[v][u])
                throw CycleDetected("d-equal but non-isomorphic classes: " + dag.nodes_[u].id +
                                    " and " + dag.nodes_[v].id);
    }

    return dag;
}

std::size_t DominationDAG::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].id == id) return i;
    return static_cast<std::size_t>(-1);
}

bool DominationDAG::has_edge(const std::string& from_id, const std::string& to_id) const {
    const std::size_t u = index_of(from_id);
    const std::size_t v = index_of(to_id);
    if (u >= nodes_.size() || v >= nodes_.size()) return false;
    return edge_[u][v] != 0;
}

DominationDAG::Chain DominationDAG::longest_chain() const {
    const std::size_t n = nodes_.size();
    // up[v] = node count of the longest ascending chain starting at v, where a
    // step v -> u is allowed when u properly dominates v (edge_[u][v]).
    std::vector<std::size_t> up(n, 0);

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    // In the transitively closed DAG a dominator of v has strictly fewer
    // dominators than v, so increasing dominator count is a topological order
    // with every ascent target processed first.
    std::vector<std::size_t> dominators(n, 0);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (edge_[u][v]) ++dominators[v];
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return dominators[a] < dominators[b]; });

    for (std::size_t v : order) {
        std::size_t best = 0;
        for (std::size_t u = 0; u < n; ++u)
            if (edge_[u][v]) best = std::max(best, up[u]);
        up[v] = best + 1;
    }

    Chain chain;
    if (n == 0) return chain;
    chain.length = *std::max_element(up.begin(), up.end());

    auto smallest_with = [&](std::size_t target, std::size_t from,
                             bool restrict_to_dominators) -> std::size_t {
        std::size_t pick = static_cast<std::size_t>(-1);
        for (std::size_t v = 0; v < n; ++v) {
            if (up[v] != target) continue;
            if (restrict_to_dominators && !edge_[v][from]) continue;
            if (pick == static_cast<std::size_t>(-1) || nodes_[v].id < nodes_[pick].id) pick = v;
        }
        return pick;
    };

    std::size_t cur = smallest_with(chain.length, 0, false);
    chain.nodes.push_back(nodes_[cur]);
    for (std::size_t remaining = chain.length - 1; remaining > 0; --remaining) {
        cur = smallest_with(remaining, cur, true);
        chain.nodes.push_back(nodes_[cur]);
    }
    return chain;
}

DominationDAG::ChainCheck DominationDAG::verify_chain(const std::vector<std::string>& ids) const {
    ChainCheck check;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (index_of(ids[i]) >= nodes_.size()) {
            check.ok = false;
            check.violation = i;
            check.reason = "unknown class id: " + ids[i];
            return check;
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (ids[j] == ids[i]) {
                check.ok = false;
                check.violation = i;
                check.reason = "class repeated in chain: " + ids[i];
                return check;
            }
        }
        if (i > 0 && !has_edge(ids[i], ids[i - 1])) {
            check.ok = false;
            check.violation = i;
            check.reason = ids[i - 1] + " is not properly dominated by " + ids[i];
            return check;
        }
    }
    return check;
}

}  // namespace domlab
