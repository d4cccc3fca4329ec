#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "domlab/errors.hpp"

namespace domlab {

/// One isomorphism class inside a domination DAG. `payload` is an opaque
/// caller-side index (typically into a vector of group descriptors).
struct ClassNode {
    std::string id;     ///< unique within the DAG; also the tie-breaking key
    std::string label;  ///< display string
    std::size_t payload = 0;
};

/// DAG over isomorphism classes where an edge u -> v means "v is properly
/// dominated by u". Edges are transitively closed on construction; the
/// relation must be acyclic (every supported group class is Hopfian, so a
/// d-equal non-isomorphic pair is reported as CycleDetected rather than
/// modeled).
class DominationDAG {
public:
    using Predicate = std::function<bool(const ClassNode&, const ClassNode&)>;

    /// Builds the DAG from scratch. `dominates(u, v)` decides v <=d u and
    /// `proper(u, v)` decides v <p u (domination without isomorphism); edges
    /// are the proper pairs. `root_id` names the node whose classes the DAG
    /// describes; it must be present in `nodes`.
    /// Throws CycleDetected, naming a d-equal non-isomorphic pair.
    static DominationDAG build(std::vector<ClassNode> nodes, const std::string& root_id,
                               const Predicate& dominates, const Predicate& proper);

    std::size_t class_count() const { return nodes_.size(); }
    const std::vector<ClassNode>& nodes() const { return nodes_; }
    const ClassNode& root() const { return nodes_[root_]; }

    /// True iff `to` is properly dominated by `from` (after transitive closure).
    bool has_edge(const std::string& from_id, const std::string& to_id) const;

    struct Chain {
        std::size_t length = 0;          ///< number of nodes on the path
        std::vector<ClassNode> nodes;    ///< ascending: most-dominated class first
    };

    /// Maximum-node-count path, computed by topological dynamic programming.
    /// Among maximum paths the witness is the one whose ascending id sequence
    /// is lexicographically smallest.
    Chain longest_chain() const;

    struct ChainCheck {
        bool ok = true;
        std::size_t violation = 0;  ///< index into `ids` of the first violation
        std::string reason;
    };

    /// Verifies an ascending chain: every id resolves, consecutive elements are
    /// joined by an edge (later properly dominates earlier), and all entries
    /// are pairwise distinct.
    ChainCheck verify_chain(const std::vector<std::string>& ids) const;

private:
    DominationDAG() = default;

    std::size_t index_of(const std::string& id) const;  // npos when absent

    std::vector<ClassNode> nodes_;
    std::size_t root_ = 0;
    std::vector<std::vector<char>> edge_;  // edge_[u][v]: v properly dominated by u
};

}  // namespace domlab
