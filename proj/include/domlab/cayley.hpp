#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "domlab/abelian.hpp"
#include "domlab/errors.hpp"
#include "domlab/poset.hpp"

namespace domlab {

/// Default cap on the group order accepted by the brute-force searches.
/// The CLI overrides it through DOMLAB_MAX_ORDER.
inline constexpr int default_order_cap = 64;

/// Full multiplication table of a finite group. Element 0 is the identity;
/// build through validate(), parse_cayley() or cayley_from_moduli() so the
/// group axioms are guaranteed.
struct CayleyTable {
    int n = 1;
    std::vector<int> entries;  ///< row-major n*n; entries[i*n+j] = i*j

    int mul(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

/// Checks closure, identity at index 0, the Latin-square property and
/// associativity (in that order); throws TableError naming the first
/// violating row/triple.
CayleyTable validate(int n, std::vector<int> entries);

/// File format: first data line is n, followed by n lines of n entries.
/// '#' starts a comment, blank lines are ignored. Validates before returning.
CayleyTable parse_cayley(std::istream& in);
CayleyTable parse_cayley_file(const std::string& path);

int element_order(const CayleyTable& g, int x);
std::vector<int> element_orders(const CayleyTable& g);
bool is_abelian(const CayleyTable& g);

/// Greedy generating set: repeatedly adds the element that maximally enlarges
/// the generated subgroup, ties broken by smallest index.
std::vector<int> minimal_generators(const CayleyTable& g);

/// Every subgroup as a sorted element list, ordered by (size, elements).
std::vector<std::vector<int>> subgroups(const CayleyTable& g);

/// h[i] is the image of element i.
using Endomorphism = std::vector<int>;

bool is_endomorphism(const CayleyTable& g, const Endomorphism& h);
bool is_idempotent(const CayleyTable& g, const Endomorphism& h);

/// All endomorphisms, enumerated deterministically by backtracking over
/// images of minimal_generators with incremental consistency. Throws
/// OrderCapExceeded above the cap.
std::vector<Endomorphism> endomorphisms(const CayleyTable& g, int order_cap = default_order_cap);

/// All idempotent endomorphisms, enumerated as retractions onto each
/// subgroup in turn (an idempotent is exactly a retraction onto its image).
std::vector<Endomorphism> idempotents(const CayleyTable& g, int order_cap = default_order_cap);

/// e(g): the number of idempotent endomorphisms, without materializing them.
std::int64_t idempotent_count(const CayleyTable& g, int order_cap = default_order_cap);

/// Isomorphism-invariant fingerprint; equality is necessary but not
/// sufficient for isomorphism (pre-filter only).
struct IsoProfile {
    int order = 0;
    bool abelian = false;
    std::vector<int> element_orders;                       // sorted
    std::vector<std::pair<int, int>> order_centralizer;    // sorted (order, |centralizer|)

    static IsoProfile of(const CayleyTable& g);

    friend auto operator<=>(const IsoProfile&, const IsoProfile&) = default;
};

/// Profile pre-filter, then backtracking over generator images. Sound and
/// complete for any pair of valid tables.
bool is_isomorphic(const CayleyTable& a, const CayleyTable& b);

/// One isomorphism class of retracts (images of idempotent endomorphisms).
struct RetractClass {
    CayleyTable representative;  ///< induced table, re-indexed by sorted parent indices
    std::vector<int> image;      ///< sorted element indices in the parent
    Endomorphism witness;        ///< first-found idempotent with this image
};

/// One representative per isomorphism class of retracts, ordered by
/// (order, profile, first-found). Always contains the trivial class and g.
std::vector<RetractClass> retract_classes(const CayleyTable& g, int order_cap = default_order_cap);

std::int64_t capacity_bruteforce(const CayleyTable& g, int order_cap = default_order_cap);

/// Domination DAG over retract_classes: edge K -> H iff H is a retract of K
/// and H, K are non-isomorphic. Node payloads index retract_classes(g).
DominationDAG retract_dag(const CayleyTable& g, int order_cap = default_order_cap);

/// Maximum node count over all paths of retract_dag(g).
std::int64_t depth_bruteforce(const CayleyTable& g, int order_cap = default_order_cap);

struct HolBoundReport {
    std::int64_t capacity = 0;
    std::int64_t idempotents = 0;
    bool holds = false;  ///< capacity <= idempotents; true for every valid group
};

HolBoundReport hol_bound_report(const CayleyTable& g, int order_cap = default_order_cap);

/// Direct sum of cyclic groups Z_{m_1} x ... x Z_{m_k}; each m_i >= 2.
/// The empty list gives the trivial group. Throws ValueError when the order
/// exceeds the table-size guard (4096).
CayleyTable cayley_from_moduli(const std::vector<std::uint64_t>& moduli);

/// Table of a finite canonical abelian group.
CayleyTable cayley_from_abelian(const AbelianGroup& g);

/// Primary decomposition of an abelian table, recovered from element-order
/// statistics; nullopt for nonabelian input.
std::optional<AbelianGroup> recognize_abelian(const CayleyTable& g);

/// Short display name: the decomposition for abelian tables, otherwise
/// "order-<n> nonabelian".
std::string describe(const CayleyTable& g);

}  // namespace domlab
