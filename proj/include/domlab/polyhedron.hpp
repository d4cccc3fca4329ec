#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "domlab/abelian.hpp"
#include "domlab/errors.hpp"
#include "domlab/free_group.hpp"

namespace domlab {

/// Depth supplied by the caller for a group outside the computable classes.
/// The polyhedron bound is only valid when every retract of the group is
/// Hopfian; that is unverifiable here and must be attested explicitly.
struct AssertedDepth {
    std::int64_t depth = 1;
    bool hopfian_retracts = false;
};

/// A fundamental-group or homology slot in a polyhedron descriptor.
using GroupSpec = std::variant<AbelianGroup, FreeGroup, AssertedDepth>;

/// Depth of the described group: computed for abelian and free groups,
/// passed through for asserted values. Throws HopfianAssumptionMissing when
/// an asserted depth lacks the attestation, ValueError when it is < 1.
std::int64_t resolve_depth(const GroupSpec& spec);

/// Depth-relevant data of a finite n-dimensional polyhedron: the fundamental
/// group and the homology groups of the universal cover in dimensions 2..n.
/// A missing dimension means the trivial group (depth 1).
struct PolyhedronDescriptor {
    int dimension = 1;
    GroupSpec pi1 = AbelianGroup{};
    std::map<int, GroupSpec> homology;
};

/// Upper bound for the depth of the polyhedron:
///   (sum of k_i for i = 1..n) - n + 1
/// with k_1 the depth of pi1 and k_i the depth of homology[i]. Throws
/// DimensionMismatch for homology keys outside {2..n} and ValueError for
/// dimension < 1 or 64-bit overflow.
std::int64_t theorem_bound(const PolyhedronDescriptor& desc);

/// Depth bound for finite fundamental group: d_pi1 + sum of t_i, where t[i]
/// counts the distinct prime-power factors of the homology in dimension i+2.
std::int64_t corollary_finite_pi1(std::int64_t d_pi1, const std::vector<std::int64_t>& t);

/// Depth bound for fully abelian data: (sum of t_i for i = 1..n) + 1.
std::int64_t corollary_abelian(const std::vector<std::int64_t>& t);

/// A polyhedron with known capacity and/or depth.
struct CatalogEntry {
    std::string name;
    std::optional<mpz_class> capacity;
    std::optional<std::int64_t> depth;
    std::string source;  ///< family of spaces the value comes from
};

/// The fixed catalog: the genus-2 surface T#T and the product S1xS2, the
/// standard pair with equal capacities but different depths.
std::vector<CatalogEntry> catalog();

/// Fixed entries by exact name, plus the parameterized families
///   surface:<g>                 orientable closed surface, genus g >= 0
///   nonorientable-surface:<g>   non-orientable closed surface, g >= 1
///   wedge-circles:<k>           wedge of k >= 1 circles (capacity only)
///   wedge-spheres:<n>=<i>,...   wedge of i_n spheres of dimension n >= 2
/// Returns nullopt for names outside the catalog; throws ValueError when a
/// recognized family gets an out-of-range or malformed parameter.
std::optional<CatalogEntry> catalog_lookup(const std::string& name);

}  // namespace domlab
