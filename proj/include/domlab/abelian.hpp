#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "domlab/errors.hpp"
#include "domlab/poset.hpp"

namespace domlab {

/// One canonical building block of a finitely generated abelian group:
/// either the infinite cyclic group Z or a cyclic group of prime-power
/// order p^alpha.
struct Factor {
    std::uint64_t prime = 0;     ///< 0 marks the infinite cyclic factor
    std::uint32_t exponent = 0;  ///< >= 1 for prime powers, 0 for Z

    static Factor infinite_cyclic() { return Factor{}; }

    /// Throws ValueError unless p is prime (trial division) and alpha >= 1.
    static Factor prime_power(std::uint64_t p, std::uint32_t alpha);

    bool is_infinite() const { return prime == 0; }

    /// p^alpha for finite factors. Only valid when the value was produced by
    /// factoring a 64-bit modulus, which bounds it by construction.
    std::uint64_t modulus() const;

    // Canonical order: Z first, then (p, alpha) ascending.
    friend auto operator<=>(const Factor&, const Factor&) = default;
};

struct Summand {
    Factor factor;
    std::uint64_t multiplicity = 0;  ///< >= 1 in canonical form

    friend auto operator<=>(const Summand&, const Summand&) = default;
};

/// A finitely generated abelian group in primary decomposition: pairwise
/// distinct factors in canonical order, each with multiplicity >= 1. The
/// empty list is the trivial group. Build through canonicalize(); two groups
/// are isomorphic iff their canonical forms compare equal.
struct AbelianGroup {
    std::vector<Summand> summands;

    bool is_trivial() const { return summands.empty(); }
    bool is_finite() const;

    /// Σ multiplicities of finite factors plus rank; distinct-factor count.
    std::size_t factor_count() const { return summands.size(); }

    /// Group order when finite and within 64 bits.
    std::optional<std::uint64_t> order() const;

    friend auto operator<=>(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Raw encoding at the I/O boundary: modulus 0 encodes Z, modulus 1 the
/// trivial factor, m >= 2 the cyclic group Z_m (composites allowed).
using RawSummands = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

/// Normal form: splits composite moduli by prime factorization, drops trivial
/// factors and zero multiplicities, merges equal factors, sorts canonically.
/// Every raw input normalizes; the only failure mode is multiplicity overflow
/// past 2^64-1 while merging.
AbelianGroup canonicalize(const RawSummands& raw);

/// Inverse of the encoding above (one entry per canonical summand).
RawSummands to_raw(const AbelianGroup& g);

/// Whether `h` is (isomorphic to) a direct summand of `g`: every factor of
/// `h` occurs in `g` with at least the same multiplicity.
bool is_summand(const AbelianGroup& h, const AbelianGroup& g);

/// All direct summands of `g` up to isomorphism, each class exactly once.
/// Deterministic: per-factor chosen multiplicities run through an odometer
/// with the first canonical factor varying fastest. Throws ValueError when
/// the class count exceeds 2^20 (callers should check capacity() first).
std::vector<AbelianGroup> direct_summands(const AbelianGroup& g);

/// Number of direct summand classes: Π (k_i + 1) over the multiplicities.
mpz_class capacity(const AbelianGroup& g);

/// capacity - 1 (every finitely generated abelian group is Hopfian).
mpz_class strong_capacity(const AbelianGroup& g);

/// Σ k_i + 1. Throws ValueError if the sum overflows a signed 64-bit integer.
std::int64_t depth(const AbelianGroup& g);

/// Equal to depth() for these groups.
std::int64_t strong_depth(const AbelianGroup& g);

/// A chain of length depth(g) from the trivial group to `g`, each element a
/// proper direct summand of the next; multiplicities grow one at a time,
/// exhausting each canonical factor before moving to the next.
std::vector<AbelianGroup> witness_chain(const AbelianGroup& g);

/// Canonical display form, e.g. "1", "Z", "Z^2 + Z_2", "Z_8 + Z_9^3".
/// Reparsing the result yields an equal group.
std::string render(const AbelianGroup& g);

bool is_canonical(const AbelianGroup& g);

/// Every canonical finite abelian group of order <= max_order, ordered by
/// (order, canonical form).
std::vector<AbelianGroup> finite_abelian_groups_up_to(std::uint64_t max_order);

/// Domination DAG over direct_summands(g) with the summand relation as
/// domination; node ids are render() strings and payloads index the
/// direct_summands() enumeration.
DominationDAG summand_dag(const AbelianGroup& g);

}  // namespace domlab
