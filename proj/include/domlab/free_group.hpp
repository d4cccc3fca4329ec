#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domlab/errors.hpp"

namespace domlab {

/// A free group of finite rank; rank 0 is the trivial group.
struct FreeGroup {
    std::int64_t rank = 0;

    static constexpr std::int64_t max_rank = INT32_MAX;

    /// Throws ValueError unless 0 <= rank <= max_rank.
    static FreeGroup of_rank(std::int64_t rank);

    friend auto operator<=>(const FreeGroup&, const FreeGroup&) = default;
};

std::int64_t capacity(FreeGroup f);         // rank + 1
std::int64_t strong_capacity(FreeGroup f);  // rank
std::int64_t depth(FreeGroup f);            // rank + 1
std::int64_t strong_depth(FreeGroup f);     // rank + 1

/// Every class dominated by f: the free groups of rank 0..rank, ascending.
/// Throws ValueError when the list would exceed 2^20 entries.
std::vector<FreeGroup> dominated_classes(FreeGroup f);

/// A chain realizing depth(f): ranks 0, 1, ..., rank, smallest first.
std::vector<FreeGroup> witness_chain(FreeGroup f);

std::string render(FreeGroup f);  // "F_<rank>"

}  // namespace domlab
