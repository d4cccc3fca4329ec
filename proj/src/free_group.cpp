#include "domlab/free_group.hpp"

namespace domlab {

namespace {
constexpr std::int64_t enumeration_limit = std::int64_t{1} << 20;

std::vector<FreeGroup> ascending_ranks(FreeGroup f) {
    if (f.rank + 1 > enumeration_limit)
        throw ValueError("too many free-group classes to enumerate (rank " +
                         std::to_string(f.rank) + ")");
    std::vector<FreeGroup> out;
    out.reserve(static_cast<std::size_t>(f.rank) + 1);
    for (std::int64_t r = 0; r <= f.rank; ++r) out.push_back(FreeGroup{r});
    return out;
}
}  // namespace

FreeGroup FreeGroup::of_rank(std::int64_t rank) {
    if (rank < 0) throw ValueError("free-group rank must be >= 0");
    if (rank > max_rank)
        throw ValueError("free-group rank exceeds " + std::to_string(max_rank));
    return FreeGroup{rank};
}

std::int64_t capacity(FreeGroup f) { return f.rank + 1; }
std::int64_t strong_capacity(FreeGroup f) { return f.rank; }
std::int64_t depth(FreeGroup f) { return f.rank + 1; }
std::int64_t strong_depth(FreeGroup f) { return f.rank + 1; }

std::vector<FreeGroup> dominated_classes(FreeGroup f) { return ascending_ranks(f); }

std::vector<FreeGroup> witness_chain(FreeGroup f) { return ascending_ranks(f); }

std::string render(FreeGroup f) { return "F_" + std::to_string(f.rank); }

}  // namespace domlab
