#include <cstdint>

#include "doctest.h"
#include "domlab/polyhedron.hpp"

using namespace domlab;

namespace {

AbelianGroup abelian(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> raw) {
    return canonicalize(RawSummands(raw));
}

}  // namespace

TEST_CASE("resolve_depth computes or passes through per group kind") {
    CHECK(resolve_depth(abelian({{2, 1}, {0, 2}})) == 4);
    CHECK(resolve_depth(AbelianGroup{}) == 1);
    CHECK(resolve_depth(FreeGroup::of_rank(3)) == 4);
    CHECK(resolve_depth(AssertedDepth{5, true}) == 5);
    CHECK_THROWS_AS(resolve_depth(AssertedDepth{5, false}), HopfianAssumptionMissing);
    CHECK_THROWS_AS(resolve_depth(AssertedDepth{0, true}), ValueError);
}

TEST_CASE("depth bound adds homology depths above the fundamental group") {
    PolyhedronDescriptor desc;
    desc.dimension = 2;
    desc.pi1 = abelian({{2, 1}, {0, 2}});
    desc.homology[2] = abelian({{0, 1}});
    CHECK(theorem_bound(desc) == 5);
}

TEST_CASE("trivial data gives the minimum bound") {
    PolyhedronDescriptor desc;
    desc.dimension = 3;
    CHECK(theorem_bound(desc) == 1);
}

TEST_CASE("absent homology dimensions contribute nothing") {
    PolyhedronDescriptor desc;
    desc.dimension = 5;
    desc.pi1 = FreeGroup::of_rank(2);
    desc.homology[3] = abelian({{0, 2}});
    CHECK(theorem_bound(desc) == 3 + 2);
}

TEST_CASE("two cyclic groups in dimensions 1 and 2 bound at three") {
    PolyhedronDescriptor desc;
    desc.dimension = 2;
    desc.pi1 = abelian({{5, 1}});
    desc.homology[2] = abelian({{7, 1}});
    CHECK(theorem_bound(desc) == 3);
    CHECK(corollary_abelian({1, 1}) == 3);
}

TEST_CASE("asserted depths participate in the bound") {
    PolyhedronDescriptor desc;
    desc.dimension = 2;
    desc.pi1 = AssertedDepth{4, true};
    desc.homology[2] = AssertedDepth{3, true};
    CHECK(theorem_bound(desc) == 6);

    desc.homology[2] = AssertedDepth{3, false};
    CHECK_THROWS_AS(theorem_bound(desc), HopfianAssumptionMissing);
}

TEST_CASE("dimension and homology keys are validated") {
    PolyhedronDescriptor desc;
    desc.dimension = 0;
    CHECK_THROWS_AS(theorem_bound(desc), ValueError);

    desc.dimension = 2;
    desc.homology[3] = AbelianGroup{};
    CHECK_THROWS_AS(theorem_bound(desc), DimensionMismatch);

    desc.homology.clear();
    desc.homology[1] = AbelianGroup{};
    CHECK_THROWS_AS(theorem_bound(desc), DimensionMismatch);
}

TEST_CASE("the bound rejects 64-bit overflow") {
    PolyhedronDescriptor desc;
    desc.dimension = 2;
    desc.pi1 = AssertedDepth{INT64_MAX, true};
    desc.homology[2] = AssertedDepth{INT64_MAX, true};
    CHECK_THROWS_AS(theorem_bound(desc), ValueError);
}

TEST_CASE("closed-form corollaries") {
    CHECK(corollary_finite_pi1(3, {1, 2}) == 6);
    CHECK(corollary_finite_pi1(1, {}) == 1);
    CHECK(corollary_finite_pi1(2, {0, 0, 4}) == 6);
    CHECK_THROWS_AS(corollary_finite_pi1(0, {}), ValueError);
    CHECK_THROWS_AS(corollary_finite_pi1(2, {-1}), ValueError);

    CHECK(corollary_abelian({}) == 1);
    CHECK(corollary_abelian({0, 0}) == 1);
    CHECK(corollary_abelian({2, 3}) == 6);
    CHECK_THROWS_AS(corollary_abelian({-2}), ValueError);
}

TEST_CASE("the fixed catalog holds the equal-capacity different-depth pair") {
    auto entries = catalog();
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].name == "T#T");
    CHECK(entries[0].capacity == mpz_class(4));
    CHECK(entries[0].depth == 4);
    CHECK(entries[1].name == "S1xS2");
    CHECK(entries[1].capacity == mpz_class(4));
    CHECK(entries[1].depth == 3);

    CHECK(catalog_lookup("T#T").has_value());
    CHECK(catalog_lookup("S1xS2")->depth == 3);
}

TEST_CASE("orientable surfaces scale with genus") {
    for (std::uint64_t g = 0; g <= 5; ++g) {
        auto e = catalog_lookup("surface:" + std::to_string(g));
        REQUIRE(e.has_value());
        CHECK(e->capacity == mpz_class(static_cast<unsigned long>(g + 2)));
        CHECK(e->depth == static_cast<std::int64_t>(g + 2));
        CHECK(e->source == "closed-surfaces");
    }
}

TEST_CASE("non-orientable surfaces use the halved genus") {
    CHECK(catalog_lookup("nonorientable-surface:1")->depth == 2);
    CHECK(catalog_lookup("nonorientable-surface:2")->depth == 3);
    CHECK(catalog_lookup("nonorientable-surface:5")->depth == 4);
    CHECK_THROWS_AS(catalog_lookup("nonorientable-surface:0"), ValueError);
}

TEST_CASE("circle wedges report capacity only") {
    auto e = catalog_lookup("wedge-circles:4");
    REQUIRE(e.has_value());
    CHECK(e->capacity == mpz_class(5));
    CHECK_FALSE(e->depth.has_value());
    CHECK(e->source == "circle-wedges");
    CHECK_THROWS_AS(catalog_lookup("wedge-circles:0"), ValueError);
}

TEST_CASE("sphere wedges multiply copy counts plus one") {
    auto e = catalog_lookup("wedge-spheres:2=1,3=2");
    REQUIRE(e.has_value());
    CHECK(e->capacity == mpz_class(6));
    CHECK(e->depth == 6);
    CHECK(e->source == "sphere-wedges");

    CHECK(catalog_lookup("wedge-spheres:2=9")->capacity == mpz_class(10));

    CHECK_THROWS_AS(catalog_lookup("wedge-spheres:1=2"), ValueError);
    CHECK_THROWS_AS(catalog_lookup("wedge-spheres:2=0"), ValueError);
    CHECK_THROWS_AS(catalog_lookup("wedge-spheres:2=1,2=2"), ValueError);
    CHECK_THROWS_AS(catalog_lookup("wedge-spheres:"), ValueError);
    CHECK_THROWS_AS(catalog_lookup("wedge-spheres:2"), ValueError);
}

TEST_CASE("unknown names resolve to nothing, bad parameters complain") {
    CHECK_FALSE(catalog_lookup("unknown").has_value());
    CHECK_FALSE(catalog_lookup("unknown:3").has_value());
    CHECK_THROWS_AS(catalog_lookup("surface:x"), ValueError);
    CHECK_THROWS_AS(catalog_lookup("surface:"), ValueError);
    CHECK_THROWS_AS(catalog_lookup("surface:-1"), ValueError);
}
