#include "domlab/polyhedron.hpp"

#include <charconv>
#include <set>
#include <utility>

namespace domlab {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* context) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw ValueError(std::string(context) + " overflows a signed 64-bit integer");
    return out;
}

std::uint64_t parse_u64(const std::string& text, std::size_t begin, std::size_t end,
                        const std::string& what) {
    std::uint64_t value = 0;
    const char* first = text.data() + begin;
    const char* last = text.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ValueError("catalog name: " + what + " must be an unsigned integer, got \"" +
                         text.substr(begin, end - begin) + "\"");
    return value;
}

CatalogEntry surface_entry(std::uint64_t genus, bool orientable) {
    if (!orientable && genus < 1)
        throw ValueError("non-orientable surfaces require genus >= 1");
    const std::uint64_t value = orientable ? genus + 2 : genus / 2 + 2;
    CatalogEntry e;
    e.name = (orientable ? "surface:" : "nonorientable-surface:") + std::to_string(genus);
    e.capacity = mpz_class(static_cast<unsigned long>(value));
    e.depth = static_cast<std::int64_t>(value);
    e.source = "closed-surfaces";
    return e;
}

CatalogEntry wedge_circles_entry(std::uint64_t k) {
    if (k < 1) throw ValueError("wedge-circles requires at least one circle");
    CatalogEntry e;
    e.name = "wedge-circles:" + std::to_string(k);
    e.capacity = mpz_class(static_cast<unsigned long>(k)) + 1;
    e.source = "circle-wedges";
    return e;
}

CatalogEntry wedge_spheres_entry(const std::string& params) {
    // params: comma-separated <dimension>=<copies>, dimensions >= 2, distinct.
    std::set<std::uint64_t> dims;
    mpz_class product = 1;
    std::size_t at = 0;
    if (params.empty()) throw ValueError("wedge-spheres needs at least one <dimension>=<copies> pair");
    while (at < params.size()) {
        std::size_t comma = params.find(',', at);
        if (comma == std::string::npos) comma = params.size();
        const std::size_t eq = params.find('=', at);
        if (eq == std::string::npos || eq >= comma)
            throw ValueError("wedge-spheres parameter \"" + params.substr(at, comma - at) +
                             "\" is not of the form <dimension>=<copies>");
        const std::uint64_t dim = parse_u64(params, at, eq, "sphere dimension");
        const std::uint64_t copies = parse_u64(params, eq + 1, comma, "copy count");
        if (dim < 2) throw ValueError("wedge-spheres dimensions must be >= 2 (circles have their own entry)");
        if (copies < 1) throw ValueError("wedge-spheres copy counts must be >= 1");
        if (!dims.insert(dim).second)
            throw ValueError("wedge-spheres lists dimension " + std::to_string(dim) + " twice");
        mpz_class factor;
        mpz_import(factor.get_mpz_t(), 1, 1, sizeof copies, 0, 0, &copies);
        product *= factor + 1;
        at = comma + 1;
    }
    CatalogEntry e;
    e.name = "wedge-spheres:" + params;
    e.capacity = product;
    if (!product.fits_slong_p())
        throw ValueError("wedge-spheres depth exceeds the supported 64-bit range");
    e.depth = static_cast<std::int64_t>(product.get_si());
    e.source = "sphere-wedges";
    return e;
}

}  // namespace

std::int64_t resolve_depth(const GroupSpec& spec) {
    if (const AbelianGroup* a = std::get_if<AbelianGroup>(&spec)) return depth(*a);
    if (const FreeGroup* f = std::get_if<FreeGroup>(&spec)) return depth(*f);
    const AssertedDepth& asserted = std::get<AssertedDepth>(spec);
    if (!asserted.hopfian_retracts)
        throw HopfianAssumptionMissing(
            "an asserted depth is only usable with the attestation that every retract of the "
            "group is Hopfian");
    if (asserted.depth < 1)
        throw ValueError("asserted depth must be at least 1, got " + std::to_string(asserted.depth));
    return asserted.depth;
}

std::int64_t theorem_bound(const PolyhedronDescriptor& desc) {
    if (desc.dimension < 1)
        throw ValueError("polyhedron dimension must be at least 1, got " +
                         std::to_string(desc.dimension));
    for (const auto& [dim, spec] : desc.homology) {
        (void)spec;
        if (dim < 2 || dim > desc.dimension)
            throw DimensionMismatch("homology dimension " + std::to_string(dim) +
                                    " outside {2.." + std::to_string(desc.dimension) +
                                    "} for a " + std::to_string(desc.dimension) +
                                    "-dimensional polyhedron");
    }
    // (sum k_i) - n + 1 regrouped as 1 + (k_1 - 1) + sum (k_i - 1); absent
    // homology groups are trivial with k_i = 1 and contribute nothing.
    std::int64_t bound = resolve_depth(desc.pi1);
    for (const auto& [dim, spec] : desc.homology) {
        (void)dim;
        bound = checked_add(bound, resolve_depth(spec) - 1, "depth bound");
    }
    return bound;
}

std::int64_t corollary_finite_pi1(std::int64_t d_pi1, const std::vector<std::int64_t>& t) {
    if (d_pi1 < 1)
        throw ValueError("fundamental-group depth must be at least 1, got " + std::to_string(d_pi1));
    std::int64_t bound = d_pi1;
    for (std::int64_t ti : t) {
        if (ti < 0) throw ValueError("factor counts must be nonnegative, got " + std::to_string(ti));
        bound = checked_add(bound, ti, "depth bound");
    }
    return bound;
}

std::int64_t corollary_abelian(const std::vector<std::int64_t>& t) {
    std::int64_t bound = 1;
    for (std::int64_t ti : t) {
        if (ti < 0) throw ValueError("factor counts must be nonnegative, got " + std::to_string(ti));
        bound = checked_add(bound, ti, "depth bound");
    }
    return bound;
}

std::vector<CatalogEntry> catalog() {
    std::vector<CatalogEntry> entries;
    CatalogEntry torus_sum;
    torus_sum.name = "T#T";
    torus_sum.capacity = mpz_class(4);
    torus_sum.depth = 4;
    torus_sum.source = "closed-surfaces";
    entries.push_back(std::move(torus_sum));
    CatalogEntry product;
    product.name = "S1xS2";
    product.capacity = mpz_class(4);
    product.depth = 3;
    product.source = "sphere-products";
    entries.push_back(std::move(product));
    return entries;
}

std::optional<CatalogEntry> catalog_lookup(const std::string& name) {
    for (CatalogEntry& e : catalog())
        if (e.name == name) return std::move(e);
    const std::size_t colon = name.find(':');
    if (colon == std::string::npos) return std::nullopt;
    const std::string family = name.substr(0, colon);
    const std::string params = name.substr(colon + 1);
    if (family == "surface")
        return surface_entry(parse_u64(name, colon + 1, name.size(), "genus"), true);
    if (family == "nonorientable-surface")
        return surface_entry(parse_u64(name, colon + 1, name.size(), "genus"), false);
    if (family == "wedge-circles")
        return wedge_circles_entry(parse_u64(name, colon + 1, name.size(), "circle count"));
    if (family == "wedge-spheres") return wedge_spheres_entry(params);
    return std::nullopt;
}

}  // namespace domlab
