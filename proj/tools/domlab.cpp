#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "domlab/abelian.hpp"
#include "domlab/cayley.hpp"
#include "domlab/errors.hpp"
#include "domlab/expr.hpp"
#include "domlab/free_group.hpp"
#include "domlab/polyhedron.hpp"
#include "domlab/poset.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t enumeration_limit = std::uint64_t{1} << 20;

/// Everything a command produces; rendered once at the end so JSON mode can
/// emit exactly one object per line with a stable key order.
struct CommandOutput {
    std::string command;
    std::string input;
    json result = json::object();
    std::optional<json> witness;
    std::vector<std::string> human;
    std::vector<std::string> warnings;
    int exit_code = 0;
};

void emit(const CommandOutput& out, bool json_mode) {
    if (json_mode) {
        json record;
        record["command"] = out.command;
        record["input"] = out.input;
        record["result"] = out.result;
        if (out.witness) record["witness"] = *out.witness;
        record["warnings"] = out.warnings;
        std::cout << record.dump() << "\n";
        return;
    }
    for (const std::string& line : out.human) std::cout << line << "\n";
    for (const std::string& w : out.warnings) std::cerr << "warning: " << w << "\n";
}

int brute_order_cap() {
    const char* raw = std::getenv("DOMLAB_MAX_ORDER");
    if (raw == nullptr || *raw == '\0') return domlab::default_order_cap;
    int value = 0;
    const char* last = raw;
    while (*last != '\0') ++last;
    const auto [ptr, ec] = std::from_chars(raw, last, value);
    if (ec != std::errc() || ptr != last || value < 1)
        throw domlab::InputError("DOMLAB_MAX_ORDER must be a positive integer, got \"" +
                                 std::string(raw) + "\"");
    return value;
}

/// The group whose capacity/strong-capacity pair is frequently misquoted.
bool has_misquoted_capacity(const domlab::AbelianGroup& g) {
    static const domlab::AbelianGroup fixture = domlab::canonicalize({{2, 1}, {0, 2}});
    return g == fixture;
}

CommandOutput run_cap(const std::string& text) {
    CommandOutput out;
    out.command = "cap";
    out.input = text;
    const domlab::GroupExpression g = domlab::parse_expression(text);
    if (const auto* a = std::get_if<domlab::AbelianGroup>(&g)) {
        const std::string cap = domlab::capacity(*a).get_str();
        const std::string scap = domlab::strong_capacity(*a).get_str();
        out.result["group"] = domlab::render(*a);
        out.result["capacity"] = cap;
        out.result["strong_capacity"] = scap;
        out.human = {"group: " + domlab::render(*a), "capacity: " + cap,
                     "strong capacity: " + scap};
        if (has_misquoted_capacity(*a))
            out.warnings.push_back(
                "the values for this group are sometimes both quoted as capacities; the correct "
                "reading is capacity 6, strong capacity 5");
    } else {
        const domlab::FreeGroup f = std::get<domlab::FreeGroup>(g);
        out.result["group"] = domlab::render(f);
        out.result["capacity"] = std::to_string(domlab::capacity(f));
        out.result["strong_capacity"] = std::to_string(domlab::strong_capacity(f));
        out.human = {"group: " + domlab::render(f),
                     "capacity: " + std::to_string(domlab::capacity(f)),
                     "strong capacity: " + std::to_string(domlab::strong_capacity(f))};
    }
    return out;
}

CommandOutput run_depth(const std::string& text) {
    CommandOutput out;
    out.command = "depth";
    out.input = text;
    const domlab::GroupExpression g = domlab::parse_expression(text);
    std::string name;
    std::int64_t d = 0;
    std::int64_t sd = 0;
    if (const auto* a = std::get_if<domlab::AbelianGroup>(&g)) {
        name = domlab::render(*a);
        d = domlab::depth(*a);
        sd = domlab::strong_depth(*a);
    } else {
        const domlab::FreeGroup f = std::get<domlab::FreeGroup>(g);
        name = domlab::render(f);
        d = domlab::depth(f);
        sd = domlab::strong_depth(f);
    }
    out.result["group"] = name;
    out.result["depth"] = d;
    out.result["strong_depth"] = sd;
    out.human = {"group: " + name, "depth: " + std::to_string(d),
                 "strong depth: " + std::to_string(sd)};
    return out;
}

CommandOutput run_summands(const std::string& text) {
    CommandOutput out;
    out.command = "summands";
    out.input = text;
    const domlab::GroupExpression g = domlab::parse_expression(text);
    const auto* a = std::get_if<domlab::AbelianGroup>(&g);
    if (a == nullptr)
        throw domlab::InputError(
            "summands enumerates direct summands of abelian groups; free groups have no "
            "direct-sum structure here (use cap or chain instead)");
    const mpz_class count = domlab::capacity(*a);
    if (count > enumeration_limit)
        throw domlab::InputError("the group has " + count.get_str() +
                                 " summand classes, beyond the enumeration limit of " +
                                 std::to_string(enumeration_limit) + "; use cap for the count");
    const std::vector<domlab::AbelianGroup> classes = domlab::direct_summands(*a);
    out.result["group"] = domlab::render(*a);
    out.result["count"] = count.get_str();
    json list = json::array();
    out.human = {"group: " + domlab::render(*a), "classes: " + count.get_str()};
    for (const domlab::AbelianGroup& s : classes) {
        list.push_back(domlab::render(s));
        out.human.push_back("  " + domlab::render(s));
    }
    out.result["classes"] = std::move(list);
    return out;
}

CommandOutput run_chain(const std::string& text) {
    CommandOutput out;
    out.command = "chain";
    out.input = text;
    const domlab::GroupExpression g = domlab::parse_expression(text);
    std::string name;
    std::int64_t d = 0;
    std::vector<std::string> links;
    if (const auto* a = std::get_if<domlab::AbelianGroup>(&g)) {
        name = domlab::render(*a);
        d = domlab::depth(*a);
        for (const domlab::AbelianGroup& x : domlab::witness_chain(*a))
            links.push_back(domlab::render(x));
    } else {
        const domlab::FreeGroup f = std::get<domlab::FreeGroup>(g);
        name = domlab::render(f);
        d = domlab::depth(f);
        for (const domlab::FreeGroup& x : domlab::witness_chain(f))
            links.push_back(domlab::render(x));
    }
    out.result["group"] = name;
    out.result["depth"] = d;
    out.witness = json(links);
    std::string joined;
    for (const std::string& link : links) {
        if (!joined.empty()) joined += " < ";
        joined += link;
    }
    out.human = {"group: " + name, "depth: " + std::to_string(d), "chain: " + joined};
    return out;
}

CommandOutput run_brute(const std::string& path, const std::string& what) {
    CommandOutput out;
    out.command = "brute";
    out.input = path;
    const int cap = brute_order_cap();
    const domlab::CayleyTable t = domlab::parse_cayley_file(path);
    out.result["order"] = t.n;
    out.result["group"] = domlab::describe(t);
    out.human = {"order: " + std::to_string(t.n), "group: " + domlab::describe(t)};

    const bool all = what == "all";
    std::optional<std::int64_t> capacity;
    std::optional<std::int64_t> idem;
    if (all || what == "cap") {
        capacity = domlab::capacity_bruteforce(t, cap);
        out.result["capacity"] = std::to_string(*capacity);
        out.human.push_back("capacity: " + std::to_string(*capacity));
    }
    if (all || what == "depth") {
        const domlab::DominationDAG dag = domlab::retract_dag(t, cap);
        const domlab::DominationDAG::Chain chain = dag.longest_chain();
        out.result["depth"] = static_cast<std::int64_t>(chain.length);
        std::vector<std::string> labels;
        for (const domlab::ClassNode& node : chain.nodes) labels.push_back(node.label);
        out.witness = json(labels);
        std::string joined;
        for (const std::string& label : labels) {
            if (!joined.empty()) joined += " < ";
            joined += label;
        }
        out.human.push_back("depth: " + std::to_string(chain.length));
        out.human.push_back("chain: " + joined);
    }
    if (all || what == "endos") {
        const std::int64_t n = static_cast<std::int64_t>(domlab::endomorphisms(t, cap).size());
        out.result["endomorphisms"] = n;
        out.human.push_back("endomorphisms: " + std::to_string(n));
    }
    if (all || what == "idem") {
        idem = domlab::idempotent_count(t, cap);
        out.result["idempotents"] = *idem;
        out.human.push_back("idempotents: " + std::to_string(*idem));
    }
    if (all || what == "retracts") {
        json list = json::array();
        out.human.push_back("retract classes:");
        for (const domlab::RetractClass& c : domlab::retract_classes(t, cap)) {
            json entry;
            entry["order"] = c.representative.n;
            entry["group"] = domlab::describe(c.representative);
            entry["image"] = c.image;
            entry["witness"] = c.witness;
            list.push_back(std::move(entry));
            std::string img;
            for (int x : c.image) img += (img.empty() ? "" : " ") + std::to_string(x);
            out.human.push_back("  " + domlab::describe(c.representative) + " (image: " + img + ")");
        }
        out.result["retract_classes"] = std::move(list);
    }
    if (all) {
        const bool holds = *capacity <= *idem;
        if (!holds)
            throw domlab::InternalError("capacity " + std::to_string(*capacity) +
                                        " exceeds the idempotent count " + std::to_string(*idem));
        out.result["bound_holds"] = holds;
        out.human.push_back("capacity <= idempotents: yes");
    }
    return out;
}

struct PolyArgs {
    int dim = 0;
    std::string pi1_expr;
    std::int64_t pi1_depth = 0;
    bool pi1_expr_set = false;
    bool pi1_depth_set = false;
    bool hopfian = false;
    std::vector<std::string> homology_exprs;   // "<dim>=<expr>"
    std::vector<std::string> homology_depths;  // "<dim>=<depth>"
};

std::pair<int, std::string> split_dimension_arg(const std::string& arg, const char* option) {
    const std::size_t eq = arg.find('=');
    if (eq == std::string::npos)
        throw domlab::InputError(std::string(option) + " expects <dimension>=<value>, got \"" +
                                 arg + "\"");
    int dim = 0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + eq, dim);
    if (ec != std::errc() || ptr != arg.data() + eq)
        throw domlab::InputError(std::string(option) + ": \"" + arg.substr(0, eq) +
                                 "\" is not a dimension");
    return {dim, arg.substr(eq + 1)};
}

std::string spec_display(const domlab::GroupSpec& spec) {
    if (const auto* a = std::get_if<domlab::AbelianGroup>(&spec)) return domlab::render(*a);
    if (const auto* f = std::get_if<domlab::FreeGroup>(&spec)) return domlab::render(*f);
    return "asserted-depth:" + std::to_string(std::get<domlab::AssertedDepth>(spec).depth);
}

domlab::GroupSpec lift(const domlab::GroupExpression& g) {
    if (const auto* a = std::get_if<domlab::AbelianGroup>(&g)) return *a;
    return std::get<domlab::FreeGroup>(g);
}

CommandOutput run_poly(const PolyArgs& args) {
    CommandOutput out;
    out.command = "poly";
    if (args.pi1_expr_set == args.pi1_depth_set)
        throw domlab::InputError("poly needs exactly one of --pi1 and --pi1-depth");

    domlab::PolyhedronDescriptor desc;
    desc.dimension = args.dim;
    if (args.pi1_expr_set)
        desc.pi1 = lift(domlab::parse_expression(args.pi1_expr));
    else
        desc.pi1 = domlab::AssertedDepth{args.pi1_depth, args.hopfian};
    for (const std::string& arg : args.homology_exprs) {
        const auto [dim, expr] = split_dimension_arg(arg, "--h");
        if (desc.homology.count(dim) != 0)
            throw domlab::InputError("homology dimension " + std::to_string(dim) + " given twice");
        desc.homology[dim] = lift(domlab::parse_expression(expr));
    }
    for (const std::string& arg : args.homology_depths) {
        const auto [dim, value] = split_dimension_arg(arg, "--h-depth");
        if (desc.homology.count(dim) != 0)
            throw domlab::InputError("homology dimension " + std::to_string(dim) + " given twice");
        std::int64_t k = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), k);
        if (ec != std::errc() || ptr != value.data() + value.size())
            throw domlab::InputError("--h-depth: \"" + value + "\" is not a depth value");
        desc.homology[dim] = domlab::AssertedDepth{k, args.hopfian};
    }

    std::string input = "dim=" + std::to_string(desc.dimension);
    input += " pi1=" + spec_display(desc.pi1);
    for (const auto& [dim, spec] : desc.homology)
        input += " h" + std::to_string(dim) + "=" + spec_display(spec);
    if (args.hopfian) input += " hopfian";
    out.input = input;

    const std::int64_t bound = domlab::theorem_bound(desc);
    out.result["dimension"] = desc.dimension;
    out.result["pi1"] = spec_display(desc.pi1);
    json homology = json::object();
    for (const auto& [dim, spec] : desc.homology)
        homology[std::to_string(dim)] = spec_display(spec);
    out.result["homology"] = std::move(homology);
    out.result["bound"] = bound;
    out.human = {"dimension: " + std::to_string(desc.dimension),
                 "pi1: " + spec_display(desc.pi1)};
    for (const auto& [dim, spec] : desc.homology)
        out.human.push_back("H_" + std::to_string(dim) + ": " + spec_display(spec));
    out.human.push_back("depth bound: " + std::to_string(bound));

    // Cross-checks: the corollaries must agree with the bound whenever their
    // hypotheses hold; a mismatch is an internal invariant failure.
    const auto* pi1_abelian = std::get_if<domlab::AbelianGroup>(&desc.pi1);
    bool homology_abelian = true;
    for (const auto& [dim, spec] : desc.homology) {
        (void)dim;
        if (std::get_if<domlab::AbelianGroup>(&spec) == nullptr) homology_abelian = false;
    }
    if (pi1_abelian != nullptr && homology_abelian) {
        std::vector<std::int64_t> t{domlab::depth(*pi1_abelian) - 1};
        for (int i = 2; i <= desc.dimension; ++i) {
            const auto it = desc.homology.find(i);
            t.push_back(it == desc.homology.end()
                            ? 0
                            : domlab::depth(std::get<domlab::AbelianGroup>(it->second)) - 1);
        }
        const std::int64_t cross = domlab::corollary_abelian(t);
        if (cross != bound)
            throw domlab::InternalError("abelian corollary gives " + std::to_string(cross) +
                                        " but the direct bound is " + std::to_string(bound));
        out.result["corollary_abelian"] = cross;
        out.human.push_back("abelian corollary agrees: " + std::to_string(cross));
        if (pi1_abelian->is_finite()) {
            std::vector<std::int64_t> tail(t.begin() + 1, t.end());
            const std::int64_t finite_cross =
                domlab::corollary_finite_pi1(domlab::depth(*pi1_abelian), tail);
            if (finite_cross != bound)
                throw domlab::InternalError("finite-pi1 corollary gives " +
                                            std::to_string(finite_cross) +
                                            " but the direct bound is " + std::to_string(bound));
            out.result["corollary_finite_pi1"] = finite_cross;
            out.human.push_back("finite-pi1 corollary agrees: " + std::to_string(finite_cross));
        }
    }
    return out;
}

json catalog_entry_json(const domlab::CatalogEntry& e) {
    json entry;
    entry["name"] = e.name;
    if (e.capacity)
        entry["capacity"] = e.capacity->get_str();
    else
        entry["capacity"] = nullptr;
    if (e.depth)
        entry["depth"] = *e.depth;
    else
        entry["depth"] = nullptr;
    entry["source"] = e.source;
    return entry;
}

std::string catalog_entry_line(const domlab::CatalogEntry& e) {
    std::string line = e.name + ": capacity " + (e.capacity ? e.capacity->get_str() : "unknown");
    line += ", depth " + (e.depth ? std::to_string(*e.depth) : "unknown");
    line += " [" + e.source + "]";
    return line;
}

CommandOutput run_catalog(const std::string& name) {
    CommandOutput out;
    out.command = "catalog";
    out.input = name;
    if (name.empty()) {
        json entries = json::array();
        for (const domlab::CatalogEntry& e : domlab::catalog()) {
            entries.push_back(catalog_entry_json(e));
            out.human.push_back(catalog_entry_line(e));
        }
        out.result["entries"] = std::move(entries);
        out.human.push_back("families: surface:<g>  nonorientable-surface:<g>  wedge-circles:<k>  "
                            "wedge-spheres:<n>=<i>,...");
        return out;
    }
    const std::optional<domlab::CatalogEntry> entry = domlab::catalog_lookup(name);
    if (!entry)
        throw domlab::InputError(
            "unknown catalog name \"" + name +
            "\"; known: T#T, S1xS2, surface:<g>, nonorientable-surface:<g>, wedge-circles:<k>, "
            "wedge-spheres:<n>=<i>,...");
    out.result = catalog_entry_json(*entry);
    out.human = {catalog_entry_line(*entry)};
    return out;
}

CommandOutput run_selftest(int max_order, std::uint64_t seed) {
    CommandOutput out;
    out.command = "selftest";
    out.input = "max-order=" + std::to_string(max_order) + " seed=" + std::to_string(seed);
    if (max_order < 1) throw domlab::InputError("--max-order must be at least 1");
    const int cap = std::max(brute_order_cap(), max_order);

    std::int64_t checks = 0;
    std::int64_t failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            out.human.push_back("FAIL: " + what);
            out.warnings.push_back("selftest failure: " + what);
        }
    };

    // Closed forms against the table oracle for every abelian group in range.
    const std::vector<domlab::AbelianGroup> groups =
        domlab::finite_abelian_groups_up_to(static_cast<std::uint64_t>(max_order));
    for (const domlab::AbelianGroup& g : groups) {
        const std::string name = domlab::render(g);
        const domlab::CayleyTable t = domlab::cayley_from_abelian(g);
        check(domlab::recognize_abelian(t) == std::optional<domlab::AbelianGroup>(g),
              name + ": table round-trip");
        const mpz_class cap_formula = domlab::capacity(g);
        const std::int64_t cap_brute = domlab::capacity_bruteforce(t, cap);
        check(cap_formula == mpz_class(static_cast<long>(cap_brute)),
              name + ": capacity " + cap_formula.get_str() + " vs brute " +
                  std::to_string(cap_brute));
        const std::int64_t depth_formula = domlab::depth(g);
        const std::int64_t depth_brute = domlab::depth_bruteforce(t, cap);
        check(depth_formula == depth_brute,
              name + ": depth " + std::to_string(depth_formula) + " vs brute " +
                  std::to_string(depth_brute));
        const std::int64_t idem = domlab::idempotent_count(t, cap);
        check(cap_brute <= idem, name + ": capacity <= idempotent count");
        check(depth_brute <= cap_brute, name + ": depth <= capacity");

        const domlab::DominationDAG dag = domlab::summand_dag(g);
        check(mpz_class(static_cast<long>(dag.class_count())) == cap_formula,
              name + ": summand DAG class count");
        check(static_cast<std::int64_t>(dag.longest_chain().length) == depth_formula,
              name + ": summand DAG longest chain");
        std::vector<std::string> ids;
        for (const domlab::AbelianGroup& x : domlab::witness_chain(g))
            ids.push_back(domlab::render(x));
        check(dag.verify_chain(ids).ok, name + ": witness chain verifies");
    }
    out.human.push_back("abelian sweep: " + std::to_string(groups.size()) + " groups");

    // Free-group closed forms, including the rank-1 vs Z agreement.
    for (std::int64_t k = 0; k <= 10; ++k) {
        const domlab::FreeGroup f = domlab::FreeGroup::of_rank(k);
        check(domlab::capacity(f) == k + 1, "F_" + std::to_string(k) + ": capacity");
        check(domlab::strong_capacity(f) == k, "F_" + std::to_string(k) + ": strong capacity");
        check(domlab::depth(f) == k + 1, "F_" + std::to_string(k) + ": depth");
        check(domlab::strong_depth(f) == k + 1, "F_" + std::to_string(k) + ": strong depth");
        check(static_cast<std::int64_t>(domlab::witness_chain(f).size()) == k + 1,
              "F_" + std::to_string(k) + ": chain length");
        check(static_cast<std::int64_t>(domlab::dominated_classes(f).size()) == k + 1,
              "F_" + std::to_string(k) + ": dominated classes");
    }
    {
        const domlab::AbelianGroup z = domlab::canonicalize({{0, 1}});
        const domlab::FreeGroup f1 = domlab::FreeGroup::of_rank(1);
        check(domlab::depth(z) == domlab::depth(f1), "Z vs F_1: depth");
        check(domlab::capacity(z) == mpz_class(static_cast<long>(domlab::capacity(f1))),
              "Z vs F_1: capacity");
    }
    out.human.push_back("free groups: ranks 0..10");

    // Randomized bound identities.
    std::mt19937_64 rng(seed);
    const int rounds = 1000;
    for (int round = 0; round < rounds; ++round) {
        const int n = 1 + static_cast<int>(rng() % 10);
        std::vector<std::int64_t> t;
        for (int i = 0; i < n; ++i) t.push_back(static_cast<std::int64_t>(rng() % 6));

        domlab::PolyhedronDescriptor desc;
        desc.dimension = n;
        desc.pi1 = domlab::canonicalize({{0, static_cast<std::uint64_t>(t[0])}});
        for (int i = 2; i <= n; ++i) {
            if (t[static_cast<std::size_t>(i - 1)] == 0 && rng() % 2 == 0) continue;
            desc.homology[i] =
                domlab::canonicalize({{0, static_cast<std::uint64_t>(t[static_cast<std::size_t>(i - 1)])}});
        }
        check(domlab::corollary_abelian(t) == domlab::theorem_bound(desc),
              "round " + std::to_string(round) + ": abelian corollary identity");

        const std::int64_t d1 = 1 + static_cast<std::int64_t>(rng() % 6);
        domlab::PolyhedronDescriptor asserted = desc;
        asserted.pi1 = domlab::AssertedDepth{d1, true};
        const std::vector<std::int64_t> tail(t.begin() + 1, t.end());
        check(domlab::corollary_finite_pi1(d1, tail) == domlab::theorem_bound(asserted),
              "round " + std::to_string(round) + ": finite-pi1 corollary identity");
    }
    out.human.push_back("bound identities: " + std::to_string(rounds) + " randomized rounds");

    // Catalog families against the group-level closed forms.
    for (std::uint64_t k = 1; k <= 10; ++k) {
        const auto entry = domlab::catalog_lookup("wedge-circles:" + std::to_string(k));
        const domlab::FreeGroup f = domlab::FreeGroup::of_rank(static_cast<std::int64_t>(k));
        check(entry && entry->capacity &&
                  *entry->capacity == mpz_class(static_cast<long>(domlab::capacity(f))),
              "wedge-circles:" + std::to_string(k) + " vs free-group capacity");
    }
    for (std::uint64_t g = 0; g <= 5; ++g) {
        const auto entry = domlab::catalog_lookup("surface:" + std::to_string(g));
        check(entry && entry->capacity && *entry->capacity == mpz_class(static_cast<long>(g + 2)) &&
                  entry->depth == std::optional<std::int64_t>(static_cast<std::int64_t>(g + 2)),
              "surface:" + std::to_string(g));
    }
    {
        const auto entry = domlab::catalog_lookup("wedge-spheres:2=1,3=2");
        check(entry && entry->capacity && *entry->capacity == 6 &&
                  entry->depth == std::optional<std::int64_t>(6),
              "wedge-spheres:2=1,3=2");
    }
    out.human.push_back("catalog families: consistent");

    // Expression grammar round trips.
    const std::vector<std::string> corpus = {"1", "Z", "Z_2", "Z_6", "Z_2 + Z^2", "Z_8 + Z_9^3",
                                             "Z^3", "Z_4 + Z_2", "Z_2^5", "F_0", "F_3"};
    for (const std::string& text : corpus) {
        const domlab::GroupExpression parsed = domlab::parse_expression(text);
        const domlab::GroupExpression reparsed = domlab::parse_expression(domlab::render(parsed));
        check(parsed == reparsed, "round trip of \"" + text + "\"");
    }
    out.human.push_back("expression round trips: " + std::to_string(corpus.size()) + " inputs");

    out.result["max_order"] = max_order;
    out.result["groups_checked"] = static_cast<std::int64_t>(groups.size());
    out.result["checks"] = checks;
    out.result["failures"] = failures;
    out.human.push_back("checks: " + std::to_string(checks) +
                        ", failures: " + std::to_string(failures));
    if (failures > 0) out.exit_code = 3;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact capacity and depth computations for groups and polyhedron depth bounds"};
    app.require_subcommand(1);

    std::string format = "human";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "json"}));
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized identity checks");

    std::string expr_text;
    CLI::App* cap_cmd = app.add_subcommand("cap", "capacity and strong capacity of a group");
    cap_cmd->add_option("EXPR", expr_text, "group expression")->required();
    CLI::App* depth_cmd = app.add_subcommand("depth", "depth and strong depth of a group");
    depth_cmd->add_option("EXPR", expr_text, "group expression")->required();
    CLI::App* summands_cmd =
        app.add_subcommand("summands", "direct-summand classes of an abelian group");
    summands_cmd->add_option("EXPR", expr_text, "group expression")->required();
    CLI::App* chain_cmd = app.add_subcommand("chain", "a witness chain realizing the depth");
    chain_cmd->add_option("EXPR", expr_text, "group expression")->required();

    std::string brute_file;
    std::string what = "all";
    CLI::App* brute_cmd =
        app.add_subcommand("brute", "table-level search over a finite group given as a Cayley table");
    brute_cmd->add_option("FILE", brute_file, "Cayley table file")->required();
    brute_cmd->add_option("--what", what, "which quantities to compute")
        ->check(CLI::IsMember({"cap", "depth", "endos", "idem", "retracts", "all"}));

    PolyArgs poly_args;
    CLI::App* poly_cmd = app.add_subcommand("poly", "depth upper bound for a polyhedron");
    poly_cmd->set_help_flag("--help", "print help");  // frees -h/--h for homology options
    poly_cmd->add_option("--dim", poly_args.dim, "polyhedron dimension")->required();
    CLI::Option* pi1_opt = poly_cmd->add_option("--pi1", poly_args.pi1_expr,
                                                "fundamental group as an expression");
    CLI::Option* pi1_depth_opt = poly_cmd->add_option("--pi1-depth", poly_args.pi1_depth,
                                                      "asserted fundamental-group depth");
    poly_cmd->add_flag("--hopfian", poly_args.hopfian,
                       "attest that all retracts of asserted-depth groups are Hopfian");
    poly_cmd->add_option("--h", poly_args.homology_exprs,
                         "homology group as <dimension>=<expression>")
        ->type_size(1);
    poly_cmd->add_option("--h-depth", poly_args.homology_depths,
                         "asserted homology depth as <dimension>=<depth>")
        ->type_size(1);

    std::string catalog_name;
    CLI::App* catalog_cmd = app.add_subcommand("catalog", "known capacity/depth values");
    catalog_cmd->add_option("NAME", catalog_name, "catalog entry name");

    int max_order = 32;
    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "run the table oracle against the closed forms");
    selftest_cmd->add_option("--max-order", max_order, "largest abelian group order to sweep");

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    poly_args.pi1_expr_set = pi1_opt->count() > 0;
    poly_args.pi1_depth_set = pi1_depth_opt->count() > 0;

    try {
        CommandOutput out;
        if (cap_cmd->parsed())
            out = run_cap(expr_text);
        else if (depth_cmd->parsed())
            out = run_depth(expr_text);
        else if (summands_cmd->parsed())
            out = run_summands(expr_text);
        else if (chain_cmd->parsed())
            out = run_chain(expr_text);
        else if (brute_cmd->parsed())
            out = run_brute(brute_file, what);
        else if (poly_cmd->parsed())
            out = run_poly(poly_args);
        else if (catalog_cmd->parsed())
            out = run_catalog(catalog_name);
        else if (selftest_cmd->parsed())
            out = run_selftest(max_order, seed);
        emit(out, format == "json");
        return out.exit_code;
    } catch (const domlab::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const domlab::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
