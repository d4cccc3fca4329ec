// Acceptance gate: one pass/fail line per criterion, exit code = failure count.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "domlab/abelian.hpp"
#include "domlab/cayley.hpp"
#include "domlab/expr.hpp"
#include "domlab/free_group.hpp"
#include "domlab/polyhedron.hpp"
#include "domlab/poset.hpp"
#include "json.hpp"
#include "test_helpers.hpp"

using namespace domlab;
using Clock = std::chrono::steady_clock;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult sh(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

// Every group whose capacity and depth were computed along the way; criterion 9
// re-checks the order inequalities on all of them.
struct Instance {
    std::string name;
    std::int64_t capacity = 0;
    std::int64_t depth = 0;
    std::optional<std::int64_t> strong_capacity;
    std::optional<std::int64_t> strong_depth;
};

std::vector<Instance> instances;
std::vector<CayleyTable> sweep_tables;  // shared between criteria 3 and 4

struct Outcome {
    bool pass = true;
    std::string detail;
    double seconds = 0.0;
};

template <typename Fn>
Outcome timed(Fn&& fn) {
    Outcome outcome;
    const auto start = Clock::now();
    try {
        fn(outcome);
    } catch (const std::exception& e) {
        outcome.pass = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    outcome.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return outcome;
}

void fail(Outcome& outcome, const std::string& detail) {
    outcome.pass = false;
    if (outcome.detail.empty()) outcome.detail = detail;
}

void require(Outcome& outcome, bool condition, const std::string& detail) {
    if (!condition) fail(outcome, detail);
}

Outcome criterion1() {
    return timed([](Outcome& o) {
        const std::string base = std::string(DOMLAB_BIN);
        auto cap = sh(base + " --format json cap 'Z_2 + Z^2' 2>/dev/null");
        require(o, cap.code == 0, "cap exited with code " + std::to_string(cap.code));
        if (!o.pass) return;
        auto cap_record = nlohmann::json::parse(cap.out);
        require(o, cap_record["result"]["capacity"] == "6",
                "capacity " + cap_record["result"]["capacity"].dump() + ", expected \"6\"");
        require(o, cap_record["result"]["strong_capacity"] == "5",
                "strong capacity " + cap_record["result"]["strong_capacity"].dump() +
                    ", expected \"5\"");

        auto dep = sh(base + " --format json depth 'Z_2 + Z^2' 2>/dev/null");
        require(o, dep.code == 0, "depth exited with code " + std::to_string(dep.code));
        if (!o.pass) return;
        auto dep_record = nlohmann::json::parse(dep.out);
        require(o, dep_record["result"]["depth"] == 4, "depth != 4");
        require(o, dep_record["result"]["strong_depth"] == 4, "strong depth != 4");

        instances.push_back({"Z^2 + Z_2", 6, 4, 5, 4});
    });
}

Outcome criterion2() {
    return timed([](Outcome& o) {
        for (std::int64_t k = 0; k <= 10; ++k) {
            const FreeGroup f = FreeGroup::of_rank(k);
            require(o, capacity(f) == k + 1, "capacity(F_" + std::to_string(k) + ") != k+1");
            require(o, strong_capacity(f) == k, "strong capacity(F_" + std::to_string(k) + ") != k");
            require(o, depth(f) == k + 1, "depth(F_" + std::to_string(k) + ") != k+1");
            require(o, strong_depth(f) == k + 1, "strong depth(F_" + std::to_string(k) + ") != k+1");
            instances.push_back({render(f), k + 1, k + 1, k, k + 1});
        }
    });
}

Outcome criterion3() {
    return timed([](Outcome& o) {
        for (const AbelianGroup& g : finite_abelian_groups_up_to(32)) {
            const CayleyTable table = cayley_from_abelian(g);
            sweep_tables.push_back(table);

            const mpz_class cap_formula = capacity(g);
            const std::int64_t depth_formula = depth(g);
            const std::int64_t cap_table = capacity_bruteforce(table);
            const std::int64_t depth_table = depth_bruteforce(table);

            if (cap_formula != cap_table || depth_formula != depth_table) {
                fail(o, render(g) + ": table search gave capacity " + std::to_string(cap_table) +
                            " depth " + std::to_string(depth_table) + ", closed form gives " +
                            cap_formula.get_str() + " and " + std::to_string(depth_formula));
            }
            instances.push_back({render(g), cap_table, depth_table, cap_table - 1, depth_table});
        }
        require(o, sweep_tables.size() == 55,
                "expected 55 canonical groups through order 32, saw " +
                    std::to_string(sweep_tables.size()));
    });
}

Outcome criterion4() {
    return timed([](Outcome& o) {
        std::vector<std::pair<std::string, CayleyTable>> tables;
        for (std::size_t i = 0; i < sweep_tables.size(); ++i)
            tables.emplace_back(describe(sweep_tables[i]), sweep_tables[i]);
        tables.emplace_back("S3", testutil::s3_table());
        tables.emplace_back("D4", testutil::d4_table());
        tables.emplace_back("Q8", testutil::q8_table());

        for (const auto& [name, table] : tables) {
            const HolBoundReport report = hol_bound_report(table);
            if (!report.holds || report.capacity > report.idempotents)
                fail(o, name + ": capacity " + std::to_string(report.capacity) +
                            " exceeds idempotent count " + std::to_string(report.idempotents));
        }

        instances.push_back({"D4", capacity_bruteforce(testutil::d4_table()),
                             depth_bruteforce(testutil::d4_table()), std::nullopt, std::nullopt});
        instances.push_back({"Q8", capacity_bruteforce(testutil::q8_table()),
                             depth_bruteforce(testutil::q8_table()), std::nullopt, std::nullopt});
    });
}

Outcome criterion5() {
    return timed([](Outcome& o) {
        const CayleyTable s3 = testutil::s3_table();
        require(o, endomorphisms(s3).size() == 10,
                "expected 10 endomorphisms, saw " + std::to_string(endomorphisms(s3).size()));
        require(o, idempotent_count(s3) == 5,
                "expected 5 idempotents, saw " + std::to_string(idempotent_count(s3)));
        require(o, capacity_bruteforce(s3) == 3, "capacity != 3");
        require(o, depth_bruteforce(s3) == 3, "depth != 3");

        const auto classes = retract_classes(s3);
        require(o, classes.size() == 3,
                "expected 3 retract classes, saw " + std::to_string(classes.size()));
        if (classes.size() == 3) {
            require(o, classes[0].representative.n == 1, "smallest retract is not trivial");
            const auto middle = recognize_abelian(classes[1].representative);
            require(o, middle.has_value() && render(*middle) == "Z_2",
                    "middle retract class is not Z_2");
            require(o, is_isomorphic(classes[2].representative, s3),
                    "largest retract class is not the group itself");
        }

        instances.push_back({"S3", 3, 3, std::nullopt, std::nullopt});
    });
}

Outcome criterion6() {
    return timed([](Outcome& o) {
        std::mt19937_64 rng(61261);
        const int rounds = 250;
        for (int round = 0; round < rounds; ++round) {
            const AbelianGroup g = testutil::random_abelian(rng, 12);
            const auto chain = witness_chain(g);
            const std::int64_t d = depth(g);

            if (chain.size() != static_cast<std::size_t>(d)) {
                fail(o, render(g) + ": chain length " + std::to_string(chain.size()) +
                            " != depth " + std::to_string(d));
                continue;
            }
            for (std::size_t i = 0; i < chain.size(); ++i)
                for (std::size_t j = i + 1; j < chain.size(); ++j)
                    if (chain[i] == chain[j])
                        fail(o, render(g) + ": chain repeats " + render(chain[i]));
            for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                if (!is_summand(chain[i], chain[i + 1]) || chain[i] == chain[i + 1])
                    fail(o, render(g) + ": step " + std::to_string(i) + " is not proper");

            // the chain must also verify against a DAG built from the real relation
            std::vector<ClassNode> nodes;
            std::vector<std::string> ids;
            for (std::size_t i = 0; i < chain.size(); ++i) {
                nodes.push_back({render(chain[i]), render(chain[i]), i});
                ids.push_back(render(chain[i]));
            }
            auto dominates = [&chain](const ClassNode& u, const ClassNode& v) {
                return is_summand(chain[v.payload], chain[u.payload]);
            };
            auto proper = [&chain, &dominates](const ClassNode& u, const ClassNode& v) {
                return chain[u.payload] != chain[v.payload] && dominates(u, v);
            };
            const auto dag = DominationDAG::build(nodes, render(g), dominates, proper);
            const auto verdict = dag.verify_chain(ids);
            if (!verdict.ok) fail(o, render(g) + ": " + verdict.reason);
            if (dag.longest_chain().length != chain.size())
                fail(o, render(g) + ": restricted DAG chain length mismatch");

            if (capacity(g) <= 256) {
                const auto full = summand_dag(g);
                if (full.longest_chain().length != static_cast<std::size_t>(d))
                    fail(o, render(g) + ": full summand DAG longest chain != depth");
            }
        }
        o.detail = o.pass ? std::to_string(rounds) + " random groups" : o.detail;
    });
}

Outcome criterion7() {
    return timed([](Outcome& o) {
        std::mt19937_64 rng(74747);
        const int rounds = 1000;
        for (int round = 0; round < rounds; ++round) {
            const int n = 1 + static_cast<int>(rng() % 10);
            std::vector<std::int64_t> t;
            for (int i = 0; i < n; ++i) t.push_back(static_cast<std::int64_t>(rng() % 6));

            // direct regrouped sum
            std::int64_t plain = 1;
            for (std::int64_t ti : t) plain += ti;

            PolyhedronDescriptor desc;
            desc.dimension = n;
            desc.pi1 = canonicalize({{0, static_cast<std::uint64_t>(t[0])}});
            for (int i = 1; i < n; ++i) {
                const bool omit = t[i] == 0 && (rng() % 2 == 0);
                if (!omit)
                    desc.homology[i + 1] = canonicalize({{0, static_cast<std::uint64_t>(t[i])}});
            }

            const std::int64_t bound = theorem_bound(desc);
            const std::int64_t abelian_form = corollary_abelian(t);
            if (bound != plain || abelian_form != plain)
                fail(o, "round " + std::to_string(round) + ": bound " + std::to_string(bound) +
                            ", closed form " + std::to_string(abelian_form) + ", expected " +
                            std::to_string(plain));

            // asserted fundamental group with the same homology profile
            const std::int64_t d_pi1 = 1 + static_cast<std::int64_t>(rng() % 6);
            PolyhedronDescriptor asserted = desc;
            asserted.pi1 = AssertedDepth{d_pi1, true};
            std::vector<std::int64_t> tail(t.begin() + 1, t.end());
            std::int64_t finite_expected = d_pi1;
            for (std::int64_t ti : tail) finite_expected += ti;
            if (theorem_bound(asserted) != finite_expected ||
                corollary_finite_pi1(d_pi1, tail) != finite_expected)
                fail(o, "round " + std::to_string(round) + ": finite-pi1 form disagrees");
        }
        o.detail = o.pass ? std::to_string(rounds) + " randomized profiles" : o.detail;
    });
}

Outcome criterion8() {
    return timed([](Outcome& o) {
        const auto tt = catalog_lookup("T#T");
        require(o, tt && tt->capacity == mpz_class(4) && tt->depth == 4, "T#T != (4, 4)");
        const auto s1s2 = catalog_lookup("S1xS2");
        require(o, s1s2 && s1s2->capacity == mpz_class(4) && s1s2->depth == 3,
                "S1xS2 != (4, 3)");

        for (std::uint64_t g = 0; g <= 5; ++g) {
            const auto e = catalog_lookup("surface:" + std::to_string(g));
            const auto want = static_cast<std::int64_t>(g + 2);
            if (!e || e->capacity != mpz_class(static_cast<unsigned long>(g + 2)) ||
                e->depth != want)
                fail(o, "surface genus " + std::to_string(g) + " != " + std::to_string(want));
        }

        for (std::int64_t k = 1; k <= 10; ++k) {
            const auto e = catalog_lookup("wedge-circles:" + std::to_string(k));
            const std::int64_t from_free = capacity(FreeGroup::of_rank(k));
            if (!e || !e->capacity ||
                *e->capacity != mpz_class(static_cast<long>(from_free)))
                fail(o, "wedge of " + std::to_string(k) + " circles disagrees with F_" +
                            std::to_string(k));
        }
    });
}

Outcome criterion9() {
    return timed([](Outcome& o) {
        require(o, instances.size() >= 70,
                "expected at least 70 recorded instances, saw " +
                    std::to_string(instances.size()));
        for (const Instance& inst : instances) {
            if (inst.depth > inst.capacity)
                fail(o, inst.name + ": depth " + std::to_string(inst.depth) +
                            " exceeds capacity " + std::to_string(inst.capacity));
            if (inst.strong_depth) {
                if (*inst.strong_depth > inst.depth || *inst.strong_depth > inst.capacity)
                    fail(o, inst.name + ": strong depth exceeds min(depth, capacity)");
            }
            if (inst.strong_capacity && *inst.strong_capacity > inst.capacity - 1)
                fail(o, inst.name + ": strong capacity exceeds capacity - 1");
        }
        o.detail = o.pass ? std::to_string(instances.size()) + " instances" : o.detail;
    });
}

struct CriterionSpec {
    int id;
    std::string name;
    Outcome (*run)();
    double limit_seconds;  // 0 means no budget
};

}  // namespace

int main() {
    const std::vector<CriterionSpec> specs = {
        {1, "command-line capacity and depth of Z_2 + Z^2", criterion1, 1.0},
        {2, "free-group closed forms for ranks 0..10", criterion2, 1.0},
        {3, "table-level search matches the closed forms through order 32", criterion3, 60.0},
        {4, "capacity bounded by the idempotent count across the test set", criterion4, 30.0},
        {5, "frozen enumeration values for the symmetric group on three letters", criterion5, 0.0},
        {6, "witness chains verify against the domination DAG", criterion6, 0.0},
        {7, "bound identities across randomized homology profiles", criterion7, 0.0},
        {8, "catalog values match the closed forms", criterion8, 0.0},
        {9, "depth and strong values obey the capacity inequalities", criterion9, 0.0},
    };

    int failures = 0;
    for (const auto& spec : specs) {
        Outcome outcome = spec.run();
        if (spec.limit_seconds > 0 && outcome.seconds > spec.limit_seconds) {
            outcome.pass = false;
            std::ostringstream over;
            over << "took " << outcome.seconds << " s, budget " << spec.limit_seconds << " s";
            outcome.detail = outcome.detail.empty() ? over.str() : outcome.detail + "; " + over.str();
        }

        std::ostringstream line;
        line << (outcome.pass ? "PASS" : "FAIL") << " criterion " << spec.id << ": " << spec.name;
        char timing[64];
        std::snprintf(timing, sizeof timing, " (%.2f s", outcome.seconds);
        line << timing;
        if (spec.limit_seconds > 0) line << ", limit " << spec.limit_seconds << " s";
        line << ")";
        if (!outcome.detail.empty()) line << " -- " << outcome.detail;
        std::cout << line.str() << "\n";
        if (!outcome.pass) ++failures;
    }

    if (failures == 0)
        std::cout << "all 9 criteria passed\n";
    else
        std::cout << failures << " criteria failed\n";
    return failures;
}
