#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "domlab/poset.hpp"

using namespace domlab;

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

// Builds a DAG from an explicit list of proper-domination pairs (from, to).
DominationDAG dag_from_pairs(const std::vector<std::string>& ids, const std::string& root,
                             const Pairs& proper_pairs) {
    std::vector<ClassNode> nodes;
    for (std::size_t i = 0; i < ids.size(); ++i) nodes.push_back({ids[i], ids[i], i});
    auto proper = [&](const ClassNode& u, const ClassNode& v) {
        for (const auto& [a, b] : proper_pairs)
            if (a == u.id && b == v.id) return true;
        return false;
    };
    auto dominates = [&](const ClassNode& u, const ClassNode& v) {
        return u.id == v.id || proper(u, v);
    };
    return DominationDAG::build(std::move(nodes), root, dominates, proper);
}

std::vector<std::string> chain_ids(const DominationDAG::Chain& chain) {
    std::vector<std::string> ids;
    for (const auto& node : chain.nodes) ids.push_back(node.id);
    return ids;
}

}  // namespace

TEST_CASE("single node DAG has a length-one chain") {
    auto dag = dag_from_pairs({"a"}, "a", {});
    CHECK(dag.class_count() == 1);
    CHECK(dag.root().id == "a");
    auto chain = dag.longest_chain();
    CHECK(chain.length == 1);
    CHECK(chain_ids(chain) == std::vector<std::string>{"a"});
}

TEST_CASE("diamond DAG picks the lexicographically smallest witness") {
    auto dag = dag_from_pairs({"a", "b", "c", "d"}, "a",
                              {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "d"}, {"c", "d"}});
    CHECK(dag.class_count() == 4);
    auto chain = dag.longest_chain();
    CHECK(chain.length == 3);
    CHECK(chain_ids(chain) == std::vector<std::string>{"d", "b", "a"});
}

TEST_CASE("edges are closed transitively") {
    auto dag = dag_from_pairs({"a", "b", "c"}, "a", {{"a", "b"}, {"b", "c"}});
    CHECK(dag.has_edge("a", "b"));
    CHECK(dag.has_edge("b", "c"));
    CHECK(dag.has_edge("a", "c"));
    CHECK_FALSE(dag.has_edge("c", "a"));
    CHECK_FALSE(dag.has_edge("b", "a"));
    CHECK_FALSE(dag.has_edge("a", "missing"));
    CHECK(dag.longest_chain().length == 3);
}

TEST_CASE("tied maximum chains resolve by smallest starting id") {
    auto dag = dag_from_pairs({"r", "m", "k"}, "r", {{"r", "m"}, {"r", "k"}});
    auto chain = dag.longest_chain();
    CHECK(chain.length == 2);
    CHECK(chain_ids(chain) == std::vector<std::string>{"k", "r"});
}

TEST_CASE("mutual domination between distinct classes is reported") {
    CHECK_THROWS_AS(dag_from_pairs({"a", "b"}, "a", {{"a", "b"}, {"b", "a"}}), CycleDetected);
    try {
        dag_from_pairs({"a", "b"}, "a", {{"a", "b"}, {"b", "a"}});
    } catch (const CycleDetected& e) {
        CHECK(std::string(e.what()).find("a") != std::string::npos);
        CHECK(std::string(e.what()).find("b") != std::string::npos);
    }
}

TEST_CASE("longer domination cycles are detected after closure") {
    CHECK_THROWS_AS(dag_from_pairs({"a", "b", "c"}, "a", {{"a", "b"}, {"b", "c"}, {"c", "a"}}),
                    CycleDetected);
}

TEST_CASE("construction validates ids, root, and predicate consistency") {
    std::vector<ClassNode> dup = {{"x", "x", 0}, {"x", "x", 1}};
    auto always = [](const ClassNode&, const ClassNode&) { return false; };
    CHECK_THROWS_AS(DominationDAG::build(dup, "x", always, always), InternalError);

    std::vector<ClassNode> ok = {{"x", "x", 0}};
    CHECK_THROWS_AS(DominationDAG::build(ok, "y", always, always), InternalError);

    // proper without dominates is contradictory
    std::vector<ClassNode> two = {{"x", "x", 0}, {"y", "y", 1}};
    auto no = [](const ClassNode&, const ClassNode&) { return false; };
    auto yes = [](const ClassNode& u, const ClassNode& v) { return u.id == "x" && v.id == "y"; };
    CHECK_THROWS_AS(DominationDAG::build(two, "x", no, yes), InternalError);
}

TEST_CASE("verify_chain pinpoints the first violation") {
    auto dag = dag_from_pairs({"a", "b", "c", "d"}, "a",
                              {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "d"}, {"c", "d"}});

    CHECK(dag.verify_chain({"d", "b", "a"}).ok);
    CHECK(dag.verify_chain({"d", "a"}).ok);
    CHECK(dag.verify_chain({}).ok);
    CHECK(dag.verify_chain({"c"}).ok);

    auto bad_edge = dag.verify_chain({"b", "c"});
    CHECK_FALSE(bad_edge.ok);
    CHECK(bad_edge.violation == 1);
    CHECK(bad_edge.reason == "b is not properly dominated by c");

    auto repeated = dag.verify_chain({"d", "b", "d"});
    CHECK_FALSE(repeated.ok);
    CHECK(repeated.violation == 2);
    CHECK(repeated.reason == "class repeated in chain: d");

    auto unknown = dag.verify_chain({"zz"});
    CHECK_FALSE(unknown.ok);
    CHECK(unknown.violation == 0);
    CHECK(unknown.reason == "unknown class id: zz");
}

TEST_CASE("payloads survive construction") {
    std::vector<ClassNode> nodes = {{"a", "top", 7}, {"b", "bottom", 42}};
    auto proper = [](const ClassNode& u, const ClassNode& v) {
        return u.id == "a" && v.id == "b";
    };
    auto dominates = [&](const ClassNode& u, const ClassNode& v) {
        return u.id == v.id || proper(u, v);
    };
    auto dag = DominationDAG::build(nodes, "a", dominates, proper);
    CHECK(dag.root().payload == 7);
    CHECK(dag.root().label == "top");
    for (const auto& node : dag.nodes()) {
        if (node.id == "b") CHECK(node.payload == 42);
    }
}
