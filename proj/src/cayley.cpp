#include "domlab/cayley.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace domlab {

namespace {

// Largest order for which tables are materialized (memory guard; the heavy
// searches are additionally gated by order_cap).
constexpr long long table_entry_guard = 4096;

void check_order_cap(const CayleyTable& g, int cap) {
    if (g.n > cap) throw OrderCapExceeded(g.n, cap);
}

/// Closure of seed together with element 0 under the table operation.
/// Uses only totality of the operation, so it is safe on unvalidated
/// tables once closure and the identity row/column have been checked.
std::vector<int> closed_under_products(const CayleyTable& g, const std::vector<int>& seed) {
    std::vector<char> in(static_cast<std::size_t>(g.n), 0);
    std::vector<int> list;
    auto add = [&](int x) {
        if (!in[static_cast<std::size_t>(x)]) {
            in[static_cast<std::size_t>(x)] = 1;
            list.push_back(x);
        }
    };
    add(0);
    for (int x : seed) add(x);
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            add(g.mul(list[i], list[j]));
            add(g.mul(list[j], list[i]));
        }
    }
    std::sort(list.begin(), list.end());
    return list;
}

/// Greedy generator sequence extending the subgroup `start` (a closed,
/// sorted element list, or empty for the trivial subgroup) to all of g.
/// Each step adds the element whose adjunction yields the largest closure,
/// ties broken by smallest index.
std::vector<int> generating_sequence(const CayleyTable& g, const std::vector<int>& start) {
    std::vector<int> cur = start.empty() ? closed_under_products(g, {}) : start;
    std::vector<int> gens;
    while (static_cast<int>(cur.size()) < g.n) {
        std::vector<char> member(static_cast<std::size_t>(g.n), 0);
        for (int x : cur) member[static_cast<std::size_t>(x)] = 1;
        int best = -1;
        std::vector<int> best_closure;
        for (int x = 0; x < g.n; ++x) {
            if (member[static_cast<std::size_t>(x)]) continue;
            std::vector<int> seed = cur;
            seed.push_back(x);
            std::vector<int> c = closed_under_products(g, seed);
            if (best < 0 || c.size() > best_closure.size()) {
                best = x;
                best_closure = std::move(c);
            }
        }
        gens.push_back(best);
        cur = std::move(best_closure);
    }
    return gens;
}

/// Backtracking search for homomorphisms dom -> cod. Images of the level
/// generators are tried in candidate order; every assignment is closed
/// under products immediately, so any total map the search emits is a
/// homomorphism by construction.
class HomSearch {
public:
    HomSearch(const CayleyTable& dom, const CayleyTable& cod, bool injective)
        : dom_(dom), cod_(cod), injective_(injective),
          img_(static_cast<std::size_t>(dom.n), -1),
          pre_(injective ? static_cast<std::size_t>(cod.n) : 0, -1) {}

    /// Seeded assignments must already form a partial homomorphism (used
    /// for identity-to-identity and for the identity map on a subgroup);
    /// they are never re-verified against each other.
    void seed(int x, int y) {
        img_[static_cast<std::size_t>(x)] = y;
        if (injective_) pre_[static_cast<std::size_t>(y)] = x;
        defined_.push_back(x);
    }

    void set_levels(std::vector<int> gens, std::vector<std::vector<int>> candidates) {
        gens_ = std::move(gens);
        candidates_ = std::move(candidates);
    }

    /// Emits every completion to the sink; the sink returns false to stop
    /// the whole search. Returns false iff the sink stopped it.
    bool run(const std::function<bool(const std::vector<int>&)>& sink) {
        return descend(0, sink);
    }

private:
    bool descend(std::size_t level, const std::function<bool(const std::vector<int>&)>& sink) {
        if (level == gens_.size()) {
            if (defined_.size() != static_cast<std::size_t>(dom_.n))
                throw InternalError("homomorphism search closed over a proper subset");
            return sink(img_);
        }
        const int x = gens_[level];
        for (int y : candidates_[level]) {
            const std::size_t mark = defined_.size();
            if (assign(x, y) && close_from(mark)) {
                if (!descend(level + 1, sink)) return false;
            }
            unwind(mark);
        }
        return true;
    }

    bool assign(int x, int y) {
        const std::size_t xi = static_cast<std::size_t>(x);
        if (img_[xi] >= 0) return img_[xi] == y;
        if (injective_) {
            if (pre_[static_cast<std::size_t>(y)] >= 0) return false;
            pre_[static_cast<std::size_t>(y)] = x;
        }
        img_[xi] = y;
        defined_.push_back(x);
        return true;
    }

    /// Propagates images over all products with defined elements, starting
    /// from position `start` of the definition list, until stable or
    /// contradictory. Pairs are rechecked when their later member is
    /// processed, so every ordered pair of defined elements (beyond the
    /// trusted seed block) gets verified.
    bool close_from(std::size_t start) {
        for (std::size_t qi = start; qi < defined_.size(); ++qi) {
            const int z = defined_[qi];
            const std::size_t snap = defined_.size();
            for (std::size_t j = 0; j < snap; ++j) {
                const int x = defined_[j];
                const int zx = img_[static_cast<std::size_t>(z)];
                const int xx = img_[static_cast<std::size_t>(x)];
                if (!assign(dom_.mul(z, x), cod_.mul(zx, xx))) return false;
                if (!assign(dom_.mul(x, z), cod_.mul(xx, zx))) return false;
            }
        }
        return true;
    }

    void unwind(std::size_t mark) {
        while (defined_.size() > mark) {
            const int x = defined_.back();
            if (injective_) pre_[static_cast<std::size_t>(img_[static_cast<std::size_t>(x)])] = -1;
            img_[static_cast<std::size_t>(x)] = -1;
            defined_.pop_back();
        }
    }

    const CayleyTable& dom_;
    const CayleyTable& cod_;
    bool injective_;
    std::vector<int> img_;
    std::vector<int> pre_;
    std::vector<int> defined_;
    std::vector<int> gens_;
    std::vector<std::vector<int>> candidates_;
};

/// Enumerates every retraction of g onto the subgroup h (maps fixing h
/// pointwise with image inside h); these are exactly the idempotents whose
/// image is h. The sink returns false to stop early.
void for_each_retraction(const CayleyTable& g, const std::vector<int>& h,
                         const std::vector<int>& orders,
                         const std::function<bool(const Endomorphism&)>& sink) {
    HomSearch search(g, g, false);
    for (int x : h) search.seed(x, x);
    std::vector<int> gens = generating_sequence(g, h);
    std::vector<std::vector<int>> candidates;
    candidates.reserve(gens.size());
    for (int x : gens) {
        std::vector<int> c;
        for (int y : h)
            if (orders[static_cast<std::size_t>(x)] % orders[static_cast<std::size_t>(y)] == 0)
                c.push_back(y);
        candidates.push_back(std::move(c));
    }
    search.set_levels(std::move(gens), std::move(candidates));
    search.run(sink);
}

std::vector<int> centralizer_sizes(const CayleyTable& g) {
    std::vector<int> cent(static_cast<std::size_t>(g.n), 0);
    for (int x = 0; x < g.n; ++x) {
        int c = 0;
        for (int y = 0; y < g.n; ++y)
            if (g.mul(x, y) == g.mul(y, x)) ++c;
        cent[static_cast<std::size_t>(x)] = c;
    }
    return cent;
}

/// Table of the subgroup given by the sorted element list, re-indexed by
/// list position. Position 0 is the identity because subgroup lists start
/// with element 0.
CayleyTable induced_table(const CayleyTable& g, const std::vector<int>& elems) {
    const int m = static_cast<int>(elems.size());
    std::vector<int> pos(static_cast<std::size_t>(g.n), -1);
    for (int i = 0; i < m; ++i) pos[static_cast<std::size_t>(elems[static_cast<std::size_t>(i)])] = i;
    CayleyTable t;
    t.n = m;
    t.entries.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const int p = pos[static_cast<std::size_t>(
                g.mul(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]))];
            if (p < 0) throw InternalError("induced table over a non-closed subset");
            t.entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] = p;
        }
    }
    return t;
}

std::string node_id(std::size_t index, const CayleyTable& rep) {
    std::string digits = std::to_string(index);
    if (digits.size() < 3) digits.insert(0, 3 - digits.size(), '0');
    return "c" + digits + ":" + describe(rep);
}

std::uint64_t u64_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

}  // namespace

CayleyTable validate(int n, std::vector<int> entries) {
    if (n < 1) throw ValueError("group order must be at least 1, got " + std::to_string(n));
    if (n > table_entry_guard)
        throw ValueError("group order " + std::to_string(n) + " exceeds the table guard of " +
                         std::to_string(table_entry_guard));
    if (entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw ValueError("Cayley table for order " + std::to_string(n) + " needs " +
                         std::to_string(static_cast<long long>(n) * n) + " entries, got " +
                         std::to_string(entries.size()));
    CayleyTable g;
    g.n = n;
    g.entries = std::move(entries);

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int v = g.mul(i, j);
            if (v < 0 || v >= n)
                throw TableError(TableDefect::NotClosed,
                                 "entry at row " + std::to_string(i) + ", column " + std::to_string(j) +
                                     " is " + std::to_string(v) + ", outside [0, " + std::to_string(n) + ")");
        }
    for (int j = 0; j < n; ++j)
        if (g.mul(0, j) != j)
            throw TableError(TableDefect::NoIdentityAtZero,
                             "0*" + std::to_string(j) + " = " + std::to_string(g.mul(0, j)) +
                                 ", so element 0 is not a left identity");
    for (int i = 0; i < n; ++i)
        if (g.mul(i, 0) != i)
            throw TableError(TableDefect::NoIdentityAtZero,
                             std::to_string(i) + "*0 = " + std::to_string(g.mul(i, 0)) +
                                 ", so element 0 is not a right identity");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) {
            const int v = g.mul(i, j);
            if (seen[static_cast<std::size_t>(v)])
                throw TableError(TableDefect::NotLatinSquare,
                                 "row " + std::to_string(i) + " repeats element " + std::to_string(v));
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (int j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < n; ++i) {
            const int v = g.mul(i, j);
            if (seen[static_cast<std::size_t>(v)])
                throw TableError(TableDefect::NotLatinSquare,
                                 "column " + std::to_string(j) + " repeats element " + std::to_string(v));
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    // Associativity. Small tables get the direct triple check; larger ones
    // use Light's test, which only needs the generator slices once the set
    // of generators (under plain table closure) is known.
    if (n <= 128) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k)))
                        throw TableError(TableDefect::NotAssociative,
                                         "(" + std::to_string(i) + "*" + std::to_string(j) + ")*" +
                                             std::to_string(k) + " != " + std::to_string(i) + "*(" +
                                             std::to_string(j) + "*" + std::to_string(k) + ")");
    } else {
        std::vector<int> cur = closed_under_products(g, {});
        std::vector<int> gens;
        std::vector<char> member(static_cast<std::size_t>(n), 0);
        while (static_cast<int>(cur.size()) < n) {
            std::fill(member.begin(), member.end(), 0);
            for (int x : cur) member[static_cast<std::size_t>(x)] = 1;
            int next = 0;
            while (member[static_cast<std::size_t>(next)]) ++next;
            gens.push_back(next);
            cur.push_back(next);
            cur = closed_under_products(g, cur);
        }
        for (int a : gens)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (g.mul(g.mul(i, a), j) != g.mul(i, g.mul(a, j)))
                        throw TableError(TableDefect::NotAssociative,
                                         "(" + std::to_string(i) + "*" + std::to_string(a) + ")*" +
                                             std::to_string(j) + " != " + std::to_string(i) + "*(" +
                                             std::to_string(a) + "*" + std::to_string(j) + ")");
    }
    return g;
}

CayleyTable parse_cayley(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_n = false;
    long long n = 0;
    std::vector<int> entries;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            long long value = 0;
            const char* first = tok.data();
            const char* last = tok.data() + tok.size();
            const auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc() || ptr != last)
                throw ValueError("line " + std::to_string(lineno) + ": expected an integer, got \"" +
                                 tok + "\"");
            if (!have_n) {
                if (value < 1)
                    throw ValueError("line " + std::to_string(lineno) +
                                     ": group order must be at least 1, got " + std::to_string(value));
                if (value > table_entry_guard)
                    throw ValueError("line " + std::to_string(lineno) + ": group order " +
                                     std::to_string(value) + " exceeds the table guard of " +
                                     std::to_string(table_entry_guard));
                n = value;
                have_n = true;
                entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
            } else {
                if (entries.size() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
                    throw ValueError("line " + std::to_string(lineno) +
                                     ": extra entry after the table is complete");
                if (value < 0 || value >= n) {
                    const std::size_t at = entries.size();
                    throw TableError(TableDefect::NotClosed,
                                     "entry at row " + std::to_string(at / static_cast<std::size_t>(n)) +
                                         ", column " + std::to_string(at % static_cast<std::size_t>(n)) +
                                         " is " + std::to_string(value) + ", outside [0, " +
                                         std::to_string(n) + ")");
                }
                entries.push_back(static_cast<int>(value));
            }
        }
    }
    if (!have_n) throw ValueError("empty Cayley table input");
    if (entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw ValueError("expected " + std::to_string(n * n) + " table entries, found " +
                         std::to_string(entries.size()));
    return validate(static_cast<int>(n), std::move(entries));
}

CayleyTable parse_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open Cayley table file: " + path);
    return parse_cayley(in);
}

int element_order(const CayleyTable& g, int x) {
    int y = x;
    int k = 1;
    while (y != 0) {
        y = g.mul(y, x);
        ++k;
        if (k > g.n) throw InternalError("element order exceeds the group order");
    }
    return k;
}

std::vector<int> element_orders(const CayleyTable& g) {
    std::vector<int> orders(static_cast<std::size_t>(g.n));
    for (int x = 0; x < g.n; ++x) orders[static_cast<std::size_t>(x)] = element_order(g, x);
    return orders;
}

bool is_abelian(const CayleyTable& g) {
    for (int x = 0; x < g.n; ++x)
        for (int y = x + 1; y < g.n; ++y)
            if (g.mul(x, y) != g.mul(y, x)) return false;
    return true;
}

std::vector<int> minimal_generators(const CayleyTable& g) {
    return generating_sequence(g, {});
}

std::vector<std::vector<int>> subgroups(const CayleyTable& g) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> trivial = closed_under_products(g, {});
    seen.insert(trivial);
    queue.push_back(std::move(trivial));
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::vector<int> h = queue[qi];
        std::vector<char> member(static_cast<std::size_t>(g.n), 0);
        for (int x : h) member[static_cast<std::size_t>(x)] = 1;
        for (int x = 0; x < g.n; ++x) {
            if (member[static_cast<std::size_t>(x)]) continue;
            std::vector<int> seed = h;
            seed.push_back(x);
            std::vector<int> k = closed_under_products(g, seed);
            if (seen.insert(k).second) queue.push_back(std::move(k));
        }
    }
    std::sort(queue.begin(), queue.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return queue;
}

bool is_endomorphism(const CayleyTable& g, const Endomorphism& h) {
    if (h.size() != static_cast<std::size_t>(g.n)) return false;
    for (int v : h)
        if (v < 0 || v >= g.n) return false;
    if (h[0] != 0) return false;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (h[static_cast<std::size_t>(g.mul(i, j))] !=
                g.mul(h[static_cast<std::size_t>(i)], h[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

bool is_idempotent(const CayleyTable& g, const Endomorphism& h) {
    if (!is_endomorphism(g, h)) return false;
    for (int x = 0; x < g.n; ++x)
        if (h[static_cast<std::size_t>(h[static_cast<std::size_t>(x)])] != h[static_cast<std::size_t>(x)])
            return false;
    return true;
}

std::vector<Endomorphism> endomorphisms(const CayleyTable& g, int order_cap) {
    check_order_cap(g, order_cap);
    const std::vector<int> orders = element_orders(g);
    HomSearch search(g, g, false);
    search.seed(0, 0);
    std::vector<int> gens = generating_sequence(g, {});
    std::vector<std::vector<int>> candidates;
    candidates.reserve(gens.size());
    for (int x : gens) {
        std::vector<int> c;
        for (int y = 0; y < g.n; ++y)
            if (orders[static_cast<std::size_t>(x)] % orders[static_cast<std::size_t>(y)] == 0)
                c.push_back(y);
        candidates.push_back(std::move(c));
    }
    search.set_levels(std::move(gens), std::move(candidates));
    std::vector<Endomorphism> out;
    search.run([&](const Endomorphism& h) {
        out.push_back(h);
        return true;
    });
    return out;
}

std::vector<Endomorphism> idempotents(const CayleyTable& g, int order_cap) {
    check_order_cap(g, order_cap);
    const std::vector<int> orders = element_orders(g);
    std::vector<Endomorphism> out;
    for (const std::vector<int>& h : subgroups(g)) {
        for_each_retraction(g, h, orders, [&](const Endomorphism& r) {
            out.push_back(r);
            return true;
        });
    }
    return out;
}

std::int64_t idempotent_count(const CayleyTable& g, int order_cap) {
    check_order_cap(g, order_cap);
    const std::vector<int> orders = element_orders(g);
    std::int64_t count = 0;
    for (const std::vector<int>& h : subgroups(g)) {
        for_each_retraction(g, h, orders, [&](const Endomorphism&) {
            ++count;
            return true;
        });
    }
    return count;
}

IsoProfile IsoProfile::of(const CayleyTable& g) {
    IsoProfile p;
    p.order = g.n;
    p.abelian = is_abelian(g);
    p.element_orders = domlab::element_orders(g);
    const std::vector<int> cent = centralizer_sizes(g);
    p.order_centralizer.reserve(static_cast<std::size_t>(g.n));
    for (int x = 0; x < g.n; ++x)
        p.order_centralizer.emplace_back(p.element_orders[static_cast<std::size_t>(x)],
                                         cent[static_cast<std::size_t>(x)]);
    std::sort(p.element_orders.begin(), p.element_orders.end());
    std::sort(p.order_centralizer.begin(), p.order_centralizer.end());
    return p;
}

bool is_isomorphic(const CayleyTable& a, const CayleyTable& b) {
    if (a.n != b.n) return false;
    if (IsoProfile::of(a) != IsoProfile::of(b)) return false;
    const std::vector<int> oa = element_orders(a);
    const std::vector<int> ob = element_orders(b);
    const std::vector<int> ca = centralizer_sizes(a);
    const std::vector<int> cb = centralizer_sizes(b);
    HomSearch search(a, b, true);
    search.seed(0, 0);
    std::vector<int> gens = generating_sequence(a, {});
    std::vector<std::vector<int>> candidates;
    candidates.reserve(gens.size());
    for (int x : gens) {
        std::vector<int> c;
        for (int y = 0; y < b.n; ++y)
            if (ob[static_cast<std::size_t>(y)] == oa[static_cast<std::size_t>(x)] &&
                cb[static_cast<std::size_t>(y)] == ca[static_cast<std::size_t>(x)])
                c.push_back(y);
        candidates.push_back(std::move(c));
    }
    search.set_levels(std::move(gens), std::move(candidates));
    bool found = false;
    search.run([&](const Endomorphism&) {
        found = true;
        return false;
    });
    return found;
}

std::vector<RetractClass> retract_classes(const CayleyTable& g, int order_cap) {
    check_order_cap(g, order_cap);
    const std::vector<int> orders = element_orders(g);
    std::vector<RetractClass> classes;
    std::vector<IsoProfile> profiles;
    for (const std::vector<int>& h : subgroups(g)) {
        Endomorphism witness;
        for_each_retraction(g, h, orders, [&](const Endomorphism& r) {
            witness = r;
            return false;
        });
        if (witness.empty()) continue;
        CayleyTable rep = induced_table(g, h);
        IsoProfile prof = IsoProfile::of(rep);
        bool known = false;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (profiles[i] == prof && is_isomorphic(classes[i].representative, rep)) {
                known = true;
                break;
            }
        }
        if (known) continue;
        classes.push_back(RetractClass{std::move(rep), h, std::move(witness)});
        profiles.push_back(std::move(prof));
    }
    // Subgroup enumeration is size-ascending, so the list is already ordered
    // by order; settle profile ties while keeping first-found order for
    // classes whose profiles coincide.
    std::vector<std::size_t> idx(classes.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return profiles[a] < profiles[b]; });
    std::vector<RetractClass> ordered;
    ordered.reserve(classes.size());
    for (std::size_t i : idx) ordered.push_back(std::move(classes[i]));
    return ordered;
}

std::int64_t capacity_bruteforce(const CayleyTable& g, int order_cap) {
    return static_cast<std::int64_t>(retract_classes(g, order_cap).size());
}

DominationDAG retract_dag(const CayleyTable& g, int order_cap) {
    const std::vector<RetractClass> classes = retract_classes(g, order_cap);
    const std::size_t k = classes.size();
    std::vector<std::vector<char>> dom(k, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        const std::vector<RetractClass> sub = retract_classes(classes[i].representative, order_cap);
        for (const RetractClass& s : sub)
            for (std::size_t j = 0; j < k; ++j)
                if (!dom[i][j] && s.representative.n == classes[j].representative.n &&
                    is_isomorphic(s.representative, classes[j].representative))
                    dom[i][j] = 1;
    }
    std::vector<ClassNode> nodes;
    nodes.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        ClassNode node;
        node.id = node_id(i, classes[i].representative);
        node.label = describe(classes[i].representative);
        node.payload = i;
        nodes.push_back(std::move(node));
    }
    const std::string root = nodes.back().id;
    auto dominates = [&dom](const ClassNode& a, const ClassNode& b) {
        return dom[a.payload][b.payload] != 0;
    };
    auto proper = [&dom](const ClassNode& a, const ClassNode& b) {
        return a.payload != b.payload && dom[a.payload][b.payload] != 0;
    };
    return DominationDAG::build(std::move(nodes), root, dominates, proper);
}

std::int64_t depth_bruteforce(const CayleyTable& g, int order_cap) {
    return static_cast<std::int64_t>(retract_dag(g, order_cap).longest_chain().length);
}

HolBoundReport hol_bound_report(const CayleyTable& g, int order_cap) {
    HolBoundReport report;
    report.capacity = capacity_bruteforce(g, order_cap);
    report.idempotents = idempotent_count(g, order_cap);
    report.holds = report.capacity <= report.idempotents;
    return report;
}

CayleyTable cayley_from_moduli(const std::vector<std::uint64_t>& moduli) {
    long long n = 1;
    for (std::uint64_t m : moduli) {
        if (m < 2) throw ValueError("cyclic modulus must be at least 2, got " + std::to_string(m));
        if (static_cast<long long>(m) > table_entry_guard || n * static_cast<long long>(m) > table_entry_guard)
            throw ValueError("direct-sum order exceeds the table guard of " +
                             std::to_string(table_entry_guard));
        n *= static_cast<long long>(m);
    }
    const int nn = static_cast<int>(n);
    // Mixed-radix element indexing, last modulus least significant.
    auto add = [&moduli](int a, int b) {
        int out = 0;
        int x = a;
        int y = b;
        int w = 1;
        for (auto it = moduli.rbegin(); it != moduli.rend(); ++it) {
            const int m = static_cast<int>(*it);
            out += ((x % m + y % m) % m) * w;
            x /= m;
            y /= m;
            w *= m;
        }
        return out;
    };
    CayleyTable t;
    t.n = nn;
    t.entries.assign(static_cast<std::size_t>(nn) * static_cast<std::size_t>(nn), 0);
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j)
            t.entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(nn) +
                      static_cast<std::size_t>(j)] = add(i, j);
    return t;
}

CayleyTable cayley_from_abelian(const AbelianGroup& g) {
    const std::optional<std::uint64_t> order = g.order();
    if (!order) throw ValueError("only finite groups have a Cayley table");
    if (*order > static_cast<std::uint64_t>(table_entry_guard))
        throw ValueError("group order " + std::to_string(*order) + " exceeds the table guard of " +
                         std::to_string(table_entry_guard));
    std::vector<std::uint64_t> moduli;
    for (const Summand& s : g.summands)
        for (std::uint64_t i = 0; i < s.multiplicity; ++i)
            moduli.push_back(s.factor.modulus());
    return cayley_from_moduli(moduli);
}

std::optional<AbelianGroup> recognize_abelian(const CayleyTable& g) {
    if (!is_abelian(g)) return std::nullopt;
    const std::vector<int> orders = element_orders(g);
    RawSummands raw;
    int rem = g.n;
    for (int p = 2; p <= rem; ++p) {
        if (rem % p != 0) continue;
        // logs[j] = log_p of the number of elements x with x^(p^j) = identity;
        // successive differences count summand exponents >= j.
        std::vector<int> logs{0};
        std::uint64_t pj = 1;
        while (true) {
            pj *= static_cast<std::uint64_t>(p);
            std::uint64_t c = 0;
            for (int o : orders)
                if (pj % static_cast<std::uint64_t>(o) == 0) ++c;
            int log = 0;
            while (c % static_cast<std::uint64_t>(p) == 0) {
                c /= static_cast<std::uint64_t>(p);
                ++log;
            }
            if (c != 1) return std::nullopt;
            if (log == logs.back()) break;
            logs.push_back(log);
        }
        for (std::size_t j = 1; j < logs.size(); ++j) {
            const int at_least_j = logs[j] - logs[j - 1];
            const int at_least_next = j + 1 < logs.size() ? logs[j + 1] - logs[j] : 0;
            const int exactly_j = at_least_j - at_least_next;
            if (exactly_j < 0) return std::nullopt;
            if (exactly_j > 0)
                raw.emplace_back(u64_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(j)),
                                 static_cast<std::uint64_t>(exactly_j));
        }
        while (rem % p == 0) rem /= p;
    }
    AbelianGroup result = canonicalize(raw);
    if (result.order() != std::optional<std::uint64_t>(static_cast<std::uint64_t>(g.n)))
        return std::nullopt;
    return result;
}

std::string describe(const CayleyTable& g) {
    if (const std::optional<AbelianGroup> a = recognize_abelian(g)) return render(*a);
    return "order-" + std::to_string(g.n) + " nonabelian";
}

}  // namespace domlab
