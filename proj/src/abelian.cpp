#include "domlab/abelian.hpp"

#include <algorithm>
#include <map>

namespace domlab {

namespace {

constexpr std::size_t enumeration_limit = std::size_t{1} << 20;

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Trial division; returns (p, alpha) pairs with p ascending.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t m) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        std::uint32_t alpha = 0;
        while (m % p == 0) {
            m /= p;
            ++alpha;
        }
        out.emplace_back(p, alpha);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw ValueError(std::string(what) + " overflows 64 bits");
    return r;
}

mpz_class mpz_from_u64(std::uint64_t v) {
    mpz_class hi(static_cast<unsigned long>(v >> 32));
    hi <<= 32;
    return hi + static_cast<unsigned long>(v & 0xffffffffull);
}

}  // namespace

Factor Factor::prime_power(std::uint64_t p, std::uint32_t alpha) {
    if (alpha < 1) throw ValueError("prime-power factor needs exponent >= 1");
    if (!is_prime_u64(p)) throw ValueError(std::to_string(p) + " is not prime");
    return Factor{p, alpha};
}

std::uint64_t Factor::modulus() const {
    if (is_infinite()) throw InternalError("infinite cyclic factor has no modulus");
    std::uint64_t m = 1;
    for (std::uint32_t i = 0; i < exponent; ++i) {
        if (__builtin_mul_overflow(m, prime, &m))
            throw InternalError("prime-power modulus overflows 64 bits");
    }
    return m;
}

bool AbelianGroup::is_finite() const {
    return summands.empty() || !summands.front().factor.is_infinite();
}

std::optional<std::uint64_t> AbelianGroup::order() const {
    if (!is_finite()) return std::nullopt;
    std::uint64_t n = 1;
    for (const Summand& s : summands) {
        const std::uint64_t m = s.factor.modulus();
        for (std::uint64_t i = 0; i < s.multiplicity; ++i)
            if (__builtin_mul_overflow(n, m, &n)) return std::nullopt;
    }
    return n;
}

AbelianGroup canonicalize(const RawSummands& raw) {
    std::map<Factor, std::uint64_t> merged;
    for (const auto& [modulus, multiplicity] : raw) {
        if (multiplicity == 0 || modulus == 1) continue;
        if (modulus == 0) {
            auto& k = merged[Factor::infinite_cyclic()];
            k = checked_add(k, multiplicity, "multiplicity");
            continue;
        }
        for (const auto& [p, alpha] : factorize(modulus)) {
            auto& k = merged[Factor{p, alpha}];
            k = checked_add(k, multiplicity, "multiplicity");
        }
    }
    AbelianGroup g;
    for (const auto& [factor, multiplicity] : merged) g.summands.push_back({factor, multiplicity});
    return g;
}

RawSummands to_raw(const AbelianGroup& g) {
    RawSummands raw;
    for (const Summand& s : g.summands)
        raw.emplace_back(s.factor.is_infinite() ? 0 : s.factor.modulus(), s.multiplicity);
    return raw;
}

bool is_canonical(const AbelianGroup& g) {
    for (std::size_t i = 0; i < g.summands.size(); ++i) {
        const Summand& s = g.summands[i];
        if (s.multiplicity == 0) return false;
        if (!s.factor.is_infinite() &&
            (s.factor.exponent < 1 || !is_prime_u64(s.factor.prime)))
            return false;
        if (i > 0 && !(g.summands[i - 1].factor < s.factor)) return false;
    }
    return true;
}

bool is_summand(const AbelianGroup& h, const AbelianGroup& g) {
    auto it = g.summands.begin();
    for (const Summand& hs : h.summands) {
        while (it != g.summands.end() && it->factor < hs.factor) ++it;
        if (it == g.summands.end() || it->factor != hs.factor ||
            it->multiplicity < hs.multiplicity)
            return false;
    }
    return true;
}

mpz_class capacity(const AbelianGroup& g) {
    mpz_class c = 1;
    for (const Summand& s : g.summands) c *= mpz_from_u64(s.multiplicity) + 1;
    return c;
}

mpz_class strong_capacity(const AbelianGroup& g) { return capacity(g) - 1; }

std::int64_t depth(const AbelianGroup& g) {
    std::uint64_t sum = 0;
    for (const Summand& s : g.summands) sum = checked_add(sum, s.multiplicity, "depth");
    if (sum >= static_cast<std::uint64_t>(INT64_MAX))
        throw ValueError("depth overflows a signed 64-bit integer");
    return static_cast<std::int64_t>(sum) + 1;
}

std::int64_t strong_depth(const AbelianGroup& g) { return depth(g); }

std::vector<AbelianGroup> direct_summands(const AbelianGroup& g) {
    const mpz_class count = capacity(g);
    if (count > enumeration_limit)
        throw ValueError("too many summand classes to enumerate (" + count.get_str() + ")");

    std::vector<AbelianGroup> out;
    out.reserve(count.get_ui());
    std::vector<std::uint64_t> chosen(g.summands.size(), 0);
    for (;;) {
        AbelianGroup s;
        for (std::size_t i = 0; i < chosen.size(); ++i)
            if (chosen[i] > 0) s.summands.push_back({g.summands[i].factor, chosen[i]});
        out.push_back(std::move(s));

        // Odometer with the first canonical factor varying fastest.
        std::size_t i = 0;
        while (i < chosen.size() && chosen[i] == g.summands[i].multiplicity) chosen[i++] = 0;
        if (i == chosen.size()) break;
        ++chosen[i];
    }
    return out;
}

std::vector<AbelianGroup> witness_chain(const AbelianGroup& g) {
    const std::int64_t length = depth(g);
    if (static_cast<std::uint64_t>(length) > enumeration_limit)
        throw ValueError("witness chain too long to materialize (" + std::to_string(length) + ")");

    std::vector<AbelianGroup> chain;
    chain.reserve(static_cast<std::size_t>(length));
    AbelianGroup cur;
    chain.push_back(cur);
    for (const Summand& s : g.summands) {
        cur.summands.push_back({s.factor, 0});
        for (std::uint64_t t = 1; t <= s.multiplicity; ++t) {
            cur.summands.back().multiplicity = t;
            chain.push_back(cur);
        }
    }
    return chain;
}

std::string render(const AbelianGroup& g) {
    if (g.is_trivial()) return "1";
    std::string out;
    for (const Summand& s : g.summands) {
        if (!out.empty()) out += " + ";
        out += s.factor.is_infinite() ? "Z" : "Z_" + std::to_string(s.factor.modulus());
        if (s.multiplicity > 1) out += "^" + std::to_string(s.multiplicity);
    }
    return out;
}

std::vector<AbelianGroup> finite_abelian_groups_up_to(std::uint64_t max_order) {
    std::vector<AbelianGroup> out;
    for (std::uint64_t n = 1; n <= max_order; ++n) {
        // Partitions of each prime exponent give the groups of order p^e;
        // cartesian products across primes give the groups of order n.
        const auto primes = factorize(n);
        std::vector<std::vector<std::vector<std::uint32_t>>> partition_choices;
        for (const auto& [p, e] : primes) {
            std::vector<std::vector<std::uint32_t>> parts;
            std::vector<std::uint32_t> cur;
            // Non-increasing partitions of e, lexicographically.
            auto rec = [&](auto&& self, std::uint32_t remaining, std::uint32_t max_part) -> void {
                if (remaining == 0) {
                    parts.push_back(cur);
                    return;
                }
                for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
                    cur.push_back(part);
                    self(self, remaining - part, part);
                    cur.pop_back();
                }
            };
            rec(rec, e, e);
            partition_choices.push_back(std::move(parts));
        }

        std::vector<std::size_t> pick(primes.size(), 0);
        for (;;) {  // n == 1 yields the empty product, i.e. the trivial group
            RawSummands raw;
            for (std::size_t i = 0; i < primes.size(); ++i) {
                const std::uint64_t p = primes[i].first;
                for (std::uint32_t part : partition_choices[i][pick[i]]) {
                    std::uint64_t m = 1;
                    for (std::uint32_t j = 0; j < part; ++j) m *= p;
                    raw.emplace_back(m, 1);
                }
            }
            out.push_back(canonicalize(raw));

            std::size_t i = 0;
            while (i < pick.size() && pick[i] + 1 == partition_choices[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
            ++pick[i];
        }
    }
    std::sort(out.begin(), out.end(), [](const AbelianGroup& a, const AbelianGroup& b) {
        const auto oa = a.order().value();
        const auto ob = b.order().value();
        if (oa != ob) return oa < ob;
        return a < b;
    });
    return out;
}

DominationDAG summand_dag(const AbelianGroup& g) {
    const std::vector<AbelianGroup> classes = direct_summands(g);
    std::vector<ClassNode> nodes;
    nodes.reserve(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i)
        nodes.push_back({render(classes[i]), render(classes[i]), i});

    auto dominates = [&classes](const ClassNode& u, const ClassNode& v) {
        return is_summand(classes[v.payload], classes[u.payload]);
    };
    auto proper = [&classes, &dominates](const ClassNode& u, const ClassNode& v) {
        return classes[u.payload] != classes[v.payload] && dominates(u, v);
    };
    return DominationDAG::build(std::move(nodes), render(g), dominates, proper);
}

}  // namespace domlab
