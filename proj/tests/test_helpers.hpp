#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "domlab/abelian.hpp"
#include "domlab/cayley.hpp"

namespace testutil {

// Symmetric group on three letters. Elements are the permutations of
// {0,1,2} in lexicographic order, so the identity sits at index 0.
// Product: (f*g)(x) = f(g(x)).
inline domlab::CayleyTable s3_table() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p = {0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    domlab::CayleyTable t;
    t.n = 6;
    t.entries.assign(36, 0);
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> prod;
            for (int x = 0; x < 3; ++x) prod[x] = perms[i][perms[j][x]];
            auto it = std::find(perms.begin(), perms.end(), prod);
            t.entries[i * 6 + j] = static_cast<int>(it - perms.begin());
        }
    }
    return t;
}

// Dihedral group of order 8. Element r^a s^b has index a + 4b with
// r^4 = s^2 = 1 and s r = r^-1 s.
inline domlab::CayleyTable d4_table() {
    domlab::CayleyTable t;
    t.n = 8;
    t.entries.assign(64, 0);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int c = 0; c < 4; ++c) {
                for (int d = 0; d < 2; ++d) {
                    int rot = (a + (b ? 4 - c : c)) % 4;
                    int ref = (b + d) % 2;
                    t.entries[(a + 4 * b) * 8 + (c + 4 * d)] = rot + 4 * ref;
                }
            }
        }
    }
    return t;
}

// Quaternion group. Index encoding: 0:+1 1:-1 2:+i 3:-i 4:+j 5:-j 6:+k 7:-k.
inline domlab::CayleyTable q8_table() {
    // axis 0 is the scalar unit, axes 1..3 are i, j, k
    auto axis = [](int e) { return e / 2; };
    auto sign = [](int e) { return e % 2 ? -1 : 1; };
    auto encode = [](int ax, int sg) { return 2 * ax + (sg < 0 ? 1 : 0); };

    domlab::CayleyTable t;
    t.n = 8;
    t.entries.assign(64, 0);
    for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
            int ax = axis(x), ay = axis(y);
            int s = sign(x) * sign(y);
            int az;
            if (ax == 0) {
                az = ay;
            } else if (ay == 0) {
                az = ax;
            } else if (ax == ay) {
                az = 0;
                s = -s;
            } else {
                // i*j=k, j*k=i, k*i=j; the reversed order flips the sign
                az = 6 - ax - ay;
                bool forward = (ay - ax + 3) % 3 == 1;
                if (!forward) s = -s;
            }
            t.entries[x * 8 + y] = encode(az, s);
        }
    }
    return t;
}

// Random finitely generated abelian group with total cyclic factor count
// at most max_factor_sum. Mixes infinite cyclic factors with small prime
// powers; may return the trivial group.
inline domlab::AbelianGroup random_abelian(std::mt19937_64& rng, int max_factor_sum) {
    static const std::vector<uint64_t> moduli = {0, 2, 3, 4, 5, 7, 8, 9, 25, 27};
    std::uniform_int_distribution<int> budget_dist(0, max_factor_sum);
    int budget = budget_dist(rng);

    domlab::RawSummands raw;
    while (budget > 0) {
        uint64_t m = moduli[rng() % moduli.size()];
        int mult = 1 + static_cast<int>(rng() % static_cast<uint64_t>(std::min(budget, 3)));
        raw.emplace_back(m, static_cast<uint64_t>(mult));
        budget -= mult;
    }
    return domlab::canonicalize(raw);
}

}  // namespace testutil
