#pragma once

#include <random>
#include <vector>

#include "latkit/root_systems.hpp"

namespace latkit::testing {

// All diagram automorphisms, hand-listed per family. Used as an independent
// source of isometries outside the Weyl group.
inline std::vector<DiagramAutomorphism> diagram_automorphism_group(const ADEType& t) {
    std::vector<DiagramAutomorphism> out;
    auto add = [&](std::vector<int> p) { out.push_back(DiagramAutomorphism{std::move(p)}); };
    int n = t.rank;
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    add(id);
    switch (t.family) {
        case ADEFamily::A:
            if (n >= 2) {
                std::vector<int> rev(n);
                for (int i = 0; i < n; ++i) rev[i] = n - 1 - i;
                add(rev);
            }
            break;
        case ADEFamily::D:
            if (n == 4) {
                // every permutation of the three outer nodes 0, 1, 3
                const int outer[3] = {0, 1, 3};
                int perm3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
                for (int k = 1; k < 6; ++k) {
                    std::vector<int> p = id;
                    for (int i = 0; i < 3; ++i) p[outer[i]] = outer[perm3[k][i]];
                    add(p);
                }
            } else {
                std::vector<int> swap01 = id;
                std::swap(swap01[0], swap01[1]);
                add(swap01);
            }
            break;
        case ADEFamily::E:
            if (n == 6) add({0, 5, 4, 3, 2, 1});
            break;
    }
    return out;
}

inline Isometry random_weyl_isometry(const RootDatum& rd, std::mt19937_64& rng, int max_len) {
    IntMat m = IntMat::identity(rd.lattice.rank);
    int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_len + 1));
    for (int t = 0; t < len; ++t)
        m = m * fundamental_reflection(rd, static_cast<int>(rng() % rd.lattice.rank)).m;
    return Isometry(m);
}

inline Isometry random_full_isometry(const RootDatum& rd, std::mt19937_64& rng, int max_len) {
    auto autos = diagram_automorphism_group(rd.type);
    Isometry w = random_weyl_isometry(rd, rng, max_len);
    Isometry p = permutation_isometry(rd.lattice, autos[rng() % autos.size()]);
    return w * p;
}

// Independent enumeration of the positive roots: walk the whole coefficient
// box bounded by the highest root and keep the vectors of square -2.
inline std::vector<Vec> positive_roots_box_oracle(const RootDatum& rd) {
    int n = rd.lattice.rank;
    std::vector<Vec> found;
    Vec cur(n, 0);
    for (;;) {
        if (!is_zero_vec(cur) && inner(rd.lattice, cur, cur) == -2) found.push_back(cur);
        int i = 0;
        while (i < n) {
            if (++cur[i] <= rd.highest_root[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace latkit::testing
