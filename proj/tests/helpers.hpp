#pragma once

#include <vector>

#include "orbi/cohomology.hpp"
#include "orbi/group.hpp"

namespace orbi::testing {

// Dihedral group of order 2n as a table: index j*n + i for s^j r^i,
// (i,j)(i',j') = (i + (-1)^j i', j + j').
inline FiniteGroup dihedral_group(int n) {
    const int order = 2 * n;
    auto idx = [&](int i, int j) { return j * n + ((i % n) + n) % n; };
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < n; ++i)
            for (int j2 = 0; j2 < 2; ++j2)
                for (int i2 = 0; i2 < n; ++i2)
                    table[idx(i, j)][idx(i2, j2)] =
                        idx(j == 0 ? i + i2 : i - i2, (j + j2) % 2);
    return group_from_table(table);
}

// Klein four group with the generators x = (0,1), p = (1,0) of the
// twisted-representation example; element order (0,0),(0,1),(1,0),(1,1).
inline FiniteGroup klein_four() { return abelian_embed(AbelianGroup({2, 2})); }

// theta(a,b) = 1 except theta(p,x) = theta(xp,xp) = theta(p,xp) =
// theta(xp,x) = -1, representing the generator of H^2(B(Z/2)^2, C^x).
inline Cochain klein_theta(const FiniteGroup &IV) {
    Cochain t = zero_cochain(IV, 2);
    const int x = 1, p = 2, xp = 3;
    t.at({p, x}) = Phase(1, 2);
    t.at({xp, xp}) = Phase(1, 2);
    t.at({p, xp}) = Phase(1, 2);
    t.at({xp, x}) = Phase(1, 2);
    return t;
}

inline FiniteGroup cyclic(int n) { return abelian_embed(AbelianGroup({n})); }

// Quaternion group of order 8: index u*2 + s for (+-1) * {1,i,j,k}.
inline FiniteGroup quaternion_group() {
    // unit products: sign bit and resulting basis element
    static const int usign[4][4] = {{0, 0, 0, 0},
                                    {0, 1, 0, 1},
                                    {0, 1, 1, 0},
                                    {0, 0, 1, 1}};
    static const int ubase[4][4] = {{0, 1, 2, 3},
                                    {1, 0, 3, 2},
                                    {2, 3, 0, 1},
                                    {3, 2, 1, 0}};
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int u1 = 0; u1 < 4; ++u1)
        for (int s1 = 0; s1 < 2; ++s1)
            for (int u2 = 0; u2 < 4; ++u2)
                for (int s2 = 0; s2 < 2; ++s2) {
                    int s = (s1 + s2 + usign[u1][u2]) % 2;
                    int u = ubase[u1][u2];
                    table[u1 * 2 + s1][u2 * 2 + s2] = u * 2 + s;
                }
    return group_from_table(table);
}

// every group of order <= 8, up to isomorphism
inline std::vector<FiniteGroup> groups_up_to_order_8() {
    return {abelian_embed(AbelianGroup(std::vector<std::int64_t>{})),
            cyclic(2),
            cyclic(3),
            cyclic(4),
            klein_four(),
            cyclic(5),
            cyclic(6),
            dihedral_group(3),
            cyclic(7),
            cyclic(8),
            abelian_embed(AbelianGroup({2, 4})),
            abelian_embed(AbelianGroup({2, 2, 2})),
            dihedral_group(4),
            quaternion_group()};
}

} // namespace orbi::testing
