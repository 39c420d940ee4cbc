#pragma once

#include <cstdint>
#include <vector>

namespace orbi {

// Multiplication-table group. Elements are indices 0..order-1.
// Validated on construction: associativity, two-sided identity,
// two-sided inverses.
struct FiniteGroup {
    int order = 1;
    std::vector<int> mul;     // order x order, row-major
    int identity = 0;
    std::vector<int> inverse; // inverse[g]

    int op(int g, int h) const { return mul[std::size_t(g) * order + h]; }
    int inv(int g) const { return inverse[g]; }
    bool is_abelian() const;
};

FiniteGroup group_from_table(const std::vector<std::vector<int>> &table);

// Finite abelian group by invariant factors d_1 | d_2 | ... | d_r, each >= 2.
// Elements are lexicographic tuples (a_1,...,a_r) with 0 <= a_i < d_i,
// identified with indices in mixed radix (last coordinate fastest).
struct AbelianGroup {
    std::vector<std::int64_t> factors;

    explicit AbelianGroup(std::vector<std::int64_t> f = {});

    std::int64_t order() const;
    std::int64_t exponent() const;
    int rank() const { return int(factors.size()); }

    std::vector<std::int64_t> tuple(std::int64_t index) const;
    std::int64_t index(const std::vector<std::int64_t> &t) const;

    std::int64_t add(std::int64_t x, std::int64_t y) const;
    std::int64_t neg(std::int64_t x) const;
    std::int64_t scale(std::int64_t n, std::int64_t x) const;
    // index of the i-th standard generator
    std::int64_t generator(int i) const;

    bool operator==(const AbelianGroup &o) const { return factors == o.factors; }
};

FiniteGroup abelian_embed(const AbelianGroup &A, std::int64_t bound = 10000);

// Left action of a finite group on {0,...,set_size-1}:
// act(e,x) = x and act(gh,x) = act(g, act(h,x)). Validated on construction.
struct GroupAction {
    FiniteGroup group;
    int set_size = 0;
    std::vector<int> table; // group.order x set_size

    int act(int g, int x) const { return table[std::size_t(g) * set_size + x]; }
};

GroupAction make_action(const FiniteGroup &G, int set_size,
                        const std::vector<int> &table);

struct Orbit {
    int representative;           // least point index in the orbit
    std::vector<int> points;      // sorted
    std::vector<int> stabilizer;  // sorted element indices of the stabilizer of the representative
};

std::vector<Orbit> orbits_with_stabilizers(const GroupAction &action);

// Verified homomorphism f: H -> G, stored as image[h].
struct Homomorphism {
    const FiniteGroup *domain = nullptr;
    const FiniteGroup *codomain = nullptr;
    std::vector<int> image;

    int operator()(int h) const { return image[h]; }
    bool injective() const;
};

Homomorphism make_homomorphism(const FiniteGroup &H, const FiniteGroup &G,
                               const std::vector<int> &image);

// Subgroup given by its sorted element list; exposes the abstract group and
// the inclusion homomorphism.
struct Subgroup {
    FiniteGroup abstract;        // reindexed multiplication table
    std::vector<int> elements;   // elements[i] = index in the ambient group
};

Subgroup make_subgroup(const FiniteGroup &G, std::vector<int> elements);
Homomorphism subgroup_inclusion(const Subgroup &H, const FiniteGroup &G);

// All subgroups of G, each as a sorted element list. Exponential scan,
// intended for small orders (tests use order <= 8).
std::vector<std::vector<int>> all_subgroups(const FiniteGroup &G);

} // namespace orbi
