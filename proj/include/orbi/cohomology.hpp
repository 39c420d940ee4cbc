#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbi/group.hpp"
#include "orbi/phase.hpp"
#include "orbi/smith.hpp"

namespace orbi {

// Normalized cochain G^n -> Q/Z: the value is 0 whenever any argument is
// the identity. Stored dense over all of G^n; the normalized entries are
// enforced on construction.
struct Cochain {
    FiniteGroup group;
    int degree = 0;
    std::vector<Phase> values; // order^degree entries, row-major tuples

    std::size_t tuple_index(const std::vector<int> &t) const;
    const Phase &at(const std::vector<int> &t) const { return values[tuple_index(t)]; }
    Phase &at(const std::vector<int> &t) { return values[tuple_index(t)]; }

    bool is_zero() const;
    bool operator==(const Cochain &o) const;
};

Cochain zero_cochain(const FiniteGroup &G, int degree);
// Validates normalization.
Cochain make_cochain(const FiniteGroup &G, int degree, std::vector<Phase> values);
Cochain cochain_add(const Cochain &a, const Cochain &b);
Cochain cochain_scale(const Cochain &a, std::int64_t n);

// Alternating bar differential; degree n <= 3 unless the table bound allows
// more. (d kappa)(g,h) = kappa(h) - kappa(gh) + kappa(g); the degree-2
// cocycle condition is exactly theta(g,h)+theta(gh,k) = theta(h,k)+theta(g,hk)
// written additively.
Cochain coboundary(const Cochain &c, std::int64_t max_table = 2000000);

struct CocycleCheck {
    bool ok = true;
    std::vector<int> witness; // first violating tuple when !ok
};
CocycleCheck is_cocycle(const Cochain &c);

// Integer matrix of d_n on normalized cochains: rows are reduced
// (n+1)-tuples of non-identity elements, columns reduced n-tuples.
IntMat coboundary_matrix(const FiniteGroup &G, int n, bool parallel = true);
IntMat coboundary_matrix_serial(const FiniteGroup &G, int n);

struct CohomologyGroup {
    std::vector<std::int64_t> invariant_factors; // ascending divisibility chain
    std::vector<Cochain> generators;             // one per factor
};

// H^n(G; Q/Z) on normalized cochains via integer Smith normal form of the
// bar differential. Yields explicit generating cocycles.
CohomologyGroup cohomology_group(const FiniteGroup &G, int n,
                                 std::int64_t max_table = 5000);

// kappa with d kappa = target when the class is trivial; absent otherwise.
// Throws NotACocycle if the target is not closed.
std::optional<Cochain> solve_coboundary(const Cochain &target,
                                        std::int64_t max_table = 2000000);

// (f*c)(h_1,...,h_n) = c(f h_1, ..., f h_n).
Cochain restrict_cochain(const Cochain &c, const Homomorphism &f);

enum class LieFamily { Circle, SU2 };

// Restriction H^3(BG,C^x) = Z -> H^3(B Z/n, C^x) = Z/n at level k for the
// two families the closed-form tables cover. Returns k mod n; 0 means a
// monoidal map Vec[Z/n] -> Vec^k[G] exists.
std::int64_t lie_level_restriction(LieFamily family, std::int64_t k, std::int64_t n);

} // namespace orbi
