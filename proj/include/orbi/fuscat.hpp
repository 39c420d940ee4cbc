#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "orbi/cohomology.hpp"
#include "orbi/group.hpp"
#include "orbi/phase.hpp"
#include "orbi/quadform.hpp"

namespace orbi {

// Z_+-based fusion ring: basis indices 0..rank-1, unit 0 by convention,
// structure constants N_{ij}^k and duality involution.
struct FusionRing {
    int rank = 1;
    int unit = 0;
    std::vector<int> N;      // rank^3, N[(i*rank + j)*rank + k]
    std::vector<int> dual;
    std::vector<Rational> dims; // optional, empty when omitted

    int n(int i, int j, int k) const {
        return N[(std::size_t(i) * rank + j) * std::size_t(rank) + k];
    }
    bool multiplicity_free() const;
};

FusionRing make_fusion_ring(int rank, std::vector<int> N, std::vector<int> dual,
                            std::vector<Rational> dims = {});

struct RingReport {
    std::vector<nlohmann::json> failures;
    bool ok() const { return failures.empty(); }
};

// Unit law, associativity, duality; when dims are present, flags basis pairs
// where sum_k N_{ij}^k dim_k != dim_i dim_j.
RingReport ring_verify(const FusionRing &R);

// Unique j with N_{ij}^0 = N_{ji}^0 = 1, equal to dual(i), for every i.
RingReport rigidity_check(const FusionRing &R);

// Skeletal fusion category data: multiplicity-free ring plus scalar
// F-symbols on admissible sextuples (a,b,c; d; e,f) where e is the a*b
// channel and f the b*c channel. F^{abc}_d maps the ((ab)c) basis to the
// (a(bc)) basis. Unit-normalized; only non-unit values are stored.
struct FusionCategoryData {
    FusionRing ring;
    std::map<std::array<int, 6>, FValue> F;

    bool admissible(int a, int b, int c, int d, int e, int f) const;
    // absent = inadmissible (the entry is zero)
    std::optional<FValue> f_symbol(int a, int b, int c, int d, int e, int f) const;
};

FusionCategoryData build_pointed(const FiniteGroup &G, const Cochain &omega);

// Tambara-Yamagami TY(A, chi, tau): simples A + {m} with m last,
// F(a,m,b) = chi(a,b), F(m,a,m)_b = chi(a,b),
// F(m,m,m)_{bc} = tau / (sqrt(|A|) chi(b,c)).
FusionCategoryData build_ty(const AbelianGroup &A, const Bicharacter &chi,
                            int tau_sign);

struct PentagonViolation {
    std::array<int, 9> labels; // a,b,c,d,u,e,g,f,h
    double deviation;
    bool operator<(const PentagonViolation &o) const { return labels < o.labels; }
};

struct PentagonReport {
    std::int64_t instances = 0;
    std::vector<PentagonViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Brute-force pentagon verification over all admissible instances.
// Sum-free instances are compared exactly; instances with more than one
// internal channel are compared numerically against tol.
PentagonReport pentagon_check(const FusionCategoryData &C, double tol = 1e-9);
PentagonReport pentagon_check_serial(const FusionCategoryData &C, double tol = 1e-9);

// SU(2)_k Verlinde ring on simples [0..k].
FusionRing verlinde_su2_ring(int k);

} // namespace orbi
