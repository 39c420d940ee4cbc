#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbi/cohomology.hpp"
#include "orbi/fuscat.hpp"
#include "orbi/group.hpp"
#include "orbi/linalg.hpp"

namespace orbi {

// Finite quotient groupoid [S/Gamma] with a constant 2-cocycle gerbe
// (local normal form).
struct OrbifoldModel {
    GroupAction action; // left Gamma-action on S
    Cochain theta;      // degree-2 cocycle on Gamma
    bool effective = false;
};

OrbifoldModel orbifold_model(const GroupAction &action, const Cochain &theta);

// Twisted sheaf over [S/Gamma]: fibers F(s) with descent maps
// phi_g(s): F(s) -> F(g.s) satisfying
// phi_{g'}(g.s) . phi_g(s) = theta(g',g) phi_{g'g}(s) and phi_e = id.
// At a one-point S this is exactly a theta-twisted representation.
struct TwistedSheaf {
    OrbifoldModel base;
    std::vector<int> fiber_dim;         // per point of S
    std::vector<std::vector<cmat>> phi; // phi[g][s], fiber_dim[g.s] x fiber_dim[s]

    int points() const { return base.action.set_size; }
    std::int64_t total_dim() const;
};

TwistedSheaf zero_sheaf(const OrbifoldModel &m);

// Skyscraper at a Gamma-fixed point carrying a twisted representation of
// the full stabilizer; rho must satisfy the theta-twisted relation.
TwistedSheaf skyscraper_at_fixed_point(const OrbifoldModel &m, int point,
                                       const std::vector<cmat> &rho);

TwistedSheaf direct_sum(const TwistedSheaf &a, const TwistedSheaf &b);

struct SheafValidation {
    bool ok = true;
    double max_deviation = 0;
    std::vector<int> witness; // (g', g) of the worst pair when !ok
};
SheafValidation sheaf_validate(const TwistedSheaf &F, double tol = 1e-9);

// Plain fiber data over S, the image of the forgetful functor q^*.
struct PlainFibers {
    std::vector<int> dim;
};

PlainFibers forget_q(const TwistedSheaf &F);

// Induction I(E)(s) = sum_g E(g^{-1} s) with descent maps given by theta.
TwistedSheaf induce_I(const OrbifoldModel &m, const PlainFibers &E);

struct SheafHom {
    int dim = 0;
    // basis[k][s]: component F(s) -> F'(s) of the k-th basis morphism
    std::vector<std::vector<cmat>> basis;
};

// Twisted-equivariant fiberwise maps psi(g.s) phi_g(s) = phi'_g(s) psi(s).
SheafHom sheaf_hom(const TwistedSheaf &F, const TwistedSheaf &Fp, double tol = 1e-9);

struct AdjunctionReport {
    bool ok = true;
    double max_deviation = 0;
    std::vector<nlohmann::json> failures;
};

// Exercises both adjunctions q^* -| I -| q^* on a battery of sheaves over
// the model: Hom-space dimensions, the explicit bijections, the triangle
// normalization eps . eta = id, and the split idempotent exhibiting every
// sheaf as a summand of an induced one.
AdjunctionReport adjunction_check(const OrbifoldModel &m, double tol = 1e-9);

// Orbit representatives with nonzero fiber.
std::vector<int> support(const TwistedSheaf &F);

// vdim of the fiber divided by the stabilizer order.
Rational sheaf_dimension(const TwistedSheaf &F, int point);

// Representation ring of the dihedral group of order 2n, with each simple
// tagged by its support point on [Z/n up to sign], its stabilizer order and
// its dimension as a sheaf.
struct DihedralModel {
    int n = 3;
    FiniteGroup group;           // order 2n
    FusionRing ring;             // representation ring
    std::vector<int> vdim;       // vector-space dims of the simples
    std::vector<int> support_pt; // in 0..floor(n/2)
    std::vector<std::int64_t> stab_order;
    std::vector<Rational> dim;   // vdim at point / stabilizer order
};

DihedralModel dihedral_model(int n, std::uint64_t seed = default_seed());

struct MobileReport {
    bool ok = true;
    std::vector<nlohmann::json> failures;
};

// Grothendieck-ring identities for the mobile unit O = (sum of simples
// supported at 0): O.O = 2 O, O.X = 2 dim(X) O_p, dim(1) = 1/2, and
// X^v X = O + R with R supported away from 0 for simple mobiles.
MobileReport mobile_identities_check(const DihedralModel &dm);

} // namespace orbi
