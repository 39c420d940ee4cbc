#pragma once

#include <cstdint>
#include <vector>

#include "orbi/cohomology.hpp"
#include "orbi/group.hpp"
#include "orbi/linalg.hpp"

namespace orbi {

// theta-twisted group ring C^theta[Gamma]: basis indexed by group elements,
// g . h = theta(g,h) (gh). Associativity is equivalent to the cocycle
// condition, which is verified on construction.
struct TwistedAlgebra {
    FiniteGroup group;
    Cochain theta; // degree 2, normalized cocycle

    std::complex<double> theta_at(int g, int h) const {
        return theta.at({g, h}).eval();
    }
    Phase theta_phase(int g, int h) const { return theta.at({g, h}); }
};

TwistedAlgebra twisted_algebra(const FiniteGroup &G, const Cochain &theta);

// Module over a twisted group ring, as one matrix per group element:
// rho(g) rho(h) = theta(g,h) rho(gh) within tolerance.
struct Rep {
    TwistedAlgebra algebra;
    int dim = 0;
    std::vector<cmat> rho; // one per group element

    double twist_deviation() const; // max over pairs of the defining relation
};

Rep make_rep(const TwistedAlgebra &A, std::vector<cmat> matrices, double tol = 1e-9);
Rep regular_rep(const TwistedAlgebra &A);

struct RepDecomposition {
    // (irreducible dimension, multiplicity), sorted by dim then mult
    std::vector<std::pair<int, int>> parts;
    std::int64_t total() const;
};

// Artin-Wedderburn by spectral clustering of a seeded random element of the
// commutant. Reseeds up to 8 times on eigenvalue degeneracy.
RepDecomposition regular_decompose(const TwistedAlgebra &A,
                                   std::uint64_t seed = default_seed(),
                                   double gap = 1e-6);

// Representatives of the irreducible theta-twisted representations,
// extracted from the regular representation. Deduplicated by character.
std::vector<Rep> irreducibles(const TwistedAlgebra &A,
                              std::uint64_t seed = default_seed());

// Restriction along an injective homomorphism f: H -> Gamma; the result is
// a module over C^{f* theta}[H] on the same carrier.
Rep restrict_rep(const Rep &V, const Homomorphism &f);

// Induction C^theta[Gamma] tensor_{C^{f*theta}[H]} V with basis indexed by
// minimal left-coset representatives x basis of V.
Rep induce_rep(const Rep &V, const Homomorphism &f, const TwistedAlgebra &At);

struct NakayamaReport {
    double dev_forward = 0;  // |Nak . Nak^-1 - id|
    double dev_backward = 0; // |Nak^-1 . Nak - id|
};

// Builds the explicit natural isomorphism Hom_H(C^theta[Gamma], V) ->
// C^theta[Gamma] tensor_H V and its stated inverse, and measures how far the
// two composites are from the identity.
NakayamaReport nakayama_check(const Rep &V, const Homomorphism &f,
                              const TwistedAlgebra &At);

struct FrobeniusData {
    std::int64_t scalar_num = 1, scalar_den = 1; // |Gamma| / |H|, exact
    double dev_scalar = 0;  // |eps . eta - s id|
    double dev_idem = 0;    // |e^2 - e| for e = (1/s) eta . eps
    double dev_split = 0;   // |eps . (1/s) eta - id|
    cmat unit, counit;      // eta and eps on the test module
};

// Frobenius monad data of the ambidextrous restriction-induction adjunction,
// evaluated on the regular module.
FrobeniusData frobenius_data(const Homomorphism &f, const TwistedAlgebra &At);

} // namespace orbi
