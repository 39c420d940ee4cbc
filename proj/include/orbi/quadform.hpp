#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbi/group.hpp"
#include "orbi/phase.hpp"

namespace orbi {

// q: H -> Q/Z with q(nx) = n^2 q(x) and bilinear polarization. Values are
// indexed by element index of the abelian group.
struct QuadraticForm {
    AbelianGroup group;
    std::vector<Phase> q;

    const Phase &at(std::int64_t x) const { return q[x]; }
    bool operator==(const QuadraticForm &o) const {
        return group == o.group && q == o.q;
    }
    bool operator<(const QuadraticForm &o) const; // lexicographic on values
};

struct Bicharacter {
    AbelianGroup group;
    std::vector<Phase> b; // b[x * order + y]

    const Phase &at(std::int64_t x, std::int64_t y) const {
        return b[x * group.order() + y];
    }
    bool operator==(const Bicharacter &o) const {
        return group == o.group && b == o.b;
    }
};

struct QuadCheck {
    bool ok = true;
    std::string reason;
    std::vector<std::int64_t> witness;
};

QuadCheck is_quadratic(const AbelianGroup &H, const std::vector<Phase> &qmap);

QuadraticForm make_quadratic_form(const AbelianGroup &H, std::vector<Phase> qmap);
// Cyclic convenience: the form j -> j^2 * q1 on Z/n.
QuadraticForm cyclic_form(std::int64_t n, const Phase &q1);

// sigma(x,y) = q(x+y) - q(x) - q(y); symmetric by construction.
Bicharacter polarization(const QuadraticForm &q);

bool is_symmetric(const Bicharacter &b);
bool is_bilinear(const Bicharacter &b);
// x -> sigma(x,-) is injective into the character group.
bool is_nondegenerate(const Bicharacter &sigma);

std::vector<QuadraticForm> enumerate_quadratic_forms(const AbelianGroup &H,
                                                     bool parallel = true);
inline std::vector<QuadraticForm>
enumerate_quadratic_forms_serial(const AbelianGroup &H) {
    return enumerate_quadratic_forms(H, false);
}

struct TorsorOrbits {
    std::vector<QuadraticForm> forms;
    std::vector<std::vector<int>> orbits; // index lists into forms, sorted
};
// Orbits of Quad(H) under q -> q + b(x,x) for bicharacters b.
TorsorOrbits bichar_torsor_orbits(const AbelianGroup &H);

// Quadratic form epsilon with polarization chi and 2 epsilon(a) = chi(a,a);
// lexicographically least solution, or absent.
std::optional<QuadraticForm> quadratic_refinement(const Bicharacter &chi);
std::vector<QuadraticForm> all_quadratic_refinements(const Bicharacter &chi);

// epsilon with 2*epsilon = q among quadratic forms (the square root of q
// in multiplicative notation); lexicographically least, or absent.
std::optional<QuadraticForm> square_root_form(const QuadraticForm &q);

// Braided 2-group data (H, q); the label names the Z/2 classics.
struct BraidedGroupData {
    AbelianGroup group;
    QuadraticForm q;
    std::string label;
};

BraidedGroupData make_braided(const AbelianGroup &H, QuadraticForm q);
std::string braiding_label(const QuadraticForm &q);

// Invertible part of the Drinfel'd centre of TY(A, chi, tau): objects
// X_{a, eps(a)} for a quadratic refinement eps; the tensor law
// X_{a,eps} X_{b,eta} = X_{a+b, eps eta chi(a,b)} closes on the section.
struct TyCentreTensorEntry {
    std::int64_t a, b, sum; // X_{a,eps(a)} X_{b,eps(b)} = X_{sum, eps(sum)}
    Phase half_braiding;    // eps(a) + eps(b) + chi(a,b) = eps(sum)
};
struct TyCentreInvertibles {
    BraidedGroupData data;      // (A, q) with q(a) = chi(a,a)
    QuadraticForm refinement;   // the chosen eps
    std::vector<TyCentreTensorEntry> tensor_law;
};
TyCentreInvertibles ty_centre_invertibles(const AbelianGroup &A,
                                          const Bicharacter &chi, int tau_sign);

enum class CentreFamily { SUn, SpinOdd, Circle, SO4 };

struct CentreParams {
    std::int64_t n = 2;          // SUn rank
    std::int64_t k = 0;          // level, any sign
    std::int64_t a = 0, b = 0;   // SO4 cohomology class a*p1 + b*chi
};

// Closed-form centre data of Vec^k[G]^x for the hard-coded families.
BraidedGroupData lie_centre_quadform(CentreFamily family, const CentreParams &p);

struct IsotropicQuotient {
    BraidedGroupData data;              // Z'/Z with the induced form
    std::vector<std::int64_t> zprime;   // elements of Z'
    std::vector<std::int64_t> coset_of; // index into quotient per element of Z'
};

// Z' = {a : sigma(a, z) = 0 for all z in Z}; requires q|_Z = 0.
IsotropicQuotient isotropic_quotient(const BraidedGroupData &B,
                                     const std::vector<std::int64_t> &Z);

bool opposite_match(const QuadraticForm &q1, const QuadraticForm &q2);

} // namespace orbi
