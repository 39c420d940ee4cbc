#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbi/fuscat.hpp"
#include "orbi/group.hpp"
#include "orbi/quadform.hpp"

namespace orbi {

// Symbolic model of the ambient Lie group of an interpolated category.
// Circle carries exact point arithmetic (phases); the others are tracked at
// the component level only.
struct GroupModel {
    enum class Kind { Circle, SU2, SUn, Symbolic };
    Kind kind = Kind::Circle;
    std::int64_t n = 2;       // SUn rank
    std::int64_t level = 0;   // level as used, sign included
    std::string name;         // Symbolic label

    std::string manifold_name() const;
    // order of the full centre's finite model (2|k| for the circle, n for SUn)
    std::int64_t centre_order() const;
};

GroupModel circle_model(std::int64_t level);
GroupModel su2_model(std::int64_t level);
GroupModel sun_model(std::int64_t n, std::int64_t level);

// Centre form of the model restricted to the cyclic subgroup of order m.
QuadraticForm centre_form_restricted(const GroupModel &G, std::int64_t m);

struct InvertibleAction {
    FiniteGroup group;    // abstract group on the listed invertibles
    GroupAction action;   // permutation action on all simples of the ring
    std::vector<int> invertibles; // the H-indices, in input order
};

// The permutation action a.X = unique Y with N_{a,X}^Y = 1 for a list of
// invertible simples closed under fusion.
InvertibleAction h_action_from_invertibles(const FusionRing &R,
                                           const std::vector<int> &H);

struct Admissibility {
    bool ok = false;
    std::string reason; // "ok" | "level obstruction" | "forms not opposite"
};

// Opposite-form test between the model's centre form restricted to H and
// the braided data found in the centre of the fusion-category factor.
Admissibility interpolation_admissible(const GroupModel &G,
                                       const BraidedGroupData &D_centre);

struct InterpolationComponent {
    int representative = 0;        // least simple index in the orbit
    std::vector<int> orbit;        // simple indices, sorted
    std::int64_t stabilizer_order = 1;
    std::string manifold;          // e.g. "S^1", "S^1/(Z/3)", "S^3", "RP^3"
    std::int64_t covering_degree = 1;
    bool contains_unit = false;
};

struct InterpolationReport {
    GroupModel model;
    std::int64_t subgroup_order = 1;
    std::vector<InterpolationComponent> components;
    bool admissibility_checked = true;
    bool admissible = true;
    std::string admissibility_reason = "ok";
};

// Requires a passing admissibility result unless allow_override is set;
// overridden or unchecked reports carry an "unverified braiding match" flag.
InterpolationReport build_interpolation(const GroupModel &G,
                                        const FusionRing &D,
                                        const InvertibleAction &action,
                                        std::optional<Admissibility> adm = {},
                                        bool allow_override = false);

// Whole pipeline for SU(2): Verlinde data at level k, flip action of the
// centre, admissibility against Vec^{-k}[SU(2)].
InterpolationReport interpolate_su2(int k);

struct TyInterpolation {
    bool accepted = false;
    std::string reason; // "ok" | "no central map" | "no square root" | "degenerate"
    QuadraticForm target;     // q(1) = k/p^2 on Z/p (when a central map exists)
    QuadraticForm refinement; // eps with 2 eps = q
    Bicharacter chi;          // polarization of eps
    InterpolationReport report;
};

// Interpolated TY over Z/p inside the circle at level k.
TyInterpolation interpolated_ty(std::int64_t p, std::int64_t k, int tau_sign);

// A point of the moduli of simples of a circle-model report: a phase on the
// component's circle. For components with stabilizer of order s the phase is
// taken mod 1/s (a coset of the marked subgroup).
struct CirclePoint {
    int component = 0;
    Phase offset;
};

struct FusionOutcome {
    // component-level result: (component index, multiplicity)
    std::vector<std::pair<int, int>> components;
    // point-level result when requested and supported
    std::vector<CirclePoint> points;
};

FusionOutcome component_fusion(const InterpolationReport &report,
                               const FusionRing &D, int c1, int c2,
                               const std::optional<std::pair<Phase, Phase>> &points = {});

std::string svg_moduli(const InterpolationReport &report);

} // namespace orbi
