#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "orbi/cohomology.hpp"
#include "orbi/fuscat.hpp"
#include "orbi/group.hpp"
#include "orbi/interpolate.hpp"
#include "orbi/orbisheaf.hpp"
#include "orbi/quadform.hpp"
#include "orbi/twistedrep.hpp"

namespace orbi {

using json = nlohmann::json;

// Groups: {"type":"abelian","factors":[...]} or {"type":"table","mul":[[...]]}
struct GroupSpec {
    FiniteGroup group;
    std::optional<AbelianGroup> abelian;
};
GroupSpec group_from_json(const json &j);
json group_to_json(const GroupSpec &g);

// Cochains: {"group":..., "degree":n, "values":{"g1,g2":"num/den"}},
// identity entries omitted.
Cochain cochain_from_json(const json &j);
Cochain cochain_from_json(const json &j, const FiniteGroup &G); // values only
json cochain_to_json(const Cochain &c, bool with_group = true);

json fvalue_to_json(const FValue &v);
FValue fvalue_from_json(const json &j);

// Rings: N as sparse quadruples [i,j,k,N_{ij}^k].
json ring_to_json(const FusionRing &R);
FusionRing ring_from_json(const json &j);

json category_to_json(const FusionCategoryData &C);
FusionCategoryData category_from_json(const json &j);

json decomposition_to_json(const RepDecomposition &d);

json quadform_to_json(const QuadraticForm &q);
QuadraticForm quadform_from_json(const json &j);
json bicharacter_to_json(const Bicharacter &b);
Bicharacter bicharacter_from_json(const json &j);
json braided_to_json(const BraidedGroupData &b);

json report_to_json(const InterpolationReport &r);
json pentagon_to_json(const PentagonReport &r);

json sheaf_to_json(const TwistedSheaf &F);
TwistedSheaf sheaf_from_json(const json &j);

} // namespace orbi
