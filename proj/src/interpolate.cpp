#include "orbi/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>

#include "orbi/cohomology.hpp"
#include "orbi/error.hpp"

namespace orbi {

std::string GroupModel::manifold_name() const {
    switch (kind) {
    case Kind::Circle: return "S^1";
    case Kind::SU2: return "S^3";
    case Kind::SUn: return "SU(" + std::to_string(n) + ")";
    case Kind::Symbolic: return name.empty() ? "G" : name;
    }
    return "G";
}

std::int64_t GroupModel::centre_order() const {
    switch (kind) {
    case Kind::Circle: return 2 * std::llabs(level);
    case Kind::SU2: return 2;
    case Kind::SUn: return n;
    case Kind::Symbolic: return 1;
    }
    return 1;
}

GroupModel circle_model(std::int64_t level) {
    GroupModel G;
    G.kind = GroupModel::Kind::Circle;
    G.level = level;
    return G;
}

GroupModel su2_model(std::int64_t level) {
    GroupModel G;
    G.kind = GroupModel::Kind::SU2;
    G.n = 2;
    G.level = level;
    return G;
}

GroupModel sun_model(std::int64_t n, std::int64_t level) {
    if (n < 2) throw DomainError("UnsupportedFamily");
    GroupModel G;
    G.kind = GroupModel::Kind::SUn;
    G.n = n;
    G.level = level;
    return G;
}

QuadraticForm centre_form_restricted(const GroupModel &G, std::int64_t m) {
    if (m < 1) throw DomainError("UnsupportedFamily");
    switch (G.kind) {
    case GroupModel::Kind::SU2:
    case GroupModel::Kind::SUn: {
        std::int64_t n = G.kind == GroupModel::Kind::SU2 ? 2 : G.n;
        if (n % m != 0) throw DomainError("NotCentralSubgroup", {{"m", m}, {"n", n}});
        // generated by (n/m) inside Z/n with q(1) = level (n-1) / (2n)
        Phase q1 = Phase(G.level * (n - 1), 2 * n).times((n / m) * (n / m));
        return cyclic_form(m, q1);
    }
    case GroupModel::Kind::Circle: {
        if (G.level == 0) throw DomainError("ZeroLevelCircle");
        std::int64_t twok = 2 * std::llabs(G.level);
        if (twok % m != 0)
            throw DomainError("NotCentralSubgroup", {{"m", m}, {"2k", twok}});
        // generated by (2k/m) inside Z/2k with q(1) = 1/(4k)
        Phase q1 = Phase(1, 4 * G.level).times((twok / m) * (twok / m));
        return cyclic_form(m, q1);
    }
    case GroupModel::Kind::Symbolic:
        throw DomainError("UnsupportedFamily");
    }
    throw DomainError("UnsupportedFamily");
}

InvertibleAction h_action_from_invertibles(const FusionRing &R,
                                           const std::vector<int> &H) {
    const int r = R.rank;
    if (H.empty()) throw DomainError("NotClosed", {{"reason", "empty"}});
    for (int h : H) {
        if (h < 0 || h >= r) throw DomainError("NotInvertible", {{"h", h}});
        if (R.n(h, R.dual[h], R.unit) != 1)
            throw DomainError("NotInvertible", {{"h", h}});
    }
    // each h must permute the simples
    std::vector<std::vector<int>> perm(H.size(), std::vector<int>(r, -1));
    for (std::size_t a = 0; a < H.size(); ++a) {
        for (int x = 0; x < r; ++x) {
            int target = -1;
            for (int y = 0; y < r; ++y) {
                int v = R.n(H[a], x, y);
                if (v == 0) continue;
                if (v > 1 || target >= 0)
                    throw DomainError("NotInvertible", {{"h", H[a]}, {"x", x}});
                target = y;
            }
            if (target < 0) throw DomainError("NotInvertible", {{"h", H[a]}, {"x", x}});
            perm[a][x] = target;
        }
        std::set<int> img(perm[a].begin(), perm[a].end());
        if (int(img.size()) != r)
            throw DomainError("NotInvertible", {{"h", H[a]}, {"reason", "not a permutation"}});
    }
    // fusion among the listed invertibles must close and form a group
    std::vector<int> pos(r, -1);
    for (std::size_t a = 0; a < H.size(); ++a) {
        if (pos[H[a]] >= 0) throw DomainError("NotClosed", {{"reason", "duplicate"}});
        pos[H[a]] = int(a);
    }
    std::vector<std::vector<int>> table(H.size(), std::vector<int>(H.size()));
    for (std::size_t a = 0; a < H.size(); ++a)
        for (std::size_t b = 0; b < H.size(); ++b) {
            int k = perm[a][H[b]];
            if (pos[k] < 0)
                throw DomainError("NotClosed", {{"a", H[a]}, {"b", H[b]}, {"product", k}});
            table[a][b] = pos[k];
        }
    InvertibleAction out;
    out.group = group_from_table(table);
    out.invertibles = H;
    std::vector<int> act_table(H.size() * r);
    for (std::size_t a = 0; a < H.size(); ++a)
        for (int x = 0; x < r; ++x) act_table[a * r + x] = perm[a][x];
    out.action = make_action(out.group, r, act_table);
    return out;
}

Admissibility interpolation_admissible(const GroupModel &G,
                                       const BraidedGroupData &D_centre) {
    const AbelianGroup &H = D_centre.group;
    if (H.rank() > 1) throw DomainError("UnsupportedFamily", {{"reason", "H not cyclic"}});
    std::int64_t m = H.order();
    if (G.kind == GroupModel::Kind::Circle) {
        if (lie_level_restriction(LieFamily::Circle, G.level, m) != 0)
            return {false, "level obstruction"};
    }
    QuadraticForm qg = centre_form_restricted(G, m);
    if (opposite_match(qg, D_centre.q)) return {true, "ok"};
    return {false, "forms not opposite"};
}

namespace {

std::string manifold_label(const GroupModel &G, std::int64_t stab) {
    if (stab == 1) return G.manifold_name();
    if (G.kind == GroupModel::Kind::SU2 && stab == 2) return "RP^3";
    return G.manifold_name() + "/(Z/" + std::to_string(stab) + ")";
}

} // namespace

InterpolationReport build_interpolation(const GroupModel &G,
                                        const FusionRing &D,
                                        const InvertibleAction &action,
                                        std::optional<Admissibility> adm,
                                        bool allow_override) {
    if (adm && !adm->ok && !allow_override)
        throw DomainError("NotAdmissible", {{"reason", adm->reason}});
    InterpolationReport rep;
    rep.model = G;
    rep.subgroup_order = action.group.order;
    if (adm) {
        rep.admissibility_checked = true;
        rep.admissible = adm->ok;
        rep.admissibility_reason = adm->reason;
        if (!adm->ok) rep.admissibility_reason += " (unverified braiding match)";
    } else {
        rep.admissibility_checked = false;
        rep.admissible = false;
        rep.admissibility_reason = "unverified braiding match";
    }
    auto orbits = orbits_with_stabilizers(action.action);
    std::int64_t covered = 0;
    for (const auto &o : orbits) {
        InterpolationComponent c;
        c.representative = o.representative;
        c.orbit = o.points;
        c.stabilizer_order = std::int64_t(o.stabilizer.size());
        c.manifold = manifold_label(G, c.stabilizer_order);
        c.covering_degree = c.stabilizer_order;
        c.contains_unit =
            std::find(o.points.begin(), o.points.end(), D.unit) != o.points.end();
        covered += std::int64_t(o.points.size());
        rep.components.push_back(std::move(c));
    }
    if (covered != D.rank) throw DomainError("InternalOrbitError");
    return rep;
}

InterpolationReport interpolate_su2(int k) {
    FusionRing D = verlinde_su2_ring(k);
    std::vector<int> H = k == 0 ? std::vector<int>{0} : std::vector<int>{0, k};
    InvertibleAction act = h_action_from_invertibles(D, H);
    GroupModel G = su2_model(-std::int64_t(k));
    AbelianGroup Z2(k == 0 ? std::vector<std::int64_t>{}
                           : std::vector<std::int64_t>{2});
    // self-twist of the generating corner object: q(1) = k/4
    BraidedGroupData Dc =
        make_braided(Z2, k == 0 ? QuadraticForm{Z2, {Phase()}}
                                : cyclic_form(2, Phase(k, 4)));
    Admissibility adm = interpolation_admissible(G, Dc);
    return build_interpolation(G, D, act, adm);
}

TyInterpolation interpolated_ty(std::int64_t p, std::int64_t k, int tau_sign) {
    if (p < 2 || p > 97) throw DomainError("BadPrime", {{"p", p}});
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw DomainError("BadPrime", {{"p", p}});
    TyInterpolation out;
    if (lie_level_restriction(LieFamily::Circle, k, p) != 0) {
        out.reason = "no central map";
        return out;
    }
    out.target = cyclic_form(p, Phase(k, p * p));
    auto eps = square_root_form(out.target);
    if (!eps) {
        out.reason = "no square root";
        return out;
    }
    out.refinement = *eps;
    out.chi = polarization(*eps);
    if (!is_nondegenerate(out.chi)) {
        out.reason = "degenerate";
        return out;
    }
    FusionCategoryData ty = build_ty(AbelianGroup({p}), out.chi, tau_sign);
    std::vector<int> H(p);
    std::iota(H.begin(), H.end(), 0);
    InvertibleAction act = h_action_from_invertibles(ty.ring, H);
    GroupModel G = circle_model(-k);
    BraidedGroupData Dc = ty_centre_invertibles(AbelianGroup({p}), out.chi, tau_sign).data;
    Admissibility adm = interpolation_admissible(G, Dc);
    out.report = build_interpolation(G, ty.ring, act, adm);
    out.accepted = true;
    out.reason = "ok";
    return out;
}

namespace {

// canonical representative of x + (1/s)Z in [0, 1/s)
Phase coset_rep(const Phase &x, std::int64_t s) {
    if (s <= 1) return x;
    // x = a/b; subtract floor(x*s)/s
    std::int64_t a = x.num, b = x.den;
    std::int64_t q = (a * s) / b;
    return x - Phase(q, s);
}

} // namespace

FusionOutcome component_fusion(const InterpolationReport &report,
                               const FusionRing &D, int c1, int c2,
                               const std::optional<std::pair<Phase, Phase>> &points) {
    if (c1 < 0 || c1 >= int(report.components.size()) || c2 < 0 ||
        c2 >= int(report.components.size()))
        throw DomainError("BadComponent");
    FusionOutcome out;
    const auto &C1 = report.components[c1];
    const auto &C2 = report.components[c2];
    std::vector<int> comp_of(D.rank, -1);
    for (std::size_t i = 0; i < report.components.size(); ++i)
        for (int x : report.components[i].orbit) comp_of[x] = int(i);
    std::map<int, int> tally;
    for (int z = 0; z < D.rank; ++z) {
        int mult = D.n(C1.representative, C2.representative, z);
        if (mult > 0) tally[comp_of[z]] += mult;
    }
    for (auto [comp, mult] : tally) out.components.push_back({comp, mult});

    if (points) {
        if (report.model.kind != GroupModel::Kind::Circle)
            throw DomainError("PointsUnsupported", {{"model", report.model.manifold_name()}});
        Phase base = points->first + points->second;
        for (auto [comp, mult] : tally) {
            std::int64_t st = report.components[comp].stabilizer_order;
            for (int j = 0; j < mult; ++j)
                out.points.push_back({comp, coset_rep(base + Phase(j, mult), st)});
        }
        std::sort(out.points.begin(), out.points.end(),
                  [](const CirclePoint &a, const CirclePoint &b) {
                      return a.component != b.component ? a.component < b.component
                                                        : a.offset < b.offset;
                  });
    }
    return out;
}

std::string svg_moduli(const InterpolationReport &report) {
    const std::size_t nc = report.components.size();
    if (nc > 32) throw DomainError("TooManyComponents", {{"count", nc}});
    std::string svg;
    char buf[256];
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 400\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"400\" fill=\"white\"/>\n";
    if (nc == 0) {
        svg += "</svg>\n";
        return svg;
    }
    const double slot = 1000.0 / double(nc);
    const double rbase = std::min(150.0, 0.42 * slot);
    for (std::size_t i = 0; i < nc; ++i) {
        const auto &c = report.components[i];
        double cx = slot * (double(i) + 0.5);
        double cy = 200.0;
        double r = rbase / double(c.covering_degree < 1 ? 1 : c.covering_degree);
        std::snprintf(buf, sizeof buf,
                      "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"none\" "
                      "stroke=\"black\" stroke-width=\"3\"/>\n",
                      cx, cy, r);
        svg += buf;
        // marked points at exact angles; simples of the orbit sit at j/|orbit|
        const std::size_t np = c.orbit.size();
        for (std::size_t j = 0; j < np; ++j) {
            double ang = 2.0 * M_PI * double(j) / double(np);
            double px = cx + r * std::sin(ang);
            double py = cy - r * std::cos(ang);
            std::snprintf(buf, sizeof buf,
                          "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"black\"/>\n",
                          px, py);
            svg += buf;
            std::snprintf(buf, sizeof buf,
                          "<text x=\"%.2f\" y=\"%.2f\" font-size=\"14\">[%d]</text>\n",
                          px + 6.0, py - 6.0, c.orbit[j]);
            svg += buf;
        }
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.2f\" y=\"%.2f\" font-size=\"16\" "
                      "text-anchor=\"middle\">%s</text>\n",
                      cx, cy + rbase + 40.0, c.manifold.c_str());
        svg += buf;
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace orbi
