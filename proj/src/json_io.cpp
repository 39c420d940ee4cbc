#include "orbi/json_io.hpp"

#include <sstream>

#include "orbi/error.hpp"

namespace orbi {

namespace {

std::string tuple_key(const std::vector<int> &t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s;
}

std::vector<int> parse_key(const std::string &s, int expect) {
    std::vector<int> t;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) t.push_back(std::stoi(item));
    if (expect >= 0 && int(t.size()) != expect)
        throw DomainError("BadTupleKey", {{"key", s}});
    return t;
}

} // namespace

GroupSpec group_from_json(const json &j) {
    if (!j.is_object() || !j.contains("type"))
        throw DomainError("BadGroupJson");
    GroupSpec g;
    std::string type = j.at("type");
    if (type == "abelian") {
        std::vector<std::int64_t> factors = j.at("factors").get<std::vector<std::int64_t>>();
        g.abelian = AbelianGroup(factors);
        g.group = abelian_embed(*g.abelian);
    } else if (type == "table") {
        g.group = group_from_table(j.at("mul").get<std::vector<std::vector<int>>>());
    } else {
        throw DomainError("BadGroupJson", {{"type", type}});
    }
    return g;
}

json group_to_json(const GroupSpec &g) {
    if (g.abelian)
        return {{"type", "abelian"}, {"factors", g.abelian->factors}};
    std::vector<std::vector<int>> mul(g.group.order, std::vector<int>(g.group.order));
    for (int a = 0; a < g.group.order; ++a)
        for (int b = 0; b < g.group.order; ++b) mul[a][b] = g.group.op(a, b);
    return {{"type", "table"}, {"mul", mul}};
}

Cochain cochain_from_json(const json &j) {
    GroupSpec g = group_from_json(j.at("group"));
    return cochain_from_json(j, g.group);
}

Cochain cochain_from_json(const json &j, const FiniteGroup &G) {
    int degree = j.at("degree");
    Cochain c = zero_cochain(G, degree);
    if (j.contains("values"))
        for (auto it = j.at("values").begin(); it != j.at("values").end(); ++it) {
            auto t = parse_key(it.key(), degree);
            for (int x : t)
                if (x < 0 || x >= G.order) throw DomainError("BadTupleKey");
            c.at(t) = Phase::parse(it.value().get<std::string>());
        }
    // reject nonzero identity entries
    return make_cochain(G, degree, std::move(c.values));
}

json cochain_to_json(const Cochain &c, bool with_group) {
    json values = json::object();
    std::vector<int> t(c.degree, 0);
    const int n = c.group.order;
    for (std::size_t idx = 0; idx < c.values.size(); ++idx) {
        if (c.values[idx].is_zero()) continue;
        std::size_t rest = idx;
        for (int i = c.degree - 1; i >= 0; --i) {
            t[i] = int(rest % n);
            rest /= n;
        }
        values[tuple_key(t)] = c.values[idx].str();
    }
    json out = {{"degree", c.degree}, {"values", values}};
    if (with_group) {
        GroupSpec g;
        g.group = c.group;
        out["group"] = group_to_json(g);
    }
    return out;
}

json fvalue_to_json(const FValue &v) {
    return {{"phase", v.phase.str()}, {"radicand", v.radicand.str()}};
}

FValue fvalue_from_json(const json &j) {
    return FValue(Phase::parse(j.at("phase").get<std::string>()),
                  Rational::parse(j.at("radicand").get<std::string>()));
}

json ring_to_json(const FusionRing &R) {
    json triples = json::array();
    for (int i = 0; i < R.rank; ++i)
        for (int j = 0; j < R.rank; ++j)
            for (int k = 0; k < R.rank; ++k)
                if (R.n(i, j, k) != 0)
                    triples.push_back({i, j, k, R.n(i, j, k)});
    json out = {{"rank", R.rank}, {"unit", R.unit}, {"N", triples}, {"dual", R.dual}};
    if (!R.dims.empty()) {
        json d = json::array();
        for (const auto &x : R.dims) d.push_back(x.str());
        out["dims"] = d;
    }
    return out;
}

FusionRing ring_from_json(const json &j) {
    int rank = j.at("rank");
    std::vector<int> N(std::size_t(rank) * rank * rank, 0);
    for (const auto &t : j.at("N")) {
        int a = t.at(0), b = t.at(1), c = t.at(2), v = t.at(3);
        if (a < 0 || a >= rank || b < 0 || b >= rank || c < 0 || c >= rank)
            throw DomainError("BadStructureConstants");
        N[(std::size_t(a) * rank + b) * rank + c] = v;
    }
    std::vector<Rational> dims;
    if (j.contains("dims"))
        for (const auto &d : j.at("dims")) dims.push_back(Rational::parse(d));
    FusionRing R = make_fusion_ring(rank, std::move(N),
                                    j.at("dual").get<std::vector<int>>(), dims);
    if (j.contains("unit") && j.at("unit") != 0)
        throw DomainError("BadUnit", {{"note", "unit must be index 0"}});
    return R;
}

json category_to_json(const FusionCategoryData &C) {
    json fs = json::array();
    for (const auto &[key, val] : C.F)
        fs.push_back({{"sextuple", key}, {"value", fvalue_to_json(val)}});
    return {{"ring", ring_to_json(C.ring)}, {"F", fs}};
}

FusionCategoryData category_from_json(const json &j) {
    FusionCategoryData C;
    C.ring = ring_from_json(j.at("ring"));
    for (const auto &f : j.at("F")) {
        auto s = f.at("sextuple").get<std::vector<int>>();
        if (s.size() != 6) throw DomainError("BadSextuple");
        std::array<int, 6> key{s[0], s[1], s[2], s[3], s[4], s[5]};
        if (!C.admissible(s[0], s[1], s[2], s[3], s[4], s[5]))
            throw DomainError("InadmissibleSextuple", {{"sextuple", s}});
        C.F[key] = fvalue_from_json(f.at("value"));
    }
    return C;
}

json decomposition_to_json(const RepDecomposition &d) {
    json out = json::array();
    for (auto [dim, mult] : d.parts) out.push_back({{"dim", dim}, {"mult", mult}});
    return out;
}

json quadform_to_json(const QuadraticForm &q) {
    json values = json::object();
    for (std::int64_t x = 0; x < q.group.order(); ++x) {
        if (q.q[x].is_zero()) continue;
        auto t = q.group.tuple(x);
        values[tuple_key(std::vector<int>(t.begin(), t.end()))] = q.q[x].str();
    }
    return {{"group", {{"type", "abelian"}, {"factors", q.group.factors}}},
            {"values", values}};
}

QuadraticForm quadform_from_json(const json &j) {
    AbelianGroup H(j.at("group").at("factors").get<std::vector<std::int64_t>>());
    std::vector<Phase> q(H.order());
    if (j.contains("values"))
        for (auto it = j.at("values").begin(); it != j.at("values").end(); ++it) {
            auto t = parse_key(it.key(), H.rank());
            q[H.index(std::vector<std::int64_t>(t.begin(), t.end()))] =
                Phase::parse(it.value().get<std::string>());
        }
    return make_quadratic_form(H, std::move(q));
}

json bicharacter_to_json(const Bicharacter &b) {
    json values = json::object();
    const std::int64_t n = b.group.order();
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y)
            if (!b.at(x, y).is_zero())
                values[std::to_string(x) + ";" + std::to_string(y)] = b.at(x, y).str();
    return {{"group", {{"type", "abelian"}, {"factors", b.group.factors}}},
            {"values", values}};
}

Bicharacter bicharacter_from_json(const json &j) {
    AbelianGroup H(j.at("group").at("factors").get<std::vector<std::int64_t>>());
    const std::int64_t n = H.order();
    Bicharacter b;
    b.group = H;
    b.b.assign(n * n, Phase());
    if (j.contains("values"))
        for (auto it = j.at("values").begin(); it != j.at("values").end(); ++it) {
            auto semi = it.key().find(';');
            if (semi == std::string::npos) throw DomainError("BadTupleKey");
            std::int64_t x = std::stoll(it.key().substr(0, semi));
            std::int64_t y = std::stoll(it.key().substr(semi + 1));
            b.b[x * n + y] = Phase::parse(it.value().get<std::string>());
        }
    return b;
}

json braided_to_json(const BraidedGroupData &b) {
    return {{"group", {{"type", "abelian"}, {"factors", b.group.factors}}},
            {"q", quadform_to_json(b.q)},
            {"label", b.label}};
}

json report_to_json(const InterpolationReport &r) {
    json comps = json::array();
    for (const auto &c : r.components)
        comps.push_back({{"representative", c.representative},
                         {"orbit", c.orbit},
                         {"stabilizer_order", c.stabilizer_order},
                         {"manifold", c.manifold},
                         {"covering_degree", c.covering_degree},
                         {"contains_unit", c.contains_unit}});
    json model;
    switch (r.model.kind) {
    case GroupModel::Kind::Circle: model = {{"kind", "circle"}, {"level", r.model.level}}; break;
    case GroupModel::Kind::SU2: model = {{"kind", "su2"}, {"level", r.model.level}}; break;
    case GroupModel::Kind::SUn:
        model = {{"kind", "sun"}, {"n", r.model.n}, {"level", r.model.level}};
        break;
    case GroupModel::Kind::Symbolic:
        model = {{"kind", "symbolic"}, {"name", r.model.name}};
        break;
    }
    return {{"model", model},
            {"subgroup_order", r.subgroup_order},
            {"admissibility_checked", r.admissibility_checked},
            {"admissible", r.admissible},
            {"reason", r.admissibility_reason},
            {"components", comps}};
}

json pentagon_to_json(const PentagonReport &r) {
    json v = json::array();
    for (const auto &viol : r.violations)
        v.push_back({{"labels", viol.labels}, {"deviation", viol.deviation}});
    return {{"instances", r.instances}, {"violations", v}, {"ok", r.ok()}};
}

json sheaf_to_json(const TwistedSheaf &F) {
    const FiniteGroup &G = F.base.action.group;
    GroupSpec gs;
    gs.group = G;
    std::vector<std::vector<int>> act(G.order,
                                      std::vector<int>(F.base.action.set_size));
    for (int g = 0; g < G.order; ++g)
        for (int s = 0; s < F.base.action.set_size; ++s)
            act[g][s] = F.base.action.act(g, s);
    json fibers = json::object();
    for (int s = 0; s < F.points(); ++s)
        if (F.fiber_dim[s] > 0) fibers[std::to_string(s)] = F.fiber_dim[s];
    json phi = json::array();
    for (int g = 0; g < G.order; ++g) {
        json per_point = json::array();
        for (int s = 0; s < F.points(); ++s) {
            const cmat &m = F.phi[g][s];
            json rows = json::array();
            for (int i = 0; i < m.rows(); ++i) {
                json row = json::array();
                for (int j = 0; j < m.cols(); ++j)
                    row.push_back({m(i, j).real(), m(i, j).imag()});
                rows.push_back(row);
            }
            per_point.push_back(rows);
        }
        phi.push_back(per_point);
    }
    return {{"model",
             {{"group", group_to_json(gs)},
              {"set_size", F.base.action.set_size},
              {"action", act},
              {"theta", cochain_to_json(F.base.theta, false)}}},
            {"fibers", fibers},
            {"phi", phi}};
}

TwistedSheaf sheaf_from_json(const json &j) {
    const json &mj = j.at("model");
    GroupSpec gs = group_from_json(mj.at("group"));
    int set_size = mj.at("set_size");
    std::vector<int> table;
    for (const auto &row : mj.at("action"))
        for (const auto &v : row) table.push_back(v.get<int>());
    GroupAction act = make_action(gs.group, set_size, table);
    Cochain theta = cochain_from_json(mj.at("theta"), gs.group);
    OrbifoldModel model = orbifold_model(act, theta);

    TwistedSheaf F = zero_sheaf(model);
    for (auto it = j.at("fibers").begin(); it != j.at("fibers").end(); ++it)
        F.fiber_dim[std::stoi(it.key())] = it.value().get<int>();
    const json &phi = j.at("phi");
    if (int(phi.size()) != gs.group.order) throw DomainError("BadSheafJson");
    for (int g = 0; g < gs.group.order; ++g) {
        for (int s = 0; s < set_size; ++s) {
            int t = act.act(g, s);
            cmat m(F.fiber_dim[t], F.fiber_dim[s]);
            const json &rows = phi.at(g).at(s);
            if (int(rows.size()) != m.rows()) throw DomainError("BadSheafJson");
            for (int i = 0; i < m.rows(); ++i) {
                const json &row = rows.at(i);
                if (int(row.size()) != m.cols()) throw DomainError("BadSheafJson");
                for (int jj = 0; jj < m.cols(); ++jj)
                    m(i, jj) = std::complex<double>(row.at(jj).at(0), row.at(jj).at(1));
            }
            F.phi[g][s] = std::move(m);
        }
    }
    return F;
}

} // namespace orbi
