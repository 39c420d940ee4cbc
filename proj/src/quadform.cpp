#include "orbi/quadform.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "orbi/error.hpp"
#include "orbi/smith.hpp"

namespace orbi {

bool QuadraticForm::operator<(const QuadraticForm &o) const {
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] < o.q[i]) return true;
        if (o.q[i] < q[i]) return false;
    }
    return false;
}

QuadCheck is_quadratic(const AbelianGroup &H, const std::vector<Phase> &qmap) {
    const std::int64_t n = H.order();
    if (std::int64_t(qmap.size()) != n)
        return {false, "wrong size", {}};
    const std::int64_t e = H.exponent();
    if (!qmap[0].is_zero())
        return {false, "q(0) != 0", {0}};
    std::vector<std::int64_t> add(n * n);
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y) add[x * n + y] = H.add(x, y);
    for (std::int64_t x = 0; x < n; ++x) {
        std::int64_t mx = 0;
        for (std::int64_t m = 0; m <= e; ++m) {
            if (qmap[mx] != qmap[x].times(m * m))
                return {false, "q(nx) != n^2 q(x)", {m, x}};
            mx = add[mx * n + x];
        }
    }
    // additivity of the polarization in the first slot, generators suffice
    std::vector<Phase> sigma(n * n);
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y)
            sigma[x * n + y] = qmap[add[x * n + y]] - qmap[x] - qmap[y];
    for (int i = 0; i < H.rank(); ++i) {
        std::int64_t g = H.generator(i);
        for (std::int64_t x = 0; x < n; ++x) {
            std::int64_t xg = add[x * n + g];
            for (std::int64_t y = 0; y < n; ++y)
                if (sigma[xg * n + y] != sigma[x * n + y] + sigma[g * n + y])
                    return {false, "polarization not bilinear", {x, g, y}};
        }
    }
    return {};
}

QuadraticForm make_quadratic_form(const AbelianGroup &H, std::vector<Phase> qmap) {
    auto chk = is_quadratic(H, qmap);
    if (!chk.ok) throw DomainError("NotQuadratic", {{"reason", chk.reason}});
    return QuadraticForm{H, std::move(qmap)};
}

QuadraticForm cyclic_form(std::int64_t n, const Phase &q1) {
    AbelianGroup H(n == 1 ? std::vector<std::int64_t>{}
                          : std::vector<std::int64_t>{n});
    std::vector<Phase> q(H.order());
    for (std::int64_t j = 0; j < H.order(); ++j) q[j] = q1.times(j * j);
    return make_quadratic_form(H, std::move(q));
}

Bicharacter polarization(const QuadraticForm &qf) {
    const AbelianGroup &H = qf.group;
    const std::int64_t n = H.order();
    Bicharacter b;
    b.group = H;
    b.b.resize(n * n);
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y)
            b.b[x * n + y] = qf.q[H.add(x, y)] - qf.q[x] - qf.q[y];
    return b;
}

bool is_symmetric(const Bicharacter &b) {
    const std::int64_t n = b.group.order();
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = x + 1; y < n; ++y)
            if (b.at(x, y) != b.at(y, x)) return false;
    return true;
}

bool is_bilinear(const Bicharacter &b) {
    const AbelianGroup &H = b.group;
    const std::int64_t n = H.order();
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y)
            for (int i = 0; i < H.rank(); ++i) {
                std::int64_t g = H.generator(i);
                if (b.at(H.add(x, g), y) != b.at(x, y) + b.at(g, y)) return false;
                if (b.at(x, H.add(y, g)) != b.at(x, y) + b.at(x, g)) return false;
            }
    return true;
}

bool is_nondegenerate(const Bicharacter &sigma) {
    const std::int64_t n = sigma.group.order();
    for (std::int64_t x = 1; x < n; ++x) {
        bool in_kernel = true;
        for (std::int64_t y = 0; y < n && in_kernel; ++y)
            if (!sigma.at(x, y).is_zero()) in_kernel = false;
        if (in_kernel) return false;
    }
    return true;
}

namespace {

// Quadratic forms are freely parameterised by values on generators
// (denominator d_i for odd d_i, 2 d_i for even) and polarization cross
// terms (denominator gcd(d_i, d_j)).
struct FormSlots {
    std::vector<std::vector<Phase>> choices;
};

FormSlots form_slots(const AbelianGroup &H) {
    FormSlots s;
    const int r = H.rank();
    for (int i = 0; i < r; ++i) {
        std::int64_t d = H.factors[i];
        std::int64_t den = d % 2 == 0 ? 2 * d : d;
        std::vector<Phase> c;
        for (std::int64_t t = 0; t < den; ++t) c.push_back(Phase(t, den));
        s.choices.push_back(std::move(c));
    }
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            std::int64_t den = std::gcd(H.factors[i], H.factors[j]);
            std::vector<Phase> c;
            for (std::int64_t t = 0; t < den; ++t) c.push_back(Phase(t, den));
            s.choices.push_back(std::move(c));
        }
    return s;
}

} // namespace

std::vector<QuadraticForm> enumerate_quadratic_forms(const AbelianGroup &H,
                                                     bool parallel) {
    const std::int64_t n = H.order();
    if (n > 256) throw DomainError("TooLarge", {{"order", n}});
    const int r = H.rank();
    FormSlots slots = form_slots(H);
    std::int64_t combos = 1;
    for (auto &c : slots.choices) {
        combos *= std::int64_t(c.size());
        if (combos > 2000000) throw DomainError("TooLarge", {{"combinations", combos}});
    }

    std::vector<std::vector<Phase>> candidates(combos);
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (std::int64_t it = 0; it < combos; ++it) {
        std::vector<std::size_t> pick(slots.choices.size(), 0);
        std::int64_t rest = it;
        for (std::size_t s = 0; s < pick.size(); ++s) {
            pick[s] = rest % slots.choices[s].size();
            rest /= slots.choices[s].size();
        }
        std::vector<Phase> gval(r);
        for (int i = 0; i < r; ++i) gval[i] = slots.choices[i][pick[i]];
        std::vector<Phase> cross(r * r);
        int slot = r;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                cross[i * r + j] = slots.choices[slot][pick[slot]], ++slot;
        std::vector<Phase> q(n);
        for (std::int64_t x = 0; x < n; ++x) {
            auto t = H.tuple(x);
            Phase acc;
            for (int i = 0; i < r; ++i) {
                acc = acc + gval[i].times(t[i] * t[i]);
                for (int j = i + 1; j < r; ++j)
                    acc = acc + cross[i * r + j].times(t[i] * t[j]);
            }
            q[x] = acc;
        }
        if (is_quadratic(H, q).ok) candidates[it] = std::move(q);
    }
    std::vector<QuadraticForm> out;
    std::set<std::vector<Phase>> seen_keys;
    for (auto &q : candidates) {
        if (q.empty() && n > 0) continue;
        if (!seen_keys.insert(q).second) continue;
        out.push_back(QuadraticForm{H, std::move(q)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

TorsorOrbits bichar_torsor_orbits(const AbelianGroup &H) {
    TorsorOrbits res;
    res.forms = enumerate_quadratic_forms(H);
    const std::int64_t n = H.order();
    const int r = H.rank();
    std::map<std::vector<Phase>, int> index_of;
    for (std::size_t i = 0; i < res.forms.size(); ++i)
        index_of[res.forms[i].q] = int(i);

    // enumerate bicharacters by values on generator pairs
    std::vector<std::vector<Phase>> choices;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            std::int64_t den = std::gcd(H.factors[i], H.factors[j]);
            std::vector<Phase> c;
            for (std::int64_t t = 0; t < den; ++t) c.push_back(Phase(t, den));
            choices.push_back(std::move(c));
        }
    std::int64_t combos = 1;
    for (auto &c : choices) {
        combos *= std::int64_t(c.size());
        if (combos > 2000000) throw DomainError("TooLarge");
    }

    // diagonal translations q -> q + b(x,x)
    std::set<std::vector<Phase>> diagonals;
    for (std::int64_t it = 0; it < combos; ++it) {
        std::int64_t rest = it;
        std::vector<Phase> bij(r * r);
        for (int s = 0; s < r * r; ++s) {
            bij[s] = choices[s][rest % choices[s].size()];
            rest /= choices[s].size();
        }
        std::vector<Phase> diag(n);
        for (std::int64_t x = 0; x < n; ++x) {
            auto t = H.tuple(x);
            Phase acc;
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    acc = acc + bij[i * r + j].times(t[i] * t[j]);
            diag[x] = acc;
        }
        diagonals.insert(std::move(diag));
    }

    std::vector<int> orbit_of(res.forms.size(), -1);
    for (std::size_t i = 0; i < res.forms.size(); ++i) {
        if (orbit_of[i] >= 0) continue;
        std::vector<int> orbit;
        for (const auto &diag : diagonals) {
            std::vector<Phase> shifted(n);
            for (std::int64_t x = 0; x < n; ++x)
                shifted[x] = res.forms[i].q[x] + diag[x];
            auto it = index_of.find(shifted);
            if (it == index_of.end())
                throw DomainError("InternalTorsorError");
            if (orbit_of[it->second] < 0) {
                orbit_of[it->second] = int(res.orbits.size());
                orbit.push_back(it->second);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        res.orbits.push_back(std::move(orbit));
    }
    return res;
}

std::vector<QuadraticForm> all_quadratic_refinements(const Bicharacter &chi) {
    std::vector<QuadraticForm> out;
    for (auto &eps : enumerate_quadratic_forms(chi.group)) {
        if (!(polarization(eps) == chi)) continue;
        bool half = true;
        for (std::int64_t a = 0; a < chi.group.order() && half; ++a)
            if (eps.q[a].times(2) != chi.at(a, a)) half = false;
        if (half) out.push_back(eps);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<QuadraticForm> quadratic_refinement(const Bicharacter &chi) {
    auto all = all_quadratic_refinements(chi);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::optional<QuadraticForm> square_root_form(const QuadraticForm &q) {
    std::vector<QuadraticForm> sols;
    for (auto &eps : enumerate_quadratic_forms(q.group)) {
        bool ok = true;
        for (std::int64_t a = 0; a < q.group.order() && ok; ++a)
            if (eps.q[a].times(2) != q.q[a]) ok = false;
        if (ok) sols.push_back(eps);
    }
    if (sols.empty()) return std::nullopt;
    std::sort(sols.begin(), sols.end());
    return sols.front();
}

std::string braiding_label(const QuadraticForm &q) {
    if (q.group.order() == 1) return "Vec";
    if (q.group.factors == std::vector<std::int64_t>{2}) {
        const Phase &v = q.q[1];
        if (v == Phase()) return "Vec";
        if (v == Phase(1, 4)) return "Semi";
        if (v == Phase(1, 2)) return "sVec";
        if (v == Phase(3, 4)) return "anti-Semi";
    }
    return "";
}

BraidedGroupData make_braided(const AbelianGroup &H, QuadraticForm q) {
    auto chk = is_quadratic(H, q.q);
    if (!chk.ok) throw DomainError("NotQuadratic", {{"reason", chk.reason}});
    BraidedGroupData b;
    b.group = H;
    b.q = std::move(q);
    b.label = braiding_label(b.q);
    return b;
}

TyCentreInvertibles ty_centre_invertibles(const AbelianGroup &A,
                                          const Bicharacter &chi, int tau_sign) {
    (void)tau_sign; // the invertible part does not see tau
    if (!is_symmetric(chi)) throw DomainError("NotSymmetric");
    if (!is_bilinear(chi)) throw DomainError("NotBilinear");
    if (!is_nondegenerate(chi)) throw DomainError("Degenerate");
    auto eps = quadratic_refinement(chi);
    if (!eps) throw DomainError("NoRefinement");
    const std::int64_t n = A.order();
    TyCentreInvertibles out;
    // section closure: eps(a) + eps(b) + chi(a,b) = eps(a+b)
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b) {
            std::int64_t sum = A.add(a, b);
            Phase lhs = eps->q[a] + eps->q[b] + chi.at(a, b);
            if (lhs != eps->q[sum])
                throw DomainError("InternalSectionError");
            out.tensor_law.push_back({a, b, sum, lhs});
        }
    std::vector<Phase> q(n);
    for (std::int64_t a = 0; a < n; ++a) q[a] = chi.at(a, a);
    out.data = make_braided(A, QuadraticForm{A, std::move(q)});
    out.refinement = *eps;
    return out;
}

BraidedGroupData lie_centre_quadform(CentreFamily family, const CentreParams &p) {
    switch (family) {
    case CentreFamily::SUn: {
        if (p.n < 2) throw DomainError("UnsupportedFamily", {{"n", p.n}});
        return make_braided(AbelianGroup({p.n}),
                            cyclic_form(p.n, Phase(p.k * (p.n - 1), 2 * p.n)));
    }
    case CentreFamily::SpinOdd:
        return make_braided(AbelianGroup({2}), cyclic_form(2, Phase(p.k, 2)));
    case CentreFamily::Circle: {
        if (p.k == 0)
            throw DomainError("ZeroLevelCircle",
                              {{"note", "centre is S^1 x Z; no finite form"}});
        std::int64_t m = 2 * std::llabs(p.k);
        return make_braided(AbelianGroup({m}), cyclic_form(m, Phase(1, 4 * p.k)));
    }
    case CentreFamily::SO4: {
        AbelianGroup H({2, 2});
        std::vector<Phase> q(4);
        q[H.index({0, 0})] = Phase();
        q[H.index({1, 0})] = Phase(2 * p.a + p.b, 4);
        q[H.index({0, 1})] = Phase(2 * p.a - p.b, 4);
        q[H.index({1, 1})] = Phase();
        return make_braided(H, QuadraticForm{H, std::move(q)});
    }
    }
    throw DomainError("UnsupportedFamily");
}

IsotropicQuotient isotropic_quotient(const BraidedGroupData &B,
                                     const std::vector<std::int64_t> &Z) {
    const AbelianGroup &H = B.group;
    const std::int64_t n = H.order();
    std::set<std::int64_t> Zset(Z.begin(), Z.end());
    Zset.insert(0);
    // closure of Z
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::int64_t> cur(Zset.begin(), Zset.end());
        for (auto x : cur)
            for (auto y : cur)
                if (Zset.insert(H.add(x, y)).second) grew = true;
    }
    for (auto z : Zset)
        if (!B.q.q[z].is_zero())
            throw DomainError("NotIsotropic", {{"witness", z}});

    Bicharacter sigma = polarization(B.q);
    std::vector<std::int64_t> zprime;
    for (std::int64_t a = 0; a < n; ++a) {
        bool ok = true;
        for (auto z : Zset)
            if (!sigma.at(a, z).is_zero()) { ok = false; break; }
        if (ok) zprime.push_back(a);
    }

    // Present Z'/Z as the cokernel of the relation matrix on the free group
    // over Z' and normalize by Smith.
    const int t = int(zprime.size());
    std::map<std::int64_t, int> pos;
    for (int i = 0; i < t; ++i) pos[zprime[i]] = i;
    std::vector<std::vector<std::int64_t>> rel_cols;
    for (int i = 0; i < t; ++i)
        for (int j = i; j < t; ++j) {
            std::vector<std::int64_t> col(t, 0);
            col[i] += 1;
            col[j] += 1;
            col[pos.at(H.add(zprime[i], zprime[j]))] -= 1;
            rel_cols.push_back(std::move(col));
        }
    for (auto z : Zset) {
        std::vector<std::int64_t> col(t, 0);
        col[pos.at(z)] += 1;
        rel_cols.push_back(std::move(col));
    }
    IntMat M(t, int(rel_cols.size()));
    for (int c = 0; c < int(rel_cols.size()); ++c)
        for (int r = 0; r < t; ++r) M(r, c) = rel_cols[c][r];
    SmithResult snf = smith_normal_form(M);
    if (snf.rank != t) throw DomainError("InternalQuotientError");

    std::vector<std::int64_t> factors;
    std::vector<int> factor_rows;
    for (int i = 0; i < t; ++i)
        if (snf.diag[i] > 1) {
            factors.push_back(snf.diag[i]);
            factor_rows.push_back(i);
        }
    AbelianGroup Q(factors);

    IsotropicQuotient out;
    out.zprime = zprime;
    out.coset_of.resize(t);
    std::vector<Phase> qq(Q.order());
    std::vector<bool> qset(Q.order(), false);
    for (int i = 0; i < t; ++i) {
        std::vector<std::int64_t> tup(factors.size());
        for (std::size_t fidx = 0; fidx < factor_rows.size(); ++fidx) {
            std::int64_t s = factors[fidx];
            std::int64_t v = snf.U(factor_rows[fidx], i) % s;
            if (v < 0) v += s;
            tup[fidx] = v;
        }
        std::int64_t qi = Q.index(tup);
        out.coset_of[i] = int(qi);
        if (!qset[qi]) {
            qq[qi] = B.q.q[zprime[i]];
            qset[qi] = true;
        } else if (qq[qi] != B.q.q[zprime[i]]) {
            throw DomainError("NotConstantOnCosets", {{"element", zprime[i]}});
        }
    }
    for (bool s : qset)
        if (!s) throw DomainError("InternalQuotientError");
    out.data = make_braided(Q, QuadraticForm{Q, std::move(qq)});
    return out;
}

bool opposite_match(const QuadraticForm &q1, const QuadraticForm &q2) {
    if (!(q1.group == q2.group)) throw DomainError("GroupMismatch");
    for (std::int64_t x = 0; x < q1.group.order(); ++x)
        if (!(q1.q[x] + q2.q[x]).is_zero()) return false;
    return true;
}

} // namespace orbi
