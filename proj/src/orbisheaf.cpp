#include "orbi/orbisheaf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "orbi/error.hpp"
#include "orbi/twistedrep.hpp"

namespace orbi {

OrbifoldModel orbifold_model(const GroupAction &action, const Cochain &theta) {
    if (theta.degree != 2 || theta.group.mul != action.group.mul)
        throw DomainError("BadTwist");
    auto chk = is_cocycle(theta);
    if (!chk.ok) throw DomainError("NotACocycle", {{"tuple", chk.witness}});
    OrbifoldModel m;
    m.action = action;
    m.theta = theta;
    m.effective = true;
    const FiniteGroup &G = action.group;
    for (int g = 0; g < G.order; ++g) {
        if (g == G.identity) continue;
        bool trivial = true;
        for (int x = 0; x < action.set_size && trivial; ++x)
            if (action.act(g, x) != x) trivial = false;
        if (trivial) { m.effective = false; break; }
    }
    return m;
}

std::int64_t TwistedSheaf::total_dim() const {
    std::int64_t t = 0;
    for (int d : fiber_dim) t += d;
    return t;
}

TwistedSheaf zero_sheaf(const OrbifoldModel &m) {
    TwistedSheaf F;
    F.base = m;
    F.fiber_dim.assign(m.action.set_size, 0);
    const int n = m.action.group.order;
    F.phi.assign(n, std::vector<cmat>(m.action.set_size, cmat::Zero(0, 0)));
    return F;
}

TwistedSheaf skyscraper_at_fixed_point(const OrbifoldModel &m, int point,
                                       const std::vector<cmat> &rho) {
    const FiniteGroup &G = m.action.group;
    for (int g = 0; g < G.order; ++g)
        if (m.action.act(g, point) != point)
            throw DomainError("NotAFixedPoint", {{"point", point}, {"g", g}});
    TwistedSheaf F = zero_sheaf(m);
    const int d = int(rho[G.identity].rows());
    F.fiber_dim[point] = d;
    for (int g = 0; g < G.order; ++g) {
        for (int s = 0; s < m.action.set_size; ++s)
            F.phi[g][s] = cmat::Zero(F.fiber_dim[m.action.act(g, s)], F.fiber_dim[s]);
        F.phi[g][point] = rho[g];
    }
    auto v = sheaf_validate(F);
    if (!v.ok) throw DomainError("NotATwistedRep", {{"deviation", v.max_deviation}});
    return F;
}

TwistedSheaf direct_sum(const TwistedSheaf &a, const TwistedSheaf &b) {
    if (a.base.action.table != b.base.action.table ||
        !(a.base.theta == b.base.theta))
        throw DomainError("BaseMismatch");
    TwistedSheaf F = zero_sheaf(a.base);
    const FiniteGroup &G = a.base.action.group;
    for (int s = 0; s < F.points(); ++s)
        F.fiber_dim[s] = a.fiber_dim[s] + b.fiber_dim[s];
    for (int g = 0; g < G.order; ++g)
        for (int s = 0; s < F.points(); ++s) {
            int t = a.base.action.act(g, s);
            cmat block = cmat::Zero(F.fiber_dim[t], F.fiber_dim[s]);
            block.topLeftCorner(a.fiber_dim[t], a.fiber_dim[s]) = a.phi[g][s];
            block.bottomRightCorner(b.fiber_dim[t], b.fiber_dim[s]) = b.phi[g][s];
            F.phi[g][s] = std::move(block);
        }
    return F;
}

SheafValidation sheaf_validate(const TwistedSheaf &F, double tol) {
    const FiniteGroup &G = F.base.action.group;
    const GroupAction &act = F.base.action;
    SheafValidation v;
    for (int g = 0; g < G.order; ++g)
        for (int s = 0; s < F.points(); ++s) {
            const cmat &m = F.phi[g][s];
            if (m.rows() != F.fiber_dim[act.act(g, s)] || m.cols() != F.fiber_dim[s])
                throw DomainError("BadFiberDims", {{"g", g}, {"s", s}});
        }
    for (int s = 0; s < F.points(); ++s) {
        double d = dev_from_identity(F.phi[G.identity][s]);
        if (d > v.max_deviation) {
            v.max_deviation = d;
            v.witness = {G.identity, G.identity};
        }
    }
    for (int g2 = 0; g2 < G.order; ++g2)
        for (int g1 = 0; g1 < G.order; ++g1)
            for (int s = 0; s < F.points(); ++s) {
                cmat lhs = F.phi[g2][act.act(g1, s)] * F.phi[g1][s];
                cmat rhs = F.base.theta.at({g2, g1}).eval() *
                           F.phi[G.op(g2, g1)][s];
                double d = max_abs(lhs - rhs);
                if (d > v.max_deviation) {
                    v.max_deviation = d;
                    v.witness = {g2, g1};
                }
            }
    v.ok = v.max_deviation <= tol;
    return v;
}

PlainFibers forget_q(const TwistedSheaf &F) { return PlainFibers{F.fiber_dim}; }

namespace {

// Block offsets of I(E)(s) = sum_g E(g^{-1} s).
struct InducedLayout {
    const OrbifoldModel &m;
    const PlainFibers &E;
    std::vector<std::vector<int>> offset; // offset[s][g]
    std::vector<int> total;               // dim I(E)(s)

    InducedLayout(const OrbifoldModel &mm, const PlainFibers &e) : m(mm), E(e) {
        const int n = m.action.group.order;
        const int S = m.action.set_size;
        offset.assign(S, std::vector<int>(n + 1, 0));
        total.assign(S, 0);
        for (int s = 0; s < S; ++s) {
            for (int g = 0; g < n; ++g) {
                offset[s][g] = total[s];
                total[s] += E.dim[m.action.act(m.action.group.inv(g), s)];
            }
            offset[s][n] = total[s];
        }
    }
    int block_dim(int s, int g) const { return offset[s][g + 1] - offset[s][g]; }
};

} // namespace

TwistedSheaf induce_I(const OrbifoldModel &m, const PlainFibers &E) {
    if (int(E.dim.size()) != m.action.set_size) throw DomainError("BadFiberDims");
    const FiniteGroup &G = m.action.group;
    const int n = G.order;
    InducedLayout L(m, E);
    TwistedSheaf F = zero_sheaf(m);
    F.fiber_dim = L.total;
    for (int g1 = 0; g1 < n; ++g1)
        for (int s = 0; s < F.points(); ++s) {
            int t = m.action.act(g1, s);
            cmat mat = cmat::Zero(L.total[t], L.total[s]);
            for (int g = 0; g < n; ++g) {
                // block g of I(E)(s) is E(g^{-1} s) and maps to block g1 g
                // of I(E)(g1 s) with scalar theta(g1, g)
                int tg = G.op(g1, g);
                int d = L.block_dim(s, g);
                if (d == 0) continue;
                mat.block(L.offset[t][tg], L.offset[s][g], d, d) =
                    m.theta.at({g1, g}).eval() * cmat::Identity(d, d);
            }
            F.phi[g1][s] = std::move(mat);
        }
    return F;
}

SheafHom sheaf_hom(const TwistedSheaf &F, const TwistedSheaf &Fp, double tol) {
    if (F.base.action.table != Fp.base.action.table ||
        !(F.base.theta == Fp.base.theta))
        throw DomainError("BaseMismatch");
    const FiniteGroup &G = F.base.action.group;
    const GroupAction &act = F.base.action;
    const int S = F.points();

    // unknowns: psi(s) entry (i,j), flattened per point
    std::vector<int> var_off(S + 1, 0);
    for (int s = 0; s < S; ++s)
        var_off[s + 1] = var_off[s] + Fp.fiber_dim[s] * F.fiber_dim[s];
    const int nvars = var_off[S];
    if (nvars == 0) return {};

    int nrows = 0;
    for (int g = 0; g < G.order; ++g)
        for (int s = 0; s < S; ++s)
            nrows += Fp.fiber_dim[act.act(g, s)] * F.fiber_dim[s];
    cmat M = cmat::Zero(nrows, nvars);
    int row = 0;
    auto var = [&](int s, int i, int j) {
        return var_off[s] + i * F.fiber_dim[s] + j;
    };
    // psi(g.s) phi_g(s) - phi'_g(s) psi(s) = 0
    for (int g = 0; g < G.order; ++g)
        for (int s = 0; s < S; ++s) {
            int t = act.act(g, s);
            for (int i = 0; i < Fp.fiber_dim[t]; ++i)
                for (int j = 0; j < F.fiber_dim[s]; ++j) {
                    for (int k = 0; k < F.fiber_dim[t]; ++k)
                        M(row, var(t, i, k)) += F.phi[g][s](k, j);
                    for (int k = 0; k < Fp.fiber_dim[s]; ++k)
                        M(row, var(s, k, j)) -= Fp.phi[g][s](i, k);
                    ++row;
                }
        }
    cmat ker = nullspace(M, tol);

    SheafHom hom;
    hom.dim = int(ker.cols());
    for (int k = 0; k < hom.dim; ++k) {
        std::vector<cmat> comps(S);
        for (int s = 0; s < S; ++s) {
            cmat psi(Fp.fiber_dim[s], F.fiber_dim[s]);
            for (int i = 0; i < Fp.fiber_dim[s]; ++i)
                for (int j = 0; j < F.fiber_dim[s]; ++j)
                    psi(i, j) = ker(var(s, i, j), k);
            comps[s] = std::move(psi);
        }
        hom.basis.push_back(std::move(comps));
    }
    return hom;
}

std::vector<int> support(const TwistedSheaf &F) {
    auto orbits = orbits_with_stabilizers(F.base.action);
    std::vector<int> out;
    for (const auto &o : orbits)
        for (int p : o.points)
            if (F.fiber_dim[p] > 0) {
                out.push_back(o.representative);
                break;
            }
    return out;
}

Rational sheaf_dimension(const TwistedSheaf &F, int point) {
    if (point < 0 || point >= F.points() || F.fiber_dim[point] == 0)
        throw DomainError("NotInSupport", {{"point", point}});
    const FiniteGroup &G = F.base.action.group;
    std::int64_t stab = 0;
    for (int g = 0; g < G.order; ++g)
        if (F.base.action.act(g, point) == point) ++stab;
    return Rational(F.fiber_dim[point], stab);
}

namespace {

// eta and eps of the equivariantisation adjunction on T(F) = I(q^* F),
// normalized so that eps . eta = id.
struct MonadData {
    cmat eps, eta;        // per point, stacked block-diagonally
    std::vector<int> tdim; // dim T(F)(s)
};

MonadData monad_data(const TwistedSheaf &F) {
    const OrbifoldModel &m = F.base;
    const FiniteGroup &G = m.action.group;
    const int n = G.order;
    const int S = m.action.set_size;
    PlainFibers E = forget_q(F);
    InducedLayout L(m, E);

    std::vector<int> foff(S + 1, 0), toff(S + 1, 0);
    for (int s = 0; s < S; ++s) {
        foff[s + 1] = foff[s] + F.fiber_dim[s];
        toff[s + 1] = toff[s] + L.total[s];
    }
    MonadData md;
    md.tdim = L.total;
    md.eps = cmat::Zero(foff[S], toff[S]);
    md.eta = cmat::Zero(toff[S], foff[S]);
    for (int s = 0; s < S; ++s) {
        for (int g = 0; g < n; ++g) {
            int src = m.action.act(G.inv(g), s); // block g of T(F)(s) is F(g^{-1} s)
            int d = F.fiber_dim[src];
            int df = F.fiber_dim[s];
            if (d == 0 || df == 0) continue;
            // eps component g: phi_g(g^{-1} s): F(g^{-1} s) -> F(s)
            md.eps.block(foff[s], toff[s] + L.offset[s][g], df, d) = F.phi[g][src];
            // eta component g: (1/|G|) theta(g, g^{-1})^{-1} phi_{g^{-1}}(s)
            std::complex<double> c =
                std::conj(m.theta.at({g, G.inv(g)}).eval()) / double(n);
            md.eta.block(toff[s] + L.offset[s][g], foff[s], d, df) =
                c * F.phi[G.inv(g)][s];
        }
    }
    return md;
}

} // namespace

AdjunctionReport adjunction_check(const OrbifoldModel &m, double tol) {
    AdjunctionReport rep;
    const FiniteGroup &G = m.action.group;
    const int S = m.action.set_size;
    auto note = [&](double dev, nlohmann::json what) {
        rep.max_deviation = std::max(rep.max_deviation, dev);
        if (dev > tol) {
            what["deviation"] = dev;
            rep.failures.push_back(std::move(what));
        }
    };

    // battery: induced sheaves from a few plain-fiber patterns, plus
    // stabilizer representations at fixed points
    std::vector<TwistedSheaf> battery;
    {
        PlainFibers ones{std::vector<int>(S, 1)};
        battery.push_back(induce_I(m, ones));
        for (int s = 0; s < S; ++s) {
            PlainFibers point{std::vector<int>(S, 0)};
            point.dim[s] = 1;
            battery.push_back(induce_I(m, point));
        }
        // twisted irreducibles of the full stabilizer at fixed points
        for (int s = 0; s < S; ++s) {
            bool fixed = true;
            for (int g = 0; g < G.order && fixed; ++g)
                if (m.action.act(g, s) != s) fixed = false;
            if (!fixed) continue;
            TwistedAlgebra A = twisted_algebra(G, m.theta);
            for (const auto &irr : irreducibles(A)) {
                battery.push_back(skyscraper_at_fixed_point(m, s, irr.rho));
                break; // one irreducible per fixed point keeps the battery small
            }
        }
        if (battery.size() > 1)
            battery.push_back(direct_sum(battery[0], battery.back()));
    }

    std::vector<PlainFibers> plain;
    plain.push_back(PlainFibers{std::vector<int>(S, 1)});
    {
        PlainFibers p{std::vector<int>(S, 0)};
        p.dim[0] = 1;
        plain.push_back(p);
    }

    for (std::size_t bi = 0; bi < battery.size(); ++bi) {
        const TwistedSheaf &F = battery[bi];
        auto v = sheaf_validate(F, tol);
        note(v.max_deviation, {{"check", "sheaf_validate"}, {"sheaf", bi}});

        // triangle normalization and split idempotent
        MonadData md = monad_data(F);
        note(dev_from_identity(md.eps * md.eta),
             {{"check", "eps.eta=id"}, {"sheaf", bi}});
        cmat e = md.eta * md.eps;
        note(max_abs(e * e - e), {{"check", "idempotent"}, {"sheaf", bi}});

        for (std::size_t pi = 0; pi < plain.size(); ++pi) {
            const PlainFibers &E = plain[pi];
            TwistedSheaf IE = induce_I(m, E);
            // Hom(q*F, E) has dimension sum_s dim F(s) dim E(s)
            std::int64_t plain_dim = 0;
            for (int s = 0; s < S; ++s)
                plain_dim += std::int64_t(F.fiber_dim[s]) * E.dim[s];
            SheafHom into = sheaf_hom(F, IE, tol);
            SheafHom from = sheaf_hom(IE, F, tol);
            if (into.dim != plain_dim)
                rep.failures.push_back({{"check", "hom-dim F->IE"},
                                        {"sheaf", bi}, {"plain", pi},
                                        {"got", into.dim}, {"want", plain_dim}});
            if (from.dim != plain_dim)
                rep.failures.push_back({{"check", "hom-dim IE->F"},
                                        {"sheaf", bi}, {"plain", pi},
                                        {"got", from.dim}, {"want", plain_dim}});

            InducedLayout L(m, E);
            // bijection Hom(F, IE) ~ Hom(q*F, E): beta -> beta_e, with
            // inverse beta_g(s) = theta(g,g^{-1})^{-1} beta_e(g^{-1}s) phi_{g^{-1}}(s)
            for (const auto &beta : into.basis) {
                double dev = 0;
                for (int s = 0; s < S; ++s) {
                    for (int g = 0; g < G.order; ++g) {
                        int src = m.action.act(G.inv(g), s);
                        int d = E.dim[src];
                        if (d == 0 || F.fiber_dim[s] == 0) continue;
                        cmat got = beta[s].middleRows(L.offset[s][g], d);
                        int e_row = L.offset[src][G.identity];
                        cmat beta_e_src =
                            beta[src].middleRows(e_row, E.dim[src]);
                        cmat want = std::conj(m.theta.at({g, G.inv(g)}).eval()) *
                                    beta_e_src * F.phi[G.inv(g)][s];
                        dev = std::max(dev, max_abs(got - want));
                    }
                }
                note(dev, {{"check", "bijection F->IE"}, {"sheaf", bi}, {"plain", pi}});
            }
            // bijection Hom(IE, F) ~ Hom(E, q*F):
            // alpha_g(s) = phi_g(g^{-1}s) alpha_e(g^{-1}s)
            for (const auto &alpha : from.basis) {
                double dev = 0;
                for (int s = 0; s < S; ++s) {
                    for (int g = 0; g < G.order; ++g) {
                        int src = m.action.act(G.inv(g), s);
                        int d = E.dim[src];
                        if (d == 0 || F.fiber_dim[s] == 0) continue;
                        cmat got = alpha[s].middleCols(L.offset[s][g], d);
                        int e_col = L.offset[src][G.identity];
                        cmat alpha_e_src =
                            alpha[src].middleCols(e_col, E.dim[src]);
                        cmat want = F.phi[g][src] * alpha_e_src;
                        dev = std::max(dev, max_abs(got - want));
                    }
                }
                note(dev, {{"check", "bijection IE->F"}, {"sheaf", bi}, {"plain", pi}});
            }
        }
    }
    rep.ok = rep.failures.empty();
    return rep;
}

DihedralModel dihedral_model(int n, std::uint64_t seed) {
    if (n < 3 || n > 50) throw DomainError("TooLarge", {{"n", n}});
    // (i, j) with j in {0,1}: (i,j)(i',j') = (i + (-1)^j i', j + j')
    const int order = 2 * n;
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    auto idx = [&](int i, int j) { return j * n + ((i % n) + n) % n; };
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < n; ++i)
            for (int j2 = 0; j2 < 2; ++j2)
                for (int i2 = 0; i2 < n; ++i2)
                    table[idx(i, j)][idx(i2, j2)] =
                        idx(j == 0 ? i + i2 : i - i2, (j + j2) % 2);
    DihedralModel dm;
    dm.n = n;
    dm.group = group_from_table(table);

    TwistedAlgebra A = twisted_algebra(dm.group, zero_cochain(dm.group, 2));
    std::vector<Rep> irr = irreducibles(A, seed);
    const int r = int(irr.size());

    // characters
    std::vector<std::vector<std::complex<double>>> chi(r);
    for (int i = 0; i < r; ++i) {
        chi[i].resize(order);
        for (int g = 0; g < order; ++g) chi[i][g] = irr[i].rho[g].trace();
    }
    // put the trivial representation first
    int unit = -1;
    for (int i = 0; i < r; ++i) {
        bool triv = irr[i].dim == 1;
        for (int g = 0; g < order && triv; ++g)
            if (std::abs(chi[i][g] - 1.0) > 1e-6) triv = false;
        if (triv) { unit = i; break; }
    }
    if (unit < 0) throw DomainError("InternalCharacterError");
    std::swap(irr[unit], irr[0]);
    std::swap(chi[unit], chi[0]);

    // fusion coefficients by character inner products
    std::vector<int> N(std::size_t(r) * r * r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                std::complex<double> acc = 0;
                for (int g = 0; g < order; ++g)
                    acc += chi[i][g] * chi[j][g] * std::conj(chi[k][g]);
                double val = acc.real() / order;
                int m = int(std::lround(val));
                if (std::abs(val - m) > 1e-6 || std::abs(acc.imag()) > 1e-6)
                    throw DomainError("InternalCharacterError");
                N[(std::size_t(i) * r + j) * r + k] = m;
            }
    std::vector<int> dual(r);
    for (int i = 0; i < r; ++i) {
        int d = -1;
        for (int j = 0; j < r; ++j)
            if (N[(std::size_t(i) * r + j) * r + 0] == 1) { d = j; break; }
        if (d < 0) throw DomainError("InternalCharacterError");
        dual[i] = d;
    }
    dm.ring = make_fusion_ring(r, std::move(N), std::move(dual));

    // support from the restriction to the rotation subgroup: multiplicity of
    // the character k -> e^{2 pi i j k / n} via discrete Fourier transform
    for (int i = 0; i < r; ++i) {
        dm.vdim.push_back(irr[i].dim);
        std::set<int> freqs;
        for (int j = 0; j < n; ++j) {
            std::complex<double> acc = 0;
            for (int k = 0; k < n; ++k) {
                double ang = -2.0 * M_PI * double(j) * k / double(n);
                acc += chi[i][idx(k, 0)] * std::complex<double>(std::cos(ang), std::sin(ang));
            }
            double mult = acc.real() / n;
            long mj = std::lround(mult);
            if (std::abs(mult - mj) > 1e-6) throw DomainError("InternalCharacterError");
            if (mj > 0) freqs.insert(j);
        }
        int pt = *std::min_element(freqs.begin(), freqs.end(),
                                   [&](int a, int b) {
                                       return std::min(a, n - a) < std::min(b, n - b);
                                   });
        pt = std::min(pt, n - pt);
        dm.support_pt.push_back(pt);
        bool at_fixed = pt == 0 || (n % 2 == 0 && pt == n / 2);
        dm.stab_order.push_back(at_fixed ? 2 : 1);
        // fiber dimension at the point equals the multiplicity of the
        // frequency, which is 1 for dihedral simples
        dm.dim.push_back(Rational(1, dm.stab_order.back()));
    }
    return dm;
}

namespace {

std::vector<std::int64_t> ring_mul(const FusionRing &R,
                                   const std::vector<std::int64_t> &u,
                                   const std::vector<std::int64_t> &v) {
    std::vector<std::int64_t> w(R.rank, 0);
    for (int i = 0; i < R.rank; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < R.rank; ++j) {
            if (v[j] == 0) continue;
            for (int k = 0; k < R.rank; ++k)
                w[k] += u[i] * v[j] * R.n(i, j, k);
        }
    }
    return w;
}

} // namespace

MobileReport mobile_identities_check(const DihedralModel &dm) {
    MobileReport rep;
    const FusionRing &R = dm.ring;
    const int r = R.rank;
    auto fail = [&](nlohmann::json j) { rep.failures.push_back(std::move(j)); };

    // basic mobile at p: simples supported at p weighted by fiber dimension
    auto basic_mobile = [&](int p) {
        std::vector<std::int64_t> v(r, 0);
        for (int i = 0; i < r; ++i)
            if (dm.support_pt[i] == p) v[i] += 1;
        return v;
    };
    std::vector<std::int64_t> O = basic_mobile(0);

    // O . O = |Gamma| O with |Gamma| = 2
    {
        auto oo = ring_mul(R, O, O);
        for (int k = 0; k < r; ++k)
            if (oo[k] != 2 * O[k]) {
                fail({{"check", "O.O=2O"}, {"k", k}, {"got", oo[k]}, {"want", 2 * O[k]}});
                break;
            }
    }
    // dim(1) = 1/2
    if (!(dm.dim[R.unit] == Rational(1, 2)))
        fail({{"check", "dim(1)=1/2"}, {"got", dm.dim[R.unit].str()}});

    // O . X = 2 dim(X) O_p for all simples X
    for (int x = 0; x < r; ++x) {
        std::vector<std::int64_t> X(r, 0);
        X[x] = 1;
        auto ox = ring_mul(R, O, X);
        auto op = basic_mobile(dm.support_pt[x]);
        // 2 dim X = 2 num/den; entries of op scale by it exactly
        std::int64_t num = 2 * dm.dim[x].num, den = dm.dim[x].den;
        for (int k = 0; k < r; ++k)
            if (ox[k] * den != num * op[k]) {
                fail({{"check", "O.X=2dimX O_p"}, {"X", x}, {"k", k}});
                break;
            }
    }

    // X^v X = O + R with exactly one O and R supported away from 0,
    // for simple mobiles (simples on free orbits)
    for (int x = 0; x < r; ++x) {
        if (dm.stab_order[x] != 1) continue;
        std::vector<std::int64_t> X(r, 0), Xd(r, 0);
        X[x] = 1;
        Xd[R.dual[x]] = 1;
        auto prod = ring_mul(R, Xd, X);
        for (int k = 0; k < r; ++k) {
            if (dm.support_pt[k] == 0) {
                if (prod[k] != O[k]) {
                    fail({{"check", "XvX contains one O"}, {"X", x}, {"k", k},
                          {"got", prod[k]}, {"want", O[k]}});
                    break;
                }
            }
        }
    }
    rep.ok = rep.failures.empty();
    return rep;
}

} // namespace orbi
