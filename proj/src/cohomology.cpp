#include "orbi/cohomology.hpp"

#include <cmath>

#include "orbi/error.hpp"

namespace orbi {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Enumeration of tuples over non-identity elements (the normalized basis).
struct ReducedIndex {
    const FiniteGroup &G;
    int degree;
    std::vector<int> nonid;      // non-identity elements, ascending
    std::vector<int> rank_of;    // element -> position in nonid, -1 for identity

    ReducedIndex(const FiniteGroup &g, int deg) : G(g), degree(deg) {
        rank_of.assign(G.order, -1);
        for (int x = 0; x < G.order; ++x)
            if (x != G.identity) {
                rank_of[x] = int(nonid.size());
                nonid.push_back(x);
            }
    }

    std::int64_t count() const { return ipow(G.order - 1, degree); }

    std::vector<int> tuple(std::int64_t idx) const {
        std::vector<int> t(degree);
        for (int i = degree - 1; i >= 0; --i) {
            t[i] = nonid[idx % (G.order - 1)];
            idx /= (G.order - 1);
        }
        return t;
    }

    // -1 when the tuple touches the identity
    std::int64_t index(const std::vector<int> &t) const {
        std::int64_t idx = 0;
        for (int x : t) {
            int r = rank_of[x];
            if (r < 0) return -1;
            idx = idx * (G.order - 1) + r;
        }
        return idx;
    }
};

// Apply the bar differential term-by-term to the tuple t of length n+1:
// emitter(column tuple, sign) for each surviving term.
template <typename Emit>
void bar_terms(const FiniteGroup &G, const std::vector<int> &t, Emit emit) {
    const int n = int(t.size()) - 1; // source degree
    // drop first argument
    emit(std::vector<int>(t.begin() + 1, t.end()), +1);
    int sign = -1;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> m;
        m.reserve(n);
        for (int j = 0; j + 1 < int(t.size()); ++j) {
            if (j == i - 1) m.push_back(G.op(t[j], t[j + 1]));
            else m.push_back(j < i - 1 ? t[j] : t[j + 1]);
        }
        emit(std::move(m), sign);
        sign = -sign;
    }
    emit(std::vector<int>(t.begin(), t.end() - 1), sign);
}

std::vector<Phase> reduced_vector(const Cochain &c, const ReducedIndex &ix) {
    std::vector<Phase> v(ix.count());
    for (std::int64_t i = 0; i < ix.count(); ++i) v[i] = c.at(ix.tuple(i));
    return v;
}

Cochain from_reduced(const FiniteGroup &G, int degree, const ReducedIndex &ix,
                     const std::vector<Phase> &v) {
    Cochain c = zero_cochain(G, degree);
    for (std::int64_t i = 0; i < ix.count(); ++i) c.at(ix.tuple(i)) = v[i];
    return c;
}

} // namespace

std::size_t Cochain::tuple_index(const std::vector<int> &t) const {
    std::size_t idx = 0;
    for (int x : t) idx = idx * group.order + x;
    return idx;
}

bool Cochain::is_zero() const {
    for (const auto &p : values)
        if (!p.is_zero()) return false;
    return true;
}

bool Cochain::operator==(const Cochain &o) const {
    return degree == o.degree && group.mul == o.group.mul && values == o.values;
}

Cochain zero_cochain(const FiniteGroup &G, int degree) {
    Cochain c;
    c.group = G;
    c.degree = degree;
    c.values.assign(ipow(G.order, degree), Phase());
    return c;
}

Cochain make_cochain(const FiniteGroup &G, int degree, std::vector<Phase> values) {
    if (std::int64_t(values.size()) != ipow(G.order, degree))
        throw DomainError("BadCochainSize");
    Cochain c;
    c.group = G;
    c.degree = degree;
    c.values = std::move(values);
    // normalization: zero whenever an argument is the identity
    std::vector<int> t(degree, 0);
    for (std::size_t idx = 0; idx < c.values.size(); ++idx) {
        std::size_t rest = idx;
        bool touches = false;
        for (int i = degree - 1; i >= 0; --i) {
            t[i] = int(rest % G.order);
            rest /= G.order;
            if (t[i] == G.identity) touches = true;
        }
        if (touches && !c.values[idx].is_zero())
            throw DomainError("NotNormalized", {{"index", idx}});
    }
    return c;
}

Cochain cochain_add(const Cochain &a, const Cochain &b) {
    if (a.degree != b.degree || a.group.mul != b.group.mul)
        throw DomainError("CochainMismatch");
    Cochain r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = r.values[i] + b.values[i];
    return r;
}

Cochain cochain_scale(const Cochain &a, std::int64_t n) {
    Cochain r = a;
    for (auto &p : r.values) p = p.times(n);
    return r;
}

Cochain coboundary(const Cochain &c, std::int64_t max_table) {
    const FiniteGroup &G = c.group;
    const int n = c.degree;
    if (ipow(G.order, n + 1) > max_table)
        throw DomainError("TooLarge",
                          {{"table", ipow(G.order, n + 1)}, {"bound", max_table}});
    Cochain d = zero_cochain(G, n + 1);
    std::vector<int> t(n + 1, 0);
    for (std::size_t idx = 0; idx < d.values.size(); ++idx) {
        std::size_t rest = idx;
        for (int i = n; i >= 0; --i) {
            t[i] = int(rest % G.order);
            rest /= G.order;
        }
        Phase acc;
        bar_terms(G, t, [&](std::vector<int> col, int sign) {
            const Phase &v = c.at(col);
            acc = sign > 0 ? acc + v : acc - v;
        });
        d.values[idx] = acc;
    }
    return d;
}

CocycleCheck is_cocycle(const Cochain &c) {
    Cochain d = coboundary(c);
    const FiniteGroup &G = c.group;
    for (std::size_t idx = 0; idx < d.values.size(); ++idx) {
        if (d.values[idx].is_zero()) continue;
        CocycleCheck r;
        r.ok = false;
        r.witness.assign(c.degree + 1, 0);
        std::size_t rest = idx;
        for (int i = c.degree; i >= 0; --i) {
            r.witness[i] = int(rest % G.order);
            rest /= G.order;
        }
        return r;
    }
    return {};
}

static void assemble_row(const FiniteGroup &G, const ReducedIndex &rows,
                         const ReducedIndex &cols, IntMat &D, std::int64_t r) {
    auto t = rows.tuple(r);
    bar_terms(G, t, [&](std::vector<int> col, int sign) {
        std::int64_t c = cols.index(col);
        if (c >= 0) D(int(r), int(c)) += sign;
    });
}

IntMat coboundary_matrix_serial(const FiniteGroup &G, int n) {
    ReducedIndex rows(G, n + 1), cols(G, n);
    IntMat D(int(rows.count()), int(cols.count()));
    for (std::int64_t r = 0; r < rows.count(); ++r)
        assemble_row(G, rows, cols, D, r);
    return D;
}

IntMat coboundary_matrix(const FiniteGroup &G, int n, bool parallel) {
    if (!parallel) return coboundary_matrix_serial(G, n);
    ReducedIndex rows(G, n + 1), cols(G, n);
    IntMat D(int(rows.count()), int(cols.count()));
    const std::int64_t R = rows.count();
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < R; ++r)
        assemble_row(G, rows, cols, D, r);
    return D;
}

CohomologyGroup cohomology_group(const FiniteGroup &G, int n, std::int64_t max_table) {
    if (n < 1) throw DomainError("BadDegree");
    if (ipow(G.order, n + 1) > max_table)
        throw DomainError("TooLarge",
                          {{"table", ipow(G.order, n + 1)}, {"bound", max_table}});
    // Q/Z is divisible and the rational bar complex is exact in positive
    // degrees, so H^n is the torsion of the cocycle lattice: the invariant
    // factors > 1 of d_n, with generators read off the column transform.
    IntMat D = coboundary_matrix(G, n);
    SmithResult snf = smith_normal_form(D);
    CohomologyGroup H;
    ReducedIndex cols(G, n);
    for (int i = 0; i < snf.rank; ++i) {
        std::int64_t s = snf.diag[i];
        if (s <= 1) continue;
        H.invariant_factors.push_back(s);
        std::vector<Phase> v(cols.count());
        for (std::int64_t r = 0; r < cols.count(); ++r)
            v[r] = Phase(snf.V(int(r), i), s);
        H.generators.push_back(from_reduced(G, n, cols, v));
    }
    return H;
}

std::optional<Cochain> solve_coboundary(const Cochain &target, std::int64_t max_table) {
    auto check = is_cocycle(target);
    if (!check.ok) throw DomainError("NotACocycle", {{"tuple", check.witness}});
    const FiniteGroup &G = target.group;
    const int n = target.degree;
    if (n < 1) throw DomainError("BadDegree");
    if (ipow(G.order, n + 1) > max_table)
        throw DomainError("TooLarge");
    // the Smith row transform is quadratic in the cochain count
    if (ipow(G.order - 1, n) > 4096)
        throw DomainError("TooLarge", {{"reason", "smith transform size"}});

    IntMat B = coboundary_matrix(G, n - 1);
    SmithResult snf = smith_normal_form(B);
    ReducedIndex rows(G, n), cols(G, n - 1);

    std::vector<Phase> t = reduced_vector(target, rows);
    // u = U * t over Q/Z
    std::vector<Phase> u(rows.count());
    for (std::int64_t i = 0; i < rows.count(); ++i) {
        Phase acc;
        for (std::int64_t j = 0; j < rows.count(); ++j) {
            std::int64_t coef = snf.U(int(i), int(j));
            if (coef != 0) acc = acc + t[j].times(coef);
        }
        u[i] = acc;
    }
    // solvable iff u vanishes outside the pivot rows
    for (std::int64_t i = snf.rank; i < rows.count(); ++i)
        if (!u[i].is_zero()) return std::nullopt;
    // z_i = u_i / s_i (any preimage under multiplication by s_i works)
    std::vector<Phase> z(cols.count());
    for (int i = 0; i < snf.rank; ++i)
        z[i] = Phase(u[i].num, u[i].den * snf.diag[i]);
    // kappa = V * z
    std::vector<Phase> kv(cols.count());
    for (std::int64_t i = 0; i < cols.count(); ++i) {
        Phase acc;
        for (std::int64_t j = 0; j < cols.count(); ++j) {
            std::int64_t coef = snf.V(int(i), int(j));
            if (coef != 0) acc = acc + z[j].times(coef);
        }
        kv[i] = acc;
    }
    Cochain kappa = from_reduced(G, n - 1, cols, kv);
    if (!(coboundary(kappa) == target))
        throw DomainError("InternalSolveError");
    return kappa;
}

Cochain restrict_cochain(const Cochain &c, const Homomorphism &f) {
    const FiniteGroup &H = *f.domain;
    if (f.codomain->mul != c.group.mul) throw DomainError("GroupMismatch");
    Cochain r = zero_cochain(H, c.degree);
    std::vector<int> t(c.degree, 0), ft(c.degree, 0);
    for (std::size_t idx = 0; idx < r.values.size(); ++idx) {
        std::size_t rest = idx;
        for (int i = c.degree - 1; i >= 0; --i) {
            t[i] = int(rest % H.order);
            rest /= H.order;
        }
        for (int i = 0; i < c.degree; ++i) ft[i] = f(t[i]);
        r.values[idx] = c.at(ft);
    }
    return r;
}

std::int64_t lie_level_restriction(LieFamily family, std::int64_t k, std::int64_t n) {
    if (n < 1) throw DomainError("UnsupportedFamily", {{"n", n}});
    switch (family) {
    case LieFamily::Circle:
        break;
    case LieFamily::SU2:
        if (n != 2) throw DomainError("UnsupportedFamily", {{"family", "SU2"}, {"n", n}});
        break;
    }
    std::int64_t r = k % n;
    return r < 0 ? r + n : r;
}

} // namespace orbi
