#include "orbi/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "orbi/error.hpp"

namespace orbi {

bool FiniteGroup::is_abelian() const {
    for (int g = 0; g < order; ++g)
        for (int h = g + 1; h < order; ++h)
            if (op(g, h) != op(h, g)) return false;
    return true;
}

FiniteGroup group_from_table(const std::vector<std::vector<int>> &table) {
    const int n = int(table.size());
    if (n == 0) throw DomainError("EmptyTable");
    FiniteGroup G;
    G.order = n;
    G.mul.assign(std::size_t(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        if (int(table[i].size()) != n) throw DomainError("NotSquare");
        for (int j = 0; j < n; ++j) {
            int v = table[i][j];
            if (v < 0 || v >= n)
                throw DomainError("IndexOutOfRange", {{"row", i}, {"col", j}, {"value", v}});
            G.mul[std::size_t(i) * n + j] = v;
        }
    }
    // two-sided identity
    int e = -1;
    for (int c = 0; c < n; ++c) {
        bool ok = true;
        for (int g = 0; g < n; ++g)
            if (G.op(c, g) != g || G.op(g, c) != g) { ok = false; break; }
        if (ok) { e = c; break; }
    }
    if (e < 0) throw DomainError("NoIdentity");
    G.identity = e;
    // two-sided inverses
    G.inverse.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h)
            if (G.op(g, h) == e && G.op(h, g) == e) { G.inverse[g] = h; break; }
        if (G.inverse[g] < 0) throw DomainError("NoInverse", {{"element", g}});
    }
    // associativity, exhaustive
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (G.op(a, G.op(b, c)) != G.op(G.op(a, b), c))
                    throw DomainError("NotAssociative", {{"a", a}, {"b", b}, {"c", c}});
    return G;
}

AbelianGroup::AbelianGroup(std::vector<std::int64_t> f) : factors(std::move(f)) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2) throw DomainError("InvalidFactor", {{"factor", factors[i]}});
        if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
            throw DomainError("NotInvariantFactors",
                              {{"d_i", factors[i]}, {"d_next", factors[i + 1]}});
    }
}

std::int64_t AbelianGroup::order() const {
    std::int64_t o = 1;
    for (auto d : factors) o *= d;
    return o;
}

std::int64_t AbelianGroup::exponent() const {
    return factors.empty() ? 1 : factors.back();
}

std::vector<std::int64_t> AbelianGroup::tuple(std::int64_t index) const {
    std::vector<std::int64_t> t(factors.size());
    for (int i = int(factors.size()) - 1; i >= 0; --i) {
        t[i] = index % factors[i];
        index /= factors[i];
    }
    return t;
}

std::int64_t AbelianGroup::index(const std::vector<std::int64_t> &t) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::int64_t v = t[i] % factors[i];
        if (v < 0) v += factors[i];
        idx = idx * factors[i] + v;
    }
    return idx;
}

std::int64_t AbelianGroup::add(std::int64_t x, std::int64_t y) const {
    auto a = tuple(x), b = tuple(y);
    for (std::size_t i = 0; i < factors.size(); ++i) a[i] = (a[i] + b[i]) % factors[i];
    return index(a);
}

std::int64_t AbelianGroup::neg(std::int64_t x) const {
    auto a = tuple(x);
    for (std::size_t i = 0; i < factors.size(); ++i)
        a[i] = (factors[i] - a[i]) % factors[i];
    return index(a);
}

std::int64_t AbelianGroup::scale(std::int64_t n, std::int64_t x) const {
    auto a = tuple(x);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::int64_t v = (n % factors[i]) * a[i] % factors[i];
        if (v < 0) v += factors[i];
        a[i] = v;
    }
    return index(a);
}

std::int64_t AbelianGroup::generator(int i) const {
    std::vector<std::int64_t> t(factors.size(), 0);
    t[i] = 1;
    return index(t);
}

FiniteGroup abelian_embed(const AbelianGroup &A, std::int64_t bound) {
    const std::int64_t n = A.order();
    if (n > bound) throw DomainError("TooLarge", {{"order", n}, {"bound", bound}});
    FiniteGroup G;
    G.order = int(n);
    G.identity = 0;
    G.mul.assign(std::size_t(n) * n, 0);
    G.inverse.assign(n, 0);
    for (std::int64_t x = 0; x < n; ++x) {
        for (std::int64_t y = 0; y < n; ++y)
            G.mul[std::size_t(x) * n + y] = int(A.add(x, y));
        G.inverse[x] = int(A.neg(x));
    }
    return G;
}

GroupAction make_action(const FiniteGroup &G, int set_size,
                        const std::vector<int> &table) {
    if (int(table.size()) != G.order * set_size)
        throw DomainError("BadActionTable");
    GroupAction a;
    a.group = G;
    a.set_size = set_size;
    a.table = table;
    for (int x = 0; x < set_size; ++x)
        if (a.act(G.identity, x) != x)
            throw DomainError("NotAnAction", {{"kind", "identity"}, {"point", x}});
    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < G.order; ++h)
            for (int x = 0; x < set_size; ++x)
                if (a.act(G.op(g, h), x) != a.act(g, a.act(h, x)))
                    throw DomainError("NotAnAction",
                                      {{"kind", "composition"}, {"g", g}, {"h", h}, {"point", x}});
    return a;
}

std::vector<Orbit> orbits_with_stabilizers(const GroupAction &action) {
    const FiniteGroup &G = action.group;
    std::vector<bool> seen(action.set_size, false);
    std::vector<Orbit> orbits;
    for (int x = 0; x < action.set_size; ++x) {
        if (seen[x]) continue;
        Orbit o;
        o.representative = x;
        std::set<int> pts;
        for (int g = 0; g < G.order; ++g) {
            int y = action.act(g, x);
            pts.insert(y);
            if (y == x) o.stabilizer.push_back(g);
        }
        o.points.assign(pts.begin(), pts.end());
        for (int p : o.points) seen[p] = true;
        // orbit-stabilizer sanity
        if (std::int64_t(o.points.size()) * std::int64_t(o.stabilizer.size()) != G.order)
            throw DomainError("OrbitStabilizerMismatch", {{"point", x}});
        orbits.push_back(std::move(o));
    }
    return orbits;
}

bool Homomorphism::injective() const {
    std::set<int> im(image.begin(), image.end());
    return im.size() == image.size();
}

Homomorphism make_homomorphism(const FiniteGroup &H, const FiniteGroup &G,
                               const std::vector<int> &image) {
    if (int(image.size()) != H.order) throw DomainError("BadHomomorphism");
    for (int v : image)
        if (v < 0 || v >= G.order) throw DomainError("BadHomomorphism");
    for (int a = 0; a < H.order; ++a)
        for (int b = 0; b < H.order; ++b)
            if (G.op(image[a], image[b]) != image[H.op(a, b)])
                throw DomainError("NotAHomomorphism", {{"a", a}, {"b", b}});
    Homomorphism f;
    f.domain = &H;
    f.codomain = &G;
    f.image = image;
    return f;
}

Subgroup make_subgroup(const FiniteGroup &G, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::map<int, int> pos;
    for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = int(i);
    const int n = int(elements.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int p = G.op(elements[i], elements[j]);
            auto it = pos.find(p);
            if (it == pos.end())
                throw DomainError("NotClosed", {{"a", elements[i]}, {"b", elements[j]}});
            table[i][j] = it->second;
        }
    Subgroup H;
    H.abstract = group_from_table(table);
    H.elements = std::move(elements);
    return H;
}

Homomorphism subgroup_inclusion(const Subgroup &H, const FiniteGroup &G) {
    return make_homomorphism(H.abstract, G, H.elements);
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup &G) {
    // Breadth-first closure of generated subgroups.
    std::set<std::vector<int>> found;
    found.insert({G.identity});
    std::vector<std::vector<int>> frontier = {{G.identity}};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto &H : frontier) {
            for (int g = 0; g < G.order; ++g) {
                std::set<int> gen(H.begin(), H.end());
                gen.insert(g);
                // close under multiplication
                bool grew = true;
                while (grew) {
                    grew = false;
                    std::vector<int> cur(gen.begin(), gen.end());
                    for (int a : cur)
                        for (int b : cur)
                            if (gen.insert(G.op(a, b)).second) grew = true;
                }
                std::vector<int> K(gen.begin(), gen.end());
                if (found.insert(K).second) next.push_back(K);
            }
        }
        frontier = std::move(next);
    }
    return {found.begin(), found.end()};
}

} // namespace orbi
