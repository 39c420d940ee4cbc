#pragma once

// Test-only brute-force machinery for group cohomology with coefficients
// (1/m)Z/Z. Values are ints mod m standing for multiples of 1/m; cochains
// are vectors over the reduced slots (tuples of non-identity elements).
// Everything here is plain modular arithmetic, independent of the
// Smith-normal-form implementation it is used to check.

#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "orbi/cohomology.hpp"
#include "orbi/group.hpp"

namespace orbi::testing {

struct BruteComplex {
    FiniteGroup G;
    int m; // coefficient modulus

    std::vector<int> nonid;
    std::vector<int> rank_of;

    BruteComplex(const FiniteGroup &g, int modulus) : G(g), m(modulus) {
        rank_of.assign(G.order, -1);
        for (int x = 0; x < G.order; ++x)
            if (x != G.identity) {
                rank_of[x] = int(nonid.size());
                nonid.push_back(x);
            }
    }

    std::int64_t slots(int degree) const {
        std::int64_t s = 1;
        for (int i = 0; i < degree; ++i) s *= (G.order - 1);
        return s;
    }

    std::vector<int> tuple(int degree, std::int64_t idx) const {
        std::vector<int> t(degree);
        for (int i = degree - 1; i >= 0; --i) {
            t[i] = nonid[idx % (G.order - 1)];
            idx /= (G.order - 1);
        }
        return t;
    }

    std::int64_t slot(const std::vector<int> &t) const {
        std::int64_t idx = 0;
        for (int x : t) {
            if (rank_of[x] < 0) return -1;
            idx = idx * (G.order - 1) + rank_of[x];
        }
        return idx;
    }

    // bar differential of a reduced degree-d cochain, mod m
    std::vector<int> d(int degree, const std::vector<int> &c) const {
        std::vector<int> out(slots(degree + 1), 0);
        for (std::int64_t r = 0; r < std::int64_t(out.size()); ++r) {
            auto t = tuple(degree + 1, r);
            int acc = 0;
            auto add = [&](const std::vector<int> &col, int sign) {
                std::int64_t s = slot(col);
                if (s < 0) return;
                acc = ((acc + sign * c[s]) % m + m) % m;
            };
            add(std::vector<int>(t.begin() + 1, t.end()), +1);
            int sign = -1;
            for (int i = 1; i <= degree; ++i) {
                std::vector<int> mcol;
                for (int j = 0; j + 1 < int(t.size()); ++j) {
                    if (j == i - 1) mcol.push_back(G.op(t[j], t[j + 1]));
                    else mcol.push_back(j < i - 1 ? t[j] : t[j + 1]);
                }
                add(mcol, sign);
                sign = -sign;
            }
            add(std::vector<int>(t.begin(), t.end() - 1), sign);
            out[r] = acc;
        }
        return out;
    }

    bool is_zero(const std::vector<int> &c) const {
        for (int v : c)
            if (v % m != 0) return false;
        return true;
    }

    std::uint64_t pack(const std::vector<int> &c) const {
        std::uint64_t key = 0;
        for (int v : c) key = key * std::uint64_t(m) + std::uint64_t(v % m);
        return key;
    }

    // enumerate all reduced degree-d cochains mod m
    void for_each(int degree, const std::function<void(const std::vector<int> &)> &f) const {
        std::vector<int> c(slots(degree), 0);
        for (;;) {
            f(c);
            int i = 0;
            while (i < int(c.size()) && ++c[i] == m) c[i++] = 0;
            if (i == int(c.size())) break;
        }
    }

    // set of packed coboundaries { d kappa : kappa in C^{degree-1} mod m }
    std::unordered_set<std::uint64_t> coboundary_set(int degree) const {
        std::unordered_set<std::uint64_t> B;
        for_each(degree - 1, [&](const std::vector<int> &kappa) {
            B.insert(pack(d(degree - 1, kappa)));
        });
        return B;
    }

    // convert an exact cochain with denominators dividing m into oracle form
    std::vector<int> from_cochain(const Cochain &c) const {
        std::vector<int> out(slots(c.degree), 0);
        for (std::int64_t s = 0; s < std::int64_t(out.size()); ++s) {
            const Phase &p = c.at(tuple(c.degree, s));
            if (m % p.den != 0) throw std::runtime_error("denominator not in (1/m)Z");
            out[s] = int(p.num * (m / p.den) % m);
        }
        return out;
    }
};

// classical generator of H^3(B Z/n): omega_k(a,b,c) = k a floor((b+c)/n) / n
inline Cochain cyclic_omega(const FiniteGroup &Zn, std::int64_t k) {
    const int n = Zn.order;
    Cochain w = zero_cochain(Zn, 3);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                w.at({a, b, c}) = Phase(k * a * ((b + c) / n), n);
    return w;
}

} // namespace orbi::testing
