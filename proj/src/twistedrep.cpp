#include "orbi/twistedrep.hpp"

#include <algorithm>
#include <map>

#include "orbi/error.hpp"

namespace orbi {

namespace {

// Left and right coset bookkeeping for a verified injective homomorphism.
struct Cosets {
    std::vector<int> left_reps;   // minimal element per coset gH, ascending
    std::vector<int> right_reps;  // minimal element per coset Hg, ascending
    std::vector<int> left_of;     // group element -> index into left_reps
    std::vector<int> right_of;
    std::vector<int> h_preimage;  // group element -> H index or -1

    Cosets(const FiniteGroup &G, const Homomorphism &f) {
        const FiniteGroup &H = *f.domain;
        h_preimage.assign(G.order, -1);
        for (int h = 0; h < H.order; ++h) h_preimage[f(h)] = h;
        left_of.assign(G.order, -1);
        right_of.assign(G.order, -1);
        for (int g = 0; g < G.order; ++g) {
            if (left_of[g] < 0) {
                int idx = int(left_reps.size());
                for (int h = 0; h < H.order; ++h) left_of[G.op(g, f(h))] = idx;
                left_reps.push_back(g); // g is minimal: scan order is ascending
            }
            if (right_of[g] < 0) {
                int idx = int(right_reps.size());
                for (int h = 0; h < H.order; ++h) right_of[G.op(f(h), g)] = idx;
                right_reps.push_back(g);
            }
        }
    }
};

std::complex<double> phase_ratio(const TwistedAlgebra &A, int g1, int h1, int g2, int h2) {
    // theta(g1,h1) / theta(g2,h2)
    return (A.theta_phase(g1, h1) - A.theta_phase(g2, h2)).eval();
}

} // namespace

TwistedAlgebra twisted_algebra(const FiniteGroup &G, const Cochain &theta) {
    if (theta.degree != 2 || theta.group.mul != G.mul)
        throw DomainError("BadTwist");
    auto check = is_cocycle(theta);
    if (!check.ok) throw DomainError("NotACocycle", {{"tuple", check.witness}});
    return TwistedAlgebra{G, theta};
}

double Rep::twist_deviation() const {
    const FiniteGroup &G = algebra.group;
    double dev = 0;
    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < G.order; ++h) {
            cmat lhs = rho[g] * rho[h];
            cmat rhs = algebra.theta_at(g, h) * rho[G.op(g, h)];
            dev = std::max(dev, max_abs(lhs - rhs));
        }
    return dev;
}

Rep make_rep(const TwistedAlgebra &A, std::vector<cmat> matrices, double tol) {
    if (int(matrices.size()) != A.group.order) throw DomainError("BadRep");
    Rep V;
    V.algebra = A;
    V.dim = matrices.empty() ? 0 : int(matrices[0].rows());
    V.rho = std::move(matrices);
    if (V.twist_deviation() > tol)
        throw DomainError("NotATwistedRep");
    return V;
}

Rep regular_rep(const TwistedAlgebra &A) {
    const FiniteGroup &G = A.group;
    const int n = G.order;
    std::vector<cmat> rho(n, cmat::Zero(n, n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            rho[g](G.op(g, h), h) = A.theta_at(g, h);
    Rep V;
    V.algebra = A;
    V.dim = n;
    V.rho = std::move(rho);
    return V;
}

std::int64_t RepDecomposition::total() const {
    std::int64_t t = 0;
    for (auto [d, m] : parts) t += std::int64_t(d) * m;
    return t;
}

namespace {

// Eigenvalue clusters of the averaged commutant element; empty on failure.
std::vector<std::pair<double, int>> commutant_clusters(const TwistedAlgebra &A,
                                                       std::uint64_t seed,
                                                       double gap,
                                                       Eigen::SelfAdjointEigenSolver<cmat> *solver_out) {
    const FiniteGroup &G = A.group;
    const int n = G.order;
    Rep R = regular_rep(A);
    std::mt19937_64 rng(seed);
    cmat H = random_hermitian(n, rng);
    cmat avg = cmat::Zero(n, n);
    for (int g = 0; g < n; ++g)
        avg += R.rho[g] * H * R.rho[g].adjoint();
    avg /= double(n);
    Eigen::SelfAdjointEigenSolver<cmat> es(avg);
    if (solver_out) *solver_out = es;
    const auto &ev = es.eigenvalues();
    std::vector<std::pair<double, int>> clusters; // (value, size)
    for (int i = 0; i < n; ++i) {
        if (!clusters.empty() && ev(i) - clusters.back().first < gap)
            clusters.back().second++;
        else
            clusters.push_back({ev(i), 1});
    }
    // cluster sizes must organise as d_i clusters of size d_i
    std::map<int, int> by_size;
    for (auto &[v, s] : clusters) by_size[s] += 1;
    for (auto &[s, t] : by_size)
        if (t % s != 0) return {};
    return clusters;
}

} // namespace

RepDecomposition regular_decompose(const TwistedAlgebra &A, std::uint64_t seed,
                                   double gap) {
    if (A.group.order > 512) throw DomainError("TooLarge");
    for (int attempt = 0; attempt < 8; ++attempt) {
        auto clusters = commutant_clusters(A, seed + attempt, gap, nullptr);
        if (clusters.empty()) continue;
        std::map<int, int> by_size;
        for (auto &[v, s] : clusters) by_size[s] += 1;
        RepDecomposition dec;
        for (auto &[s, t] : by_size)
            for (int i = 0; i < t / s; ++i) dec.parts.push_back({s, s});
        std::sort(dec.parts.begin(), dec.parts.end());
        if (dec.total() != A.group.order) continue;
        return dec;
    }
    throw DomainError("NumericalDegeneracy");
}

std::vector<Rep> irreducibles(const TwistedAlgebra &A, std::uint64_t seed) {
    const FiniteGroup &G = A.group;
    const int n = G.order;
    if (n > 512) throw DomainError("TooLarge");
    Rep R = regular_rep(A);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Eigen::SelfAdjointEigenSolver<cmat> es;
        auto clusters = commutant_clusters(A, seed + attempt, 1e-6, &es);
        if (clusters.empty()) continue;
        std::vector<Rep> found;
        std::vector<std::vector<std::complex<double>>> characters;
        int offset = 0;
        bool ok = true;
        for (auto &[val, size] : clusters) {
            cmat Q = es.eigenvectors().middleCols(offset, size);
            offset += size;
            std::vector<cmat> rho(n);
            for (int g = 0; g < n; ++g) rho[g] = Q.adjoint() * R.rho[g] * Q;
            Rep sub;
            sub.algebra = A;
            sub.dim = size;
            sub.rho = std::move(rho);
            if (sub.twist_deviation() > 1e-9) { ok = false; break; }
            std::vector<std::complex<double>> chi(n);
            for (int g = 0; g < n; ++g) chi[g] = sub.rho[g].trace();
            bool dup = false;
            for (const auto &c : characters) {
                double d = 0;
                for (int g = 0; g < n; ++g) d = std::max(d, std::abs(c[g] - chi[g]));
                if (d < 1e-6) { dup = true; break; }
            }
            if (!dup) {
                characters.push_back(std::move(chi));
                found.push_back(std::move(sub));
            }
        }
        if (!ok) continue;
        std::int64_t sum = 0;
        for (const auto &V : found) sum += std::int64_t(V.dim) * V.dim;
        if (sum != n) continue;
        std::sort(found.begin(), found.end(),
                  [](const Rep &a, const Rep &b) { return a.dim < b.dim; });
        return found;
    }
    throw DomainError("NumericalDegeneracy");
}

Rep restrict_rep(const Rep &V, const Homomorphism &f) {
    if (!f.injective()) throw DomainError("NotInjective");
    const FiniteGroup &H = *f.domain;
    Cochain rtheta = restrict_cochain(V.algebra.theta, f);
    TwistedAlgebra Ah = twisted_algebra(H, rtheta);
    std::vector<cmat> rho(H.order);
    for (int h = 0; h < H.order; ++h) rho[h] = V.rho[f(h)];
    Rep W;
    W.algebra = Ah;
    W.dim = V.dim;
    W.rho = std::move(rho);
    return W;
}

Rep induce_rep(const Rep &V, const Homomorphism &f, const TwistedAlgebra &At) {
    if (!f.injective()) throw DomainError("NotInjective");
    const FiniteGroup &G = At.group;
    Cosets cs(G, f);
    const int L = int(cs.left_reps.size());
    const int d = V.dim;
    const int D = L * d;
    std::vector<cmat> rho(G.order, cmat::Zero(D, D));
    for (int g = 0; g < G.order; ++g) {
        for (int i = 0; i < L; ++i) {
            int xi = cs.left_reps[i];
            int gxi = G.op(g, xi);
            int j = cs.left_of[gxi];
            int xj = cs.left_reps[j];
            int hG = G.op(G.inv(xj), gxi);
            int h = cs.h_preimage[hG];
            std::complex<double> scale = phase_ratio(At, g, xi, xj, hG);
            rho[g].block(j * d, i * d, d, d) = scale * V.rho[h];
        }
    }
    Rep W;
    W.algebra = At;
    W.dim = D;
    W.rho = std::move(rho);
    if (W.twist_deviation() > 1e-9) throw DomainError("InternalInductionError");
    return W;
}

namespace {

// phi in Hom_H(C^theta[Gamma], V) is determined by its values on right-coset
// representatives; the tensor side uses left-coset representatives.
// V may be an H-module (indexed by abstract H elements) or a Gamma-module
// restricted along f; act_h resolves how a subgroup element acts.
struct AdjunctionBases {
    const TwistedAlgebra &At;
    const Rep &V;
    const Homomorphism &f;
    Cosets cs;
    int d, L;
    bool v_is_gamma_module;

    AdjunctionBases(const TwistedAlgebra &at, const Rep &v, const Homomorphism &ff,
                    bool gamma_module = false)
        : At(at), V(v), f(ff), cs(at.group, ff), d(v.dim),
          L(int(cs.left_reps.size())), v_is_gamma_module(gamma_module) {}

    const cmat &act_h(int hG) const {
        return v_is_gamma_module ? V.rho[hG] : V.rho[cs.h_preimage[hG]];
    }

    // x tensor v reduced to the left-coset basis: x = x_i h'
    void reduce_tensor(int x, const cvec &v, int &i, cvec &out) const {
        const FiniteGroup &G = At.group;
        i = cs.left_of[x];
        int xi = cs.left_reps[i];
        int hG = G.op(G.inv(xi), x);
        std::complex<double> c = std::conj(At.theta_at(xi, hG)); // 1/theta, |theta|=1
        out = c * (act_h(hG) * v);
    }

    // phi_{j,b}(x): nonzero only on the right coset H x_j
    bool eval_phi(int j, const cvec &vb, int x, cvec &out) const {
        const FiniteGroup &G = At.group;
        if (cs.right_of[x] != j) return false;
        int xj = cs.right_reps[j];
        int hG = G.op(x, G.inv(xj));
        out = std::conj(At.theta_at(hG, xj)) * (act_h(hG) * vb);
        return true;
    }
};

} // namespace

NakayamaReport nakayama_check(const Rep &V, const Homomorphism &f,
                              const TwistedAlgebra &At) {
    if (!f.injective()) throw DomainError("NotInjective");
    const FiniteGroup &G = At.group;
    AdjunctionBases B(At, V, f);
    const int d = B.d, L = B.L, N = L * d;
    const int Hn = f.domain->order;

    // Nak: Hom basis (j,b) -> tensor coordinates
    cmat nak = cmat::Zero(N, N);
    for (int j = 0; j < L; ++j)
        for (int b = 0; b < d; ++b) {
            cvec vb = cvec::Zero(d);
            vb(b) = 1.0;
            for (int x = 0; x < G.order; ++x) {
                cvec phix;
                if (!B.eval_phi(j, vb, x, phix)) continue;
                std::complex<double> w =
                    std::conj(At.theta_at(G.inv(x), x)) / double(Hn);
                int i;
                cvec red;
                B.reduce_tensor(G.inv(x), phix, i, red);
                nak.block(i * d, j * d + b, d, 1) += w * red;
            }
        }

    // Nak^{-1}: tensor basis (i,b) -> Hom coordinates
    cmat nakinv = cmat::Zero(N, N);
    for (int i = 0; i < L; ++i) {
        int xi = B.cs.left_reps[i];
        for (int b = 0; b < d; ++b) {
            cvec vb = cvec::Zero(d);
            vb(b) = 1.0;
            for (int j = 0; j < L; ++j) {
                int xj = B.cs.right_reps[j];
                int hG = G.op(xj, xi);
                if (B.cs.h_preimage[hG] < 0) continue;
                std::complex<double> c =
                    At.theta_at(G.inv(xi), xi) * std::conj(At.theta_at(hG, G.inv(xi)));
                cvec val = c * (B.act_h(hG) * vb);
                nakinv.block(j * d, i * d + b, d, 1) = val;
            }
        }
    }

    NakayamaReport r;
    r.dev_forward = dev_from_identity(nak * nakinv);
    r.dev_backward = dev_from_identity(nakinv * nak);
    return r;
}

FrobeniusData frobenius_data(const Homomorphism &f, const TwistedAlgebra &At) {
    if (!f.injective()) throw DomainError("NotInjective");
    const FiniteGroup &G = At.group;
    Rep V = regular_rep(At);
    AdjunctionBases B(At, V, f, /*gamma_module=*/true);
    const int d = B.d, L = B.L, N = L * d;
    const int Hn = f.domain->order;

    // counit: x_i tensor v -> x_i . v
    cmat eps = cmat::Zero(d, N);
    for (int i = 0; i < L; ++i)
        eps.block(0, i * d, d, d) = V.rho[B.cs.left_reps[i]];

    // unit: v -> (1/|H|) sum_x theta(x^-1,x)^-1 x^-1 tensor x.v
    cmat eta = cmat::Zero(N, d);
    for (int x = 0; x < G.order; ++x) {
        std::complex<double> w = std::conj(At.theta_at(G.inv(x), x)) / double(Hn);
        for (int b = 0; b < d; ++b) {
            cvec xv = V.rho[x].col(b);
            int i;
            cvec red;
            B.reduce_tensor(G.inv(x), xv, i, red);
            eta.block(i * d, b, d, 1) += w * red;
        }
    }

    FrobeniusData out;
    std::int64_t g = std::gcd(std::int64_t(G.order), std::int64_t(Hn));
    out.scalar_num = G.order / g;
    out.scalar_den = Hn / g;
    double s = double(G.order) / double(Hn);
    out.dev_scalar = max_abs(eps * eta - s * cmat::Identity(d, d));
    cmat e = (eta * eps) / s;
    out.dev_idem = max_abs(e * e - e);
    out.dev_split = dev_from_identity((eps * eta) / s);
    out.unit = std::move(eta);
    out.counit = std::move(eps);
    return out;
}

} // namespace orbi
