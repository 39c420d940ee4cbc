#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "orbi/error.hpp"
#include "orbi/fuscat.hpp"

using namespace orbi;
using namespace orbi::testing;

namespace {

FusionCategoryData vec_g(const FiniteGroup &G) {
    return build_pointed(G, zero_cochain(G, 3));
}

Bicharacter cyclic_chi(std::int64_t n, Phase c11) {
    AbelianGroup A({n});
    Bicharacter chi;
    chi.group = A;
    chi.b.resize(n * n);
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y) chi.b[x * n + y] = c11.times(x * y);
    return chi;
}

} // namespace

TEST_CASE("ring verification") {
    auto C = vec_g(cyclic(3));
    auto rep = ring_verify(C.ring);
    CHECK(rep.ok());
    for (const auto &d : C.ring.dims) CHECK(d == Rational(1, 1));

    // TY(Z/2) fusion ring passes; dims omitted because dim m is irrational
    auto TY = build_ty(AbelianGroup({2}), cyclic_chi(2, Phase(1, 2)), 1);
    CHECK(ring_verify(TY.ring).ok());
    CHECK(TY.ring.dims.empty());
    CHECK(TY.ring.n(2, 2, 0) == 1); // m x m = 0 + 1
    CHECK(TY.ring.n(2, 2, 1) == 1);

    // tampering breaks associativity with a witness
    FusionRing broken = TY.ring;
    broken.N[(std::size_t(1) * 3 + 1) * 3 + 1] = 1;
    auto bad = ring_verify(broken);
    CHECK(!bad.ok());
    bool saw_assoc = false;
    for (const auto &f : bad.failures)
        if (f.at("kind") == "associativity") saw_assoc = true;
    CHECK(saw_assoc);
}

TEST_CASE("rigidity") {
    auto C5 = vec_g(cyclic(5));
    CHECK(rigidity_check(C5.ring).ok());
    for (int g = 1; g < 5; ++g) CHECK(C5.ring.dual[g] == 5 - g);

    auto TY = build_ty(AbelianGroup({3}), cyclic_chi(3, Phase(1, 3)), 1);
    CHECK(rigidity_check(TY.ring).ok());
    CHECK(TY.ring.dual[3] == 3); // m is self-dual

    FusionRing broken = C5.ring;
    broken.dual[1] = 1;
    CHECK(!rigidity_check(broken).ok());
}

TEST_CASE("pointed categories") {
    // Z/2 with the order-2 class of H^3: one nontrivial F-symbol
    FiniteGroup z2 = cyclic(2);
    Cochain w = zero_cochain(z2, 3);
    w.at({1, 1, 1}) = Phase(1, 2);
    REQUIRE(is_cocycle(w).ok);
    auto C = build_pointed(z2, w);
    CHECK(C.ring.rank == 2);
    auto f = C.f_symbol(1, 1, 1, 1, 0, 0);
    REQUIRE(f.has_value());
    CHECK(*f == FValue(Phase(1, 2), Rational(1, 1)));
    CHECK(pentagon_check(C).ok());

    // trivial cocycle on Z/3: every F-symbol is 1
    auto C3 = vec_g(cyclic(3));
    CHECK(C3.F.empty());
    CHECK(pentagon_check(C3).ok());

    // non-cocycles are rejected
    Cochain notc = zero_cochain(z2, 3);
    notc.at({1, 1, 1}) = Phase(1, 3);
    CHECK_THROWS_AS(build_pointed(z2, notc), DomainError);
}

TEST_CASE("pentagon specializes to the 3-cocycle condition on pointed data") {
    // for pointed categories each pentagon instance is indexed by a
    // quadruple and its violation is exactly a cocycle-condition failure
    FiniteGroup z4 = cyclic(4);
    auto H = cohomology_group(z4, 3);
    REQUIRE(H.invariant_factors == std::vector<std::int64_t>{4});
    Cochain gen = H.generators[0];

    for (int j = 0; j < 4; ++j) {
        Cochain w = cochain_scale(gen, j);
        auto C = build_pointed(z4, w);
        auto rep = pentagon_check(C);
        CHECK(rep.instances == 4 * 4 * 4 * 4);
        CHECK(rep.ok());
    }

    // inject a non-cocycle directly into the F-table and compare the
    // violation set with the coboundary support
    Cochain bad = zero_cochain(z4, 3);
    bad.at({1, 2, 3}) = Phase(1, 4);
    auto C = vec_g(z4);
    C.F[{1, 2, 3, z4.op(z4.op(1, 2), 3), z4.op(1, 2), z4.op(2, 3)}] =
        FValue(Phase(1, 4), Rational(1, 1));
    auto rep = pentagon_check(C);
    CHECK(!rep.ok());
    Cochain db = coboundary(bad);
    std::size_t support = 0;
    for (const auto &p : db.values)
        if (!p.is_zero()) ++support;
    CHECK(rep.violations.size() == support);
    for (const auto &v : rep.violations) {
        // violation labels (a,b,c,d,...) name a tuple where (d bad) != 0
        CHECK(!db.at({v.labels[0], v.labels[1], v.labels[2], v.labels[3]}).is_zero());
    }
}

TEST_CASE("pentagon for pointed IV with every H^3 class") {
    FiniteGroup iv = klein_four();
    auto H = cohomology_group(iv, 3);
    REQUIRE(H.invariant_factors == std::vector<std::int64_t>({2, 2, 2}));
    for (int mask = 0; mask < 8; ++mask) {
        Cochain w = zero_cochain(iv, 3);
        for (int b = 0; b < 3; ++b)
            if (mask & (1 << b)) w = cochain_add(w, H.generators[b]);
        auto rep = pentagon_check(build_pointed(iv, w));
        CHECK(rep.ok());
    }
}

TEST_CASE("Tambara-Yamagami data") {
    // TY(Z/2): Ising-type F(m,m,m) entries +-1/sqrt(2)
    auto TY2 = build_ty(AbelianGroup({2}), cyclic_chi(2, Phase(1, 2)), 1);
    auto f = TY2.f_symbol(2, 2, 2, 2, 0, 0);
    REQUIRE(f.has_value());
    CHECK(*f == FValue(Phase(), Rational(1, 2)));
    auto f11 = TY2.f_symbol(2, 2, 2, 2, 1, 1);
    REQUIRE(f11.has_value());
    CHECK(*f11 == FValue(Phase(1, 2), Rational(1, 2)));

    // the negative tau folds a half into the phase
    auto TY2m = build_ty(AbelianGroup({2}), cyclic_chi(2, Phase(1, 2)), -1);
    auto g = TY2m.f_symbol(2, 2, 2, 2, 0, 0);
    CHECK(*g == FValue(Phase(1, 2), Rational(1, 2)));

    // degenerate or asymmetric bicharacters are rejected
    CHECK_THROWS_AS(build_ty(AbelianGroup({4}), cyclic_chi(4, Phase(1, 2)), 1),
                    DomainError);
    Bicharacter asym = cyclic_chi(3, Phase(1, 3));
    asym.b[1 * 3 + 2] = Phase(1, 3); // breaks b(1,2) = b(2,1)
    CHECK_THROWS_AS(build_ty(AbelianGroup({3}), asym, 1), DomainError);
}

TEST_CASE("TY restricted to the invertible part is pointed with trivial cocycle") {
    auto TY = build_ty(AbelianGroup({3}), cyclic_chi(3, Phase(1, 3)), 1);
    auto P = vec_g(cyclic(3));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                int ab = (a + b) % 3, bc = (b + c) % 3, abc = (a + b + c) % 3;
                auto v = TY.f_symbol(a, b, c, abc, ab, bc);
                auto w = P.f_symbol(a, b, c, abc, ab, bc);
                REQUIRE(v.has_value());
                REQUIRE(w.has_value());
                CHECK(*v == *w);
                CHECK(*v == FValue::one());
            }
}

TEST_CASE("TY pentagon holds") {
    auto TY2 = build_ty(AbelianGroup({2}), cyclic_chi(2, Phase(1, 2)), 1);
    auto rep2 = pentagon_check(TY2);
    CHECK(rep2.ok());
    CHECK(rep2.instances > 0);

    auto TY3p = build_ty(AbelianGroup({3}), cyclic_chi(3, Phase(1, 3)), 1);
    CHECK(pentagon_check(TY3p).ok());
    auto TY3m = build_ty(AbelianGroup({3}), cyclic_chi(3, Phase(2, 3)), -1);
    CHECK(pentagon_check(TY3m).ok());

    // breaking one F-symbol produces violations
    auto broken = TY2;
    broken.F[{0, 2, 0, 2, 2, 2}] = FValue(Phase(1, 3), Rational(1, 1));
    CHECK(!pentagon_check(broken).ok());
}

TEST_CASE("parallel pentagon agrees with the serial reference") {
    auto TY5 = build_ty(AbelianGroup({5}), cyclic_chi(5, Phase(1, 5)), 1);
    auto a = pentagon_check(TY5);
    auto b = pentagon_check_serial(TY5);
    CHECK(a.instances == b.instances);
    CHECK(a.violations.size() == b.violations.size());
    CHECK(a.ok());

    FiniteGroup iv = klein_four();
    auto H = cohomology_group(iv, 3);
    auto C = build_pointed(iv, H.generators[0]);
    auto pa = pentagon_check(C);
    auto pb = pentagon_check_serial(C);
    CHECK(pa.instances == pb.instances);
    CHECK(pa.ok());
    CHECK(pb.ok());
}

TEST_CASE("su2 Verlinde ring") {
    for (int k = 0; k <= 6; ++k) {
        FusionRing R = verlinde_su2_ring(k);
        CHECK(R.rank == k + 1);
        CHECK(ring_verify(R).ok());
        CHECK(rigidity_check(R).ok());
        CHECK(R.multiplicity_free());
    }
    // [1] x [1] = [0] + [2] at k >= 2
    FusionRing R = verlinde_su2_ring(4);
    CHECK(R.n(1, 1, 0) == 1);
    CHECK(R.n(1, 1, 2) == 1);
    CHECK(R.n(1, 1, 4) == 0);
    // truncation at the level: [4] x [4] = [0] only
    CHECK(R.n(4, 4, 0) == 1);
    CHECK(R.n(4, 4, 2) == 0);
}
