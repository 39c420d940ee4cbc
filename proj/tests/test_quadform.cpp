#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbi/error.hpp"
#include "orbi/quadform.hpp"

using namespace orbi;

namespace {

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

TEST_CASE("is_quadratic") {
    // q(k) = k^2/8 on Z/4
    AbelianGroup z4({4});
    std::vector<Phase> q(4);
    for (int k = 0; k < 4; ++k) q[k] = Phase(k * k, 8);
    CHECK(is_quadratic(z4, q).ok);

    // q(k) = t k^2 / 3 on Z/3 for every t
    AbelianGroup z3({3});
    for (int t = 0; t < 3; ++t) {
        std::vector<Phase> q3(3);
        for (int k = 0; k < 3; ++k) q3[k] = Phase(t * k * k, 3);
        CHECK(is_quadratic(z3, q3).ok);
    }

    // q(1) = 1/3 on Z/2 violates q(2x) = 4 q(x) = 0
    AbelianGroup z2({2});
    CHECK(!is_quadratic(z2, {Phase(), Phase(1, 3)}).ok);
}

TEST_CASE("polarization") {
    // semion: q(1) = 1/4, self-braiding sigma(1,1) = -2 q(1) = 1/2
    QuadraticForm semion = cyclic_form(2, Phase(1, 4));
    Bicharacter s = polarization(semion);
    CHECK(s.at(1, 1) == Phase(1, 2));
    CHECK(is_symmetric(s));
    CHECK(is_bilinear(s));

    QuadraticForm zero = cyclic_form(5, Phase());
    for (std::int64_t x = 0; x < 5; ++x)
        for (std::int64_t y = 0; y < 5; ++y)
            CHECK(polarization(zero).at(x, y).is_zero());

    // q(1) = 3/5 on Z/5: sigma(1,1) = q(2) - 2q(1) = 2/5 - 6/5 = 1/5
    QuadraticForm q5 = cyclic_form(5, Phase(3, 5));
    CHECK(polarization(q5).at(1, 1) == Phase(1, 5));
}

TEST_CASE("nondegeneracy") {
    CHECK(is_nondegenerate(cyclic_chi(2, Phase(1, 2))));
    CHECK(!is_nondegenerate(cyclic_chi(4, Phase(1, 2)))); // kernel contains 2
    CHECK(!is_nondegenerate(cyclic_chi(3, Phase())));
    CHECK(is_nondegenerate(cyclic_chi(5, Phase(1, 5))));
}

TEST_CASE("enumerating quadratic forms") {
    CHECK(enumerate_quadratic_forms(AbelianGroup({3})).size() == 3);
    CHECK(enumerate_quadratic_forms(AbelianGroup(std::vector<std::int64_t>{})).size() == 1);

    auto z2_forms = enumerate_quadratic_forms(AbelianGroup({2}));
    REQUIRE(z2_forms.size() == 4);
    std::vector<std::string> labels;
    for (const auto &f : z2_forms) labels.push_back(braiding_label(f));
    CHECK(labels == std::vector<std::string>{"Vec", "Semi", "sVec", "anti-Semi"});
    CHECK(z2_forms[0].q[1] == Phase());
    CHECK(z2_forms[1].q[1] == Phase(1, 4));
    CHECK(z2_forms[2].q[1] == Phase(1, 2));
    CHECK(z2_forms[3].q[1] == Phase(3, 4));

    // n odd -> n forms; n even -> 2n forms
    for (int n = 2; n <= 12; ++n) {
        auto forms = enumerate_quadratic_forms(AbelianGroup({n}));
        CHECK(std::int64_t(forms.size()) == (n % 2 ? n : 2 * n));
        // closure: each enumerated q really is quadratic with bilinear sigma
        for (const auto &f : forms) {
            CHECK(is_quadratic(f.group, f.q).ok);
            CHECK(is_bilinear(polarization(f)));
        }
    }

    // a non-cyclic case: 4 choices per generator and 2 for the cross term
    CHECK(enumerate_quadratic_forms(AbelianGroup({2, 2})).size() == 32);
}

TEST_CASE("parallel enumeration agrees with the serial reference") {
    for (auto factors : {std::vector<std::int64_t>{8}, {2, 4}, {3, 3}}) {
        AbelianGroup H(factors);
        auto a = enumerate_quadratic_forms_serial(H);
        auto b = enumerate_quadratic_forms(H);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    }
}

TEST_CASE("torsor orbits under bicharacter translation") {
    auto t3 = bichar_torsor_orbits(AbelianGroup({3}));
    CHECK(t3.orbits.size() == 1);
    CHECK(t3.orbits[0].size() == 3);

    auto t2 = bichar_torsor_orbits(AbelianGroup({2}));
    CHECK(t2.orbits.size() == 2);
    for (const auto &o : t2.orbits) CHECK(o.size() == 2);

    auto t4 = bichar_torsor_orbits(AbelianGroup({4}));
    CHECK(t4.orbits.size() == 2);
    for (const auto &o : t4.orbits) CHECK(o.size() == 4);
}

TEST_CASE("quadratic refinement") {
    // Z/5 with chi(1,1) = 1/5: eps(1) = 3/5 since 2*3 = 1 mod 5
    auto eps5 = quadratic_refinement(cyclic_chi(5, Phase(1, 5)));
    REQUIRE(eps5.has_value());
    CHECK(eps5->q[1] == Phase(3, 5));

    // Z/2 with chi(1,1) = 1/2: exactly two refinements, least is 1/4
    auto chi2 = cyclic_chi(2, Phase(1, 2));
    auto all2 = all_quadratic_refinements(chi2);
    REQUIRE(all2.size() == 2);
    CHECK(all2[0].q[1] == Phase(1, 4));
    CHECK(all2[1].q[1] == Phase(3, 4));
    CHECK(quadratic_refinement(chi2)->q[1] == Phase(1, 4));

    // refinements differ by a homomorphism into Z/2
    for (const auto &e : all2)
        for (std::int64_t a = 0; a < 2; ++a) {
            Phase diff = e.q[a] - all2[0].q[a];
            CHECK(diff.times(2).is_zero());
        }

    // trivial chi on Z/3: only the zero form
    auto eps0 = quadratic_refinement(cyclic_chi(3, Phase()));
    REQUIRE(eps0.has_value());
    for (const auto &v : eps0->q) CHECK(v.is_zero());
}

TEST_CASE("TY centre invertibles") {
    auto c2 = ty_centre_invertibles(AbelianGroup({2}), cyclic_chi(2, Phase(1, 2)), 1);
    CHECK(c2.data.q.q[1] == Phase(1, 2));
    CHECK(c2.data.label == "sVec");

    auto c5 = ty_centre_invertibles(AbelianGroup({5}), cyclic_chi(5, Phase(1, 5)), 1);
    CHECK(c5.data.q.q[1] == Phase(1, 5));

    auto c3 = ty_centre_invertibles(AbelianGroup({3}), cyclic_chi(3, Phase(2, 3)), 1);
    CHECK(c3.data.q.q[1] == Phase(2, 3));

    // the refinement squares to the induced form
    for (std::int64_t a = 0; a < 5; ++a)
        CHECK(c5.refinement.q[a].times(2) == c5.data.q.q[a]);

    // the tensor law closes on the section, exhaustively
    CHECK(c5.tensor_law.size() == 25);
    for (const auto &e : c5.tensor_law) {
        CHECK(e.sum == (e.a + e.b) % 5);
        CHECK(e.half_braiding == c5.refinement.q[e.sum]);
    }

    CHECK_THROWS_AS(
        ty_centre_invertibles(AbelianGroup({4}), cyclic_chi(4, Phase(1, 2)), 1),
        DomainError);
}

TEST_CASE("Lie centre forms") {
    // SU(2): the mod-4 cycle Vec, Semi, sVec, anti-Semi
    std::vector<std::string> cycle = {"Vec", "Semi", "sVec", "anti-Semi"};
    for (int k = 0; k <= 16; ++k) {
        auto b = lie_centre_quadform(CentreFamily::SUn, {.n = 2, .k = k});
        CHECK(b.q.q[1] == Phase(k, 4));
        CHECK(b.label == cycle[k % 4]);
    }
    // SU(2) level 5 is the semion
    CHECK(lie_centre_quadform(CentreFamily::SUn, {.n = 2, .k = 5}).label == "Semi");
    // SU(2) level 2 is sVec
    CHECK(lie_centre_quadform(CentreFamily::SUn, {.n = 2, .k = 2}).label == "sVec");

    // SU(3): q(1) = k/3
    auto su3 = lie_centre_quadform(CentreFamily::SUn, {.n = 3, .k = 2});
    CHECK(su3.group.factors == std::vector<std::int64_t>{3});
    CHECK(su3.q.q[1] == Phase(2, 3));

    // Spin(2n+1): alternation between Vec and sVec
    CHECK(lie_centre_quadform(CentreFamily::SpinOdd, {.k = 4}).label == "Vec");
    CHECK(lie_centre_quadform(CentreFamily::SpinOdd, {.k = 3}).label == "sVec");

    // Circle: Z/2k with q(1) = 1/4k
    for (int k = 1; k <= 8; ++k) {
        auto c = lie_centre_quadform(CentreFamily::Circle, {.k = k});
        CHECK(c.group.factors == std::vector<std::int64_t>{2 * k});
        CHECK(c.q.q[1] == Phase(1, 4 * k));
    }
    CHECK_THROWS_AS(lie_centre_quadform(CentreFamily::Circle, {.k = 0}), DomainError);

    // SO(4) at (a,b) = (1,0): q(1,0) = q(0,1) = 1/2, q(1,1) = 0
    auto so4 = lie_centre_quadform(CentreFamily::SO4, {.a = 1, .b = 0});
    AbelianGroup h22({2, 2});
    CHECK(so4.q.q[h22.index({1, 0})] == Phase(1, 2));
    CHECK(so4.q.q[h22.index({0, 1})] == Phase(1, 2));
    CHECK(so4.q.q[h22.index({1, 1})] == Phase());
}

TEST_CASE("isotropic quotient reproduces the SO(4) table") {
    AbelianGroup h22({2, 2});
    std::vector<std::int64_t> Z = {h22.index({1, 1})};
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            auto amb = lie_centre_quadform(CentreFamily::SO4, {.a = a, .b = b});
            auto quot = isotropic_quotient(amb, Z);
            int m4 = ((2 * a + b) % 4 + 4) % 4;
            if (b % 2 == 1) {
                CHECK(quot.data.group.order() == 1);
            } else if (m4 == 0) {
                CHECK(quot.data.label == "Vec");
                CHECK(quot.data.group.order() == 2);
            } else {
                CHECK(m4 == 2);
                CHECK(quot.data.label == "sVec");
            }
        }
}

TEST_CASE("isotropic quotient details") {
    // (a,b) = (1,0): Z' is everything, quotient Z/2 with q = 1/2
    AbelianGroup h22({2, 2});
    auto amb = lie_centre_quadform(CentreFamily::SO4, {.a = 1, .b = 0});
    auto q = isotropic_quotient(amb, {h22.index({1, 1})});
    CHECK(q.zprime.size() == 4);
    CHECK(q.data.group.factors == std::vector<std::int64_t>{2});
    CHECK(q.data.q.q[1] == Phase(1, 2));

    // (a,b) = (0,1): Z' = Z, trivial quotient
    auto amb2 = lie_centre_quadform(CentreFamily::SO4, {.a = 0, .b = 1});
    auto q2 = isotropic_quotient(amb2, {h22.index({1, 1})});
    CHECK(q2.zprime.size() == 2);
    CHECK(q2.data.group.order() == 1);

    // non-isotropic subgroups are rejected
    auto sVec = lie_centre_quadform(CentreFamily::SUn, {.n = 2, .k = 2});
    CHECK_THROWS_AS(isotropic_quotient(sVec, {1}), DomainError);

    // whenever sigma restricted to Z' has kernel exactly Z, the quotient
    // polarization is nondegenerate
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            auto B = lie_centre_quadform(CentreFamily::SO4, {.a = a, .b = b});
            auto qt = isotropic_quotient(B, {h22.index({1, 1})});
            Bicharacter sigma = polarization(B.q);
            std::vector<std::int64_t> kernel;
            for (auto x : qt.zprime) {
                bool in_ker = true;
                for (auto y : qt.zprime)
                    if (!sigma.at(x, y).is_zero()) { in_ker = false; break; }
                if (in_ker) kernel.push_back(x);
            }
            std::vector<std::int64_t> Zfull = {0, h22.index({1, 1})};
            if (kernel == Zfull)
                CHECK(is_nondegenerate(polarization(qt.data.q)));
        }
}

TEST_CASE("opposite forms") {
    QuadraticForm semion = cyclic_form(2, Phase(1, 4));
    QuadraticForm anti = cyclic_form(2, Phase(3, 4));
    CHECK(opposite_match(semion, anti));
    CHECK(!opposite_match(semion, semion));
    QuadraticForm z = cyclic_form(3, Phase());
    CHECK(opposite_match(z, z));
    CHECK_THROWS_AS(opposite_match(semion, z), DomainError);
}
