#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "latkit/discriminant.hpp"
#include "latkit/lattice.hpp"
#include "latkit/root_systems.hpp"
#include "latkit/smith.hpp"

using namespace latkit;

namespace {

Lattice hyperbolic_plane_lattice() {
    IntMat g(2, 2);
    g(0, 1) = 1;
    g(1, 0) = 1;
    return Lattice(g);
}

Lattice a1_lattice() {
    IntMat g(1, 1);
    g(0, 0) = -2;
    return Lattice(g);
}

bool is_unimodular(const IntMat& m) {
    Int d = det(m);
    return d == 1 || d == -1;
}

void check_smith(const IntMat& m) {
    SmithResult s = smith_normal_form(m);
    CHECK(s.p * m * s.q == s.d);
    CHECK(is_unimodular(s.p));
    CHECK(is_unimodular(s.q));
    int nmin = std::min(m.rows(), m.cols());
    for (int i = 0; i < nmin; ++i) {
        CHECK(s.d(i, i) >= 0);
        if (i + 1 < nmin && s.d(i, i) != 0) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
        if (s.d(i, i) == 0 && i + 1 < nmin) CHECK(s.d(i + 1, i + 1) == 0);
    }
    for (int i = 0; i < s.d.rows(); ++i)
        for (int j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d(i, j) == 0);
}

}  // namespace

TEST_CASE("inner products") {
    Lattice u = hyperbolic_plane_lattice();
    CHECK(inner(u, {1, 0}, {0, 1}) == 1);
    CHECK(inner(u, {1, 0}, {0, 0}) == 0);
    CHECK(inner(u, {3, -2}, {1, 5}) == 3 * 5 + (-2) * 1);

    Lattice a1 = a1_lattice();
    CHECK(inner(a1, {1}, {1}) == -2);

    CHECK_THROWS_AS(inner(u, {1}, {0, 1}), std::invalid_argument);
}

TEST_CASE("lattice invariants") {
    Lattice u = hyperbolic_plane_lattice();
    LatticeInvariants ui = lattice_invariants(u);
    CHECK(ui.determinant == -1);
    CHECK(ui.is_even);
    CHECK(ui.positive == 1);
    CHECK(ui.negative == 1);

    RootDatum e8 = build_root_datum(ADEType(ADEFamily::E, 8));
    LatticeInvariants ei = lattice_invariants(e8.lattice);
    CHECK(ei.determinant == 1);
    CHECK(ei.is_even);
    CHECK(ei.positive == 0);
    CHECK(ei.negative == 8);

    RootDatum a3 = build_root_datum(ADEType(ADEFamily::A, 3));
    CHECK(lattice_invariants(a3.lattice).determinant == -4);

    IntMat odd(1, 1);
    odd(0, 0) = 3;
    CHECK_FALSE(lattice_invariants(Lattice(odd)).is_even);

    IntMat zero(2, 2);
    CHECK_THROWS_AS(Lattice{zero}, std::invalid_argument);
}

TEST_CASE("direct sums multiply determinants and add signatures") {
    std::vector<Lattice> pool = {hyperbolic_plane_lattice(), a1_lattice(),
                                 build_root_datum(ADEType(ADEFamily::A, 2)).lattice,
                                 build_root_datum(ADEType(ADEFamily::D, 4)).lattice};
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        const Lattice& a = pool[rng() % pool.size()];
        const Lattice& b = pool[rng() % pool.size()];
        Lattice s = direct_sum(a, b);
        LatticeInvariants ia = lattice_invariants(a), ib = lattice_invariants(b),
                          is = lattice_invariants(s);
        CHECK(is.determinant == ia.determinant * ib.determinant);
        CHECK(is.is_even == (ia.is_even && ib.is_even));
        CHECK(is.positive == ia.positive + ib.positive);
        CHECK(is.negative == ia.negative + ib.negative);
    }
}

TEST_CASE("smith normal form on pinned examples") {
    check_smith(IntMat::identity(3));
    SmithResult id3 = smith_normal_form(IntMat::identity(3));
    CHECK(id3.d == IntMat::identity(3));

    IntMat neg2(1, 1);
    neg2(0, 0) = -2;
    SmithResult s1 = smith_normal_form(neg2);
    CHECK(s1.d(0, 0) == 2);
    check_smith(neg2);

    // minus the A2 Cartan matrix reduces to diag(1, 3)
    IntMat a2(2, 2);
    a2(0, 0) = -2;
    a2(0, 1) = 1;
    a2(1, 0) = 1;
    a2(1, 1) = -2;
    SmithResult s2 = smith_normal_form(a2);
    CHECK(s2.d(0, 0) == 1);
    CHECK(s2.d(1, 1) == 3);
    check_smith(a2);
}

TEST_CASE("smith normal form on random matrices") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        int r = 1 + static_cast<int>(rng() % 5);
        int c = 1 + static_cast<int>(rng() % 5);
        IntMat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m(i, j) = static_cast<Int>(rng() % 11) - 5;
        check_smith(m);
    }
}

TEST_CASE("discriminant groups of the classical series") {
    for (int n = 1; n <= 8; ++n) {
        RootDatum rd = build_root_datum(ADEType(ADEFamily::A, n));
        DiscriminantGroup dg = discriminant_group(rd.lattice);
        REQUIRE(dg.invariant_factors.size() == 1);
        CHECK(dg.invariant_factors[0] == n + 1);
        CHECK(dg.order == n + 1);
    }

    DiscriminantGroup e8 = discriminant_group(build_root_datum(ADEType(ADEFamily::E, 8)).lattice);
    CHECK(e8.is_trivial());
    CHECK(e8.order == 1);

    DiscriminantGroup d4 = discriminant_group(build_root_datum(ADEType(ADEFamily::D, 4)).lattice);
    REQUIRE(d4.invariant_factors.size() == 2);
    CHECK(d4.invariant_factors[0] == 2);
    CHECK(d4.invariant_factors[1] == 2);
}

TEST_CASE("discriminant order equals the determinant, lifts are normalized") {
    std::vector<ADEType> types = {
        {ADEFamily::A, 1}, {ADEFamily::A, 4}, {ADEFamily::A, 7}, {ADEFamily::D, 4},
        {ADEFamily::D, 7}, {ADEFamily::E, 6}, {ADEFamily::E, 7}, {ADEFamily::E, 8}};
    for (const ADEType& t : types) {
        RootDatum rd = build_root_datum(t);
        DiscriminantGroup dg = discriminant_group(rd.lattice);
        Int d = det(rd.lattice.gram);
        CHECK(dg.order == (d < 0 ? -d : d));
        for (size_t k = 0; k < dg.generator_count(); ++k) {
            Int dk = dg.invariant_factors[k];
            for (const Rat& c : dg.generator_lifts[k]) {
                CHECK((Rat(dk) * c).is_integer());  // denominators divide the factor
                CHECK(c.floor() == 0);              // reduced into [0,1)
            }
            // a generator is not the zero class
            std::vector<Int> coords = dg.class_coordinates(rd.lattice, dg.generator_lifts[k]);
            bool nonzero = false;
            for (Int x : coords) nonzero = nonzero || x != 0;
            CHECK(nonzero);
        }
    }
}

TEST_CASE("discriminant groups of random lattices") {
    std::mt19937_64 rng(2718);
    int built = 0;
    while (built < 60) {
        int n = 1 + static_cast<int>(rng() % 5);
        IntMat g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                g(i, j) = static_cast<Int>(rng() % 9) - 4;
                g(j, i) = g(i, j);
            }
        if (det(g) == 0) continue;
        ++built;
        Lattice l(g);
        DiscriminantGroup dg = discriminant_group(l);
        Int d = det(g);
        CHECK(dg.order == (d < 0 ? -d : d));
        for (size_t k = 0; k < dg.generator_count(); ++k) {
            // the k-th lift represents exactly the k-th generator
            std::vector<Int> coords = dg.class_coordinates(l, dg.generator_lifts[k]);
            for (size_t t = 0; t < coords.size(); ++t) CHECK(coords[t] == (t == k ? 1 : 0));
        }
        // negation always induces the negation automorphism
        IntMat minus(n, n);
        for (int i = 0; i < n; ++i) minus(i, i) = -1;
        CHECK(discriminant_action(l, dg, Isometry(minus)) == negation_disc_action(dg));
    }
}

TEST_CASE("orthogonal complements") {
    SUBCASE("block sum splits off") {
        Lattice l = direct_sum(hyperbolic_plane_lattice(), a1_lattice());
        std::vector<Vec> s = {{1, 0, 0}, {0, 1, 0}};
        auto basis = orthogonal_complement(l, s);
        REQUIRE(basis.size() == 1);
        CHECK((basis[0] == Vec{0, 0, 1} || basis[0] == Vec{0, 0, -1}));
    }

    SUBCASE("empty set gives the identity basis") {
        Lattice l = hyperbolic_plane_lattice();
        auto basis = orthogonal_complement(l, {});
        REQUIRE(basis.size() == 2);
        CHECK(basis[0] == Vec{1, 0});
        CHECK(basis[1] == Vec{0, 1});
    }

    SUBCASE("complement vectors pair to zero and span primitively") {
        RootDatum d5 = build_root_datum(ADEType(ADEFamily::D, 5));
        std::vector<Vec> s = {{1, 0, 0, 0, 0}, {0, 1, 1, 0, 0}};
        auto basis = orthogonal_complement(d5.lattice, s);
        REQUIRE(basis.size() == 3);
        for (const Vec& b : basis)
            for (const Vec& v : s) CHECK(inner(d5.lattice, b, v) == 0);
        IntMat bm(5, 3);
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 5; ++i) bm(i, j) = basis[j][i];
        SmithResult snf = smith_normal_form(bm);
        for (int i = 0; i < 3; ++i) CHECK(snf.d(i, i) == 1);
    }

    SUBCASE("dependent spanning vectors are rejected") {
        Lattice l = hyperbolic_plane_lattice();
        CHECK_THROWS_AS(orthogonal_complement(l, {{1, 0}, {2, 0}}), std::invalid_argument);
    }
}

TEST_CASE("discriminant action on pinned examples") {
    RootDatum a2 = build_root_datum(ADEType(ADEFamily::A, 2));
    DiscriminantGroup dg = discriminant_group(a2.lattice);

    Isometry id(IntMat::identity(2));
    CHECK(discriminant_action(a2.lattice, dg, id) == identity_disc_action(dg));

    IntMat minus = IntMat::identity(2);
    minus(0, 0) = -1;
    minus(1, 1) = -1;
    DiscAction neg = discriminant_action(a2.lattice, dg, Isometry(minus));
    CHECK(neg == negation_disc_action(dg));
    CHECK(neg != identity_disc_action(dg));

    // reflections act trivially on the discriminant group
    DiscAction refl = discriminant_action(a2.lattice, dg, fundamental_reflection(a2, 0));
    CHECK(refl == identity_disc_action(dg));

    IntMat shear = IntMat::identity(2);
    shear(0, 1) = 1;
    CHECK_THROWS_AS(discriminant_action(a2.lattice, dg, Isometry(shear)), std::invalid_argument);
}

TEST_CASE("discriminant action is functorial") {
    std::vector<ADEType> types = {{ADEFamily::A, 2}, {ADEFamily::A, 3}, {ADEFamily::D, 4},
                                  {ADEFamily::D, 5}, {ADEFamily::E, 6}, {ADEFamily::E, 7}};
    for (const ADEType& t : types) {
        RootDatum rd = build_root_datum(t);
        DiscriminantGroup dg = discriminant_group(rd.lattice);
        std::mt19937_64 rng(1234 + t.rank + 100 * static_cast<int>(t.family));
        for (int k = 0; k < 100; ++k) {
            Isometry g = latkit::testing::random_full_isometry(rd, rng, 8);
            Isometry h = latkit::testing::random_full_isometry(rd, rng, 8);
            DiscAction dgh = discriminant_action(rd.lattice, dg, g * h);
            DiscAction composed = compose(dg, discriminant_action(rd.lattice, dg, g),
                                          discriminant_action(rd.lattice, dg, h));
            CHECK(dgh == composed);
        }
    }
}
