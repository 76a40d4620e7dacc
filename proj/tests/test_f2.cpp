#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latkit/congruence.hpp"
#include "latkit/e10.hpp"
#include "latkit/f2.hpp"

using namespace latkit;

namespace {

struct Fixture {
    E10Lattice e = build_e10();
    F2QuadSpace space{e.lattice};
};

std::vector<F2Isometry> reduced_fundamental_reflections(Fixture& fx) {
    std::vector<F2Isometry> gens;
    for (int i = 0; i < 10; ++i)
        gens.push_back(reduce_isometry(fx.space, fundamental_reflection(fx.e, i)));
    return gens;
}

}  // namespace

TEST_CASE("q is well defined on residue classes") {
    Fixture fx;
    std::mt19937_64 rng(9001);
    for (int k = 0; k < 500; ++k) {
        Vec x(10), w(10);
        for (int i = 0; i < 10; ++i) {
            x[i] = static_cast<Int>(rng() % 21) - 10;
            w[i] = static_cast<Int>(rng() % 21) - 10;
        }
        Vec shifted = add_vec(x, scale_vec(2, w));
        CHECK(reduce_vector(shifted) == reduce_vector(x));
        Int n = inner(fx.e.lattice, x, x);
        int q_direct = static_cast<int>(((n / 2) % 2 + 2) % 2);
        CHECK(fx.space.q(reduce_vector(x)) == q_direct);
    }
}

TEST_CASE("polar identity holds for every pair") {
    Fixture fx;
    for (int a = 0; a < F2_SIZE; ++a)
        for (int b = 0; b < F2_SIZE; ++b) {
            F2Vector x{static_cast<std::uint16_t>(a)}, y{static_cast<std::uint16_t>(b)};
            F2Vector sum{static_cast<std::uint16_t>(a ^ b)};
            int lhs = (fx.space.q(sum) + fx.space.q(x) + fx.space.q(y)) % 2;
            if (lhs != fx.space.b(x, y)) {
                REQUIRE(lhs == fx.space.b(x, y));  // fail loudly with the offending pair
            }
        }
    CHECK(true);
}

TEST_CASE("isotropic counts") {
    Fixture fx;
    IsotropicCounts c = count_isotropic(fx.space);
    CHECK(c.nonzero_isotropic == 527);
    CHECK(c.total_isotropic == 528);
    CHECK(c.total_isotropic == (1 << 9) + (1 << 4));  // plus-type count
    CHECK(c.total - c.total_isotropic == 496);
}

TEST_CASE("reductions of isometries") {
    Fixture fx;
    CHECK(reduce_isometry(fx.space, Isometry(IntMat::identity(10))).is_identity());

    auto planes = find_hyperbolic_planes(fx.e, 2, 3);
    REQUIRE(planes.size() >= 1);
    for (const HyperbolicPlane& u : planes)
        CHECK(reduce_isometry(fx.space, sigma_u(fx.e, u)).is_identity());

    CHECK(reduce_vector(scale_vec(2, Vec{1, 2, 3, 4, 5, 6, 7, 8, 9, 10})).bits == 0);

    for (const F2Isometry& g : reduced_fundamental_reflections(fx)) CHECK(preserves_q(fx.space, g));

    // swapping two nodes with different adjacency is not a q-isometry
    IntMat swap09 = IntMat(10, 10);
    for (int i = 1; i < 9; ++i) swap09(i, i) = 1;
    swap09(0, 9) = 1;
    swap09(9, 0) = 1;
    CHECK_THROWS_AS(reduce_isometry(fx.space, Isometry(swap09)), std::invalid_argument);
}

TEST_CASE("orbits") {
    Fixture fx;
    F2Vector f{0};
    // find a nonzero isotropic class
    for (int bits = 1; bits < F2_SIZE; ++bits)
        if (fx.space.q(F2Vector{static_cast<std::uint16_t>(bits)}) == 0) {
            f = F2Vector{static_cast<std::uint16_t>(bits)};
            break;
        }
    REQUIRE(f.bits != 0);

    CHECK(orbit(fx.space, f, {}) == std::vector<F2Vector>{f});

    std::vector<F2Isometry> sigma_gens;
    for (const Isometry& s : make_generator_set(fx.e, 3, 2).involutions)
        sigma_gens.push_back(reduce_isometry(fx.space, s));
    CHECK(orbit(fx.space, f, sigma_gens) == std::vector<F2Vector>{f});

    auto gens = reduced_fundamental_reflections(fx);
    std::vector<F2Vector> full = orbit(fx.space, f, gens);
    CHECK(full.size() == 527);
    // closure: every generator maps the orbit into itself
    for (const F2Isometry& g : gens)
        for (const F2Vector& x : full)
            CHECK(std::binary_search(full.begin(), full.end(), g.apply(x)));
}

TEST_CASE("ramification degrees") {
    Fixture fx;
    F2Vector f{0};
    for (int bits = 1; bits < F2_SIZE; ++bits)
        if (fx.space.q(F2Vector{static_cast<std::uint16_t>(bits)}) == 0) {
            f = F2Vector{static_cast<std::uint16_t>(bits)};
            break;
        }

    std::vector<F2Isometry> congruence_gens;
    for (const Isometry& s : make_generator_set(fx.e, 3, 2).involutions)
        congruence_gens.push_back(reduce_isometry(fx.space, s));
    CHECK(ramification_degree(fx.space, f, congruence_gens) == 1);

    auto gens = reduced_fundamental_reflections(fx);
    CHECK(ramification_degree(fx.space, f, gens) == 527);

    // one reflection moving f gives an orbit of size two
    bool found_moving = false;
    for (const F2Isometry& g : gens) {
        if (!(g.apply(f) == f)) {
            CHECK(ramification_degree(fx.space, f, {g}) == 2);
            found_moving = true;
            break;
        }
    }
    CHECK(found_moving);

    CHECK_THROWS_AS(ramification_degree(fx.space, F2Vector{0}, gens), std::invalid_argument);
    // a fundamental root class has q = 1 and is rejected
    F2Vector root_class{1};
    REQUIRE(fx.space.q(root_class) == 1);
    CHECK_THROWS_AS(ramification_degree(fx.space, root_class, gens), std::invalid_argument);
}
