#include "latkit/verify.hpp"

#include <random>
#include <set>
#include <sstream>

#include "latkit/class_groups.hpp"
#include "latkit/congruence.hpp"
#include "latkit/e10.hpp"
#include "latkit/f2.hpp"
#include "latkit/root_systems.hpp"

namespace latkit {

namespace {

struct SuiteContext {
    std::uint64_t seed;
    E10Lattice e10;
    std::vector<HyperbolicPlane> planes;  // at least 50
    Int plane_bound = 0;
    GeneratorSet gens;  // 5 involutions
};

std::vector<ADEType> all_types_up_to_rank_10() {
    std::vector<ADEType> types;
    for (int n = 1; n <= 10; ++n) types.push_back(ADEType(ADEFamily::A, n));
    for (int n = 4; n <= 10; ++n) types.push_back(ADEType(ADEFamily::D, n));
    for (int n = 6; n <= 8; ++n) types.push_back(ADEType(ADEFamily::E, n));
    return types;
}

DiagramAutomorphism expected_involution(const ADEType& t) {
    int n = t.rank;
    DiagramAutomorphism s = identity_automorphism(n);
    switch (t.family) {
        case ADEFamily::A:
            for (int i = 0; i < n; ++i) s.perm[i] = n - 1 - i;
            break;
        case ADEFamily::D:
            if (n % 2 == 1) std::swap(s.perm[0], s.perm[1]);
            break;
        case ADEFamily::E:
            if (n == 6) s.perm = {0, 5, 4, 3, 2, 1};
            break;
    }
    return s;
}

bool expected_two_torsion(const ADEType& t) {
    switch (t.family) {
        case ADEFamily::A: return t.rank == 1;
        case ADEFamily::D: return t.rank % 2 == 0;
        case ADEFamily::E: return t.rank >= 7;
    }
    return false;
}

// Independent root enumeration: walk the whole coefficient box bounded by
// the highest root. Deliberately separate from the closure algorithm.
std::vector<Vec> positive_roots_box(const RootDatum& rd) {
    int n = rd.lattice.rank;
    std::vector<Vec> found;
    Vec cur(n, 0);
    for (;;) {
        if (!is_zero_vec(cur) && inner(rd.lattice, cur, cur) == -2) found.push_back(cur);
        int i = 0;
        while (i < n) {
            if (++cur[i] <= rd.highest_root[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    std::sort(found.begin(), found.end());
    return found;
}

bool congruent_to_identity_mod_2(const IntMat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if ((m(i, j) - (i == j ? 1 : 0)) % 2 != 0) return false;
    return true;
}

CheckResult check_f2_count(SuiteContext& ctx) {
    CheckResult r{"f2-isotropic-count",
                  "the rank-10 even hyperbolic lattice mod 2 has exactly 527 nonzero isotropic classes",
                  false,
                  ""};
    F2QuadSpace space(ctx.e10.lattice);
    IsotropicCounts c = count_isotropic(space);
    std::ostringstream d;
    d << "nonzero=" << c.nonzero_isotropic << " total=" << c.total_isotropic
      << " anisotropic=" << (c.total - c.total_isotropic);
    r.details = d.str();
    // 2^9 + 2^4 witnesses the plus type
    r.pass = c.nonzero_isotropic == 527 && c.total_isotropic == 528 &&
             c.total_isotropic == (1 << 9) + (1 << 4) && c.total - c.total_isotropic == 496;
    return r;
}

CheckResult check_involution_table(SuiteContext&) {
    CheckResult r{"covering-involution-table",
                  "deck actions on the diagrams: A-chain reversal, D parity swap, E6 flip, E7/E8 identity",
                  true,
                  ""};
    int checked = 0;
    for (const ADEType& t : all_types_up_to_rank_10()) {
        DiagramAutomorphism got = covering_involution_action(t);
        DiagramAutomorphism want = expected_involution(t);
        if (!(got == want) || !got.is_involution()) {
            r.pass = false;
            r.details = "mismatch at " + t.name();
            return r;
        }
        ++checked;
    }
    r.details = "matched for " + std::to_string(checked) + " types";
    return r;
}

CheckResult check_bijection(SuiteContext&) {
    CheckResult r{"simple-root-bijection",
                  "dual classes of the simple roots exhaust the nonzero discriminant classes",
                  true,
                  ""};
    for (const ADEType& t : all_types_up_to_rank_10()) {
        RootDatum rd = build_root_datum(t);
        DiscriminantGroup dg = discriminant_group(rd.lattice);
        auto bij = simple_root_discriminant_bijection(rd);
        if (static_cast<Int>(bij.size()) + 1 != dg.order) {
            r.pass = false;
            r.details = "count mismatch at " + t.name();
            return r;
        }
        std::set<std::vector<Int>> classes;
        for (const auto& [idx, coords] : bij) {
            if (is_zero_vec(coords)) {
                r.pass = false;
                r.details = "zero class hit at " + t.name();
                return r;
            }
            classes.insert(coords);
        }
        if (static_cast<Int>(classes.size()) + 1 != dg.order) {
            r.pass = false;
            r.details = "collision at " + t.name();
            return r;
        }
        auto all = dg.all_elements();
        for (const auto& el : all)
            if (!is_zero_vec(el) && !classes.count(el)) {
                r.pass = false;
                r.details = "missed class at " + t.name();
                return r;
            }
    }
    r.details = "bijection verified for all 20 types";
    return r;
}

CheckResult check_minus_weyl(SuiteContext&) {
    CheckResult r{"minus-identity-criterion",
                  "the identity acts as -1 on the discriminant group exactly for A1, even D, E7, E8",
                  true,
                  ""};
    for (const ADEType& t : all_types_up_to_rank_10()) {
        RootDatum rd = build_root_datum(t);
        Isometry id(IntMat::identity(t.rank));
        bool via_disc = is_minus_weyl(rd, id);

        IntMat minus = IntMat::identity(t.rank);
        for (int i = 0; i < t.rank; ++i) minus(i, i) = -1;
        bool via_graph = decompose_isometry(rd, Isometry(minus)).graph.is_identity();

        if (via_disc != expected_two_torsion(t) || via_graph != via_disc) {
            r.pass = false;
            r.details = "disagreement at " + t.name();
            return r;
        }
    }
    r.details = "truth table and decomposition oracle agree for all 20 types";
    return r;
}

CheckResult check_sigma_in_g0(SuiteContext& ctx) {
    CheckResult r{"sigma-involutions-in-g0",
                  "sigma_u is an involution fixing its plane, negating its complement, trivial mod 2",
                  true,
                  ""};
    const E10Lattice& e = ctx.e10;
    int n = 0;
    for (const HyperbolicPlane& u : ctx.planes) {
        Isometry s = sigma_u(e, u);
        bool ok = is_isometry(e.lattice, s) && (s.m * s.m).is_identity() &&
                  s.m.apply(u.f1) == u.f1 && s.m.apply(u.f2) == u.f2 &&
                  congruent_to_identity_mod_2(s.m) && is_in_o_plus(e, s) && is_in_g0(e, s);
        if (ok)
            for (const Vec& v : orthogonal_complement(e.lattice, {u.f1, u.f2}))
                ok = ok && s.m.apply(v) == scale_vec(-1, v);
        if (!ok) {
            r.pass = false;
            r.details = "failure at plane " + std::to_string(n);
            return r;
        }
        ++n;
    }
    std::ostringstream d;
    d << n << " planes within bound " << ctx.plane_bound;
    r.details = d.str();
    return r;
}

CheckResult check_chamber_machinery(SuiteContext& ctx) {
    CheckResult r{"chamber-reduction-machinery",
                  "reduction lands every positive-cone point in the chamber and expresses "
                  "cone-preserving isometries as reflection words",
                  true,
                  ""};
    const E10Lattice& e = ctx.e10;
    std::mt19937_64 rng(ctx.seed * 2 + 1);

    long long max_steps = 0;
    for (int reduced_count = 0; reduced_count < 1000; ++reduced_count) {
        Vec x = sample_positive_cone_point(e, rng, 10);
        ReductionResult red = chamber_reduce(e, x);
        Vec replay = x;
        for (int i : red.word) {
            Vec root(10, 0);
            root[i] = 1;
            Int c = inner(e.lattice, replay, root);
            replay = add_vec(replay, scale_vec(c, root));
        }
        bool in_chamber = true;
        IntVec pair = e.lattice.gram.apply(red.reduced);
        for (int i = 0; i < 10; ++i) in_chamber = in_chamber && pair[i] >= 0;
        bool idempotent = chamber_reduce(e, red.reduced).word.empty();
        if (replay != red.reduced || !in_chamber || !idempotent ||
            red.steps != static_cast<long long>(red.word.size())) {
            r.pass = false;
            r.details = "reduction failure on sample " + std::to_string(reduced_count);
            return r;
        }
        max_steps = std::max(max_steps, red.steps);
    }

    int round_trips = 0;
    for (int k = 0; k < 100; ++k) {
        Isometry g(IntMat::identity(10));
        if (k % 2 == 0) {
            std::vector<int> w;
            int len = static_cast<int>(rng() % 21);
            for (int t = 0; t < len; ++t) w.push_back(static_cast<int>(rng() % 10));
            g = replay_word(e, w);
        } else {
            g = ctx.gens.involutions[rng() % ctx.gens.involutions.size()];
            if (k % 4 == 3) g = g * ctx.gens.involutions[rng() % ctx.gens.involutions.size()];
        }
        if (!is_in_o_plus(e, g)) {
            r.pass = false;
            r.details = "sampled isometry escaped the positive cone";
            return r;
        }
        std::vector<int> word = express_in_fundamental_reflections(e, g);
        if (!(replay_word(e, word) == g)) {
            r.pass = false;
            r.details = "round trip failed on sample " + std::to_string(k);
            return r;
        }
        ++round_trips;
    }
    std::ostringstream d;
    d << "1000 reductions (max length " << max_steps << "), " << round_trips << " exact round trips";
    r.details = d.str();
    return r;
}

CheckResult check_complement_is_e8(SuiteContext& ctx) {
    CheckResult r{"complement-of-plane-is-e8",
                  "the orthogonal complement of every found hyperbolic plane is even unimodular "
                  "negative definite of rank 8",
                  true,
                  ""};
    int n = 0;
    for (const HyperbolicPlane& u : ctx.planes) {
        auto basis = orthogonal_complement(ctx.e10.lattice, {u.f1, u.f2});
        if (basis.size() != 8) {
            r.pass = false;
            r.details = "wrong complement rank at plane " + std::to_string(n);
            return r;
        }
        LatticeInvariants inv = lattice_invariants(sublattice(ctx.e10.lattice, basis));
        if (inv.determinant != 1 || !inv.is_even || inv.positive != 0 || inv.negative != 8) {
            r.pass = false;
            r.details = "complement is not an E8 form at plane " + std::to_string(n);
            return r;
        }
        ++n;
    }
    r.details = std::to_string(n) + " complements verified";
    return r;
}

CheckResult check_class_group_table(SuiteContext&) {
    CheckResult r{"class-group-table",
                  "class group orders: A_n gives n+1, D_n gives 4, E6/E7/E8 give 3/2/1; "
                  "2-torsion exactly for A1, even D, E7, E8",
                  true,
                  ""};
    for (const ADEType& t : all_types_up_to_rank_10()) {
        LocalClassGroup cg = local_class_group(t);
        Int want = 0;
        switch (t.family) {
            case ADEFamily::A: want = t.rank + 1; break;
            case ADEFamily::D: want = 4; break;
            case ADEFamily::E: want = t.rank == 6 ? 3 : (t.rank == 7 ? 2 : 1); break;
        }
        RootDatum rd = build_root_datum(t);
        bool order_ok = cg.group.order == want;
        bool torsion_ok = is_p_torsion(t, 2) == expected_two_torsion(t);
        bool cross_ok = static_cast<Int>(rd.simple_roots.size()) + 1 == cg.group.order;
        if (!order_ok || !torsion_ok || !cross_ok) {
            r.pass = false;
            r.details = "table mismatch at " + t.name();
            return r;
        }
    }
    r.details = "orders, torsion and simple-root cross-check agree for all 20 types";
    return r;
}

CheckResult check_generation_probes(SuiteContext& ctx) {
    CheckResult r{"generation-probes",
                  "sampled reflection pairs and sigma words stay in the congruence subgroup; "
                  "planted generator words are recovered",
                  true,
                  ""};
    const E10Lattice& e = ctx.e10;
    for (int k = 0; k < 1000; ++k) {
        std::uint64_t seed = ctx.seed * 1000003 + k;
        Isometry g = (k % 2 == 0) ? sample_reflection_pair(e, seed)
                                  : sample_sigma_word(e, ctx.gens, seed);
        if (!is_in_g0(e, g)) {
            r.pass = false;
            r.details = "sample " + std::to_string(k) + " left the congruence subgroup";
            return r;
        }
    }

    std::mt19937_64 rng(ctx.seed + 99);
    int searches = 0;
    for (int len = 0; len <= 6; ++len) {
        for (int rep = 0; rep < 4; ++rep) {
            std::vector<int> planted;
            for (int t = 0; t < len; ++t)
                planted.push_back(static_cast<int>(rng() % ctx.gens.involutions.size()));
            Isometry target = replay_generator_word(ctx.gens, planted);
            WordSearchResult res = bounded_word_search(e, target, ctx.gens, 8, 1000000);
            bool ok = res.status == SearchStatus::Found &&
                      static_cast<int>(res.word.size()) <= len &&
                      replay_generator_word(ctx.gens, res.word) == target;
            if (!ok) {
                r.pass = false;
                r.details = "planted word of length " + std::to_string(len) + " not recovered";
                return r;
            }
            ++searches;
        }
    }
    std::ostringstream d;
    d << "1000 samples in the subgroup, " << searches << " planted words recovered";
    r.details = d.str();
    return r;
}

CheckResult check_root_counts(SuiteContext&) {
    CheckResult r{"positive-root-counts",
                  "closure enumeration of the positive roots matches the bounded box walk",
                  true,
                  ""};
    struct Expected {
        ADEType t;
        size_t count;
    };
    std::vector<Expected> table = {
        {ADEType(ADEFamily::A, 1), 1},  {ADEType(ADEFamily::A, 2), 3},
        {ADEType(ADEFamily::A, 3), 6},  {ADEType(ADEFamily::A, 4), 10},
        {ADEType(ADEFamily::A, 5), 15}, {ADEType(ADEFamily::D, 4), 12},
        {ADEType(ADEFamily::D, 5), 20}, {ADEType(ADEFamily::E, 6), 36},
        {ADEType(ADEFamily::E, 7), 63}, {ADEType(ADEFamily::E, 8), 120}};
    for (const Expected& exp : table) {
        RootDatum rd = build_root_datum(exp.t);
        std::vector<Vec> closure = positive_roots(exp.t);
        std::vector<Vec> box = positive_roots_box(rd);
        if (closure.size() != exp.count || closure != box) {
            r.pass = false;
            r.details = "enumeration mismatch at " + exp.t.name();
            return r;
        }
    }
    r.details = "closure and box enumerations agree for 10 types (E8 has 120)";
    return r;
}

}  // namespace

std::vector<CheckResult> run_verification_suite(std::uint64_t seed) {
    SuiteContext ctx{seed, build_e10(), {}, 0, {}};
    ctx.plane_bound = 2;
    ctx.planes = find_hyperbolic_planes(ctx.e10, ctx.plane_bound, 50);
    if (ctx.planes.size() < 50) {
        ctx.plane_bound = 3;
        ctx.planes = find_hyperbolic_planes(ctx.e10, ctx.plane_bound, 50);
    }
    if (ctx.planes.size() < 50)
        throw std::runtime_error("could not collect 50 hyperbolic planes within bound 3");
    ctx.gens = make_generator_set(ctx.e10, 5, ctx.plane_bound);

    std::vector<CheckResult> report;
    report.push_back(check_f2_count(ctx));
    report.push_back(check_involution_table(ctx));
    report.push_back(check_bijection(ctx));
    report.push_back(check_minus_weyl(ctx));
    report.push_back(check_sigma_in_g0(ctx));
    report.push_back(check_chamber_machinery(ctx));
    report.push_back(check_complement_is_e8(ctx));
    report.push_back(check_class_group_table(ctx));
    report.push_back(check_generation_probes(ctx));
    report.push_back(check_root_counts(ctx));
    return report;
}

}  // namespace latkit
