#include "latkit/congruence.hpp"

#include <random>
#include <unordered_map>

namespace latkit {

namespace {

constexpr int N = 10;

struct MatKeyHash {
    size_t operator()(const std::vector<Int>& v) const {
        size_t h = 1469598103934665603ull;
        for (Int x : v) {
            h ^= static_cast<size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// exact keys: unordered_map compares the full entry sequence on collision
using SeenMap = std::unordered_map<std::vector<Int>, std::vector<int>, MatKeyHash>;

}  // namespace

GeneratorSet make_generator_set(const E10Lattice& e, int n, Int bound) {
    if (n < 1) throw std::invalid_argument("generator count must be at least 1");
    GeneratorSet gens;
    gens.bound = bound;
    gens.planes = find_hyperbolic_planes(e, bound, n);
    if (static_cast<int>(gens.planes.size()) < n)
        throw std::runtime_error("fewer hyperbolic planes than requested within bound");
    for (const HyperbolicPlane& u : gens.planes) {
        Isometry s = sigma_u(e, u);
        if (!is_in_g0(e, s)) throw std::runtime_error("sigma_u fell outside the congruence subgroup");
        for (const Isometry& prev : gens.involutions)
            if (prev == s) throw std::runtime_error("duplicate involution in generator set");
        gens.involutions.push_back(s);
    }
    return gens;
}

Isometry sample_reflection_pair(const E10Lattice& e, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // A root orthogonal to the cusp vector delta (the first frame column):
    // walk with the reflections of the affine subdiagram, which all fix the
    // pairing with delta.
    static const int affine_nodes[9] = {0, 1, 2, 3, 4, 5, 6, 7, 9};
    Vec root(N, 0);
    root[affine_nodes[rng() % 9]] = 1;
    int steps = static_cast<int>(rng() % 24);
    for (int s = 0; s < steps; ++s) {
        int i = affine_nodes[rng() % 9];
        IntVec pair = e.lattice.gram.apply(root);
        root[i] = checked_add(root[i], pair[i]);
    }
    Vec delta = e.search_basis.column(0);
    // f = root + 2k delta has square -2 again and is congruent to root mod 2
    Int k = 1 + static_cast<Int>(rng() % 3);
    Vec f = add_vec(root, scale_vec(2 * k, delta));
    if (inner(e.lattice, f, f) != -2 || f == root)
        throw std::runtime_error("congruent root construction failed");
    Isometry g = reflection_in_root(e.lattice, root) * reflection_in_root(e.lattice, f);
    if (!is_in_g0(e, g))
        throw std::runtime_error("reflection pair fell outside the congruence subgroup");
    return g;
}

Isometry sample_sigma_word(const E10Lattice& e, const GeneratorSet& gens, std::uint64_t seed,
                           int max_length) {
    if (gens.involutions.empty()) throw std::invalid_argument("empty generator set");
    std::mt19937_64 rng(seed);
    int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_length + 1));
    IntMat m = IntMat::identity(N);
    for (int t = 0; t < len; ++t) m = m * gens.involutions[rng() % gens.involutions.size()].m;
    Isometry g(m);
    if (!is_in_g0(e, g)) throw std::runtime_error("sigma word fell outside the congruence subgroup");
    return g;
}

Isometry sample_g0_element(const E10Lattice& e, SampleKind kind, std::uint64_t seed,
                           const GeneratorSet& gens) {
    if (kind == SampleKind::ReflectionPair) return sample_reflection_pair(e, seed);
    return sample_sigma_word(e, gens, seed);
}

Isometry replay_generator_word(const GeneratorSet& gens, const std::vector<int>& word) {
    IntMat m = IntMat::identity(N);
    for (int i : word) m = m * gens.involutions.at(i).m;
    return Isometry(m);
}

WordSearchResult bounded_word_search(const E10Lattice& e, const Isometry& target,
                                     const GeneratorSet& gens, int max_depth,
                                     std::uint64_t max_nodes) {
    if (!is_in_g0(e, target))
        throw std::invalid_argument("target is not in the 2-congruence subgroup");
    if (gens.involutions.empty()) throw std::invalid_argument("empty generator set");

    WordSearchResult res;
    IntMat id = IntMat::identity(N);
    if (target.m == id) {
        res.status = SearchStatus::Found;
        return res;
    }

    // forward states are products of generators read left to right; backward
    // states multiply the target on the right, so a meeting point
    // m = target * g_{w_1} ... g_{w_b} gives target = m * g_{w_b} ... g_{w_1}
    SeenMap fwd, bwd;
    std::vector<std::vector<Int>> fwd_frontier, bwd_frontier;
    fwd[id.flat()] = {};
    bwd[target.m.flat()] = {};
    fwd_frontier.push_back(id.flat());
    bwd_frontier.push_back(target.m.flat());
    res.visited = 2;

    int fwd_depth = 0, bwd_depth = 0;
    const int ngens = static_cast<int>(gens.involutions.size());

    auto matrix_of = [&](const std::vector<Int>& flat) {
        IntMat m(N, N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) m(i, j) = flat[static_cast<size_t>(i) * N + j];
        return m;
    };
    auto finish = [&](const std::vector<int>& fw, const std::vector<int>& bw) {
        res.status = SearchStatus::Found;
        res.word = fw;
        for (auto it = bw.rbegin(); it != bw.rend(); ++it) res.word.push_back(*it);
    };

    while (fwd_depth + bwd_depth < max_depth && res.visited < max_nodes) {
        bool expand_fwd = fwd_frontier.size() <= bwd_frontier.size();
        auto& frontier = expand_fwd ? fwd_frontier : bwd_frontier;
        auto& own = expand_fwd ? fwd : bwd;
        auto& other = expand_fwd ? bwd : fwd;
        if (frontier.empty()) break;  // generated group exhausted below this depth

        std::vector<std::vector<Int>> next;
        for (const auto& flat : frontier) {
            IntMat m = matrix_of(flat);
            const std::vector<int> word = own.at(flat);  // copy: the map may rehash below
            for (int gi = 0; gi < ngens; ++gi) {
                IntMat prod = m * gens.involutions[gi].m;
                std::vector<Int> key = prod.flat();
                if (own.count(key)) continue;
                std::vector<int> w = word;
                w.push_back(gi);
                auto hit = other.find(key);
                if (hit != other.end()) {
                    if (expand_fwd)
                        finish(w, hit->second);
                    else
                        finish(hit->second, w);
                    return res;
                }
                own[key] = std::move(w);
                next.push_back(std::move(key));
                if (++res.visited >= max_nodes) break;
            }
            if (res.visited >= max_nodes) break;
        }
        frontier = std::move(next);
        if (expand_fwd)
            ++fwd_depth;
        else
            ++bwd_depth;
    }
    res.status = SearchStatus::NotFoundWithinDepth;
    return res;
}

}  // namespace latkit
