#pragma once

#include <cstdint>
#include <vector>

#include "latkit/e10.hpp"

namespace latkit {

// A finite, reproducible set of sigma_u involutions used to probe words in
// the 2-congruence subgroup.
struct GeneratorSet {
    std::vector<HyperbolicPlane> planes;
    std::vector<Isometry> involutions;
    Int bound = 0;
    std::uint64_t seed = 0;
};

// sigma_u for the first n planes found within the coordinate bound; throws
// if fewer than n planes exist there.
GeneratorSet make_generator_set(const E10Lattice& e, int n, Int bound);

enum class SampleKind { ReflectionPair, SigmaWord };

// s_e * s_f for roots e = f mod 2: congruent to the identity mod 2.
Isometry sample_reflection_pair(const E10Lattice& e, std::uint64_t seed);

// A random product of generator involutions.
Isometry sample_sigma_word(const E10Lattice& e, const GeneratorSet& gens, std::uint64_t seed,
                           int max_length = 6);

Isometry sample_g0_element(const E10Lattice& e, SampleKind kind, std::uint64_t seed,
                           const GeneratorSet& gens);

enum class SearchStatus { Found, NotFoundWithinDepth };

struct WordSearchResult {
    SearchStatus status = SearchStatus::NotFoundWithinDepth;
    std::vector<int> word;       // generator indices; product reproduces the target
    std::uint64_t visited = 0;   // distinct group elements explored
};

// Bidirectional breadth-first search for the target as a word in the
// generators. All generators are involutions, so no inverses are tracked.
// Deterministic for fixed inputs; resource caps make the search bounded.
WordSearchResult bounded_word_search(const E10Lattice& e, const Isometry& target,
                                     const GeneratorSet& gens, int max_depth,
                                     std::uint64_t max_nodes);

Isometry replay_generator_word(const GeneratorSet& gens, const std::vector<int>& word);

}  // namespace latkit
