#pragma once

#include <random>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

// The even unimodular hyperbolic lattice of rank 10, in the basis of its
// fundamental roots e_1 ... e_10: Gram has -2 on the diagonal and 1 on the
// edges of the tree with chain e_1 - ... - e_9 and branch e_10 attached to
// e_3. h is the integral interior point of the chamber with <h, e_i> = 1.
//
// search_basis is a unimodular frame (two isotropic vectors pairing to 1,
// then a basis of their complement) used by the plane search. In the root
// basis itself the shortest isotropic vector already has a coordinate of 6,
// so small search boxes would be empty there.
struct E10Lattice {
    Lattice lattice;
    Vec h;
    IntMat search_basis;
};

E10Lattice build_e10();

// f1, f2 primitive isotropic with <f1,f2> = 1, both on the positive side of
// the cone selected by h.
struct HyperbolicPlane {
    Vec f1;
    Vec f2;
};

bool is_hyperbolic_plane(const E10Lattice& e, const HyperbolicPlane& u);

// Deterministic search: primitive isotropic vectors with search-frame
// coordinates in [-bound, bound] and positive pairing with h, paired in
// enumeration order; each pair is normalized so f1 <= f2 lexicographically
// in root-basis coordinates. May return fewer than count pairs.
std::vector<HyperbolicPlane> find_hyperbolic_planes(const E10Lattice& e, Int bound, int count);

// id on U, -id on the orthogonal complement of U:
// x -> 2(<x,f2> f1 + <x,f1> f2) - x. Congruent to the identity mod 2.
Isometry sigma_u(const E10Lattice& e, const HyperbolicPlane& u);

// g preserves the component of the positive cone containing h.
bool is_in_o_plus(const E10Lattice& e, const Isometry& g);

// g is in o_plus and congruent to the identity mod 2.
bool is_in_g0(const E10Lattice& e, const Isometry& g);

// Random integral point of the closed positive cone, rejection-sampled from
// a coordinate box in the search frame (boxes in the root basis barely meet
// the cone).
Vec sample_positive_cone_point(const E10Lattice& e, std::mt19937_64& rng, Int box);

struct ReductionResult {
    std::vector<int> word;  // fundamental reflections applied, in order
    Vec reduced;
    long long steps = 0;
};

// Moves x into the chamber {y : <y, e_i> >= 0} by fundamental reflections,
// always reflecting at the smallest index with negative pairing. Requires
// <x,x> >= 0 and <x,h> >= 0.
ReductionResult chamber_reduce(const E10Lattice& e, const Vec& x);

Isometry fundamental_reflection(const E10Lattice& e, int i);

// Product s_{w_0} * s_{w_1} * ... * s_{w_k-1} as a matrix.
Isometry replay_word(const E10Lattice& e, const std::vector<int>& word);

// A word w with g = s_{w_0} * ... * s_{w_k-1}; exists for every g in o_plus.
std::vector<int> express_in_fundamental_reflections(const E10Lattice& e, const Isometry& g);

}  // namespace latkit
