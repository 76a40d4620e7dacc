#pragma once

#include "latkit/root_systems.hpp"

namespace latkit {

// The class group of a rational double point of the given resolution type,
// computed as the discriminant group of its root lattice.
struct LocalClassGroup {
    ADEType singularity;
    DiscriminantGroup group;
};

LocalClassGroup local_class_group(const ADEType& t);

// Every invariant factor divides p.
bool is_p_torsion(const ADEType& t, Int p);

struct DeckActionReport {
    DiagramAutomorphism diagram_action;
    bool acts_as_minus_one = false;  // the permutation isometry negates the class group mod Weyl
    bool minus_id_in_weyl = false;   // -id lies in the Weyl group itself
};

DeckActionReport deck_action_report(const ADEType& t);

}  // namespace latkit
