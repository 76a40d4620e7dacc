#include "latkit/class_groups.hpp"

namespace latkit {

namespace {

bool is_prime(Int p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

LocalClassGroup local_class_group(const ADEType& t) {
    RootDatum rd = build_root_datum(t);
    return {t, discriminant_group(rd.lattice)};
}

bool is_p_torsion(const ADEType& t, Int p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    LocalClassGroup cg = local_class_group(t);
    for (Int d : cg.group.invariant_factors)
        if (p % d != 0) return false;
    return true;
}

DeckActionReport deck_action_report(const ADEType& t) {
    RootDatum rd = build_root_datum(t);
    DeckActionReport rep;
    rep.diagram_action = covering_involution_action(t);
    rep.acts_as_minus_one = is_minus_weyl(rd, permutation_isometry(rd.lattice, rep.diagram_action));
    rep.minus_id_in_weyl = is_minus_weyl(rd, Isometry(IntMat::identity(t.rank)));
    return rep;
}

}  // namespace latkit
