#pragma once

#include <json.hpp>

#include "latkit/class_groups.hpp"
#include "latkit/congruence.hpp"
#include "latkit/discriminant.hpp"
#include "latkit/e10.hpp"
#include "latkit/f2.hpp"
#include "latkit/root_systems.hpp"

namespace latkit {

using nlohmann::json;

// Schemas shared by the CLI and file inputs:
//   lattice  {"rank": n, "gram": [[int, ...], ...]}
//   isometry {"matrix": [[int, ...], ...]}
//   vectors  [int, ...]
//   type     {"family": "A"|"D"|"E", "rank": n}

json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const json& j);

json isometry_to_json(const Isometry& g);
Isometry isometry_from_json(const json& j);

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);

json ade_type_to_json(const ADEType& t);
ADEType ade_type_from_json(const json& j);
ADEType ade_type_from_string(const std::string& s);  // e.g. "A4", "D10", "E8"

json automorphism_to_json(const DiagramAutomorphism& s);

json plane_to_json(const HyperbolicPlane& u);
HyperbolicPlane plane_from_json(const json& j);

json reduction_to_json(const ReductionResult& r);

json disc_group_to_json(const DiscriminantGroup& dg);

json f2_vector_to_json(const F2Vector& v);
F2Vector f2_vector_from_json(const json& j);

json counts_to_json(const IsotropicCounts& c);

json search_result_to_json(const WordSearchResult& r);

}  // namespace latkit
