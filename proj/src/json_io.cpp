#include "latkit/json_io.hpp"

namespace latkit {

namespace {

IntMat matrix_from_json(const json& rows) {
    if (!rows.is_array() || rows.empty()) throw std::invalid_argument("expected a matrix as an array of rows");
    int r = static_cast<int>(rows.size());
    int c = static_cast<int>(rows[0].size());
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j].get<Int>();
    }
    return m;
}

json matrix_to_json(const IntMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

json lattice_to_json(const Lattice& l) {
    return json{{"rank", l.rank}, {"gram", matrix_to_json(l.gram)}};
}

Lattice lattice_from_json(const json& j) {
    if (!j.contains("gram")) throw std::invalid_argument("lattice JSON must contain \"gram\"");
    IntMat g = matrix_from_json(j.at("gram"));
    if (j.contains("rank") && j.at("rank").get<int>() != g.rows())
        throw std::invalid_argument("declared rank does not match the Gram matrix");
    return Lattice(g);
}

json isometry_to_json(const Isometry& g) { return json{{"matrix", matrix_to_json(g.m)}}; }

Isometry isometry_from_json(const json& j) {
    if (!j.contains("matrix")) throw std::invalid_argument("isometry JSON must contain \"matrix\"");
    return Isometry(matrix_from_json(j.at("matrix")));
}

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (Int x : v) a.push_back(x);
    return a;
}

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a vector as an integer array");
    Vec v;
    for (const auto& x : j) v.push_back(x.get<Int>());
    return v;
}

json ade_type_to_json(const ADEType& t) {
    const char* fam = t.family == ADEFamily::A ? "A" : (t.family == ADEFamily::D ? "D" : "E");
    return json{{"family", fam}, {"rank", t.rank}};
}

ADEType ade_type_from_json(const json& j) {
    std::string fam = j.at("family").get<std::string>();
    int rank = j.at("rank").get<int>();
    if (fam == "A") return ADEType(ADEFamily::A, rank);
    if (fam == "D") return ADEType(ADEFamily::D, rank);
    if (fam == "E") return ADEType(ADEFamily::E, rank);
    throw std::invalid_argument("family must be one of A, D, E");
}

ADEType ade_type_from_string(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("type must look like A4, D5, E8");
    char f = s[0];
    int rank = std::stoi(s.substr(1));
    if (f == 'A' || f == 'a') return ADEType(ADEFamily::A, rank);
    if (f == 'D' || f == 'd') return ADEType(ADEFamily::D, rank);
    if (f == 'E' || f == 'e') return ADEType(ADEFamily::E, rank);
    throw std::invalid_argument("type must look like A4, D5, E8");
}

json automorphism_to_json(const DiagramAutomorphism& s) {
    json a = json::array();
    for (int p : s.perm) a.push_back(p);
    return a;
}

json plane_to_json(const HyperbolicPlane& u) {
    return json{{"f1", vec_to_json(u.f1)}, {"f2", vec_to_json(u.f2)}};
}

HyperbolicPlane plane_from_json(const json& j) {
    return HyperbolicPlane{vec_from_json(j.at("f1")), vec_from_json(j.at("f2"))};
}

json reduction_to_json(const ReductionResult& r) {
    json word = json::array();
    for (int i : r.word) word.push_back(i);
    return json{{"word", word}, {"reduced", vec_to_json(r.reduced)}, {"steps", r.steps}};
}

json disc_group_to_json(const DiscriminantGroup& dg) {
    json factors = json::array();
    for (Int d : dg.invariant_factors) factors.push_back(d);
    json lifts = json::array();
    for (const RatVec& lift : dg.generator_lifts) {
        json l = json::array();
        for (const Rat& c : lift) l.push_back(c.str());
        lifts.push_back(l);
    }
    return json{{"invariant_factors", factors}, {"order", dg.order}, {"generator_lifts", lifts}};
}

json f2_vector_to_json(const F2Vector& v) {
    json a = json::array();
    for (int i = 0; i < F2_DIM; ++i) a.push_back((v.bits >> i) & 1);
    return a;
}

F2Vector f2_vector_from_json(const json& j) {
    if (!j.is_array() || j.size() != F2_DIM)
        throw std::invalid_argument("expected a 0/1 array of length 10");
    std::uint16_t bits = 0;
    for (int i = 0; i < F2_DIM; ++i) {
        Int x = j[i].get<Int>();
        if (x != 0 && x != 1) throw std::invalid_argument("entries must be 0 or 1");
        if (x) bits |= static_cast<std::uint16_t>(1u << i);
    }
    return F2Vector{bits};
}

json counts_to_json(const IsotropicCounts& c) {
    return json{{"nonzero_isotropic", c.nonzero_isotropic},
                {"total_isotropic", c.total_isotropic},
                {"total", c.total}};
}

json search_result_to_json(const WordSearchResult& r) {
    json word = json::array();
    for (int i : r.word) word.push_back(i);
    return json{{"status", r.status == SearchStatus::Found ? "found" : "not_found_within_depth"},
                {"word", word},
                {"visited", r.visited}};
}

}  // namespace latkit
