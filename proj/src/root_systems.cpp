#include "latkit/root_systems.hpp"

#include <algorithm>
#include <set>

namespace latkit {

ADEType::ADEType(ADEFamily f, int r) : family(f), rank(r) {
    bool ok = false;
    switch (f) {
        case ADEFamily::A: ok = r >= 1; break;
        case ADEFamily::D: ok = r >= 4; break;
        case ADEFamily::E: ok = r >= 6 && r <= 8; break;
    }
    if (!ok) throw std::invalid_argument("invalid rank for ADE family");
}

std::string ADEType::name() const {
    const char* fam = family == ADEFamily::A ? "A" : (family == ADEFamily::D ? "D" : "E");
    return fam + std::to_string(rank);
}

std::vector<std::pair<int, int>> diagram_edges(const ADEType& t) {
    std::vector<std::pair<int, int>> edges;
    switch (t.family) {
        case ADEFamily::A:
            for (int i = 0; i + 1 < t.rank; ++i) edges.push_back({i, i + 1});
            break;
        case ADEFamily::D:
            edges.push_back({0, 2});  // b_1 - b_3
            for (int i = 1; i + 1 < t.rank; ++i) edges.push_back({i, i + 1});
            break;
        case ADEFamily::E:
            edges.push_back({0, 3});  // c_1 - c_4
            for (int i = 1; i + 1 < t.rank; ++i) edges.push_back({i, i + 1});
            break;
    }
    return edges;
}

bool DiagramAutomorphism::is_identity() const {
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i)) return false;
    return true;
}

bool DiagramAutomorphism::is_involution() const {
    for (size_t i = 0; i < perm.size(); ++i) {
        int j = perm[i];
        if (j < 0 || j >= static_cast<int>(perm.size()) || perm[j] != static_cast<int>(i))
            return false;
    }
    return true;
}

DiagramAutomorphism identity_automorphism(int rank) {
    DiagramAutomorphism s;
    s.perm.resize(rank);
    for (int i = 0; i < rank; ++i) s.perm[i] = i;
    return s;
}

bool preserves_adjacency(const ADEType& t, const DiagramAutomorphism& s) {
    if (static_cast<int>(s.perm.size()) != t.rank) return false;
    std::set<std::pair<int, int>> edges;
    for (auto [u, v] : diagram_edges(t)) edges.insert({std::min(u, v), std::max(u, v)});
    for (auto [u, v] : diagram_edges(t)) {
        int pu = s.perm[u], pv = s.perm[v];
        if (!edges.count({std::min(pu, pv), std::max(pu, pv)})) return false;
    }
    return true;
}

Isometry permutation_isometry(const Lattice& l, const DiagramAutomorphism& s) {
    IntMat m(l.rank, l.rank);
    for (int j = 0; j < l.rank; ++j) m(s.perm[j], j) = 1;
    return Isometry(m);
}

namespace {

Lattice ade_lattice(const ADEType& t) {
    IntMat g(t.rank, t.rank);
    for (int i = 0; i < t.rank; ++i) g(i, i) = -2;
    for (auto [u, v] : diagram_edges(t)) {
        g(u, v) = 1;
        g(v, u) = 1;
    }
    return Lattice(g);
}

Vec highest_root_table(const ADEType& t) {
    Vec hr(t.rank, 0);
    switch (t.family) {
        case ADEFamily::A:
            for (int i = 0; i < t.rank; ++i) hr[i] = 1;
            break;
        case ADEFamily::D:
            hr[0] = 1;
            hr[1] = 1;
            for (int i = 2; i + 1 < t.rank; ++i) hr[i] = 2;
            hr[t.rank - 1] = 1;
            break;
        case ADEFamily::E:
            if (t.rank == 6) hr = {2, 1, 2, 3, 2, 1};
            if (t.rank == 7) hr = {2, 2, 3, 4, 3, 2, 1};
            if (t.rank == 8) hr = {3, 2, 4, 6, 5, 4, 3, 2};
            break;
    }
    return hr;
}

Int height(const Vec& v) {
    Int h = 0;
    for (Int c : v) h = checked_add(h, c);
    return h;
}

std::vector<Vec> positive_roots_of(const Lattice& l) {
    std::set<Vec> roots;
    std::vector<Vec> frontier;
    for (int i = 0; i < l.rank; ++i) {
        Vec e(l.rank, 0);
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    // every positive root of height h+1 is a height-h positive root plus a
    // fundamental root
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const Vec& r : frontier) {
            for (int i = 0; i < l.rank; ++i) {
                Vec s = r;
                s[i] += 1;
                if (roots.count(s)) continue;
                if (inner(l, s, s) == -2) {
                    roots.insert(s);
                    next.push_back(s);
                }
            }
        }
        frontier = std::move(next);
    }
    return std::vector<Vec>(roots.begin(), roots.end());
}

}  // namespace

RootDatum build_root_datum(const ADEType& t) {
    RootDatum rd{t, ade_lattice(t), highest_root_table(t), {}};
    for (int i = 0; i < t.rank; ++i)
        if (rd.highest_root[i] == 1) rd.simple_roots.push_back(i);

    // cross-check the table: the highest root is the unique positive root of
    // maximal height
    std::vector<Vec> pos = positive_roots_of(rd.lattice);
    const Vec* best = nullptr;
    int best_count = 0;
    Int best_h = -1;
    for (const Vec& r : pos) {
        Int h = height(r);
        if (h > best_h) {
            best_h = h;
            best = &r;
            best_count = 1;
        } else if (h == best_h) {
            ++best_count;
        }
    }
    if (best == nullptr || best_count != 1 || *best != rd.highest_root)
        throw std::runtime_error("highest-root table disagrees with root enumeration");
    return rd;
}

std::vector<Vec> positive_roots(const ADEType& t) {
    return positive_roots_of(ade_lattice(t));
}

Isometry reflection(const RootDatum& rd, const Vec& e) { return reflection_in_root(rd.lattice, e); }

Isometry fundamental_reflection(const RootDatum& rd, int i) {
    Vec e(rd.lattice.rank, 0);
    e.at(i) = 1;
    return reflection_in_root(rd.lattice, e);
}

Vec chamber_interior_point(const RootDatum& rd) {
    int n = rd.lattice.rank;
    Int order = det(rd.lattice.gram);
    if (order < 0) order = checked_neg(order);
    RatMat inv = rational_inverse(rd.lattice.gram);
    Vec rho(n);
    for (int i = 0; i < n; ++i) {
        Rat acc(0);
        for (int j = 0; j < n; ++j) acc += inv[i][j];
        acc *= Rat(order);
        if (!acc.is_integer())
            throw std::runtime_error("interior point failed to clear denominators");
        rho[i] = acc.num;
    }
    return rho;
}

std::vector<std::pair<int, std::vector<Int>>> simple_root_discriminant_bijection(const RootDatum& rd) {
    DiscriminantGroup dg = discriminant_group(rd.lattice);
    RatMat inv = rational_inverse(rd.lattice.gram);
    std::vector<std::pair<int, std::vector<Int>>> out;
    for (int i : rd.simple_roots) {
        RatVec dual(rd.lattice.rank);
        for (int r = 0; r < rd.lattice.rank; ++r) dual[r] = inv[r][i];
        out.push_back({i, dg.class_coordinates(rd.lattice, dual)});
    }
    return out;
}

IsometryDecomposition decompose_isometry(const RootDatum& rd, const Isometry& g) {
    require_isometry(rd.lattice, g);
    const Lattice& l = rd.lattice;
    int n = l.rank;
    Vec rho = chamber_interior_point(rd);
    Vec y = g.m.apply(rho);
    IntMat acc = g.m;  // accumulates s_{w_k} ... s_{w_1} * g

    IsometryDecomposition dec;
    const long cap = 1000000;
    long steps = 0;
    for (;;) {
        if (++steps > cap) throw std::runtime_error("chamber reduction exceeded iteration cap");
        IntVec pair = l.gram.apply(y);
        int i = -1;
        for (int k = 0; k < n; ++k)
            if (pair[k] < 0) {
                i = k;
                break;
            }
        if (i < 0) break;
        y[i] = checked_add(y[i], pair[i]);  // s_i(y) = y + <y, e_i> e_i
        Isometry s = fundamental_reflection(rd, i);
        acc = s.m * acc;
        dec.weyl_word.push_back(i);
    }
    if (y != rho)
        throw std::runtime_error("chamber reduction did not return the interior point");

    // what is left must be a diagram automorphism
    dec.graph.perm.assign(n, -1);
    for (int j = 0; j < n; ++j) {
        int one_row = -1;
        for (int i = 0; i < n; ++i) {
            if (acc(i, j) == 0) continue;
            if (acc(i, j) != 1 || one_row >= 0) {
                one_row = -2;
                break;
            }
            one_row = i;
        }
        if (one_row < 0)
            throw std::runtime_error("residual matrix is not a node permutation");
        dec.graph.perm[j] = one_row;
    }
    if (!preserves_adjacency(rd.type, dec.graph))
        throw std::runtime_error("residual permutation does not preserve the diagram");
    return dec;
}

Isometry recompose(const RootDatum& rd, const IsometryDecomposition& dec) {
    IntMat m = IntMat::identity(rd.lattice.rank);
    for (int i : dec.weyl_word) m = m * fundamental_reflection(rd, i).m;
    return Isometry(m * permutation_isometry(rd.lattice, dec.graph).m);
}

bool is_minus_weyl(const RootDatum& rd, const Isometry& g) {
    DiscriminantGroup dg = discriminant_group(rd.lattice);
    DiscAction act = discriminant_action(rd.lattice, dg, g);
    return act == negation_disc_action(dg);
}

DiagramAutomorphism covering_involution_action(const ADEType& t) {
    RootDatum rd = build_root_datum(t);
    IntMat minus = IntMat::identity(t.rank);
    for (int i = 0; i < t.rank; ++i) minus(i, i) = -1;
    return decompose_isometry(rd, Isometry(minus)).graph;
}

}  // namespace latkit
