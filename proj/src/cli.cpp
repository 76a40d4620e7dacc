#include "latkit/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "latkit/json_io.hpp"
#include "latkit/verify.hpp"

namespace latkit {

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

// node label in the family's lettering, e.g. a_3, b_1, c_7 (1-based)
std::string node_label(const ADEType& t, int index) {
    char letter = t.family == ADEFamily::A ? 'a' : (t.family == ADEFamily::D ? 'b' : 'c');
    return std::string(1, letter) + std::to_string(index + 1);
}

Lattice lattice_from_flags(const std::string& file, const std::string& type, bool use_e10) {
    int sources = (!file.empty()) + (!type.empty()) + (use_e10 ? 1 : 0);
    if (sources != 1)
        throw CLI::ValidationError("exactly one of --file, --type, --e10 is required");
    if (use_e10) return build_e10().lattice;
    if (!type.empty()) return build_root_datum(ade_type_from_string(type)).lattice;
    return lattice_from_json(read_json_file(file));
}

std::vector<F2Isometry> f2_generators(const std::string& kind, const E10Lattice& e,
                                      const F2QuadSpace& space, Int bound) {
    std::vector<F2Isometry> gens;
    if (kind == "reflections") {
        for (int i = 0; i < 10; ++i)
            gens.push_back(reduce_isometry(space, fundamental_reflection(e, i)));
    } else if (kind == "sigmas") {
        for (const Isometry& s : make_generator_set(e, 5, bound).involutions)
            gens.push_back(reduce_isometry(space, s));
    } else if (kind == "none") {
        // empty generator list
    } else {
        gens.push_back(reduce_isometry(space, isometry_from_json(read_json_file(kind))));
    }
    return gens;
}

int cmd_lattice_info(std::ostream& out, const std::string& file, const std::string& type,
                     bool use_e10, bool as_json) {
    Lattice l = lattice_from_flags(file, type, use_e10);
    LatticeInvariants inv = lattice_invariants(l);
    if (as_json) {
        out << json{{"rank", l.rank},
                    {"determinant", inv.determinant},
                    {"even", inv.is_even},
                    {"signature", {inv.positive, inv.negative}}}
                   .dump()
            << "\n";
    } else {
        out << "rank        " << l.rank << "\n"
            << "determinant " << inv.determinant << "\n"
            << "even        " << (inv.is_even ? "yes" : "no") << "\n"
            << "signature   (" << inv.positive << ", " << inv.negative << ")\n";
    }
    return 0;
}

int cmd_roots(std::ostream& out, const std::string& type, bool list, bool as_json) {
    ADEType t = ade_type_from_string(type);
    RootDatum rd = build_root_datum(t);
    std::vector<Vec> roots = positive_roots(t);
    if (as_json) {
        json j{{"type", ade_type_to_json(t)},
               {"count", roots.size()},
               {"highest_root", vec_to_json(rd.highest_root)},
               {"simple_roots", rd.simple_roots}};
        if (list) {
            json arr = json::array();
            for (const Vec& r : roots) arr.push_back(vec_to_json(r));
            j["roots"] = arr;
        }
        out << j.dump() << "\n";
    } else {
        out << t.name() << ": " << roots.size() << " positive roots\n";
        out << "highest root " << vec_to_json(rd.highest_root).dump() << "\n";
        out << "simple roots:";
        for (int i : rd.simple_roots) out << " " << node_label(t, i);
        out << "\n";
        if (list)
            for (const Vec& r : roots) out << "  " << vec_to_json(r).dump() << "\n";
    }
    return 0;
}

int cmd_disc_group(std::ostream& out, const std::string& file, const std::string& type,
                   bool use_e10, bool as_json) {
    Lattice l = lattice_from_flags(file, type, use_e10);
    DiscriminantGroup dg = discriminant_group(l);
    if (as_json) {
        out << disc_group_to_json(dg).dump() << "\n";
    } else {
        out << "order " << dg.order << "\n";
        if (dg.is_trivial()) {
            out << "trivial group\n";
        } else {
            out << "invariant factors:";
            for (Int d : dg.invariant_factors) out << " " << d;
            out << "\ngenerator lifts:\n";
            for (const RatVec& lift : dg.generator_lifts) {
                out << " ";
                for (const Rat& c : lift) out << " " << c.str();
                out << "\n";
            }
        }
    }
    return 0;
}

int cmd_involution_action(std::ostream& out, const std::string& type, bool as_json) {
    ADEType t = ade_type_from_string(type);
    DiagramAutomorphism s = covering_involution_action(t);
    if (as_json) {
        out << json{{"type", ade_type_to_json(t)}, {"permutation", automorphism_to_json(s)}}.dump()
            << "\n";
    } else {
        out << t.name() << " deck action on the diagram:\n";
        for (int i = 0; i < t.rank; ++i)
            out << "  " << node_label(t, i) << " -> " << node_label(t, s.perm[i]) << "\n";
    }
    return 0;
}

int cmd_class_group(std::ostream& out, const std::string& type, bool all, bool as_json) {
    std::vector<ADEType> types;
    if (all) {
        for (int n = 1; n <= 10; ++n) types.push_back(ADEType(ADEFamily::A, n));
        for (int n = 4; n <= 10; ++n) types.push_back(ADEType(ADEFamily::D, n));
        for (int n = 6; n <= 8; ++n) types.push_back(ADEType(ADEFamily::E, n));
    } else if (!type.empty()) {
        types.push_back(ade_type_from_string(type));
    } else {
        throw CLI::ValidationError("one of --type or --all is required");
    }

    json rows = json::array();
    for (const ADEType& t : types) {
        LocalClassGroup cg = local_class_group(t);
        DeckActionReport rep = deck_action_report(t);
        if (as_json) {
            rows.push_back(json{{"type", ade_type_to_json(t)},
                                {"order", cg.group.order},
                                {"invariant_factors", cg.group.invariant_factors},
                                {"two_torsion", is_p_torsion(t, 2)},
                                {"diagram_action", automorphism_to_json(rep.diagram_action)},
                                {"acts_as_minus_one", rep.acts_as_minus_one},
                                {"minus_id_in_weyl", rep.minus_id_in_weyl}});
        } else {
            out << t.name() << ": order " << cg.group.order;
            if (!cg.group.is_trivial()) {
                out << " (factors";
                for (Int d : cg.group.invariant_factors) out << " " << d;
                out << ")";
            }
            out << ", 2-torsion " << (is_p_torsion(t, 2) ? "yes" : "no")
                << ", -id in Weyl " << (rep.minus_id_in_weyl ? "yes" : "no")
                << ", deck action";
            if (rep.diagram_action.is_identity()) {
                out << " identity";
            } else {
                for (int i = 0; i < t.rank; ++i)
                    if (rep.diagram_action.perm[i] != i)
                        out << " " << node_label(t, i) << "->"
                            << node_label(t, rep.diagram_action.perm[i]);
            }
            out << "\n";
        }
    }
    if (as_json) out << rows.dump() << "\n";
    return 0;
}

int cmd_e10_reduce(std::ostream& out, const std::string& vec_text, const std::string& file,
                   bool as_json) {
    E10Lattice e = build_e10();
    Vec x;
    if (!vec_text.empty())
        x = vec_from_json(json::parse(vec_text));
    else if (!file.empty())
        x = vec_from_json(read_json_file(file));
    else
        throw CLI::ValidationError("one of --vec or --file is required");
    ReductionResult r = chamber_reduce(e, x);
    if (as_json) {
        out << reduction_to_json(r).dump() << "\n";
    } else {
        out << "steps   " << r.steps << "\n";
        out << "word    " << json(r.word).dump() << "\n";
        out << "reduced " << vec_to_json(r.reduced).dump() << "\n";
    }
    return 0;
}

int cmd_e10_sigma(std::ostream& out, int index, Int bound, const std::string& f1_text,
                  const std::string& f2_text, bool as_json) {
    E10Lattice e = build_e10();
    HyperbolicPlane u;
    if (!f1_text.empty() || !f2_text.empty()) {
        if (f1_text.empty() || f2_text.empty())
            throw CLI::ValidationError("--f1 and --f2 must be given together");
        u.f1 = vec_from_json(json::parse(f1_text));
        u.f2 = vec_from_json(json::parse(f2_text));
    } else {
        auto planes = find_hyperbolic_planes(e, bound, index + 1);
        if (static_cast<int>(planes.size()) <= index)
            throw std::runtime_error("only " + std::to_string(planes.size()) +
                                     " planes found within bound " + std::to_string(bound));
        u = planes[index];
    }
    Isometry s = sigma_u(e, u);
    if (as_json) {
        out << json{{"plane", plane_to_json(u)},
                    {"sigma", isometry_to_json(s)},
                    {"in_g0", is_in_g0(e, s)}}
                   .dump()
            << "\n";
    } else {
        out << "plane f1 " << vec_to_json(u.f1).dump() << ", f2 " << vec_to_json(u.f2).dump()
            << "\n";
        out << "sigma " << isometry_to_json(s).dump() << "\n";
        out << "in G0: " << (is_in_g0(e, s) ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_f2_count(std::ostream& out, bool as_json) {
    E10Lattice e = build_e10();
    IsotropicCounts c = count_isotropic(F2QuadSpace(e.lattice));
    if (as_json)
        out << counts_to_json(c).dump() << "\n";
    else
        out << c.nonzero_isotropic << " nonzero isotropic vectors (" << c.total_isotropic
            << " including zero, of " << c.total << " total)\n";
    return 0;
}

int cmd_f2_orbit(std::ostream& out, const std::string& vec_text, const std::string& gens_kind,
                 Int bound, bool as_json) {
    E10Lattice e = build_e10();
    F2QuadSpace space(e.lattice);
    F2Vector v = f2_vector_from_json(json::parse(vec_text));
    std::vector<F2Isometry> gens = f2_generators(gens_kind, e, space, bound);
    std::vector<F2Vector> orb = orbit(space, v, gens);
    if (as_json) {
        json arr = json::array();
        for (const F2Vector& x : orb) arr.push_back(f2_vector_to_json(x));
        out << json{{"size", orb.size()}, {"orbit", arr}}.dump() << "\n";
    } else {
        out << "orbit size " << orb.size() << "\n";
        for (const F2Vector& x : orb) out << "  " << f2_vector_to_json(x).dump() << "\n";
    }
    return 0;
}

int cmd_ramification(std::ostream& out, const std::string& vec_text, const std::string& gens_kind,
                     Int bound, bool as_json) {
    E10Lattice e = build_e10();
    F2QuadSpace space(e.lattice);
    F2Vector f = f2_vector_from_json(json::parse(vec_text));
    std::vector<F2Isometry> gens = f2_generators(gens_kind, e, space, bound);
    int degree = ramification_degree(space, f, gens);
    if (as_json)
        out << json{{"degree", degree}}.dump() << "\n";
    else
        out << "ramification degree " << degree << "\n";
    return 0;
}

int cmd_g0_check(std::ostream& out, const std::string& file, bool as_json) {
    E10Lattice e = build_e10();
    Isometry g = isometry_from_json(read_json_file(file));
    bool isom = is_isometry(e.lattice, g);
    bool o_plus = isom && is_in_o_plus(e, g);
    bool g0 = isom && is_in_g0(e, g);
    if (as_json)
        out << json{{"is_isometry", isom}, {"in_o_plus", o_plus}, {"in_g0", g0}}.dump() << "\n";
    else
        out << "isometry " << (isom ? "yes" : "no") << ", O+ " << (o_plus ? "yes" : "no")
            << ", G0 " << (g0 ? "yes" : "no") << "\n";
    return 0;
}

int cmd_word_search(std::ostream& out, const std::string& target_file, const std::string& recipe,
                    int gen_count, Int bound, int depth, std::uint64_t nodes, std::uint64_t seed,
                    bool as_json) {
    E10Lattice e = build_e10();
    GeneratorSet gens = make_generator_set(e, gen_count, bound);

    Isometry target(IntMat::identity(10));
    if (!target_file.empty()) {
        target = isometry_from_json(read_json_file(target_file));
    } else if (!recipe.empty()) {
        // recipes: "sigma-word:<len>", "reflection-pair", "word:i,j,k"
        if (recipe.rfind("sigma-word", 0) == 0) {
            int len = 4;
            auto colon = recipe.find(':');
            if (colon != std::string::npos) len = std::stoi(recipe.substr(colon + 1));
            std::mt19937_64 rng(seed);
            IntMat m = IntMat::identity(10);
            for (int t = 0; t < len; ++t)
                m = m * gens.involutions[rng() % gens.involutions.size()].m;
            target = Isometry(m);
        } else if (recipe.rfind("reflection-pair", 0) == 0) {
            target = sample_reflection_pair(e, seed);
        } else if (recipe.rfind("word:", 0) == 0) {
            std::vector<int> word;
            std::stringstream ss(recipe.substr(5));
            std::string item;
            while (std::getline(ss, item, ',')) word.push_back(std::stoi(item));
            target = replay_generator_word(gens, word);
        } else {
            throw CLI::ValidationError("unknown recipe: " + recipe);
        }
    } else {
        throw CLI::ValidationError("one of --target-file or --recipe is required");
    }

    auto t0 = std::chrono::steady_clock::now();
    WordSearchResult res = bounded_word_search(e, target, gens, depth, nodes);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    bool replay_ok = res.status == SearchStatus::Found &&
                     replay_generator_word(gens, res.word) == target;
    if (as_json) {
        json j = search_result_to_json(res);
        j["wall_time_ms"] = ms;
        if (res.status == SearchStatus::Found) j["replay_ok"] = replay_ok;
        out << j.dump() << "\n";
    } else {
        if (res.status == SearchStatus::Found) {
            out << "found word " << json(res.word).dump() << " (replay "
                << (replay_ok ? "exact" : "MISMATCH") << ")\n";
        } else {
            out << "not found within depth " << depth << "\n";
        }
        out << "visited " << res.visited << " elements in " << ms << " ms\n";
    }
    return res.status == SearchStatus::Found && !replay_ok ? 1 : 0;
}

int cmd_verify_all(std::ostream& out, std::uint64_t seed, bool as_json) {
    std::vector<CheckResult> report = run_verification_suite(seed);
    bool all_pass = true;
    if (as_json) {
        json arr = json::array();
        for (const CheckResult& c : report) {
            arr.push_back(json{{"check_name", c.name},
                               {"claim", c.claim},
                               {"status", c.pass ? "pass" : "fail"},
                               {"details", c.details}});
            all_pass = all_pass && c.pass;
        }
        out << arr.dump() << "\n";
    } else {
        for (const CheckResult& c : report) {
            out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.details << ")\n";
            all_pass = all_pass && c.pass;
        }
        out << (all_pass ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact lattice computations: ADE root systems, discriminant groups, the rank-10 "
                 "hyperbolic lattice, its chamber reduction, congruence-subgroup probes and "
                 "mod-2 quadratic counts"};
    app.require_subcommand(1);

    bool as_json = false;
    std::uint64_t seed = kDefaultSeed;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--seed", seed, "seed for randomized commands")->capture_default_str();

    std::string file, type, vec_text, f1_text, f2_text, gens_kind = "reflections";
    std::string target_file, recipe;
    bool use_e10 = false, list = false, all = false;
    Int bound = 2;
    int index = 0, gen_count = 5, depth = 8;
    std::uint64_t nodes = 1000000;

    auto* lattice_info = app.add_subcommand("lattice-info", "invariants of a lattice");
    lattice_info->add_option("--file", file, "lattice JSON file");
    lattice_info->add_option("--type", type, "ADE type, e.g. A4");
    lattice_info->add_flag("--e10", use_e10, "use the rank-10 hyperbolic lattice");

    auto* roots = app.add_subcommand("roots", "positive roots of an ADE lattice");
    roots->add_option("--type", type, "ADE type")->required();
    roots->add_flag("--list", list, "list the roots");

    auto* disc = app.add_subcommand("disc-group", "discriminant group of a lattice");
    disc->add_option("--file", file, "lattice JSON file");
    disc->add_option("--type", type, "ADE type");
    disc->add_flag("--e10", use_e10, "use the rank-10 hyperbolic lattice");

    auto* inv_action = app.add_subcommand("involution-action", "deck action on an ADE diagram");
    inv_action->add_option("--type", type, "ADE type")->required();

    auto* class_group = app.add_subcommand("class-group", "local class groups of rational double points");
    class_group->add_option("--type", type, "ADE type");
    class_group->add_flag("--all", all, "tabulate every type up to rank 10");

    auto* reduce = app.add_subcommand("e10-reduce", "move a positive-cone vector into the chamber");
    reduce->add_option("--vec", vec_text, "vector as a JSON array of 10 integers");
    reduce->add_option("--file", file, "vector JSON file");

    auto* sigma = app.add_subcommand("e10-sigma", "involution attached to a hyperbolic plane");
    sigma->add_option("--index", index, "index into the plane search");
    sigma->add_option("--bound", bound, "coordinate bound of the plane search");
    sigma->add_option("--f1", f1_text, "f1 as a JSON array");
    sigma->add_option("--f2", f2_text, "f2 as a JSON array");

    app.add_subcommand("f2-count", "isotropic counts of the mod-2 quadratic space");

    auto* f2orbit = app.add_subcommand("f2-orbit", "orbit of a mod-2 vector under generators");
    f2orbit->add_option("--vec", vec_text, "vector as a 0/1 JSON array of length 10")->required();
    f2orbit->add_option("--gens", gens_kind,
                        "reflections | sigmas | none | <isometry JSON file>");
    f2orbit->add_option("--bound", bound, "plane-search bound for sigma generators");

    auto* ram = app.add_subcommand("ramification", "orbit size of a half-fiber class mod 2");
    ram->add_option("--vec", vec_text, "nonzero isotropic 0/1 JSON array")->required();
    ram->add_option("--gens", gens_kind, "reflections | sigmas | none | <isometry JSON file>");
    ram->add_option("--bound", bound, "plane-search bound for sigma generators");

    auto* g0 = app.add_subcommand("g0-check", "membership in O+ and the 2-congruence subgroup");
    g0->add_option("--file", file, "isometry JSON file")->required();

    auto* search = app.add_subcommand("word-search", "express a congruence element in involution generators");
    search->add_option("--target-file", target_file, "isometry JSON file");
    search->add_option("--recipe", recipe,
                       "sigma-word:<len> | reflection-pair | word:<i,j,...>");
    search->add_option("--gens", gen_count, "number of involution generators");
    search->add_option("--bound", bound, "plane-search bound");
    search->add_option("--depth", depth, "maximum word length");
    search->add_option("--nodes", nodes, "maximum explored elements");

    auto* verify = app.add_subcommand("verify-all", "run the full verification suite");
    (void)verify;

    // global flags like --json may follow the subcommand name
    for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; })) sc->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("lattice-info")) return cmd_lattice_info(out, file, type, use_e10, as_json);
        if (app.got_subcommand("roots")) return cmd_roots(out, type, list, as_json);
        if (app.got_subcommand("disc-group")) return cmd_disc_group(out, file, type, use_e10, as_json);
        if (app.got_subcommand("involution-action")) return cmd_involution_action(out, type, as_json);
        if (app.got_subcommand("class-group")) return cmd_class_group(out, type, all, as_json);
        if (app.got_subcommand("e10-reduce")) return cmd_e10_reduce(out, vec_text, file, as_json);
        if (app.got_subcommand("e10-sigma")) return cmd_e10_sigma(out, index, bound, f1_text, f2_text, as_json);
        if (app.got_subcommand("f2-count")) return cmd_f2_count(out, as_json);
        if (app.got_subcommand("f2-orbit")) return cmd_f2_orbit(out, vec_text, gens_kind, bound, as_json);
        if (app.got_subcommand("ramification")) return cmd_ramification(out, vec_text, gens_kind, bound, as_json);
        if (app.got_subcommand("g0-check")) return cmd_g0_check(out, file, as_json);
        if (app.got_subcommand("word-search"))
            return cmd_word_search(out, target_file, recipe, gen_count, bound, depth, nodes, seed, as_json);
        if (app.got_subcommand("verify-all")) return cmd_verify_all(out, seed, as_json);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace latkit
