#ifndef AUGMENTAL_CLI_HPP
#define AUGMENTAL_CLI_HPP

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "augmental/chain.hpp"
#include "augmental/cm.hpp"
#include "augmental/complex.hpp"
#include "augmental/constructions.hpp"
#include "augmental/generators.hpp"
#include "augmental/io.hpp"
#include "augmental/kunneth.hpp"
#include "augmental/manifolds.hpp"
#include "augmental/stanley_reisner.hpp"

#include "CLI11.hpp"

namespace augmental {

namespace cli_detail {

inline Face parse_face(const std::string& spec) {
    Face f;
    if (spec.empty()) return f;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) f.push_back(tok);
    std::sort(f.begin(), f.end());
    return f;
}

inline std::vector<std::string> parse_list(const std::string& spec) {
    std::vector<std::string> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

inline std::string render_manifold_report(const ManifoldReport& r) {
    std::string out;
    out += "dim = " + r.dimension.render() + "\n";
    out += std::string("pseudomanifold = ") + (r.pseudo ? "true" : "false") + "\n";
    out += std::string("quasi-manifold = ") + (r.quasi ? "true" : "false") + "\n";
    out += "homology-manifold[" + r.coeff.render() + "] = " +
           (r.homology_manifold ? "true" : "false") + "\n";
    out += std::string("ordinary = ") + (r.ordinary ? "true" : "false") + "\n";
    if (r.quasi || r.homology_manifold) {
        out += "boundary = " + render_complex(r.boundary_complex) + "\n";
        out += "boundary-components = " + std::to_string(r.boundary_component_count) + "\n";
        if (r.orientable_flag)
            out += std::string("orientable = ") + (*r.orientable_flag ? "true" : "false") + "\n";
    }
    out += "hip =";
    if (r.hip.empty()) out += " (none)";
    for (const Face& f : r.hip) {
        out += " {";
        for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + f[i];
        out += "}";
    }
    out += "\n";
    return out;
}

inline std::string render_cm_report(const CMReport& r) {
    std::string out;
    auto flag = [](bool b) { return b ? "true" : "false"; };
    out += "coeff = " + r.coeff.render() + "\n";
    out += std::string("bbm = ") + flag(r.bbm) + "\n";
    out += std::string("cm = ") + flag(r.cm) + "\n";
    out += std::string("2-cm = ") + flag(r.two_cm) + "\n";
    out += std::string("gorenstein = ") + flag(r.gorenstein) + "\n";
    if (r.k_cm_max > 0) out += "k-cm-max = " + std::to_string(r.k_cm_max) + "\n";
    if (r.beta.defined) {
        out += "beta = " + std::to_string(r.beta.beta) + "\n";
        out += "depth = " + std::to_string(r.beta.depth) + "\n";
    } else {
        out += "beta = undefined\n";
    }
    for (const auto& [name, face] : r.witnesses) {
        out += "witness[" + name + "] = {";
        for (std::size_t i = 0; i < face.size(); ++i) out += (i ? "," : "") + face[i];
        out += "}\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

struct SuiteResult {
    std::string name;
    int ok = 0, total = 0;
    bool passed() const { return ok == total; }
};

inline SuiteResult suite_kunneth(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    SuiteResult r{"kunneth"};
    RandomComplexOptions opt;
    opt.max_vertices = 6;
    for (int i = 0; i < n; ++i) {
        SimplicialComplex x = random_complex(rng, opt);
        SimplicialComplex y = random_complex(rng, opt);
        SimplicialComplex xs = random_subcomplex(rng, x);
        SimplicialComplex ys = random_subcomplex(rng, y);
        ComplexPair px(x, xs), py(y, ys);
        bool ok = verify_join(px, py).all_ok();
        OrderedComplex ox = OrderedComplex::by_label_order(x);
        OrderedComplex oy = OrderedComplex::by_label_order(y);
        ok = ok && verify_product(ox, xs, oy, ys).all_ok();
        bool shift_applicable = x.is_present() && y.is_present() &&
                                !(x.is_empty_face_only() && xs.is_void()) &&
                                !(y.is_empty_face_only() && ys.is_void());
        if (shift_applicable) ok = ok && verify_degree_shift(ox, xs, oy, ys).all_ok();
        r.ok += ok;
        ++r.total;
    }
    return r;
}

inline SuiteResult suite_local(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    SuiteResult r{"local"};
    RandomComplexOptions opt;
    opt.max_vertices = 6;
    opt.allow_degenerate = false;
    for (int i = 0; i < n; ++i) {
        SimplicialComplex x = random_complex(rng, opt);
        bool ok = true;
        for (const Face& f : x.all_faces()) {
            HomologyTable rel = homology(ComplexPair(x, contrastar(x, f)), Coefficients::Z());
            HomologyTable via = local_homology_via_link(x, f, Coefficients::Z());
            if (!(rel == via)) ok = false;
        }
        r.ok += ok;
        ++r.total;
    }
    return r;
}

inline SuiteResult suite_manifold(std::uint64_t seed, int n) {
    SuiteResult r{"manifold"};
    auto corpus = manifold_corpus(seed, (std::size_t)n);
    Coefficients z = Coefficients::Z();
    for (const SimplicialComplex& c : corpus) {
        bool ok = true;
        int dim_n = c.dim().finite();
        // top relative homology against the ridge boundary: Z-or-0 with the
        // torsion dichotomy one degree down
        SimplicialComplex bd = pseudo_boundary(c);
        HomologyTable rel = homology(ComplexPair(c, bd), z);
        FgAbelianGroup top = rel.at(dim_n);
        FgAbelianGroup below = rel.at(dim_n - 1);
        if (top == free_group(1)) {
            if (!below.torsion.empty()) ok = false;
        } else if (top.is_zero()) {
            if (!(below.torsion.empty() ||
                  (below.torsion.size() == 1 && below.torsion[0] == Integer(2))))
                ok = false;
        } else {
            ok = false;
        }
        if (is_quasi_manifold(c)) {
            for (Coefficients g : {Coefficients::Z(), Coefficients::Zp(2)}) {
                SimplicialComplex bdg = boundary(c, g);
                if (bdg.is_present() && !bdg.is_empty_face_only()) {
                    int bd_dim = bdg.dim().finite();
                    if (bd_dim >= dim_n - 2 && bd_dim != dim_n - 1) ok = false;
                }
            }
            // top homology of the complex itself is free of rank <= 1
            FgAbelianGroup abs_top = homology(c, z).at(dim_n);
            if (!(abs_top.is_zero() || abs_top == free_group(1))) ok = false;
        }
        r.ok += ok;
        ++r.total;
    }
    return r;
}

inline SuiteResult suite_cm(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    SuiteResult r{"cm"};
    RandomComplexOptions opt;
    opt.max_vertices = 5;
    opt.allow_degenerate = false;
    for (int i = 0; i < n; ++i) {
        SimplicialComplex x = random_complex(rng, opt);
        bool ok = true;
        try {
            bool link_form = !detail::cm_link_witness(x, Coefficients::Z()).has_value();
            bool cost_form = !detail::cm_contrastar_witness(x, Coefficients::Z()).has_value();
            if (link_form != cost_form) ok = false;
            if (!verify_th8_th9(x, Coefficients::Z())) ok = false;
        } catch (const std::exception&) {
            ok = false;
        }
        r.ok += ok;
        ++r.total;
    }
    return r;
}

inline SuiteResult suite_sr(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    SuiteResult r{"sr"};
    RandomComplexOptions opt;
    opt.max_vertices = 4;
    opt.allow_degenerate = false;
    for (int i = 0; i < n; ++i) {
        SimplicialComplex x = random_complex(rng, opt);
        SimplicialComplex y = random_complex(rng, opt);
        bool ok = true;
        try {
            // lattice laws over the shared universe
            std::vector<std::string> universe = detail::merged_labels(x, y);
            auto minimalize = [](std::vector<Face> fs) {
                std::sort(fs.begin(), fs.end());
                fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
                std::vector<Face> out;
                for (const Face& f : fs) {
                    bool divisible = false;
                    for (const Face& g : fs) {
                        if (g == f) continue;
                        if (std::includes(f.begin(), f.end(), g.begin(), g.end()))
                            divisible = true;
                    }
                    if (!divisible) out.push_back(f);
                }
                return out;
            };
            std::vector<Face> nf_union = minimal_non_faces(complex_union(x, y), universe);
            std::vector<Face> lcms;
            for (const Face& f : minimal_non_faces(x, universe))
                for (const Face& g : minimal_non_faces(y, universe)) {
                    Face u;
                    std::set_union(f.begin(), f.end(), g.begin(), g.end(),
                                   std::back_inserter(u));
                    lcms.push_back(std::move(u));
                }
            if (minimalize(std::move(lcms)) != nf_union) ok = false;
            std::vector<Face> nf_inter = minimal_non_faces(complex_intersection(x, y), universe);
            std::vector<Face> join_gens = minimal_non_faces(x, universe);
            for (Face f : minimal_non_faces(y, universe)) join_gens.push_back(std::move(f));
            if (minimalize(std::move(join_gens)) != nf_inter) ok = false;
            join_ideal(x, y);
            product_groebner_set(OrderedComplex::by_label_order(x),
                                 OrderedComplex::by_label_order(y));
            if (!segre_check(OrderedComplex::by_label_order(x),
                             OrderedComplex::by_label_order(y), 6))
                ok = false;
        } catch (const std::exception&) {
            ok = false;
        }
        r.ok += ok;
        ++r.total;
    }
    return r;
}

inline SuiteResult suite_uct(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    SuiteResult r{"uct"};
    RandomComplexOptions opt;
    opt.max_vertices = 6;
    for (int i = 0; i < n; ++i) {
        SimplicialComplex x = random_complex(rng, opt);
        SimplicialComplex xs = random_subcomplex(rng, x);
        if (x.is_void()) xs = SimplicialComplex::void_complex();
        ComplexPair pair(x, xs);
        HomologyTable hz = homology(pair, Coefficients::Z());
        bool ok = true;
        for (Coefficients f : {Coefficients::Zp(2), Coefficients::Zp(3), Coefficients::Zp(5),
                               Coefficients::Q()}) {
            HomologyTable hf = homology(pair, f);
            int lo = -1, hi = 0;
            if (!hz.is_zero()) hi = hz.max_degree() + 1;
            if (!hf.is_zero()) hi = std::max(hi, hf.max_degree());
            for (int q = lo; q <= hi; ++q) {
                int expected = base_change(hz.at(q), f).tensor_dim +
                               base_change(hz.at(q - 1), f).tor_dim;
                if (hf.at(q).rank != expected) ok = false;
            }
        }
        r.ok += ok;
        ++r.total;
    }
    return r;
}

}  // namespace cli_detail

/** Runs the command line; returns the process exit status (0/1/2). */
inline int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engine for augmental simplicial homology"};
    app.require_subcommand(1);

    std::string file_a, file_b, coeff_spec = "Z", face_spec, universe_spec;
    std::string op_spec, sub_a, sub_b, suite = "all";
    bool verbose = false, emit_groebner = false;
    long long upto = 10;
    int k_arg = 0, n_arg = 50;
    std::uint64_t seed = 0;

    auto* homology_cmd = app.add_subcommand("homology", "homology of a complex");
    homology_cmd->add_option("file", file_a)->required();
    homology_cmd->add_option("--coeff", coeff_spec);
    homology_cmd->add_flag("--verbose", verbose);

    auto* relative_cmd = app.add_subcommand("relative", "homology of a pair");
    relative_cmd->add_option("total", file_a)->required();
    relative_cmd->add_option("sub", file_b)->required();
    relative_cmd->add_option("--coeff", coeff_spec);
    relative_cmd->add_flag("--verbose", verbose);

    auto* link_cmd = app.add_subcommand("link", "link of a face");
    link_cmd->add_option("file", file_a)->required();
    link_cmd->add_option("--face", face_spec);

    auto* costar_cmd = app.add_subcommand("costar", "contrastar of a face");
    costar_cmd->add_option("file", file_a)->required();
    costar_cmd->add_option("--face", face_spec);

    auto* join_cmd = app.add_subcommand("join", "join of two complexes");
    join_cmd->add_option("a", file_a)->required();
    join_cmd->add_option("b", file_b)->required();

    auto* product_cmd = app.add_subcommand("product", "ordered cartesian product");
    product_cmd->add_option("a", file_a)->required();
    product_cmd->add_option("b", file_b)->required();

    auto* euler_cmd = app.add_subcommand("euler", "reduced Euler characteristic");
    euler_cmd->add_option("file", file_a)->required();

    auto* boundary_cmd = app.add_subcommand("boundary", "homological boundary");
    boundary_cmd->add_option("file", file_a)->required();
    boundary_cmd->add_option("--coeff", coeff_spec);

    auto* classify_cmd = app.add_subcommand("classify", "manifold classification");
    classify_cmd->add_option("file", file_a)->required();
    classify_cmd->add_option("--coeff", coeff_spec);

    auto* cm_cmd = app.add_subcommand("cm-classify", "Cohen-Macaulay classification");
    cm_cmd->add_option("file", file_a)->required();
    cm_cmd->add_option("--coeff", coeff_spec);
    cm_cmd->add_option("--k", k_arg);

    auto* sr_cmd = app.add_subcommand("sr-ideal", "Stanley-Reisner ideal");
    sr_cmd->add_option("file", file_a)->required();
    sr_cmd->add_option("--universe", universe_spec);

    auto* srp_cmd = app.add_subcommand("sr-product", "product face ideal");
    srp_cmd->add_option("a", file_a)->required();
    srp_cmd->add_option("b", file_b)->required();
    srp_cmd->add_flag("--emit-groebner", emit_groebner);

    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function table");
    hilbert_cmd->add_option("file", file_a)->required();
    hilbert_cmd->add_option("--upto", upto);

    auto* kv_cmd = app.add_subcommand("kunneth-verify", "Kunneth formula check");
    kv_cmd->add_option("--op", op_spec)->required()->check(CLI::IsMember({"join", "product"}));
    kv_cmd->add_option("a", file_a)->required();
    kv_cmd->add_option("b", file_b)->required();
    kv_cmd->add_option("--subA", sub_a);
    kv_cmd->add_option("--subB", sub_b);

    auto* verify_cmd = app.add_subcommand("verify", "theorem suites");
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember({"kunneth", "local", "manifold", "cm", "sr", "uct", "all"}));
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--n", n_arg);

    std::vector<char*> argv;
    std::string prog = "augmental";
    argv.push_back(prog.data());
    for (auto& a : args) argv.push_back(a.data());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (homology_cmd->parsed()) {
            Coefficients c = Coefficients::parse(coeff_spec);
            out << render_table(homology(load_complex(file_a).complex, c), verbose);
            return 0;
        }
        if (relative_cmd->parsed()) {
            Coefficients c = Coefficients::parse(coeff_spec);
            ComplexPair pair(load_complex(file_a).complex, load_complex(file_b).complex);
            out << render_table(homology(pair, c), verbose);
            return 0;
        }
        if (link_cmd->parsed()) {
            auto parsed = load_complex(file_a);
            out << render_complex(link(parsed.complex, cli_detail::parse_face(face_spec)))
                << "\n";
            return 0;
        }
        if (costar_cmd->parsed()) {
            auto parsed = load_complex(file_a);
            out << render_complex(contrastar(parsed.complex, cli_detail::parse_face(face_spec)))
                << "\n";
            return 0;
        }
        if (join_cmd->parsed()) {
            out << render_complex(join(load_complex(file_a).complex,
                                       load_complex(file_b).complex))
                << "\n";
            return 0;
        }
        if (product_cmd->parsed()) {
            OrderedComplex p =
                product(load_complex(file_a).ordered(), load_complex(file_b).ordered());
            out << render_complex(p.complex, p.order) << "\n";
            return 0;
        }
        if (euler_cmd->parsed()) {
            out << euler_reduced(load_complex(file_a).complex) << "\n";
            return 0;
        }
        if (boundary_cmd->parsed()) {
            Coefficients c = Coefficients::parse(coeff_spec);
            out << render_complex(boundary(load_complex(file_a).complex, c)) << "\n";
            return 0;
        }
        if (classify_cmd->parsed()) {
            Coefficients c = Coefficients::parse(coeff_spec);
            out << cli_detail::render_manifold_report(classify(load_complex(file_a).complex, c));
            return 0;
        }
        if (cm_cmd->parsed()) {
            Coefficients c = Coefficients::parse(coeff_spec);
            out << cli_detail::render_cm_report(
                cm_classify(load_complex(file_a).complex, c, k_arg));
            return 0;
        }
        if (sr_cmd->parsed()) {
            auto parsed = load_complex(file_a);
            std::vector<std::string> universe = universe_spec.empty()
                                                    ? parsed.complex.labels()
                                                    : cli_detail::parse_list(universe_spec);
            out << render_ideal(sr_ideal(parsed.complex, universe));
            return 0;
        }
        if (srp_cmd->parsed()) {
            auto a = load_complex(file_a), b = load_complex(file_b);
            SRIdeal ideal = product_groebner_set(a.ordered(), b.ordered());
            out << render_ideal(ideal);
            return 0;
        }
        if (hilbert_cmd->parsed()) {
            auto parsed = load_complex(file_a);
            if (upto < 0) {
                err << "hilbert: --upto must be nonnegative\n";
                return 2;
            }
            for (long long m = 0; m <= upto; ++m)
                out << m << " " << hilbert_function(parsed.complex, m).to_string() << "\n";
            return 0;
        }
        if (kv_cmd->parsed()) {
            auto a = load_complex(file_a), b = load_complex(file_b);
            SimplicialComplex sa = sub_a.empty() ? SimplicialComplex::void_complex()
                                                 : load_complex(sub_a).complex;
            SimplicialComplex sb = sub_b.empty() ? SimplicialComplex::void_complex()
                                                 : load_complex(sub_b).complex;
            KunnethReport rep;
            if (op_spec == "join")
                rep = verify_join(ComplexPair(a.complex, sa), ComplexPair(b.complex, sb));
            else
                rep = verify_product(a.ordered(), sa, b.ordered(), sb);
            out << render_report(rep);
            return rep.all_ok() ? 0 : 1;
        }
        if (verify_cmd->parsed()) {
            std::vector<cli_detail::SuiteResult> results;
            auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
            if (want("kunneth")) results.push_back(cli_detail::suite_kunneth(seed, n_arg));
            if (want("local")) results.push_back(cli_detail::suite_local(seed, n_arg));
            if (want("manifold")) results.push_back(cli_detail::suite_manifold(seed, n_arg));
            if (want("cm")) results.push_back(cli_detail::suite_cm(seed, n_arg));
            if (want("sr")) results.push_back(cli_detail::suite_sr(seed, n_arg));
            if (want("uct")) results.push_back(cli_detail::suite_uct(seed, n_arg));
            bool all_ok = true;
            for (const auto& r : results) {
                out << r.name << ": " << r.ok << "/" << r.total << " ok\n";
                all_ok = all_ok && r.passed();
            }
            return all_ok ? 0 : 1;
        }
    } catch (const nlohmann::json::exception& e) {
        err << "json error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace augmental

#endif
