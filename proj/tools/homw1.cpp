// homw1 command line front end: build Hom complexes, compute mod-2 Betti
// tables, Stiefel-Whitney cup powers and chromatic lower bounds, and run the
// desk-scale verifications.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "homw1/charclass.hpp"
#include "homw1/complex_io.hpp"
#include "homw1/errors.hpp"
#include "homw1/gf2alg.hpp"
#include "homw1/graphs.hpp"
#include "homw1/homcomplex.hpp"
#include "homw1/posets.hpp"
#include "homw1/products.hpp"
#include "homw1/report.hpp"

namespace {

using homw1::Guards;
using homw1::report::Json;

struct CommonOpts {
    std::string out;
    bool human = false;
    bool timing = false;
    std::size_t guard_elems = Guards{}.max_poset_elements;
    std::size_t guard_simplices = Guards{}.max_simplices;
};

CLI::App* make_cmd(CLI::App& app, const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->set_help_flag("--help", "print help");  // frees -h for the target graph flag
    return cmd;
}

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--out", c.out, "write the report to FILE instead of stdout");
    cmd->add_flag("--human", c.human, "human-readable tables instead of JSON");
    cmd->add_flag("--timing", c.timing, "include timing (report is no longer byte-stable)");
    cmd->add_option("--guard-elems", c.guard_elems, "poset element guard");
    cmd->add_option("--guard-simplices", c.guard_simplices, "simplex count guard");
}

std::string echo_command(int argc, char** argv) {
    std::ostringstream os;
    for (int i = 1; i < argc; ++i) os << (i > 1 ? " " : "") << argv[i];
    return os.str();
}

void human_print(std::ostream& os, const Json& j, int indent = 0) {
    std::string pad(indent, ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_object()) {
            os << pad << it.key() << ":\n";
            human_print(os, *it, indent + 2);
        } else {
            os << pad << it.key() << ": " << it->dump() << "\n";
        }
    }
}

void emit(const CommonOpts& c, Json& rep,
          std::chrono::steady_clock::time_point start) {
    if (c.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        rep["timing_ms"] = ms;
    }
    std::string text;
    if (c.human) {
        std::ostringstream os;
        human_print(os, rep);
        text = os.str();
    } else {
        text = homw1::report::serialize_report(rep);
    }
    if (c.out.empty())
        std::cout << text;
    else
        homw1::io::write_text_file(c.out, text);
}

// The flip for odd cycles, the swap for K_2; anything else has no canonical
// involution and is rejected.
homw1::graphs::GraphAutomorphism canonical_involution(const homw1::graphs::Graph& g,
                                                      const std::string& spec) {
    if (g.edges.size() == 1 && g.vertex_count == 2) return {{1, 0}};
    if (g.vertex_count >= 3 && g.vertex_count % 2 == 1)
        return homw1::graphs::flip_automorphism(g);
    throw homw1::InvalidInput("no canonical involution for source graph '" + spec +
                              "' (need complete:2 or an odd cycle)");
}

Json betti_json(const std::vector<long long>& b) { return Json(b); }

struct BoundTestSpec {
    homw1::charclass::BoundTest test = homw1::charclass::BoundTest::K2;
    int r = 1;
};

BoundTestSpec parse_bound_test(const std::string& s) {
    if (s == "k2") return {homw1::charclass::BoundTest::K2, 0};
    if (s.rfind("c:", 0) == 0) {
        int len = 0;
        try {
            len = std::stoi(s.substr(2));
        } catch (const std::exception&) {
            throw homw1::InvalidInput("bad test spec '" + s + "'");
        }
        if (len < 3 || len % 2 == 0)
            throw homw1::InvalidInput("test cycle length must be odd and >= 3, got " + s);
        return {homw1::charclass::BoundTest::OddCycle, (len - 1) / 2};
    }
    throw homw1::InvalidInput("unknown test '" + s + "' (expected k2 or c:ODD)");
}

homw1::charclass::DoubleCover hom_double_cover(const std::string& gspec,
                                               const std::string& hspec,
                                               const CommonOpts& opts, Json& rep) {
    auto g = homw1::graphs::parse_graph_spec(gspec);
    auto h = homw1::graphs::parse_graph_spec(hspec);
    auto invol_g = canonical_involution(g, gspec);
    auto hp = homw1::homcomplex::hom_poset(g, h, opts.guard_elems);
    rep["hom_elements"] = hp.size();
    if (hp.empty()) {
        homw1::charclass::DoubleCover dc;
        return dc;
    }
    auto invol = homw1::homcomplex::induced_involution(hp, invol_g);
    auto freeness = homw1::homcomplex::check_freeness(hp, invol);
    if (!freeness.free) throw homw1::InvalidInput("induced involution is not free");
    auto oc = homw1::homcomplex::hom_order_complex(hp, -1, opts.guard_simplices);
    return homw1::charclass::build_double_cover(std::move(oc), homw1::posets::VertexPerm(invol));
}

Json w1_report_json(const homw1::charclass::W1Report& w) {
    Json j;
    j["height"] = w.height;
    Json powers = Json::object();
    for (auto [n, vanishes] : w.powers) powers[std::to_string(n)] = vanishes;
    j["powers"] = std::move(powers);
    j["quotient_betti"] = betti_json(w.quotient_betti);
    j["subdivisions"] = w.subdivisions;
    j["vertex_order"] = w.vertex_order;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph Hom complexes, mod-2 homology, Stiefel-Whitney powers, chromatic bounds"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    std::string gspec, hspec, target, test_spec = "k2", in_file, invol_file, sphere;
    int r = 1, n = 1, power = -1;
    bool with_betti = false;

    CommonOpts oc_build, oc_betti, oc_w1, oc_bound, oc_lemmas, oc_product, oc_export, oc_import;

    auto* cmd_build = make_cmd(app, "build-hom", "build a Hom poset and its order complex");
    cmd_build->add_option("--g", gspec, "source graph spec")->required();
    cmd_build->add_option("--h", hspec, "target graph spec")->required();
    add_common(cmd_build, oc_build);

    auto* cmd_betti = make_cmd(app, "betti", "mod-2 Betti numbers of a complex");
    cmd_betti->add_option("--g", gspec, "source graph spec");
    cmd_betti->add_option("--h", hspec, "target graph spec");
    cmd_betti->add_option("--in", in_file, "complex JSON file");
    add_common(cmd_betti, oc_betti);

    auto* cmd_w1 = make_cmd(app, "w1", "Stiefel-Whitney class powers of a Hom complex");
    cmd_w1->add_option("--g", gspec, "source graph spec (complete:2 or odd cycle)")->required();
    cmd_w1->add_option("--h", hspec, "target graph spec")->required();
    cmd_w1->add_option("--power", power, "test one cup power instead of the full height scan");
    add_common(cmd_w1, oc_w1);

    auto* cmd_bound = make_cmd(app, "bound", "topological chromatic lower bound");
    cmd_bound->add_option("--target", target, "graph spec to bound")->required();
    cmd_bound->add_option("--test", test_spec, "k2 or c:ODD (default k2)");
    add_common(cmd_bound, oc_bound);

    auto* cmd_lemmas = make_cmd(app, "verify-lemmas",
                                          "carrier lemmas and equivariance for Hom(C_2r+1,K_n+2)");
    cmd_lemmas->add_option("--r", r, "half cycle length")->required();
    cmd_lemmas->add_option("--n", n, "sphere dimension")->required();
    add_common(cmd_lemmas, oc_lemmas);

    auto* cmd_product = make_cmd(app, "verify-product",
                                           "product-of-spheres homology assertions");
    cmd_product->add_option("--r", r, "number of sphere pairs")->required();
    cmd_product->add_option("--n", n, "sphere dimension")->required();
    add_common(cmd_product, oc_product);

    auto* cmd_export = make_cmd(app, "export", "write a complex (and involution) to JSON");
    cmd_export->add_option("--g", gspec, "source graph spec");
    cmd_export->add_option("--h", hspec, "target graph spec");
    cmd_export->add_option("--sphere", sphere, "sphere dimension n instead of a Hom complex");
    cmd_export->add_option("--out", in_file, "complex output file")->required();
    cmd_export->add_option("--invol-out", invol_file, "involution output file");
    cmd_export->add_flag("--human", oc_export.human, "human-readable report");
    cmd_export->add_option("--guard-elems", oc_export.guard_elems, "poset element guard");
    cmd_export->add_option("--guard-simplices", oc_export.guard_simplices,
                           "simplex count guard");

    auto* cmd_import = make_cmd(app, "import", "validate a complex JSON file");
    cmd_import->add_option("--in", in_file, "complex JSON file")->required();
    cmd_import->add_option("--invol", invol_file, "involution JSON file");
    cmd_import->add_flag("--betti", with_betti, "also compute Betti numbers");
    add_common(cmd_import, oc_import);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    Json rep = homw1::report::make_report(echo_command(argc, argv));
    int exit_code = 0;
    try {
        if (cmd_build->parsed()) {
            auto g = homw1::graphs::parse_graph_spec(gspec);
            auto h = homw1::graphs::parse_graph_spec(hspec);
            auto hp = homw1::homcomplex::hom_poset(g, h, oc_build.guard_elems);
            rep["g"] = gspec;
            rep["h"] = hspec;
            rep["elements"] = hp.size();
            rep["minimal_elements"] = hp.poset.minimal_elements().size();
            auto oc = homw1::homcomplex::hom_order_complex(hp, -1, oc_build.guard_simplices);
            Json counts = Json::array();
            for (int d = 0; d <= oc.dim(); ++d) counts.push_back(oc.simplex_count(d));
            rep["simplices"] = std::move(counts);
            rep["dim"] = oc.dim();
            emit(oc_build, rep, start);
        } else if (cmd_betti->parsed()) {
            homw1::posets::SimplicialComplex c;
            if (!in_file.empty()) {
                c = homw1::io::complex_from_json(homw1::io::read_text_file(in_file));
                rep["in"] = in_file;
            } else if (!gspec.empty() && !hspec.empty()) {
                auto g = homw1::graphs::parse_graph_spec(gspec);
                auto h = homw1::graphs::parse_graph_spec(hspec);
                auto hp = homw1::homcomplex::hom_poset(g, h, oc_betti.guard_elems);
                c = homw1::homcomplex::hom_order_complex(hp, -1, oc_betti.guard_simplices);
                rep["g"] = gspec;
                rep["h"] = hspec;
            } else {
                throw homw1::InvalidInput("betti needs either --in or --g and --h");
            }
            auto cc = homw1::gf2alg::boundary_matrices(c);
            rep["betti"] = betti_json(homw1::gf2alg::betti(cc));
            rep["euler"] = c.euler_characteristic();
            emit(oc_betti, rep, start);
        } else if (cmd_w1->parsed()) {
            rep["g"] = gspec;
            rep["h"] = hspec;
            auto dc = hom_double_cover(gspec, hspec, oc_w1, rep);
            if (power >= 0) {
                bool vanishes = homw1::charclass::w1_power_vanishes(dc, power);
                rep["power"] = power;
                rep["vanishes"] = vanishes;
            } else {
                rep["w1"] = w1_report_json(homw1::charclass::w1_report(dc));
            }
            emit(oc_w1, rep, start);
        } else if (cmd_bound->parsed()) {
            auto g = homw1::graphs::parse_graph_spec(target);
            auto ts = parse_bound_test(test_spec);
            Guards guards;
            guards.max_poset_elements = oc_bound.guard_elems;
            guards.max_simplices = oc_bound.guard_simplices;
            auto cert = homw1::charclass::chromatic_lower_bound(g, ts.test, ts.r, guards);
            rep["target"] = target;
            rep["test"] = test_spec;
            rep["bound"] = cert.bound;
            rep["height"] = cert.height;
            rep["hom_elements"] = cert.hom_elements;
            rep["degenerate"] = cert.degenerate;
            rep["quotient_betti"] = betti_json(cert.quotient_betti);
            rep["subdivisions"] = cert.subdivisions;
            emit(oc_bound, rep, start);
        } else if (cmd_lemmas->parsed()) {
            auto lem = homw1::homcomplex::verify_f_lemmas(r, n, oc_lemmas.guard_elems);
            auto equ = homw1::homcomplex::verify_f_equivariance(r, n, oc_lemmas.guard_elems);
            rep["r"] = r;
            rep["n"] = n;
            rep["elements"] = lem.elements;
            rep["maximal_chains"] = lem.chains_checked;
            rep["carrier_lemmas_pass"] = lem.pass;
            if (!lem.pass) rep["carrier_failure"] = lem.failure;
            rep["equivariance_pass"] = equ.pass;
            if (!equ.pass) rep["equivariance_failure"] = equ.failure;
            bool ok = lem.pass && equ.pass;
            rep["verified"] = ok;
            if (!ok) exit_code = 1;
            emit(oc_lemmas, rep, start);
        } else if (cmd_product->parsed()) {
            auto s3 = homw1::products::verify_section3(r, n);
            rep["r"] = r;
            rep["n"] = n;
            Json checks = Json::object();
            for (const auto& [name, ok] : s3.assertions) checks[name] = ok;
            rep["assertions"] = std::move(checks);
            rep["quotient_betti"] = betti_json(s3.quotient_betti);
            rep["subdivisions"] = s3.subdivisions;
            rep["verified"] = s3.pass;
            if (!s3.pass) exit_code = 1;
            emit(oc_product, rep, start);
        } else if (cmd_export->parsed()) {
            homw1::posets::SimplicialComplex c;
            homw1::posets::VertexPerm invol;
            if (!sphere.empty()) {
                auto sc = homw1::products::sphere_complex(std::stoi(sphere));
                c = std::move(sc.complex);
                invol = std::move(sc.involution);
                rep["sphere"] = sphere;
            } else if (!gspec.empty() && !hspec.empty()) {
                auto g = homw1::graphs::parse_graph_spec(gspec);
                auto h = homw1::graphs::parse_graph_spec(hspec);
                auto hp = homw1::homcomplex::hom_poset(g, h, oc_export.guard_elems);
                c = homw1::homcomplex::hom_order_complex(hp, -1, oc_export.guard_simplices);
                rep["g"] = gspec;
                rep["h"] = hspec;
                if (!hp.empty()) {
                    try {
                        auto a = canonical_involution(g, gspec);
                        invol = homw1::posets::VertexPerm(
                            homw1::homcomplex::induced_involution(hp, a));
                    } catch (const homw1::InvalidInput&) {
                        // no canonical involution for this source; complex only
                    }
                }
            } else {
                throw homw1::InvalidInput("export needs --sphere or --g and --h");
            }
            homw1::io::write_text_file(in_file, homw1::io::complex_to_json(c));
            rep["complex_out"] = in_file;
            if (!invol_file.empty()) {
                if (invol.empty() && c.vertex_count() > 0)
                    throw homw1::InvalidInput("no involution available to export");
                homw1::io::write_text_file(invol_file, homw1::io::involution_to_json(invol));
                rep["invol_out"] = invol_file;
            }
            Json counts = Json::array();
            for (int d = 0; d <= c.dim(); ++d) counts.push_back(c.simplex_count(d));
            rep["simplices"] = std::move(counts);
            emit(oc_export, rep, start);
        } else if (cmd_import->parsed()) {
            auto c = homw1::io::complex_from_json(homw1::io::read_text_file(in_file));
            rep["in"] = in_file;
            Json counts = Json::array();
            for (int d = 0; d <= c.dim(); ++d) counts.push_back(c.simplex_count(d));
            rep["simplices"] = std::move(counts);
            rep["dim"] = c.dim();
            rep["euler"] = c.euler_characteristic();
            if (!invol_file.empty()) {
                auto t = homw1::io::involution_from_json(homw1::io::read_text_file(invol_file));
                homw1::posets::check_involution(c, t);
                rep["involution"] = "valid";
            }
            if (with_betti) {
                auto cc = homw1::gf2alg::boundary_matrices(c);
                rep["betti"] = betti_json(homw1::gf2alg::betti(cc));
            }
            emit(oc_import, rep, start);
        }
    } catch (const homw1::GuardExceeded& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 2;
    } catch (const homw1::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const homw1::posets::QuotientError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
