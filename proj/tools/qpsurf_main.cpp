#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qpsurf/fixtures.hpp"
#include "qpsurf/ginzburg.hpp"
#include "qpsurf/json_io.hpp"
#include "qpsurf/ktheory.hpp"
#include "qpsurf/mutation.hpp"
#include "qpsurf/report.hpp"
#include "qpsurf/transport.hpp"

using namespace qpsurf;

namespace {

std::string resolve_path(const std::string& arg) {
    std::ifstream probe(arg);
    if (probe.good()) return arg;
    const char* dir = std::getenv("QPSURF_FIXTURE_DIR");
    if (dir != nullptr) {
        std::string alt = std::string(dir) + "/" + arg;
        std::ifstream probe2(alt);
        if (probe2.good()) return alt;
    }
    return arg;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(resolve_path(path));
    if (!in.good()) throw std::runtime_error("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

Triangulation load_surface(const std::string& arg) {
    for (const std::string& n : fixtures::surface_names())
        if (n == arg) return fixtures::by_name(arg);
    return triangulation_from_json(read_json_file(arg));
}

QP load_qp(const std::string& arg) {
    for (const std::string& n : fixtures::qp_names())
        if (n == arg) return fixtures::qp_by_name(arg);
    return qp_from_json(read_json_file(arg));
}

std::vector<int> parse_boundary(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

std::vector<std::pair<std::string, FlipDir>> parse_flip_path(const std::string& s) {
    std::vector<std::pair<std::string, FlipDir>> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        char dir = item.back();
        if (dir != '+' && dir != '-')
            throw std::runtime_error("path steps must end in + or -: " + item);
        out.push_back({item.substr(0, item.size() - 1),
                       dir == '+' ? FlipDir::Forward : FlipDir::Backward});
    }
    return out;
}

TwistWordK parse_twist_word(const std::string& s) {
    TwistWordK out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        char dir = item.back();
        if (dir != '+' && dir != '-')
            throw std::runtime_error("word steps must end in + or -: " + item);
        out.push_back({item.substr(0, item.size() - 1), dir == '+' ? 1 : -1});
    }
    return out;
}

void emit(const Json& j, const std::string& outfile) {
    if (outfile.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(outfile);
        out << j.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quivers with potential from triangulated decorated marked surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string surface_arg, qp_arg, out_file, format = "dot";
    std::string vertex, arc, path_arg, word_arg, charge_arg, suite;
    int depth = 8;
    int genus = -1;
    std::string boundary_arg;
    std::string dir_arg = "forward";
    bool dump_matrices = false;

    CLI::App* c_surface = app.add_subcommand("surface", "surface and triangulation counts");
    c_surface->add_option("--surface", surface_arg, "builtin fixture name or JSON file");
    c_surface->add_option("--genus", genus, "genus for formula evaluation");
    c_surface->add_option("--boundary", boundary_arg, "marked points per boundary, e.g. 1,1");

    CLI::App* c_qp = app.add_subcommand("qp", "quiver with potential of a triangulation");
    c_qp->add_option("--surface", surface_arg)->required();

    CLI::App* c_mutate = app.add_subcommand("mutate", "QP mutation at a vertex");
    c_mutate->add_option("--qp", qp_arg)->required();
    c_mutate->add_option("--vertex", vertex)->required();

    CLI::App* c_flip = app.add_subcommand("flip", "flip a triangulation arc");
    c_flip->add_option("--surface", surface_arg)->required();
    c_flip->add_option("--arc", arc)->required();
    c_flip->add_option("--dir", dir_arg, "forward|backward");

    CLI::App* c_ginz = app.add_subcommand("ginzburg", "Ginzburg dg algebra presentation");
    c_ginz->add_option("--qp", qp_arg)->required();
    c_ginz->add_flag("--dump-matrices", dump_matrices, "include the differential rule table");

    CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("suite", suite, "d2|ky-hom|resolutions|homotopies|flip-mutation|ext-compat|transport-paths|k0|all")
        ->required();
    c_verify->add_option("--qp", qp_arg, "scope the suite to one QP (name or JSON file)");
    c_verify->add_option("--surface", surface_arg, "scope the suite to one triangulation");
    c_verify->add_option("--vertex", vertex, "restrict checks to one vertex");
    c_verify->add_option("--depth", depth, "exchange-graph depth for surface-scoped suites");
    c_verify->add_flag("--dump-matrices", dump_matrices,
                       "include the transcribed block matrices in the JSON report");

    CLI::App* c_egraph = app.add_subcommand("egraph", "exchange graph export");
    c_egraph->add_option("--surface", surface_arg)->required();
    c_egraph->add_option("--depth", depth);
    c_egraph->add_option("--format", format, "dot|json");
    c_egraph->add_option("-o,--out", out_file);

    CLI::App* c_ext = app.add_subcommand("ext", "Ext-algebra tables and transports");
    CLI::App* c_ext_table = c_ext->add_subcommand("table", "angle-basis table");
    c_ext_table->add_option("--surface", surface_arg)->required();
    CLI::App* c_ext_tr = c_ext->add_subcommand("transport", "path transport");
    c_ext_tr->add_option("--surface", surface_arg)->required();
    c_ext_tr->add_option("--path", path_arg, "flip path, e.g. a1_3+,a1_4-")->required();

    CLI::App* c_twist = app.add_subcommand("twist", "spherical twists on K0");
    CLI::App* c_twist_apply = c_twist->add_subcommand("apply", "apply a twist word");
    c_twist_apply->add_option("--word", word_arg, "e.g. 1+,2-,1+")->required();
    c_twist_apply->add_option("--qp", qp_arg)->required();
    c_twist_apply->add_option("--charge", charge_arg, "central charge JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_surface->parsed()) {
            Json j;
            if (!surface_arg.empty()) {
                Triangulation t = load_surface(surface_arg);
                j["arcs"] = t.arcs();
                j["n"] = t.n_arcs();
                j["triangles"] = t.n_triangles();
                j["marked"] = t.marked_count();
                j["boundary"] = t.boundary_sides();
            } else if (genus >= 0 && !boundary_arg.empty()) {
                MarkedSurface s(genus, parse_boundary(boundary_arg));
                j["n"] = s.arc_count();
                j["decorations"] = s.decoration_count();
                j["marked"] = s.marked_total();
            } else {
                std::cerr << "surface: need --surface or --genus/--boundary\n";
                return 2;
            }
            emit(j, out_file);
            return 0;
        }
        if (c_qp->parsed()) {
            emit(qp_to_json(load_surface(surface_arg).qp()), out_file);
            return 0;
        }
        if (c_mutate->parsed()) {
            QP qp = load_qp(qp_arg);
            emit(qp_to_json(mutate(qp, vertex)), out_file);
            return 0;
        }
        if (c_flip->parsed()) {
            Triangulation t = load_surface(surface_arg);
            FlipDir dir = dir_arg == "backward" ? FlipDir::Backward : FlipDir::Forward;
            emit(triangulation_to_json(t.flip(arc, dir)), out_file);
            return 0;
        }
        if (c_ginz->parsed()) {
            QP qp = load_qp(qp_arg);
            GinzburgPresentation g = GinzburgPresentation::make(qp);
            Json j;
            Json gens = Json::array();
            for (const std::string& id : g.table().gen_order()) {
                const GenInfo& gi = g.table().gen(id);
                Json e;
                e["id"] = gi.id;
                e["src"] = gi.src;
                e["tgt"] = gi.tgt;
                e["degree"] = gi.degree;
                if (dump_matrices) e["d"] = g.rule(id).to_string();
                gens.push_back(e);
            }
            j["generators"] = gens;
            D2Report rep = check_d_squared(g);
            j["d_squared"] = rep.ok;
            emit(j, out_file);
            return 0;
        }
        if (c_verify->parsed()) {
            std::vector<std::string> names =
                suite == "all" ? suite_names() : std::vector<std::string>{suite};
            bool ok = true;
            Json all = Json::array();
            for (const std::string& n : names) {
                VerificationReport r;
                if (!qp_arg.empty())
                    r = run_suite_on_qp(n, qp_arg, load_qp(qp_arg), vertex);
                else if (!surface_arg.empty())
                    r = run_suite_on_surface(n, surface_arg, load_surface(surface_arg), depth);
                else
                    r = run_suite(n);
                ok = ok && r.all_ok();
                Json rj = report_to_json(r);
                if (dump_matrices && !qp_arg.empty())
                    rj["matrices"] = dump_matrices_json(load_qp(qp_arg));
                if (as_json)
                    all.push_back(rj);
                else
                    std::cout << report_to_text(r);
            }
            if (as_json) std::cout << all.dump(2) << "\n";
            return ok ? 0 : 1;
        }
        if (c_egraph->parsed()) {
            Triangulation t = load_surface(surface_arg);
            ExchangeGraph g = exchange_graph_bfs(t, depth);
            if (format == "dot") {
                if (out_file.empty())
                    std::cout << egraph_to_dot(g);
                else
                    std::ofstream(out_file) << egraph_to_dot(g);
            } else {
                emit(egraph_to_json(g), out_file);
            }
            return 0;
        }
        if (c_ext->parsed()) {
            if (c_ext_table->parsed()) {
                Triangulation t = load_surface(surface_arg);
                emit(ext_table_to_json(ExtTable::of(t)), out_file);
                return 0;
            }
            if (c_ext_tr->parsed()) {
                Triangulation t = load_surface(surface_arg);
                TransportMap m = path_transport(t, parse_flip_path(path_arg));
                emit(transport_to_json(m), out_file);
                return 0;
            }
            std::cerr << "ext: need a subcommand (table|transport)\n";
            return 2;
        }
        if (c_twist->parsed()) {
            if (c_twist_apply->parsed()) {
                QP qp = load_qp(qp_arg);
                K0Lattice l = K0Lattice::of(qp.quiver);
                TwistWordK w = parse_twist_word(word_arg);
                Json j;
                IntMat m = word_matrix(l, w);
                j["basis"] = l.basis();
                j["matrix"] = m;
                j["unimodular"] = (det3x3_or_general(m) == 1 || det3x3_or_general(m) == -1);
                j["chi_preserved"] = l.preserves_chi(m);
                if (!charge_arg.empty()) {
                    CentralCharge z = charge_from_json(read_json_file(charge_arg));
                    j["charge"] = charge_to_json(twist_charge(l, w, z));
                }
                emit(j, out_file);
                return 0;
            }
            std::cerr << "twist: need a subcommand (apply)\n";
            return 2;
        }
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
