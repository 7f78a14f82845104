#include "altlink/cli.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "altlink/classify.hpp"
#include "altlink/diagram.hpp"
#include "altlink/hypgeom.hpp"
#include "altlink/realize.hpp"

namespace altlink::cli {

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::string read_pd_source(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open '" + path + "'");
        ss << in.rdbuf();
    }
    return ss.str();
}

SolidType parse_solid(std::string name) {
    for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (name == "octahedron") return SolidType::Octahedron;
    if (name == "cuboctahedron") return SolidType::Cuboctahedron;
    if (name == "icosidodecahedron") return SolidType::Icosidodecahedron;
    throw InputError("unknown solid '" + name +
                     "'; expected octahedron, cuboctahedron or icosidodecahedron");
}

std::string histogram_line(const std::vector<int>& hist) {
    std::string s;
    for (std::size_t k = 0; k < hist.size(); ++k)
        if (hist[k] > 0) {
            if (!s.empty()) s += ' ';
            s += std::to_string(k) + "^" + std::to_string(hist[k]);
        }
    return s;
}

nlohmann::json analysis_json(const DiagramAnalysis& a) {
    return {{"crossings", a.crossing_count},
            {"edges", a.edge_count},
            {"faces", a.face_count},
            {"link_components", a.component_count},
            {"planar", a.planar},
            {"connected", a.connected},
            {"alternating", a.alternating},
            {"reduced", a.reduced},
            {"prime", a.prime},
            {"torus_2q", a.torus2q},
            {"has_bigon", a.has_bigon},
            {"face_size_histogram", a.face_size_histogram}};
}

void print_analysis(std::ostream& out, const DiagramAnalysis& a) {
    out << "crossings: " << a.crossing_count << "\n"
        << "edges: " << a.edge_count << "\n"
        << "faces: " << a.face_count << "\n"
        << "link components: " << a.component_count << "\n"
        << "planar: " << yesno(a.planar) << "\n"
        << "connected: " << yesno(a.connected) << "\n"
        << "alternating: " << yesno(a.alternating) << "\n"
        << "reduced: " << yesno(a.reduced) << "\n"
        << "prime: " << yesno(a.prime) << "\n"
        << "(2,q)-torus diagram: " << yesno(a.torus2q) << "\n"
        << "has bigon: " << yesno(a.has_bigon) << "\n"
        << "face sizes: " << histogram_line(a.face_size_histogram) << "\n";
}

nlohmann::json classification_json(const Classification& c) {
    nlohmann::json j{{"verdict", verdict_display(c)}, {"reason", c.reason}};
    if (c.solid) j["solid"] = solid_name(*c.solid);
    return j;
}

void print_classification(std::ostream& out, const Classification& c, bool json) {
    if (json) {
        out << classification_json(c).dump(2) << "\n";
        return;
    }
    out << verdict_display(c) << "\n";
    if (!c.reason.empty()) out << "reason: " << c.reason << "\n";
}

void print_report(std::ostream& out, const RealizationReport& rep) {
    out << "solid: " << solid_name(rep.solid) << "\n"
        << "vertices: " << rep.vertex_count << "  edges: " << rep.edge_count
        << "  faces: " << rep.face_count << "\n"
        << "max dihedral error: " << fmt(rep.max_dihedral_error) << "\n"
        << "max face residual: " << fmt(rep.max_face_residual) << "\n"
        << "max cusp residual: " << fmt(rep.max_cusp_residual) << "\n"
        << "edge classes: " << rep.edge_class_count
        << (rep.edge_classes_size4 ? " (all of size 4)" : " (NOT all of size 4)") << "\n"
        << "volume: " << fmt(rep.polyhedron_vol) << "\n"
        << "vol_perp: " << fmt(rep.link_volume) << "\n";
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"alternating links with two totally geodesic checkerboard surfaces"};
    app.require_subcommand(1);

    bool json = false;

    // analyze
    std::string analyze_pd;
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "combinatorial diagram report");
    analyze_cmd->add_option("--pd", analyze_pd, "PD code file, or - for stdin")->required();

    // classify
    std::string classify_pd, classify_solid;
    std::vector<int> classify_weaving;
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "decide the totally geodesic classification");
    CLI::Option* opt_pd =
        classify_cmd->add_option("--pd", classify_pd, "PD code file, or - for stdin");
    CLI::Option* opt_solid =
        classify_cmd->add_option("--solid", classify_solid, "reference solid diagram");
    CLI::Option* opt_weaving = classify_cmd
                                   ->add_option("--weaving", classify_weaving,
                                                "weaving link W(p,q)")
                                   ->expected(2);
    opt_pd->excludes(opt_solid)->excludes(opt_weaving);
    opt_solid->excludes(opt_weaving);

    // weaving
    int weaving_p = 0, weaving_q = 0;
    bool want_pd = false;
    CLI::App* weaving_cmd = app.add_subcommand("weaving", "build a weaving diagram W(p,q)");
    weaving_cmd->add_option("--p", weaving_p, "braid strands")->required();
    weaving_cmd->add_option("--q", weaving_q, "braid word repetitions")->required();
    weaving_cmd->add_flag("--emit-pd", want_pd, "print the PD code");

    // census
    int max_p = 8, max_q = 8;
    bool csv = false;
    CLI::App* census_cmd = app.add_subcommand("census", "classify all W(p,q) in a range");
    census_cmd->add_option("--max-p", max_p, "largest p (default 8)");
    census_cmd->add_option("--max-q", max_q, "largest q (default 8)");
    census_cmd->add_flag("--csv", csv, "emit CSV");

    // realize
    std::string realize_solid;
    double tol = 1e-9;
    CLI::App* realize_cmd =
        app.add_subcommand("realize", "certify the right-angled ideal realization");
    realize_cmd->add_option("--solid", realize_solid, "which solid")->required();
    realize_cmd->add_option("--tol", tol, "verification tolerance (default 1e-9)");

    // volume
    std::string volume_solid;
    CLI::App* volume_cmd = app.add_subcommand("volume", "polyhedron and link volumes");
    volume_cmd->add_option("--solid", volume_solid, "which solid")->required();

    // crossratio
    int ngon = 0;
    CLI::App* crossratio_cmd =
        app.add_subcommand("crossratio", "regular ideal n-gon cross-ratio target");
    crossratio_cmd->add_option("--n", ngon, "polygon size")->required();

    for (CLI::App* cmd : {analyze_cmd, classify_cmd, weaving_cmd, census_cmd, realize_cmd,
                          volume_cmd, crossratio_cmd})
        cmd->add_flag("--json", json, "emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*analyze_cmd) {
            DiagramAnalysis a = analyze(parse_pd(read_pd_source(analyze_pd)));
            if (json)
                out << analysis_json(a).dump(2) << "\n";
            else
                print_analysis(out, a);
        } else if (*classify_cmd) {
            Classification c;
            if (!classify_pd.empty())
                c = classify(parse_pd(read_pd_source(classify_pd)));
            else if (!classify_solid.empty())
                c = classify(reference_diagram(parse_solid(classify_solid)));
            else if (classify_weaving.size() == 2)
                c = classify(weaving_diagram(classify_weaving[0], classify_weaving[1]));
            else
                throw InputError("classify needs one of --pd, --solid, --weaving");
            print_classification(out, c, json);
        } else if (*weaving_cmd) {
            Diagram d = weaving_diagram(weaving_p, weaving_q);
            DiagramAnalysis a = analyze(d);
            if (json) {
                nlohmann::json j{{"p", weaving_p},
                                 {"q", weaving_q},
                                 {"crossings", a.crossing_count},
                                 {"link_components", a.component_count}};
                if (want_pd) j["pd"] = emit_pd(d);
                out << j.dump(2) << "\n";
            } else {
                out << "W(" << weaving_p << "," << weaving_q << "): " << a.crossing_count
                    << " crossings, " << a.component_count << " link components\n";
                if (want_pd) out << emit_pd(d) << "\n";
            }
        } else if (*census_cmd) {
            auto rows = weaving_census(max_p, max_q);
            if (json)
                out << census_json(rows);
            else if (csv)
                out << census_csv(rows);
            else
                for (const CensusRow& r : rows) {
                    out << "W(" << r.p << "," << r.q << ") " << r.crossings << " crossings: "
                        << verdict_display(r.result);
                    if (!r.result.reason.empty()) out << " [" << r.result.reason << "]";
                    out << "\n";
                }
        } else if (*realize_cmd) {
            RealizationReport rep = verify_solid(parse_solid(realize_solid));
            if (json)
                out << report_json(rep);
            else
                print_report(out, rep);
            if (rep.max_dihedral_error > tol || rep.max_face_residual > tol ||
                rep.max_cusp_residual > tol || !rep.edge_classes_size4)
                throw InternalError("realization checks exceeded tolerance " + fmt(tol));
        } else if (*volume_cmd) {
            SolidType s = parse_solid(volume_solid);
            double vol = polyhedron_volume(inscribe_solid(s));
            if (json) {
                nlohmann::json j{{"solid", solid_name(s)},
                                 {"volume", vol},
                                 {"vol_perp", 2.0 * vol}};
                out << j.dump(2) << "\n";
            } else {
                out << "vol: " << fmt(vol) << "\n"
                    << "vol_perp: " << fmt(2.0 * vol) << "\n";
            }
        } else if (*crossratio_cmd) {
            ExtendedComplex target = regular_ngon_target(ngon);
            std::string text = target.is_infinity() ? "inf" : fmt(target.value().real());
            if (json) {
                nlohmann::json j{{"n", ngon}, {"target", text}};
                out << j.dump(2) << "\n";
            } else {
                out << text << "\n";
            }
        }
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace altlink::cli
