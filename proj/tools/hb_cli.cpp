#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hopfbracket/invariants.hpp"
#include "hopfbracket/torus.hpp"

using namespace hb;
using nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ArrowDiagram load_diagram(const std::string& path) {
    std::string text = slurp(path);
    // accept either the JSON diagram format or PD text
    for (char ch : text) {
        if (std::isspace(ch)) continue;
        if (ch == '{') return from_json(text);
        break;
    }
    return import_pd(text);
}

void emit(const ordered_json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hopfbracket: exact Kauffman bracket engine for arrow diagrams in the solid torus"};
    app.require_subcommand(1);

    std::string in_path, out_path, spec_json, table_path, target_path;
    int root_k = 0, kmod = 5, max_crossings = 20, components = 1, torus_n = 0;
    bool use_float = false, exact = true;

    auto* cbr = app.add_subcommand("bracket", "Kauffman bracket and skein vector of a diagram");
    cbr->add_option("file", in_path)->required();
    cbr->add_option("--max-crossings", max_crossings);
    cbr->add_option("--out", out_path);

    auto* cjn = app.add_subcommand("jones", "Jones polynomial (t-form), optionally at a root of unity");
    cjn->add_option("file", in_path)->required();
    cjn->add_option("--root", root_k);
    cjn->add_flag("--float", use_float);
    cjn->add_flag("--exact", exact);
    cjn->add_option("--out", out_path);

    auto* cmv = app.add_subcommand("move", "apply a move");
    auto* cap = cmv->add_subcommand("apply", "apply a move spec to a diagram");
    cap->add_option("file", in_path)->required();
    cap->add_option("--spec", spec_json)->required();
    cap->add_option("--out", out_path);

    auto* cel = app.add_subcommand("eliminate", "eliminate all arrows");
    cel->add_option("file", in_path)->required();
    cel->add_option("--out", out_path);

    auto* csi = app.add_subcommand("simplify", "greedy reduction, optionally modulo k");
    csi->add_option("file", in_path)->required();
    int simp_k = 0;
    csi->add_option("--k", simp_k);
    csi->add_option("--out", out_path);

    auto* ccl = app.add_subcommand("classify", "partition a knot table by k-move signatures");
    ccl->add_option("--k", kmod)->required();
    ccl->add_option("--table", table_path)->required();
    ccl->add_option("--max-crossings", max_crossings);
    ccl->add_option("--out", out_path);

    auto* chb = app.add_subcommand("hopf-bound", "certify a lower bound on the Hopf crossing number");
    chb->add_option("--k", kmod)->required();
    chb->add_option("--max-crossings", max_crossings)->required();
    chb->add_option("--components", components);
    chb->add_option("--target", target_path)->required();
    chb->add_option("--out", out_path);

    auto* cto = app.add_subcommand("torus", "the T_n family");
    cto->add_option("--n", torus_n)->required();
    cto->add_option("--root", root_k);
    cto->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (cbr->parsed()) {
            ArrowDiagram d = load_diagram(in_path);
            BracketOptions opt;
            opt.max_crossings = max_crossings;
            BracketResult r = bracket(d, opt);
            ordered_json j;
            j["schema_version"] = 1;
            j["bracket"] = r.bracket.str();
            ordered_json sk = ordered_json::object();
            for (auto& [n, cpoly] : r.skein) sk[std::to_string(n)] = cpoly.str();
            j["skein"] = sk;
            j["states"] = r.states_evaluated;
            emit(j, out_path);
        } else if (cjn->parsed()) {
            ArrowDiagram d = load_diagram(in_path);
            OrientedDiagram od = OrientedDiagram::canonical(d);
            ordered_json j;
            j["schema_version"] = 1;
            if (root_k >= 1) {
                CycloValue v = jones_at_root(od, root_k);
                j["root"] = root_k;
                j["ring_order"] = 4 * root_k;
                j["coeffs"] = ordered_json::array();
                for (auto& cc : v.coeffs()) j["coeffs"].push_back(cc.str());
                if (use_float) {
                    auto z = v.to_complex();
                    j["approx"] = {z.real(), z.imag()};
                }
            } else {
                j["jones"] = jones(od).str();
            }
            emit(j, out_path);
        } else if (cap->parsed()) {
            ArrowDiagram d = load_diagram(in_path);
            MoveSpec m = MoveSpec::from_json(spec_json);
            MoveResult r = apply_move(d, m);
            ordered_json j;
            j["schema_version"] = 1;
            j["diagram"] = ordered_json::parse(to_json(r.d));
            j["canonical"] = canonical_form(r.d);
            emit(j, out_path);
        } else if (cel->parsed()) {
            ArrowDiagram d = load_diagram(in_path);
            auto [res, trace] = eliminate_arrows(d);
            ordered_json j;
            j["schema_version"] = 1;
            j["diagram"] = ordered_json::parse(to_json(res));
            j["trace"] = ordered_json::parse(trace.to_json());
            emit(j, out_path);
        } else if (csi->parsed()) {
            ArrowDiagram d = load_diagram(in_path);
            MoveTrace trace;
            ArrowDiagram res = simplify(d, simp_k >= 1 ? std::optional<int>(simp_k) : std::nullopt, &trace);
            ordered_json j;
            j["schema_version"] = 1;
            j["diagram"] = ordered_json::parse(to_json(res));
            j["trace"] = ordered_json::parse(trace.to_json());
            emit(j, out_path);
        } else if (ccl->parsed()) {
            auto table = load_table_csv(table_path);
            BracketOptions opt;
            opt.max_crossings = max_crossings;
            ClassReport rep = classify_table(table, kmod, opt);
            rep.table = table_path;
            if (out_path.empty())
                std::cout << rep.to_json() << "\n";
            else {
                std::ofstream out(out_path);
                out << rep.to_json() << "\n";
            }
        } else if (chb->parsed()) {
            ArrowDiagram d = load_diagram(target_path);
            OrientedDiagram od = OrientedDiagram::canonical(d);
            HopfBoundCertificate cert = hopf_lower_bound(od, target_path, kmod, max_crossings, components);
            if (out_path.empty())
                std::cout << cert.to_json() << "\n";
            else {
                std::ofstream out(out_path);
                out << cert.to_json() << "\n";
            }
        } else if (cto->parsed()) {
            ordered_json j;
            j["schema_version"] = 1;
            j["n"] = torus_n;
            j["jones"] = vt_formula(torus_n).str();
            j["diagram"] = ordered_json::parse(to_json(tn_diagram(torus_n)));
            if (root_k >= 1) {
                OrientedDiagram od = OrientedDiagram::canonical(tn_diagram(torus_n));
                CycloValue v = jones_at_root(od, root_k);
                j["root"] = root_k;
                j["coeffs"] = ordered_json::array();
                for (auto& cc : v.coeffs()) j["coeffs"].push_back(cc.str());
            }
            emit(j, out_path);
        }
    } catch (const TooManyCrossings& e) {
        ordered_json j;
        j["error"] = e.what();
        std::cerr << j.dump() << "\n";
        return 2;
    } catch (const DiagramError& e) {
        ordered_json j;
        j["error"] = e.what();
        j["code"] = e.code;
        std::cerr << j.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        ordered_json j;
        j["error"] = e.what();
        std::cerr << j.dump() << "\n";
        return 1;
    }
    return 0;
}
