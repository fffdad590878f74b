// tribill: exact invariants of triangular billiards surfaces.
//
// Subcommands: info, fingerprint, svg, search.  All exact values are
// serialized as strings (rationals "p/q", angles "p/q·pi"); decimal values
// appear only in "approx" annotations with 12 significant digits.  Exit
// codes: 0 success, 1 usage, 2 domain error, 3 broken internal invariant
// (including any Undecided pair in a search).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tribill/errors.hpp"
#include "tribill/fingerprint.hpp"
#include "tribill/holonomy.hpp"
#include "tribill/j_invariant.hpp"
#include "tribill/search.hpp"
#include "tribill/signature.hpp"
#include "tribill/svg.hpp"
#include "tribill/unfolding.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tribill;

constexpr const char* kToolName = "tribill";
constexpr const char* kToolVersion = "0.1.0";

std::string approx12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

ordered_json envelope(const std::string& command) {
    ordered_json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["command"] = command;
    return j;
}

ordered_json json_signature(const TriangleSignature& sig) {
    ordered_json j;
    j["label"] = to_string(sig);
    j["entries"] = sig.entries();
    j["Q"] = sig.Q();
    j["canonical"] = sig.canonical().entries();
    return j;
}

ordered_json json_real(const RealCyclotomic& v) {
    ordered_json j;
    j["conductor"] = v.conductor();
    std::vector<std::string> coeffs;
    for (const auto& c : v.value().coefficients()) coeffs.push_back(to_string(c));
    j["coefficients"] = coeffs;
    j["approx"] = approx12(v.to_double());
    return j;
}

std::string angle_string(const Rational& of_pi) { return to_string(AngleRat(of_pi)); }

int cmd_info(long a1, long a2, long a3) {
    TriangleSignature sig(a1, a2, a3);
    ordered_json j = envelope("info");
    j["signature"] = json_signature(sig);

    ordered_json classes = ordered_json::array();
    for (const auto& c : sig.vertex_classes()) {
        ordered_json e;
        e["vertex"] = c.index;
        e["angle"] = angle_string(sig.angle(c.index));
        e["size"] = c.size;
        e["cone_turns"] = c.cone_turns;
        e["cone_angle"] = angle_string(Rational(2 * c.cone_turns));
        e["singular"] = c.singular;
        classes.push_back(e);
    }
    j["classes"] = classes;
    j["genus"] = sig.genus();
    j["singular_points"] = sig.num_singular_points();
    j["copies"] = 2 * sig.Q();

    ordered_json shape;
    auto apexes = sig.isosceles_apexes();
    shape["isosceles"] = !apexes.empty();
    if (apexes.size() == 1)
        shape["apex"] = apexes.front();
    else
        shape["apex"] = nullptr;
    int right = 0;
    shape["right"] = sig.has_right_angle(&right);
    if (right)
        shape["right_vertex"] = right;
    else
        shape["right_vertex"] = nullptr;
    j["shape"] = shape;

    auto h = holonomy_field(sig);
    j["holonomy"] = {{"conductor", h.conductor}, {"degree", h.degree}};

    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_fingerprint(long a1, long a2, long a3, int vertex, const std::vector<int>& punctures) {
    TriangleSignature sig(a1, a2, a3);
    if (vertex < 1 || vertex > 3) throw domain_error("--vertex must be 1, 2 or 3");
    std::set<int> punctured(punctures.begin(), punctures.end());

    Fingerprint fp = fingerprint(sig, vertex, punctured);

    ordered_json j = envelope("fingerprint");
    j["signature"] = json_signature(sig);
    j["vertex"] = vertex;
    j["punctured"] = punctured;

    ordered_json f;
    f["type"] = fp.fp_type == FingerprintType::I ? "I" : "II";
    std::vector<std::string> angles;
    for (const auto& a : fp.angle_set) angles.push_back(to_string(a));
    f["angle_set"] = angles;
    f["cone_angle"] = to_string(fp.cone_angle);
    f["length"] = json_real(fp.length);
    f["shortest_targets"] = fp.shortest_targets;
    j["fingerprint"] = f;

    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_svg(long a1, long a2, long a3, const std::string& out_path, int overlay_vertex) {
    TriangleSignature sig(a1, a2, a3);
    UnfoldedSurface surface(sig);

    SvgOptions options;
    if (overlay_vertex) {
        if (overlay_vertex < 1 || overlay_vertex > 3)
            throw domain_error("--fingerprint vertex must be 1, 2 or 3");
        options.overlay = fingerprint_overlay(surface, overlay_vertex);
    }
    std::string doc = to_svg(surface, options);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw domain_error("cannot open output file: " + out_path);
    out << doc;
    out.close();

    ordered_json j = envelope("svg");
    j["signature"] = json_signature(sig);
    j["output"] = out_path;
    j["polygons"] = 2 * sig.Q();
    j["overlay_segments"] = options.overlay.size();
    std::cout << j.dump(2) << "\n";
    return 0;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

ordered_json json_descriptor(const CoverDescriptor& d) {
    ordered_json j;
    j["source"] = to_string(d.source);
    j["target"] = to_string(d.target);
    j["degree"] = d.degree;
    j["kind"] = to_string(d.kind);
    j["balanced"] = d.balanced;
    ordered_json prof = ordered_json::array();
    for (const auto& e : d.ramification_profile) {
        prof.push_back({{"source_class", e.source_class},
                        {"target_class", e.target_class},
                        {"multiplicity", e.multiplicity},
                        {"count", e.count}});
    }
    j["ramification"] = prof;
    return j;
}

int cmd_search(long qmax, const std::string& format) {
    SearchReport report = search(qmax);

    if (format == "csv") {
        std::string out = "source,target,verdict,degree,kind,reasons\n";
        for (const auto& p : report.in_family) {
            for (const auto& d : p.verdict.covers) {
                out += to_string(d.source) + "," + to_string(d.target) + ",InFamily," +
                       std::to_string(d.degree) + "," + to_string(d.kind) + ",\"\"\n";
            }
        }
        for (const auto& p : report.undecided) {
            std::string diag;
            for (std::size_t i = 0; i < p.verdict.diagnostics.size(); ++i) {
                if (i) diag += "; ";
                diag += p.verdict.diagnostics[i];
            }
            out += to_string(p.source) + "," + to_string(p.target) + ",Undecided,,," +
                   csv_quote(diag) + "\n";
        }
        std::cout << out;
    } else {
        ordered_json j = envelope("search");
        j["qmax"] = report.q_max;
        j["pairs_evaluated"] = report.pairs_evaluated;
        ordered_json fam = ordered_json::array();
        for (const auto& p : report.in_family)
            for (const auto& d : p.verdict.covers) fam.push_back(json_descriptor(d));
        j["in_family"] = fam;
        ordered_json counts = ordered_json::object();
        for (const auto& [reason, count] : report.impossible_by_reason) counts[reason] = count;
        j["impossible_by_reason"] = counts;
        ordered_json und = ordered_json::array();
        for (const auto& p : report.undecided) {
            und.push_back({{"source", to_string(p.source)},
                           {"target", to_string(p.target)},
                           {"diagnostics", p.verdict.diagnostics}});
        }
        j["undecided"] = und;
        std::cout << j.dump(2) << "\n";
    }
    return report.undecided.empty() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants and cover classification of triangular billiards surfaces"};
    app.require_subcommand(1);

    long a1 = 0, a2 = 0, a3 = 0;

    auto* info = app.add_subcommand("info", "Vertex classes, genus, shape and holonomy field");
    info->add_option("a1", a1, "first angle numerator")->required();
    info->add_option("a2", a2, "second angle numerator")->required();
    info->add_option("a3", a3, "third angle numerator")->required();

    int vertex = 0;
    std::vector<int> punctures;
    auto* fp = app.add_subcommand("fingerprint", "Fingerprint of one vertex class");
    fp->add_option("a1", a1)->required();
    fp->add_option("a2", a2)->required();
    fp->add_option("a3", a3)->required();
    fp->add_option("--vertex", vertex, "vertex class to fingerprint (1-3)")->required();
    fp->add_option("--puncture", punctures, "singular classes to remove first");

    std::string out_path;
    int overlay_vertex = 0;
    auto* svg = app.add_subcommand("svg", "Draw the unfolded surface");
    svg->add_option("a1", a1)->required();
    svg->add_option("a2", a2)->required();
    svg->add_option("a3", a3)->required();
    svg->add_option("-o,--output", out_path, "output file")->required();
    svg->add_option("--fingerprint", overlay_vertex, "overlay shortest geodesics of this vertex class");

    long qmax = 0;
    std::string format = "json";
    auto* se = app.add_subcommand("search", "Classify translation covers up to a bound");
    se->add_option("--qmax", qmax, "largest source Q to consider")->required();
    se->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (info->parsed()) return cmd_info(a1, a2, a3);
        if (fp->parsed()) return cmd_fingerprint(a1, a2, a3, vertex, punctures);
        if (svg->parsed()) return cmd_svg(a1, a2, a3, out_path, overlay_vertex);
        if (se->parsed()) return cmd_search(qmax, format);
    } catch (const tribill::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
