#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "tribill/fingerprint.hpp"
#include "tribill/rational.hpp"

using namespace tribill;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(TRIBILL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Rational angle_rational(const std::string& s) {
    auto pos = s.find("·pi");
    REQUIRE(pos != std::string::npos);
    return rational_from_string(s.substr(0, pos));
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("info emits a deterministic dossier") {
    auto a = run_cli("info 3 4 5");
    auto b = run_cli("info 3 4 5");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    json j = json::parse(a.out);
    CHECK(j["tool"]["name"] == "tribill");
    CHECK(j["command"] == "info");
    CHECK(j["signature"]["label"] == "X(3,4,5)");
    CHECK(j["signature"]["Q"] == 12);
    CHECK(j["genus"] == 3);
    CHECK(j["singular_points"] == 1);
    CHECK(j["copies"] == 24);
    CHECK(j["shape"]["right"] == false);
    CHECK(j["shape"]["right_vertex"].is_null());
    CHECK(j["shape"]["isosceles"] == false);
    CHECK(j["holonomy"]["conductor"] == 12);
    CHECK(j["holonomy"]["degree"] == 2);

    REQUIRE(j["classes"].size() == 3);
    const auto& c3 = j["classes"][2];
    CHECK(c3["vertex"] == 3);
    CHECK(c3["angle"] == "5/12·pi");
    CHECK(c3["size"] == 1);
    CHECK(c3["cone_turns"] == 5);
    CHECK(c3["cone_angle"] == "10·pi");
    CHECK(c3["singular"] == true);
    CHECK(j["classes"][0]["singular"] == false);
}

TEST_CASE("non-canonical entry order is reported alongside the canonical form") {
    json j = json::parse(run_cli("info 5 4 3").out);
    CHECK(j["signature"]["label"] == "X(5,4,3)");
    CHECK(j["signature"]["entries"] == json::array({5, 4, 3}));
    CHECK(j["signature"]["canonical"] == json::array({3, 4, 5}));
}

TEST_CASE("shape flags for a right isosceles-free triangle and an apex") {
    json r = json::parse(run_cli("info 2 3 5").out);
    CHECK(r["shape"]["right"] == true);
    CHECK(r["shape"]["right_vertex"] == 3);
    CHECK(r["shape"]["isosceles"] == false);

    json i = json::parse(run_cli("info 4 3 3").out);
    CHECK(i["shape"]["isosceles"] == true);
    CHECK(i["shape"]["apex"] == 1);
    CHECK(i["shape"]["right"] == false);
}

TEST_CASE("fingerprint output round-trips into exact values") {
    auto r = run_cli("fingerprint 3 4 5 --vertex 3");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    const auto& f = j["fingerprint"];
    CHECK(f["type"] == "II");
    CHECK(f["angle_set"] == json::array({"1/3·pi", "1/2·pi"}));
    CHECK(f["cone_angle"] == "10·pi");
    CHECK(f["shortest_targets"] == json::array({3}));

    // angle strings parse back to the exact rationals
    CHECK(angle_rational(f["angle_set"][0]) == make_rational(1, 3));
    CHECK(angle_rational(f["angle_set"][1]) == make_rational(1, 2));
    CHECK(angle_rational(f["cone_angle"]) == Rational(10));

    // the serialized length matches the library value coefficient by coefficient
    auto fp = fingerprint(TriangleSignature(3, 4, 5), 3);
    CHECK(f["length"]["conductor"] == fp.length.conductor());
    const auto& coeffs = fp.length.value().coefficients();
    REQUIRE(f["length"]["coefficients"].size() == coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        CHECK(rational_from_string(f["length"]["coefficients"][i].get<std::string>()) ==
              coeffs[i]);
    double approx = std::stod(f["length"]["approx"].get<std::string>());
    CHECK(approx == doctest::Approx(fp.length.to_double()).epsilon(1e-9));
}

TEST_CASE("fingerprint respects punctures") {
    auto r = run_cli("fingerprint 4 3 3 --vertex 2 --puncture 1");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["punctured"] == json::array({1}));
    CHECK(j["fingerprint"]["type"] == "I");
    CHECK(j["fingerprint"]["angle_set"] == json::array({"3/5·pi"}));
    CHECK(j["fingerprint"]["shortest_targets"] == json::array({3}));
}

TEST_CASE("search csv is stable down to the byte") {
    auto a = run_cli("search --qmax 8 --format csv");
    auto b = run_cli("search --qmax 8 --format csv");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out ==
          "source,target,verdict,degree,kind,reasons\n"
          "X(1,1,3),X(2,3,5),InFamily,1,Equivalence,\"\"\n"
          "X(1,2,2),X(1,4,5),InFamily,1,Equivalence,\"\"\n"
          "X(1,1,4),X(1,1,1),InFamily,2,Composition,\"\"\n"
          "X(1,1,4),X(1,2,3),InFamily,2,F1,\"\"\n"
          "X(1,1,5),X(2,5,7),InFamily,1,Equivalence,\"\"\n"
          "X(1,3,3),X(1,6,7),InFamily,1,Equivalence,\"\"\n"
          "X(2,2,3),X(3,4,7),InFamily,1,Equivalence,\"\"\n"
          "X(1,1,6),X(1,3,4),InFamily,2,F1,\"\"\n"
          "X(2,3,3),X(1,3,4),InFamily,2,F2,\"\"\n");
}

TEST_CASE("search json carries the report") {
    auto r = run_cli("search --qmax 8");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["command"] == "search");
    CHECK(j["qmax"] == 8);
    CHECK(j["pairs_evaluated"].get<long>() > 0);
    CHECK(j["in_family"].size() == 9);
    CHECK(j["undecided"].empty());
    CHECK(j["impossible_by_reason"].is_object());
    const auto& first = j["in_family"][0];
    CHECK(first["source"] == "X(1,1,3)");
    CHECK(first["target"] == "X(2,3,5)");
    CHECK(first["degree"] == 1);
    CHECK(first["kind"] == "Equivalence");
    CHECK(first["balanced"] == true);
    REQUIRE(first["ramification"].size() == 1);
    CHECK(first["ramification"][0]["source_class"] == 3);
    CHECK(first["ramification"][0]["target_class"] == 2);
    CHECK(first["ramification"][0]["multiplicity"] == 1);
    CHECK(first["ramification"][0]["count"] == 1);
}

TEST_CASE("svg writes a deterministic drawing") {
    const std::string path = "/tmp/tribill_cli_test.svg";
    auto a = run_cli("svg 3 4 5 -o " + path + " --fingerprint 3");
    REQUIRE(a.exit_code == 0);
    std::string doc1 = slurp(path);
    REQUIRE(!doc1.empty());
    CHECK(doc1.rfind("<svg", 0) == 0);

    auto b = run_cli("svg 3 4 5 -o " + path + " --fingerprint 3");
    REQUIRE(b.exit_code == 0);
    CHECK(slurp(path) == doc1);

    json j = json::parse(a.out);
    CHECK(j["polygons"] == 24);
    CHECK(j["overlay_segments"].get<long>() > 0);
    CHECK(j["output"] == path);
    std::remove(path.c_str());
}

TEST_CASE("exit codes distinguish usage, domain and success") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("info 3 4").exit_code == 1);           // missing argument
    CHECK(run_cli("frobnicate 1 2 3").exit_code == 1);   // unknown subcommand
    CHECK(run_cli("search").exit_code == 1);             // missing --qmax
    CHECK(run_cli("search --qmax 8 --format yaml").exit_code == 1);
    CHECK(run_cli("info 0 1 2").exit_code == 2);         // nonpositive entry
    CHECK(run_cli("fingerprint 3 4 5 --vertex 7").exit_code == 2);
    CHECK(run_cli("fingerprint 1 1 1 --vertex 2").exit_code == 2); // no singularities
    CHECK(run_cli("fingerprint 1 3 6 --vertex 2 --puncture 3").exit_code == 2);
    CHECK(run_cli("search --qmax 2").exit_code == 2);
    CHECK(run_cli("svg 1 1 2 -o /nonexistent-dir/x.svg").exit_code == 2);
}

}
