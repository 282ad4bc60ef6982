#include <doctest.h>

#include <cstdio>
#include <sys/wait.h>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "golden.hpp"
#include "orbitdx/json_io.hpp"
#include "orbitdx/random_gen.hpp"

using namespace orbitdx;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

// Runs the CLI binary, capturing stdout in a file.
RunResult run(const std::string& args) {
    static int counter = 0;
    fs::path out_file = fs::temp_directory_path() / ("orbitdx_out_" + std::to_string(counter++));
    std::string cmd = std::string(ORBITDX_BIN) + " " + args + " > " + out_file.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    fs::remove(out_file);
    return r;
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "orbitdx_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const json& j) {
    fs::path p = scratch_dir() / name;
    dump_json_file(p.string(), j);
    return p.string();
}

JordanStructure simple2_structure() {
    return JordanStructure({{gr(0), {1}}, {gr(1), {1}}});
}

} // namespace

TEST_CASE("param matches the 2x2 formula and validates input") {
    std::string structure = write_file("s2.json", to_json(simple2_structure()));
    CanonicalCoords c = golden::simple2_coords(gr(1), gr(1), gr(1));
    std::string coords = write_file("c2.json", to_json(c));

    RunResult r = run("param --structure " + structure + " --coords " + coords);
    CHECK(r.exit_code == 0);
    CHECK(mat_from_json(json::parse(r.out)) ==
          Mat{{gr(-1), gr(1)}, {gr(-2), gr(2)}});

    // coords for a different structure -> input error
    std::string wrong = write_file("s4.json",
                                   to_json(JordanStructure({{gr(0), {2, 2}}})));
    CHECK(run("param --structure " + wrong + " --coords " + coords).exit_code == 2);

    // unreadable file -> input error
    CHECK(run("param --structure /nonexistent.json --coords " + coords).exit_code == 2);
}

TEST_CASE("extract round-trips param output") {
    std::string structure = write_file("s2.json", to_json(simple2_structure()));
    CanonicalCoords c = golden::simple2_coords(gr(1), gr(7, 3), gr(-2));
    std::string matrix = write_file("m2.json", to_json(parameterize(c)));

    RunResult r = run("extract --structure " + structure + " --matrix " + matrix);
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(coords_from_json(out["coords"]) == c);
    CHECK(chart_from_json(out["chart"]).is_identity());
}

TEST_CASE("extract exit codes for bad points") {
    // lower-triangular excluded point: identity chart fails with 3,
    // auto chart succeeds
    JordanStructure nil2({{gr(0), {2}}});
    std::string structure = write_file("nil2.json", to_json(nil2));
    Mat lower{{gr(0), gr(0)}, {gr(5), gr(0)}};
    std::string matrix = write_file("lower.json", to_json(lower));
    std::string idchart = write_file("idchart.json", to_json(Chart::identity(2)));

    CHECK(run("extract --structure " + structure + " --matrix " + matrix +
              " --chart " + idchart).exit_code == 3);
    CHECK(run("extract --structure " + structure + " --matrix " + matrix).exit_code == 0);

    // off-orbit matrix: zero matrix against the nilpotent structure
    std::string zero = write_file("zero.json", to_json(Mat::zeros(2, 2)));
    int code = run("extract --structure " + structure + " --matrix " + zero).exit_code;
    CHECK(code == 3);

    // final-residue mismatch under an explicit chart
    JordanStructure two({{gr(0), {1}}, {gr(5), {1}}});
    std::string s2 = write_file("two.json", to_json(two));
    Mat wrong(2, 2);
    wrong.at(1, 1) = gr(7);
    std::string m = write_file("wrong.json", to_json(wrong));
    CHECK(run("extract --structure " + s2 + " --matrix " + m + " --chart " + idchart).exit_code ==
          4);
}

TEST_CASE("verify-darboux") {
    std::string structure = write_file("s2.json", to_json(simple2_structure()));
    std::string coords = write_file("vd_coords.json",
                                    to_json(golden::simple2_coords(gr(1), gr(2), gr(-3))));
    CHECK(run("verify-darboux --structure " + structure + " --coords " + coords).exit_code == 0);

    RunResult r = run("verify-darboux --structure " + structure + " --seed 5");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out["match"] == true);
    CHECK(mat_from_json(out["gram"]) == mat_from_json(out["canonical"]));
    CHECK(out["enumeration"].size() == 2);

    CHECK(run("verify-darboux --structure " + structure + " --seed 5 --corrupt-tangent")
              .exit_code == 5);

    // the 6x6 structure with chains (3,2) and a simple eigenvalue
    JordanStructure ex4({{gr(0), {3, 2}}, {gr(1), {1}}});
    std::string s4 = write_file("ex4.json", to_json(ex4));
    RunResult big = run("verify-darboux --structure " + s4 + " --seed 11 --bound 40");
    REQUIRE(big.exit_code == 0);
    CHECK(json::parse(big.out)["match"] == true);
}

TEST_CASE("project and info") {
    JordanStructure s({{gr(0), {2, 1}}});
    std::string structure = write_file("proj.json", to_json(s));
    RunResult r = run("project --structure " + structure + " --eigenvalue 0");
    REQUIRE(r.exit_code == 0);
    CHECK(structure_from_json(json::parse(r.out)) == JordanStructure({{gr(0), {1}}}));
    CHECK(run("project --structure " + structure + " --eigenvalue 9").exit_code == 2);

    JordanStructure ex4({{gr(0), {3, 2}}, {gr(1), {1}}});
    std::string s4 = write_file("ex4.json", to_json(ex4));
    RunResult info = run("info --structure " + s4);
    REQUIRE(info.exit_code == 0);
    json j = json::parse(info.out);
    CHECK(j["n"] == 6);
    CHECK(j["orbit_dim"] == 26);
    CHECK(type_sequence_from_json(j["type_sequence"]) == golden::ex4_type_seq());
    CHECK(j["blocks"].size() == 6);

    // a single 1x1 eigenvalue: zero-dimensional orbit, no blocks
    std::string tiny = write_file("tiny.json", to_json(JordanStructure({{gr(7), {1}}})));
    RunResult small = run("info --structure " + tiny);
    REQUIRE(small.exit_code == 0);
    CHECK(json::parse(small.out)["orbit_dim"] == 0);
    CHECK(json::parse(small.out)["blocks"].empty());
}

TEST_CASE("random-point is deterministic and lands on the orbit") {
    JordanStructure ex4({{gr(0), {3, 2}}, {gr(1), {1}}});
    std::string structure = write_file("ex4.json", to_json(ex4));

    RunResult a = run("random-point --structure " + structure + " --seed 42 --bound 20");
    RunResult b = run("random-point --structure " + structure + " --seed 42 --bound 20");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    Mat pt = mat_from_json(json::parse(a.out));
    CHECK(verify_on_orbit(pt, ex4).match);

    RunResult c = run("random-point --structure " + structure +
                      " --seed 42 --mode conjugate --bound 20");
    REQUIRE(c.exit_code == 0);
    Mat pt2 = mat_from_json(json::parse(c.out));
    CHECK(verify_on_orbit(pt2, ex4).match);
    std::string m = write_file("conj.json", json::parse(c.out));
    CHECK(run("extract --structure " + structure + " --matrix " + m).exit_code == 0);
}

TEST_CASE("jordan-verify") {
    Mat j(6, 6);
    j.at(0, 1) = gr(1);
    j.at(1, 2) = gr(1);
    j.at(3, 4) = gr(1);
    j.at(5, 5) = gr(1);
    std::string matrix = write_file("j6.json", to_json(j));
    RunResult r = run("jordan-verify --matrix " + matrix + " --eigenvalues 0,1");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(structure_from_json(out["structure"]) ==
          JordanStructure({{gr(0), {3, 2}}, {gr(1), {1}}}));
    CHECK(out["weyr"]["0"] == json({2, 4, 5, 5}));

    CHECK(run("jordan-verify --matrix " + matrix + " --eigenvalues 0").exit_code == 2);
}

TEST_CASE("roundtrip command") {
    JordanStructure ex4({{gr(0), {3, 2}}, {gr(1), {1}}});
    std::string structure = write_file("ex4.json", to_json(ex4));
    RunResult r = run("roundtrip --structure " + structure + " --seed 7 --trials 3 --bound 50");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["status"] == "pass");

    CHECK(run("roundtrip --structure " + structure +
              " --seed 7 --trials 1 --bound 50 --corrupt-extract").exit_code == 5);

    // N = 1 orbit is a point; the roundtrip is vacuous
    JordanStructure point({{gr(3), {1}}});
    std::string sp = write_file("point.json", to_json(point));
    CHECK(run("roundtrip --structure " + sp + " --seed 1 --trials 2").exit_code == 0);
}

TEST_CASE("environment seed fallback") {
    JordanStructure s({{gr(0), {2, 2}}});
    std::string structure = write_file("s22.json", to_json(s));
    setenv("ORBITDX_SEED", "42", 1);
    RunResult via_env = run("random-point --structure " + structure + " --bound 30");
    unsetenv("ORBITDX_SEED");
    RunResult via_flag = run("random-point --structure " + structure + " --seed 42 --bound 30");
    REQUIRE(via_env.exit_code == 0);
    CHECK(via_env.out == via_flag.out);
}

TEST_CASE("unknown flags are input errors") {
    CHECK(run("info --bogus").exit_code == 2);
    CHECK(run("").exit_code == 2);
}
