#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "prettygood/certificate.hpp"
#include "prettygood/cli.hpp"

using namespace prettygood;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("prettygood_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("validate") {
    CHECK(run({"validate", "SC(A1)"}).code == 0);
    const Run bad = run({"--text", "validate",
                         temp_file("pairing.json", R"({"rank":1,"roots":[[1],[-1]],"coroots":[[1],[-1]]})")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("pairing != 2 at index 0") != std::string::npos);
    CHECK(run({"validate", temp_file("broken.json", R"({"rank": 1, "roots": [)")}).code == 2);
    CHECK(run({"validate", "SC(Q7)"}).code == 2);
    CHECK(run({"validate", R"({"rank":1,"roots":[[2],[-2]],"coroots":[[1],[-1]]})"}).code == 0);
    CHECK(run({"validate", R"x("GL(3)")x"}).code == 0);
}

TEST_CASE("primes") {
    const Run gl2 = run({"primes", "GL(2)"});
    REQUIRE(gl2.code == 0);
    const Json j = Json::parse(gl2.out);
    REQUIRE(j.is_array());
    CHECK(j[0]["p"] == 2);
    CHECK(j[0]["pretty_good"] == true);
    CHECK(j[0]["verdict"] == "all centralizers smooth");
    const Json sl2 = Json::parse(run({"primes", "SC(A1)"}).out);
    CHECK(sl2[0]["pretty_good"] == false);
    CHECK(sl2[0]["verdict"] == "non-smooth centralizer exists");
    const Json torus = Json::parse(run({"primes", "Torus(4)", "--max-prime", "20"}).out);
    CHECK(torus.size() == 8);
    for (const auto& row : torus) {
        CHECK(row["pretty_good"] == true);
    }
    // the failing bound extends the range past --max-prime
    const Json e8 = Json::parse(run({"primes", "SC(E8)", "--max-prime", "2"}).out);
    CHECK(e8.size() == 3);
    const Run text = run({"--text", "primes", "SC(A1)", "--max-prime", "3"});
    CHECK(text.out == "p=2 bad=0 good=1 very_good=0 pretty_good=0 center_smooth=0 dual_center_smooth=1 : "
                      "non-smooth centralizer exists\n"
                      "p=3 bad=0 good=1 very_good=1 pretty_good=1 center_smooth=1 dual_center_smooth=1 : "
                      "all centralizers smooth\n");
    CHECK(run({"primes", "SC(E7)", "--max-prime", "50"}).out ==
          run({"primes", "SC(E7)", "--max-prime", "50"}).out);
}

TEST_CASE("certificate and verify") {
    const Run c = run({"certificate", "SC(G2)", "2"});
    REQUIRE(c.code == 0);
    const Json j = Json::parse(c.out);
    CHECK(j["kind"] == "bad-prime-subsystem");
    CHECK(j["datum"]["rank"] == 2);
    const Run v = run({"verify", temp_file("cert.json", c.out)});
    CHECK(v.code == 0);
    CHECK(Json::parse(v.out)["verified"] == true);

    Json forged = j;
    forged["payload"]["root_quotient"]["torsion"] = Json::array({3});
    CHECK(run({"verify", forged.dump()}).code == 1);

    CHECK(Json::parse(run({"certificate", "SC(A1)", "2"}).out)["kind"] == "center-torsion");
    CHECK(Json::parse(run({"certificate", "GL(3)", "5"}).out)["kind"] == "pretty-good-proof");
    CHECK(run({"certificate", "SC(A1)", "4"}).code == 2);
    CHECK(run({"certificate", "SC(A1)"}).code == 2);
}

TEST_CASE("classify") {
    CHECK(run({"classify", "GL(4)", "2"}).code == 0);
    const Run sl2 = run({"classify", "SC(A1)", "2"});
    CHECK(sl2.code == 1);
    CHECK(Json::parse(sl2.out)["verdict"] == "not essentially standard");
    CHECK(run({"classify", "SC(A1)", "0"}).code == 0);
    CHECK(run({"classify", "SC(A1)", "x"}).code == 2);
}

TEST_CASE("decompose") {
    const Run d = run({"decompose", "Sum(SC(A2),SC(C2))", "3"});
    REQUIRE(d.code == 0);
    const Json j = Json::parse(d.out);
    CHECK(j["a_blocks"] == Json::array({2}));
    CHECK(j["vg_blocks"] == Json::array({"C2"}));
    CHECK(j["witness_ok"] == false);
    CHECK(run({"decompose", "SC(G2)", "3"}).code == 1);
}

TEST_CASE("dual, sum, snf, gluing") {
    const Json d = Json::parse(run({"dual", "SC(A1)"}).out);
    CHECK(d["roots"] == Json::parse("[[1],[-1]]"));
    CHECK(d["coroots"] == Json::parse("[[2],[-2]]"));
    const Json s = Json::parse(run({"sum", "SC(A1)", "Torus(1)"}).out);
    CHECK(s["rank"] == 2);
    CHECK(s["roots"] == Json::parse("[[2,0],[-2,0]]"));
    const Json snf = Json::parse(run({"snf", "[[2,4],[6,8]]"}).out);
    CHECK(snf["divisors"] == Json::parse("[2,4]"));
    CHECK(run({"snf", "[[1,2],[3]]"}).code == 2);
    CHECK(run({"gluing", "[[1,0],[0,3]]", "[1,1]", "3"}).code == 1);
    CHECK(run({"gluing", "[[1]]", "[1]", "2"}).code == 0);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--json", "--text", "validate", "SC(A1)"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("selftest") {
    const Run st = run({"--text", "selftest"});
    CHECK(st.code == 0);
    CHECK(st.out.find("FAIL") == std::string::npos);
}
