#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "g2lab/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = g2lab::run_cli(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("gen | info pipeline") {
    CliRun gen = run({"gen", "polyjoin", "--n", "5", "--d", "4"});
    REQUIRE(gen.exit_code == 0);
    CliRun info = run({"info", "--json"}, gen.out);
    REQUIRE(info.exit_code == 0);
    json j = json::parse(info.out);
    CHECK(j["g2"] == 1);
    CHECK(j["dim"] == 3);
    CHECK(j["f_vector"] == json::array({1, 8, 23, 30, 15}));
}

TEST_CASE("gen | classify pipeline") {
    CliRun gen = run({"gen", "stacked", "--dim", "4", "--stacks", "7", "--seed", "1"});
    REQUIRE(gen.exit_code == 0);
    CliRun cls = run({"classify"}, gen.out);
    CHECK(cls.exit_code == 0);
    CHECK(cls.out == "Stacked\n");

    CliRun join2 = run({"gen", "join2", "--a", "3", "--b", "4"});
    CliRun verdict = run({"classify", "--json"}, join2.out);
    CHECK(verdict.exit_code == 0);
    json j = json::parse(verdict.out);
    CHECK(j["verdict"] == "PrimeTwoSimplices(a=3,b=4)");
}

TEST_CASE("malformed input exits 2") {
    CHECK(run({"info"}, "definitely not json").exit_code == 2);
    CHECK(run({"classify"}, "{\"facets\": [[0,0,1]]}").exit_code == 2);
    CHECK(run({"info"}, "{\"facets\": []}").exit_code == 2);
    CHECK(run({"info"}, "{\"facets\": [[0.5, 1]]}").exit_code == 2);
    CHECK(run({"homology", "/nonexistent/path.json"}).exit_code == 2);
    CHECK(run({"contract", "--edge", "0,1"}, // {0,1} is a missing edge of crosspoly
              run({"gen", "crosspoly", "--m", "3"}).out)
              .exit_code == 2);
}

TEST_CASE("a remarkable input exits 3") {
    // a g2 = 0 ball: classify's un-stacking cross-check must fail loudly
    CliRun gen = run({"gen", "stacked", "--dim", "4", "--stacks", "2", "--seed", "6"});
    json j = json::parse(gen.out);
    j["facets"].erase(j["facets"].size() - 1);
    CliRun verdict = run({"classify"}, j.dump());
    CHECK(verdict.exit_code == 3);
    CHECK(verdict.err.find("theorem violation") != std::string::npos);
}

TEST_CASE("byte-stable output under a fixed seed") {
    CliRun a = run({"gen", "stacked", "--dim", "5", "--stacks", "6", "--seed", "42"});
    CliRun b = run({"gen", "stacked", "--dim", "5", "--stacks", "6", "--seed", "42"});
    CHECK(a.out == b.out);
    CliRun c = run({"gen", "stacked", "--dim", "5", "--stacks", "6", "--seed", "43"});
    CHECK(a.out != c.out);
}

TEST_CASE("seed falls back to G2LAB_SEED") {
    CliRun fixed = run({"gen", "stacked", "--dim", "4", "--stacks", "5", "--seed", "77"});
    setenv("G2LAB_SEED", "77", 1);
    CliRun env = run({"gen", "stacked", "--dim", "4", "--stacks", "5"});
    unsetenv("G2LAB_SEED");
    CliRun zero = run({"gen", "stacked", "--dim", "4", "--stacks", "5"});
    CHECK(env.out == fixed.out);
    CHECK(zero.out == run({"gen", "stacked", "--dim", "4", "--stacks", "5", "--seed", "0"}).out);
}

TEST_CASE("homology json surface") {
    CliRun octa = run({"gen", "crosspoly", "--m", "3"});
    CliRun hom = run({"homology", "--json", "--sphere"}, octa.out);
    REQUIRE(hom.exit_code == 0);
    json j = json::parse(hom.out);
    CHECK(j["betti"] == json::array({0, 0, 0, 1}));
    CHECK(j["torsion"] == json::array({json::array(), json::array(), json::array(), json::array()}));
    CHECK(j["homology_sphere"] == true);
}

TEST_CASE("rigidity json surface and drop-edge experiment") {
    CliRun octa = run({"gen", "crosspoly", "--m", "3"});
    CliRun rig = run({"rigidity", "--json", "--trials", "3", "--seed", "5"}, octa.out);
    REQUIRE(rig.exit_code == 0);
    json j = json::parse(rig.out);
    CHECK(j["dim"] == 3);
    CHECK(j["rank"] == 12);
    CHECK(j["kernel_dim"] == 0);
    CHECK(j["is_rigid"] == true);
    CHECK(j["is_stress_free"] == true);

    CliRun dropped = run({"rigidity", "--json", "--drop-edge", "0,2"}, octa.out);
    REQUIRE(dropped.exit_code == 0);
    json jd = json::parse(dropped.out);
    CHECK(jd["edges"] == 11);
}

TEST_CASE("contract and subdivide emit pipeable complexes") {
    CliRun octa = run({"gen", "crosspoly", "--m", "3"});
    CliRun con = run({"contract", "--edge", "0,2"}, octa.out);
    REQUIRE(con.exit_code == 0);
    CHECK(con.err.find("link condition: holds") != std::string::npos);
    CliRun info = run({"info", "--json"}, con.out);
    CHECK(json::parse(info.out)["f_vector"] == json::array({1, 5, 9, 6}));

    CliRun conj = run({"contract", "--edge", "0,2", "--json"}, octa.out);
    json jc = json::parse(conj.out);
    CHECK(jc["link_condition"] == true);
    CHECK(jc["delta_f0"] == -1);

    CliRun pj = run({"gen", "polyjoin", "--n", "5", "--d", "4"});
    CliRun sub = run({"subdivide", "--ridge", "0,5,6"}, pj.out);
    REQUIRE(sub.exit_code == 0);
    CliRun sinfo = run({"info", "--json"}, sub.out);
    CHECK(json::parse(sinfo.out)["g2"] == 2);
}

TEST_CASE("sum and decompose round trip") {
    CliRun a = run({"gen", "join2", "--a", "2", "--b", "2"});
    // write the complexes to temp files for the two-input command
    std::string fa = "/tmp/g2lab_test_a.json";
    std::string fb = "/tmp/g2lab_test_b.json";
    {
        std::ostringstream cmda;
        FILE* f = fopen(fa.c_str(), "w");
        REQUIRE(f);
        fputs(a.out.c_str(), f);
        fclose(f);
        CliRun b = run({"gen", "stacked", "--dim", "4", "--stacks", "0"});
        f = fopen(fb.c_str(), "w");
        REQUIRE(f);
        fputs(b.out.c_str(), f);
        fclose(f);
    }
    CliRun sum = run({"sum", fa, fb});
    REQUIRE(sum.exit_code == 0);
    CliRun dec = run({"decompose", "--json"}, sum.out);
    REQUIRE(dec.exit_code == 0);
    json j = json::parse(dec.out);
    CHECK(j["components"].size() == 2);
    CHECK(j["simplex_count"] == 1);
    CHECK(j["gluing_tree"].size() == 1);
}

TEST_CASE("unknown usage exits 2 and help exits 0") {
    CHECK(run({"no-such-command"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"--help"}).exit_code == 0);
}

TEST_SUITE_END();
