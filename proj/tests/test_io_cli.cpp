#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "monres/cli.hpp"
#include "monres/ideal_io.hpp"
#include "monres/output.hpp"
#include "monres/util.hpp"

using namespace monres;

namespace {

Monomial mono(const VarCtx& ctx, std::vector<std::uint32_t> e) {
    return Monomial(ctx, std::move(e));
}

std::string data_path(const std::string& name) {
    return std::string(MONRES_DATA_DIR) + "/" + name;
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& text) {
    static int counter = 0;
    auto path = std::filesystem::temp_directory_path() /
                ("monres_test_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter++) + ".ideal");
    std::ofstream f(path);
    f << text;
    return path.string();
}

}  // namespace

TEST_CASE("ideal files parse with both ring forms", "[io]") {
    MonomialIdeal a = parse_ideal_text(
        "# comment\n\nring 3\ngen x1^2*x2\ngen x3\n");
    CHECK(a.context()->nvars() == 3);
    CHECK(a.ngens() == 2);

    MonomialIdeal b = parse_ideal_text("ring x y z\ngen x*y\ngen y*z\n");
    CHECK(b.context()->name(0) == "x");
    CHECK(b.ngens() == 2);

    // Generators are minimalized on load.
    MonomialIdeal c = parse_ideal_text("ring 2\ngen x1\ngen x1^2\n");
    CHECK(c.ngens() == 1);
}

TEST_CASE("ideal file errors carry positions", "[io]") {
    auto expect_error = [](const std::string& text, std::size_t line) {
        try {
            parse_ideal_text(text, "t.ideal");
            FAIL("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(std::string(e.what()).find("t.ideal") !=
                  std::string::npos);
        }
    };
    expect_error("gen x1\n", 1);                       // gen before ring
    expect_error("ring 2\nfoo x1\n", 2);               // unknown directive
    expect_error("ring 2\ngen x9\n", 2);               // unknown variable
    expect_error("ring 2\nring 2\n", 2);               // duplicate ring
    expect_error("ring 0\n", 1);                       // no variables
    expect_error("ring x x\n", 1);                     // duplicate names
    expect_error("ring 2\ngen x1 x2\n", 2);            // stray token
    expect_error("", 0);                               // missing ring
    expect_error("ring 2\n", 1);                       // no generators

    try {
        parse_ideal_text("ring 2\ngen x1*yy\n", "t.ideal");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.col() == 8);  // the bad factor inside the monomial
    }
}

TEST_CASE("ideal writer round-trips", "[io]") {
    Rng rng(777);
    VarCtx ctx = VarContext::numbered(4);
    for (int t = 0; t < 50; ++t) {
        MonomialIdeal M = random_ideal(ctx, 5, 1, 4, false, rng.next());
        CHECK(parse_ideal_text(write_ideal_text(M)) == M);
    }
    VarCtx named = VarContext::make({"a", "b"});
    MonomialIdeal M = minimalize(named, {mono(named, {1, 2})});
    std::string text = write_ideal_text(M);
    CHECK(text.find("ring a b") != std::string::npos);
    CHECK(parse_ideal_text(text) == M);
}

TEST_CASE("missing files are a usage error", "[cli]") {
    auto r = run_cli({"betti", "--ideal", "/nonexistent/file.ideal"});
    CHECK(r.code == 2);
    CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("parse errors exit with code 2 and a position", "[cli]") {
    std::string path = write_temp("ring 2\ngen x1*oops\n");
    auto r = run_cli({"betti", "--ideal", path});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    std::remove(path.c_str());

    auto r2 = run_cli({"betti", "--no-such-flag"});
    CHECK(r2.code == 2);

    auto r3 = run_cli({"betti", "--gens", "x1", "--ring", "1", "--field",
                       "zp:6"});
    CHECK(r3.code == 2);

    auto r4 = run_cli({"random", "--ring", "3", "--q", "4", "--min-deg", "9",
                       "--max-deg", "9", "--squarefree"});
    CHECK(r4.code == 2);
    CHECK(r4.err.find("infeasible") != std::string::npos);
}

TEST_CASE("twin subcommand prints the exact generator list", "[cli]") {
    auto r = run_cli({"twin", "--ideal", data_path("ex44.ideal")});
    REQUIRE(r.code == 0);
    CHECK(r.out == "x1^2*x2^2, x3^2\n");
}

TEST_CASE("betti and pd subcommands", "[cli]") {
    auto r = run_cli({"betti", "--ideal", data_path("ex44.ideal")});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("field: q") != std::string::npos);
    // The table's final line reports the projective dimension.
    CHECK(r.out.rfind("pd = 2\n") == r.out.size() - 7);

    auto rp = run_cli({"pd", "--ideal", data_path("principal.ideal")});
    REQUIRE(rp.code == 0);
    CHECK(rp.out == "pd = 1\n");

    // The oracle path emits the same JSON as the minimization path.
    auto r1 = run_cli({"betti", "--ideal", data_path("ex44.ideal"), "--json"});
    auto r2 = run_cli({"betti", "--ideal", data_path("ex44.ideal"), "--json",
                       "--oracle"});
    REQUIRE(r1.code == 0);
    REQUIRE(r2.code == 0);
    CHECK(r1.out == r2.out);

    // Identical invocations produce byte-identical JSON.
    auto r3 = run_cli({"betti", "--ideal", data_path("ex44.ideal"), "--json"});
    CHECK(r1.out == r3.out);

    auto rz = run_cli({"betti", "--ideal", data_path("ex44.ideal"), "--json",
                       "--field", "zp:32003"});
    REQUIRE(rz.code == 0);
    CHECK(rz.out.find("\"field\": \"zp:32003\"") != std::string::npos);
}

TEST_CASE("taylor stats JSON", "[cli]") {
    auto r = run_cli({"taylor", "--gens", "x*y, y*z, x*z", "--ring", "x y z",
                      "--stats"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["q"] == 3);
    CHECK(j["ranks"] == Json::array({1, 3, 3, 1}));
    CHECK(j["distinct_multidegrees"] == 4);
}

TEST_CASE("minimize trace lines", "[cli]") {
    auto r = run_cli({"minimize", "--gens", "x^2, x*y, y^3", "--ring", "x y",
                      "--trace"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        auto j = Json::parse(line);
        CHECK(j.contains("s"));
        CHECK(j.contains("source"));
        CHECK(j.contains("target"));
        CHECK(j["source"].size() == j["target"].size() + 1);
        ++count;
    }
    CHECK(count >= 1);
}

TEST_CASE("restrict and compress subcommands", "[cli]") {
    std::string path = write_temp("ring x y z\ngen x*y\ngen y*z\ngen x*z\n");
    auto r = run_cli({"restrict", "--ideal", path, "--monomial", "x*y"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "x*y\n");

    auto rz = run_cli({"restrict", "--ideal", path, "--monomial", "x"});
    REQUIRE(rz.code == 0);
    CHECK(rz.out == "0\n");
    std::remove(path.c_str());

    auto rc = run_cli({"compress", "--ideal", data_path("ex44.ideal"),
                       "--json"});
    REQUIRE(rc.code == 0);
    auto j = Json::parse(rc.out);
    CHECK(j["gens"] == Json::array({"y1*y2", "y3"}));
    CHECK(j["alpha"] == Json::array({2, 2, 2}));
}

TEST_CASE("random subcommand emits a loadable ideal file", "[cli]") {
    auto r = run_cli({"random", "--ring", "4", "--q", "5", "--min-deg", "1",
                      "--max-deg", "3", "--seed", "11"});
    REQUIRE(r.code == 0);
    MonomialIdeal M = parse_ideal_text(r.out);
    CHECK(M.ngens() >= 1);
    auto r2 = run_cli({"random", "--ring", "4", "--q", "5", "--min-deg", "1",
                       "--max-deg", "3", "--seed", "11"});
    CHECK(r.out == r2.out);
}

TEST_CASE("verify subcommands exit by failure count", "[cli]") {
    auto r = run_cli({"verify", "t31", "--n", "4", "--k", "1", "--trials",
                      "10", "--seed", "3"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["attempted"] == 10);
    CHECK(j["passed"] == 10);
    CHECK(j["failures"].empty());
    CHECK_FALSE(j.contains("wall_seconds"));

    auto r2 = run_cli({"verify", "c42", "--ideal", data_path("ex44.ideal"),
                       "--field", "zp:2"});
    CHECK(r2.code == 0);

    auto r3 = run_cli({"verify", "t45", "--ideal", data_path("ex44.ideal")});
    CHECK(r3.code == 0);

    auto r4 = run_cli({"verify", "compress", "--ideal",
                       data_path("ex44.ideal")});
    CHECK(r4.code == 0);

    // Reports are byte-identical across runs with the same seed.
    auto r5 = run_cli({"verify", "t46", "--n", "3", "--trials", "8", "--seed",
                       "5"});
    auto r6 = run_cli({"verify", "t46", "--n", "3", "--trials", "8", "--seed",
                       "5"});
    REQUIRE(r5.code == 0);
    CHECK(r5.out == r6.out);

    // --out writes the report to a file.
    auto out_path = std::filesystem::temp_directory_path() /
                    "monres_report_test.json";
    auto r7 = run_cli({"verify", "t31", "--n", "3", "--k", "0", "--trials",
                       "5", "--seed", "1", "--out", out_path.string()});
    REQUIRE(r7.code == 0);
    std::ifstream f(out_path);
    REQUIRE(f.good());
    auto jf = Json::parse(f);
    CHECK(jf["passed"] == 5);
    std::filesystem::remove(out_path);

    // Infeasible parameters are usage errors.
    auto r8 = run_cli({"verify", "t31", "--n", "3", "--k", "5", "--trials",
                       "5"});
    CHECK(r8.code == 2);
}

TEST_CASE("cap errors advise the override flag", "[cli]") {
    std::ostringstream text;
    text << "ring 25\n";
    for (int i = 1; i <= 21; ++i) text << "gen x" << i << "\n";
    std::string path = write_temp(text.str());
    auto r = run_cli({"taylor", "--ideal", path});
    CHECK(r.code == 2);
    CHECK(r.err.find("--cap") != std::string::npos);

    auto r2 = run_cli({"betti", "--ideal", path, "--cap", "10"});
    CHECK(r2.code == 2);
    std::remove(path.c_str());
}

TEST_CASE("help exits cleanly", "[cli]") {
    auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("monres") != std::string::npos);
}
