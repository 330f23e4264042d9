#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "vbell/cli.hpp"

namespace
{
struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "vbell");
    std::ostringstream out, err;
    int const code = vbell::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json_of(Run const& r)
{
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

std::string slurp(std::filesystem::path const& p)
{
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

std::filesystem::path scratch(std::string const& name)
{
    auto dir = std::filesystem::temp_directory_path() / "vbell_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}
}  // namespace

TEST_CASE("probs")
{
    SUBCASE("singlet table at rest")
    {
        auto const j = json_of(
            run({"probs", "--state", "psi", "--x", "0", "--a", "0,0", "--b", "0,0", "--n", "0,0"}));
        CHECK(j["p"]["+1"]["-1"].get<double>() == 0.333333333333);
        CHECK(j["p"]["0"]["0"].get<double>() == 0.333333333333);
        CHECK(j["sum"].get<double>() == 1);
        CHECK(j["correlation"].get<double>() == doctest::Approx(-2.0 / 3));
    }
    SUBCASE("xi at large x with a negative c value")
    {
        auto const j = json_of(run({"probs", "--c", "-1", "--x", "1e6", "--a", "0,0", "--b",
                                    "0,0", "--n", "0,0", "--engine", "closed"}));
        CHECK(std::abs(j["p"]["0"]["0"].get<double>()) < 1e-6);
        CHECK(j["correlation"].get<double>() == doctest::Approx(-1).epsilon(1e-6));
        CHECK(j["state"]["c"].get<double>() == -1);
    }
    SUBCASE("engine cross-check")
    {
        Run const r = run({"probs", "--state", "xi", "--x", "2.5", "--a", "1,2", "--b", "0.4,5",
                           "--n", "2,1", "--engine", "trace", "--engine", "closed", "--check"});
        auto const j = json_of(r);
        CHECK(j["pass"].get<bool>());
        CHECK(j["max_deviation"].get<double>() < 1e-10);
    }
    SUBCASE("trace engine in a general frame")
    {
        auto const j = json_of(run({"probs", "--engine", "trace", "--state", "0.3", "--a",
                                    "1,1", "--b", "2,2", "--k", "0.1,0.2,0.3", "--p",
                                    "-0.5,0,1"}));
        CHECK(j["sum"].get<double>() == doctest::Approx(1).epsilon(1e-10));
    }
    SUBCASE("csv output")
    {
        Run const r = run({"probs", "--a", "0,0", "--b", "0,0", "--format", "csv"});
        CHECK(r.code == 0);
        CHECK(r.out.rfind("key,value\np[+1][+1],0\n", 0) == 0);
        CHECK(r.out.find("p[+1][-1],0.333333333333\n") != std::string::npos);
    }
    SUBCASE("usage errors")
    {
        CHECK(run({"probs", "--a", "0,0"}).code == 2);
        CHECK(run({"probs", "--a", "0", "--b", "0,0"}).code == 2);
        CHECK(run({"probs", "--a", "4,0", "--b", "0,0"}).code == 2);
        CHECK(run({"probs", "--a", "0,0", "--b", "0,0", "--x", "-1"}).code == 2);
        CHECK(run({"probs", "--a", "0,0", "--b", "0,0", "--state", "phi"}).code == 2);
        CHECK(run({"probs", "--a", "0,0", "--b", "0,0", "--engine", "bogus"}).code == 2);
        CHECK(run({"probs", "--a", "0,0", "--b", "0,0", "--state", "xi", "--c", "1"}).code == 2);
        CHECK(run({}).code == 2);
        CHECK(run({"frobnicate"}).code == 2);
    }
}

TEST_CASE("ineq")
{
    SUBCASE("chsh with parallel settings")
    {
        auto const j = json_of(run({"ineq", "chsh", "--state", "psi", "--x", "0", "--a", "0,0",
                                    "--b", "0,0", "--c", "0,0", "--d", "0,0"}));
        CHECK(j["value"].get<double>() == 1.33333333333);
        CHECK_FALSE(j["violated"].get<bool>());
        CHECK(j["bound"].get<double>() == 2);
    }
    SUBCASE("figure presets")
    {
        auto const m = json_of(run({"ineq", "mermin", "--state", "xi", "--x", "2", "--fig", "1"}));
        CHECK(m["settings"]["c"]["theta"].get<double>() == 1.514);
        CHECK_FALSE(m["settings"].contains("d"));
        auto const g = json_of(run({"ineq", "cglmp", "--state", "psi", "--x", "0", "--fig", "3"}));
        CHECK(g["value"].get<double>() > 2);
        CHECK(g["violated"].get<bool>());
    }
    SUBCASE("csv")
    {
        Run const r = run({"ineq", "mermin", "--fig", "2", "--format", "csv"});
        CHECK(r.code == 0);
        CHECK(r.out.find("\ninequality,mermin\n") != std::string::npos);
    }
    SUBCASE("wrong direction count")
    {
        CHECK(run({"ineq", "mermin", "--a", "1,1", "--b", "1,2"}).code == 2);
        CHECK(run({"ineq", "chsh", "--fig", "1"}).code == 2);
        CHECK(run({"ineq", "mermin", "--fig", "3"}).code == 2);
        CHECK(run({"ineq", "cglmp", "--fig", "7"}).code == 2);
        CHECK(run({"ineq", "bell", "--fig", "3"}).code == 2);
    }
}

TEST_CASE("figure and scan")
{
    SUBCASE("figure writes csv and sidecar")
    {
        auto const path = scratch("fig3.csv");
        Run const r = run({"figure", "--id", "3", "--xmax", "5", "--step", "0.01", "--out",
                           path.string()});
        REQUIRE(r.code == 0);
        CHECK(r.out.empty());
        std::istringstream csv(slurp(path));
        std::string line;
        std::getline(csv, line);
        CHECK(line == "x,value_psi,value_xi,bound");
        int rows = 0;
        while (std::getline(csv, line))
            ++rows;
        CHECK(rows == 501);

        auto const side = nlohmann::json::parse(slurp(path.string() + ".json"));
        CHECK(side["id"] == 3);
        CHECK(side["inequality"] == "cglmp");
        CHECK(side["grid"]["count"] == 501);
        CHECK(side["settings"]["a"]["theta"].get<double>() == 2.667);
    }
    SUBCASE("figure json")
    {
        auto const j = json_of(run({"figure", "--id", "5", "--xmax", "0.1", "--format", "json"}));
        CHECK(j["columns"].size() == 4);
        CHECK(j["rows"].size() == 11);
    }
    SUBCASE("unknown figure")
    {
        CHECK(run({"figure", "--id", "9"}).code == 2);
        CHECK(run({"figure", "--id", "1", "--step", "0"}).code == 2);
    }
    SUBCASE("scan with a general c")
    {
        Run const r = run({"scan", "--ineq", "cglmp", "--c", "0.5", "--fig", "4", "--xmax", "1"});
        REQUIRE(r.code == 0);
        CHECK(r.out.rfind("x,value_c=0.5,bound\n0,", 0) == 0);
    }
    SUBCASE("scan defaults to both named states")
    {
        Run const r = run({"scan", "--ineq", "mermin", "--a", "1,1", "--b", "2,2", "--cdir",
                           "0.5,4", "--xmax", "0.5", "--step", "0.1"});
        REQUIRE(r.code == 0);
        CHECK(r.out.rfind("x,value_psi,value_xi,bound\n", 0) == 0);
        CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
    }
}

TEST_CASE("optimize")
{
    std::vector<std::string> const args{"optimize", "--ineq", "cglmp", "--state", "xi",
                                        "--x", "1", "--seed", "7", "--restarts", "10"};
    Run const a = run(args);
    Run const b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto const j = nlohmann::json::parse(a.out);
    CHECK(j["restarts"] == 10);
    CHECK(j["seed"] == 7);
    CHECK(j["value"].get<double>() >= j["best_initial"].get<double>());
    CHECK(j["settings"].contains("d"));

    CHECK(run({"optimize", "--ineq", "chsh", "--restarts", "0"}).code == 2);
}

TEST_CASE("localize")
{
    auto const mu = json_of(run({"localize", "--particle", "muon", "--l", "1e-6"}));
    CHECK(mu["tau"].get<double>() == doctest::Approx(2.67e8).epsilon(1e-2));
    auto const e = json_of(run({"localize", "--particle", "electron", "--l", "1e-6"}));
    CHECK(e["tau"].get<double>() == doctest::Approx(1.30e6).epsilon(1e-2));
    auto const boosted
        = json_of(run({"localize", "--particle", "muon", "--l", "1e-6", "--gamma", "10"}));
    CHECK(boosted["tau"].get<double>() == doctest::Approx(10 * mu["tau"].get<double>()));
    auto const custom = json_of(run({"localize", "--particle", "custom", "--lambda", "1e-15"}));
    CHECK(custom["tau"].get<double>() == doctest::Approx(5e8));

    CHECK(run({"localize", "--l", "0"}).code == 2);
    CHECK(run({"localize", "--l", "-1e-6"}).code == 2);
    CHECK(run({"localize", "--particle", "custom"}).code == 2);
    CHECK(run({"localize", "--particle", "tau"}).code == 2);
}

TEST_CASE("config file")
{
    auto const path = scratch("probs.ini");
    {
        std::ofstream f(path);
        f << "state = \"xi\"\nx = 0.5\na = \"0.3,0.2\"\nb = \"1.1,2\"\n";
    }
    auto const from_file = json_of(run({"probs", "--config", path.string()}));
    auto const from_flags = json_of(
        run({"probs", "--state", "xi", "--x", "0.5", "--a", "0.3,0.2", "--b", "1.1,2"}));
    CHECK(from_file == from_flags);
}

TEST_CASE("help")
{
    Run const r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("optimize") != std::string::npos);
}
