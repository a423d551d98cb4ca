#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "jacmom/cli.hpp"

using jacmom::FiniteMoment;
using jacmom::HalfIntegerParams;
using jacmom::OutputFormat;
using jacmom::Rational;
using jacmom::SuiteResult;

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    namespace fs = std::filesystem;
    static int counter = 0;
    fs::path tmp = fs::temp_directory_path() /
                   ("jacmom_cli_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter++) + ".txt");
    std::string cmd = std::string(JACMOM_CLI_PATH) + " " + args + " > " +
                      tmp.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    CmdResult res;
    if (rc != -1 && WIFEXITED(rc)) res.status = WEXITSTATUS(rc);
    res.out = jacmom::read_text_file(tmp.string()).value_or("");
    fs::remove(tmp);
    return res;
}

SuiteResult named_suite(const std::string& name, long failed) {
    SuiteResult r;
    r.name = name;
    r.passed = 1;
    r.failed = failed;
    return r;
}

}  // namespace

TEST_CASE("output format names") {
    CHECK(jacmom::format_from_name("json") == OutputFormat::json);
    CHECK(jacmom::format_from_name("csv") == OutputFormat::csv);
    CHECK(jacmom::format_from_name("pretty") == OutputFormat::pretty);
    CHECK_THROWS_AS(jacmom::format_from_name("yaml"), std::invalid_argument);
}

TEST_CASE("double formatting is locale-independent") {
    CHECK(jacmom::format_double(0.5) == "0.5");
    CHECK(jacmom::format_double(1.0) == "1");
    CHECK(jacmom::format_double(1.0 + std::exp(-1.0)).substr(0, 7) == "1.36787");
}

TEST_CASE("finite moment rendering") {
    FiniteMoment fm = jacmom::finite_moment(1, HalfIntegerParams(2, Rational(2), 4));
    std::vector<double> grid{0.0, 1.0};

    auto j = nlohmann::json::parse(jacmom::render_finite(fm, grid, OutputFormat::json));
    CHECK(j.at("n") == 1);
    CHECK(j.at("m") == 2);
    CHECK(j.at("p") == "2");
    CHECK(j.at("d") == 4);
    CHECK(j.at("stationary") == "1");
    CHECK(j.at("time_part").at("terms").size() == 1);
    REQUIRE(j.at("values").size() == 2);
    CHECK(j.at("values")[0].at("value").get<double>() == Catch::Approx(2.0));
    CHECK(j.at("values")[1].at("value").get<double>() ==
          Catch::Approx(1.0 + std::exp(-1.0)));

    std::string csv = jacmom::render_finite(fm, grid, OutputFormat::csv);
    CHECK(csv.rfind("t,value\n", 0) == 0);
    CHECK(csv.find("1,1.36787944117") != std::string::npos);

    std::string pretty = jacmom::render_finite(fm, grid, OutputFormat::pretty);
    CHECK(pretty.find("stationary: 1") != std::string::npos);
    CHECK(pretty.find("1.36787944117") != std::string::npos);
}

TEST_CASE("grid construction") {
    CHECK(jacmom::linspace(2.0, 5.0, 1) == std::vector<double>{2.0});
    CHECK(jacmom::linspace(0.0, 1.0, 3) == std::vector<double>{0.0, 0.5, 1.0});
    CHECK_THROWS_AS(jacmom::linspace(0.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("suite acceptability policy") {
    CHECK(jacmom::suites_acceptable({named_suite("gauss", 0), named_suite("chu", 0)}));
    CHECK_FALSE(jacmom::suites_acceptable({named_suite("gauss", 1)}));
    CHECK(jacmom::suites_acceptable(
        {named_suite("convergence", 2), named_suite("convergence-measured", 0)}));
    CHECK_FALSE(jacmom::suites_acceptable(
        {named_suite("convergence", 2), named_suite("convergence-measured", 1)}));
    CHECK_FALSE(jacmom::suites_acceptable({named_suite("convergence", 1)}));
}

TEST_CASE("cli help") {
    CmdResult res = run_cli("--help");
    CHECK(res.status == 0);
    CHECK(res.out.find("finite") != std::string::npos);
    CHECK(res.out.find("simulate") != std::string::npos);
    CmdResult bare = run_cli("");
    CHECK(bare.status == 0);
    CHECK(bare.out.find("Usage") != std::string::npos);
}

TEST_CASE("cli finite example") {
    CmdResult res = run_cli("finite --n 1 --m 2 --p 2 --d 4 --t 0,1");
    CHECK(res.status == 0);
    CHECK(res.out.find("1.36787944117") != std::string::npos);
}

TEST_CASE("cli limit at time zero") {
    CmdResult res = run_cli("limit --n 1 --lambda 1 --theta 1/2 --t 0 --format csv");
    CHECK(res.status == 0);
    CHECK(res.out.find("t,value\n0,1\n") != std::string::npos);
}

TEST_CASE("cli coefficient table content") {
    CmdResult res = run_cli("coeff --nmax 3 --lambda 1 --theta 1/2 --format json");
    REQUIRE(res.status == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j.at("lambda") == "1");
    CHECK(j.at("theta") == "1/2");
    REQUIRE(j.at("entries").size() == 10);
    std::map<std::tuple<long, long, long>, std::string> got;
    for (const auto& e : j.at("entries"))
        got[{e.at("n").get<long>(), e.at("h").get<long>(), e.at("l").get<long>()}] =
            e.at("value").get<std::string>();
    CHECK(got.at({3, 1, 0}) == "15/32");
    CHECK(got.at({3, 2, 0}) == "-3/8");
    CHECK(got.at({3, 2, 1}) == "3/16");
    CHECK(got.at({3, 3, 0}) == "3/32");
    CHECK(got.at({3, 3, 1}) == "-3/32");
    CHECK(got.at({3, 3, 2}) == "1/32");
}

TEST_CASE("cli coefficient file round trip") {
    namespace fs = std::filesystem;
    fs::path table = fs::temp_directory_path() /
                     ("jacmom_cli_table_" + std::to_string(::getpid()) + ".json");
    CmdResult save = run_cli("coeff --nmax 3 --lambda 1 --theta 1/2 --format json --out " +
                             table.string());
    REQUIRE(save.status == 0);
    REQUIRE(fs::exists(table));
    CmdResult from_file = run_cli("limit --n 3 --lambda 1 --theta 1/2 --t 0.5,1 --coeff-file " +
                                  table.string() + " --format csv");
    CmdResult fresh = run_cli("limit --n 3 --lambda 1 --theta 1/2 --t 0.5,1 --format csv");
    fs::remove(table);
    REQUIRE(from_file.status == 0);
    REQUIRE(fresh.status == 0);
    CHECK(from_file.out == fresh.out);
    CHECK(from_file.out.rfind("t,value\n", 0) == 0);
}

TEST_CASE("cli verify subcommand") {
    CmdResult res = run_cli("verify gauss");
    CHECK(res.status == 0);
    CHECK(res.out.find("PASS") != std::string::npos);
    CmdResult bad = run_cli("verify nonsense");
    CHECK(bad.status != 0);
}

TEST_CASE("cli simulate") {
    CmdResult res = run_cli(
        "simulate --d 4 --m 2 --p 2 --t 1 --steps 10 --samples 40 --seed 3 --format csv");
    CHECK(res.status == 0);
    CHECK(res.out.rfind("n,mean,stderr\n", 0) == 0);
}

TEST_CASE("cli table export") {
    CmdResult res = run_cli(
        "table --kind limit --nmax 2 --lambda 1 --theta 1/2 --tmin 0 --tmax 1 --points 3");
    REQUIRE(res.status == 0);
    CHECK(res.out.rfind("t,n,value\n", 0) == 0);
    long rows = std::count(res.out.begin(), res.out.end(), '\n');
    CHECK(rows == 7);
}

TEST_CASE("cli rejects invalid parameters") {
    CHECK(run_cli("limit --n 1 --lambda 1 --theta 0 --t 0").status != 0);
    CHECK(run_cli("finite --n 1 --m 3 --p 2 --d 4 --t 0").status != 0);
    CHECK(run_cli("finite --n 1 --m 2 --p 5/3 --d 4 --t 0").status != 0);
    CHECK(run_cli("coeff --nmax 2 --lambda 1 --theta 1/2 --route euler").status != 0);
}
