#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "mzeta/report.hpp"

using namespace mzeta;
namespace fs = std::filesystem;

namespace {

std::string data_dir() { return default_data_dir(); }

}  // namespace

TEST_CASE("reports are deterministic") {
    IgusaOptions opt;
    opt.poly = "x^2";
    opt.p = 3;
    opt.M = 8;
    opt.fit = true;
    auto a = cmd_igusa(opt).dump(2);
    auto b = cmd_igusa(opt).dump(2);
    CHECK(a == b);

    SncdOptions sopt;
    sopt.lct = true;
    sopt.poles = true;
    std::string file = data_dir() + "/kodaira/IV.json";
    CHECK(cmd_sncd(file, sopt).dump(2) == cmd_sncd(file, sopt).dump(2));
}

TEST_CASE("report envelope") {
    SncdOptions sopt;
    sopt.lct = true;
    sopt.delta = true;
    sopt.poles = true;
    sopt.monodromy_zeta = true;
    sopt.series = 3;
    auto rep = cmd_sncd(data_dir() + "/kodaira/II.json", sopt);
    CHECK(rep["schema_version"] == "1");
    CHECK(rep["command"] == "sncd");
    CHECK(rep["inputs_digest"].is_string());
    CHECK(rep["results"]["lct"]["value"] == "-1/6");
    CHECK(rep["results"]["delta"]["value"] == 0);
    CHECK(rep["results"]["poles"]["value"][0]["s"] == "1/6");
    CHECK(rep["results"]["poles"]["value"][0]["order"] == 1);
    CHECK(rep["results"]["series"]["value"][0] == "L");
    // symbol-bearing coefficients flag the free-model caveat
    bool found = false;
    for (const auto& c : rep["caveats"])
        if (c.get<std::string>().find("free-symbol") != std::string::npos) found = true;
    CHECK(found);
    CHECK(report_passed(rep));
}

TEST_CASE("abelian command") {
    AbelianOptions opt;
    opt.verify = true;
    opt.gmp = true;
    auto rep = cmd_abelian(std::string("Instar"), 2, std::nullopt, data_dir(), opt);
    CHECK(rep["results"]["c"] == "1/2");
    CHECK(rep["results"]["t_pot"] == 1);
    CHECK(rep["results"]["verify"]["pass"] == true);
    CHECK(rep["results"]["gmp"]["pass"] == true);
    CHECK(rep["pass"] == true);

    AbelianOptions series_only;
    series_only.series = 2;
    auto rep2 = cmd_abelian(std::string("I0"), 0, std::nullopt, data_dir(), series_only);
    CHECK(rep2["results"]["series"] == nlohmann::json::array({"b", "b"}));

    CHECK_THROWS_WITH_AS(
        cmd_abelian(std::string("X9"), 0, std::nullopt, data_dir(), AbelianOptions{}),
        doctest::Contains("available tags"), ValidationError);
    CHECK_THROWS_AS(cmd_abelian(std::nullopt, 0, std::nullopt, data_dir(), AbelianOptions{}),
                    ValidationError);
}

TEST_CASE("abelian command on a user file needs explicit char polys for gmp") {
    AbelianOptions opt;
    opt.gmp = true;
    std::string file = data_dir() + "/neron/II.json";
    CHECK_THROWS_WITH_AS(cmd_abelian(std::nullopt, 0, file, data_dir(), opt),
                         doctest::Contains("--gmp-with"), ValidationError);
    opt.gmp_with = {"t - 1", "t^2 - t + 1", "t - 1"};
    auto rep = cmd_abelian(std::nullopt, 0, file, data_dir(), opt);
    CHECK(rep["pass"] == true);
}

TEST_CASE("igusa command flags") {
    IgusaOptions opt;
    opt.poly = "x^2";
    opt.p = 3;
    opt.M = 10;
    opt.check_poinzeta = true;
    auto rep = cmd_igusa(opt);
    CHECK(rep["results"]["counts"].size() == 11);
    CHECK(rep["results"]["poinzeta"]["pass"] == true);
    CHECK(rep["pass"] == true);

    opt.poly = "x + y";
    opt.M = 3;
    CHECK_THROWS_AS(cmd_igusa(opt), ValidationError);  // not a monomial
}

TEST_CASE("verify-all aggregates the criteria") {
    auto rep = cmd_verify_all(data_dir());
    CHECK(rep["pass"] == true);
    CHECK(rep["results"]["criteria"].size() == 9);
    for (const auto& c : rep["results"]["criteria"]) CHECK(c["pass"] == true);
}

TEST_CASE("corrupted bundled data fails verify-all") {
    fs::path tmp = fs::temp_directory_path() / "mzeta_corrupt_data";
    fs::remove_all(tmp);
    fs::copy(data_dir(), tmp, fs::copy_options::recursive);
    {
        // flip one multiplicity in the type II fiber
        std::ifstream in(tmp / "kodaira" / "II.json");
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        auto pos = text.find("\"N\": 6");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 6, "\"N\": 5");
        std::ofstream out(tmp / "kodaira" / "II.json");
        out << text;
    }
    auto rep = cmd_verify_all(tmp.string());
    CHECK(rep["pass"] == false);
    CHECK(!report_passed(rep));
    fs::remove_all(tmp);
}
