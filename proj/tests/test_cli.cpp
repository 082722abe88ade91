#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

const std::string kTool = FCAUCHY_TOOL;
const std::string kData = FCAUCHY_DATA;
const std::string kTmp = FCAUCHY_TMP;

int run(const std::string& args) {
    const int status = std::system((kTool + " " + args + " >/dev/null 2>&1").c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json solve(const std::string& file, int expected_exit, const std::string& extra = "") {
    const std::string out = kTmp + "/solve_report.json";
    CHECK(run("solve " + kData + "/problems/" + file + " --out " + out + " " + extra) == expected_exit);
    return json::parse(slurp(out));
}

}  // namespace

TEST_CASE("solve exit codes and reports") {
    const json nosol = solve("nosol.json", 2);
    CHECK(nosol["singular_degree"] == 0);
    CHECK(nosol["status"] == "singular_degree");

    const json damped = solve("damped_laplace.json", 0);
    CHECK(damped["residual_ok"] == true);
    CHECK(damped["solution"][0]["text"] == "(1/4)");
    CHECK(damped["solution"][2]["text"] == "(-1/64)*x1^2 + (-1/64)*x2^2");

    const json zero = solve("zero_rhs.json", 0);
    for (const auto& part : zero["solution"])
        CHECK(part["terms"].empty());

    const json wave = solve("wave_substituted.json", 0);
    CHECK(wave["residual_ok"] == true);
    CHECK(wave["max_degree"] == 10);

    CHECK(solve("laplace_constant.json", 0, "--max-degree 2")["max_degree"] == 2);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
    const std::string a = kTmp + "/det_a.json", b = kTmp + "/det_b.json";
    const std::string file = kData + "/problems/biharmonic_lower_order.json";
    CHECK(run("solve " + file + " --out " + a) == 0);
    CHECK(std::system(("FISCHER_CAUCHY_THREADS=1 " + kTool + " solve " + file + " --out " + b + " >/dev/null").c_str()) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(run("survey " + kData + "/survey/quartic.json --m-max 6 --samples 3 --seed 5 --out " + a) == 0);
    CHECK(run("survey " + kData + "/survey/quartic.json --m-max 6 --samples 3 --seed 5 --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("input errors exit 1") {
    const std::string bad = kTmp + "/bad.json";
    std::ofstream(bad) << R"({"n": 2, "principal": {"laplacian_power": 1}, "divisor": [], "rhs": [], "max_degree": 2, "typo": 1})";
    CHECK(run("solve " + bad) == 1);
    std::ofstream(bad) << "{ not json";
    CHECK(run("solve " + bad) == 1);
    CHECK(run("solve " + kTmp + "/missing.json") == 1);
    std::ofstream(bad) << R"({"n": 1, "principal": {"laplacian_power": 1}, "divisor": [{"exps": [2], "coeff": {"re": [1, 1]}}],
        "rhs": {"cutoff": 2, "parts": []}, "max_degree": 2})";
    CHECK(run("solve " + bad) == 0);
    CHECK(run("solve " + bad + " --max-degree 5") == 1);
}

TEST_CASE("wellposed") {
    CHECK(run("wellposed " + kData + "/problems/biharmonic_quartic.json") == 0);
    CHECK(run("wellposed " + kData + "/problems/nosol.json") == 2);
}

TEST_CASE("ellipticity") {
    const std::string out = kTmp + "/ellip.json";
    CHECK(run("ellipticity " + kData + "/ellipticity/xi_quartic.json --out " + out) == 0);
    const json r = json::parse(slurp(out));
    CHECK(r["verdict"] == "elliptic");
    CHECK(r["polynomial_checked"]["text"] == "(1)*x1^4 + (1)*x2^4");
    CHECK(std::abs(r["delta_grid_min"].get<double>() - 0.5) < 1e-6);
    CHECK(run("ellipticity " + kData + "/ellipticity/saddle.json") == 2);
    CHECK(run("ellipticity " + kData + "/ellipticity/light_cone.json") == 2);
}

TEST_CASE("identities and survey") {
    CHECK(run("identities --grid small") == 0);
    CHECK(run("identities --grid huge") == 1);
    const std::string out = kTmp + "/survey.json";
    CHECK(run("survey " + kData + "/survey/radial.json --m-max 6 --samples 3 --out " + out) == 0);
    const json r = json::parse(slurp(out));
    for (const auto& row : r["constant_table"])
        CHECK(row["sampled_min"].get<double>() >= 1.0);
    CHECK(r["harmonic_ratio"]["sequence"].size() == 21);
}
