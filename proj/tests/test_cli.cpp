#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output_path;
};

int counter = 0;

RunResult run_cli(const std::string& args, bool to_file = true) {
    const std::string path = "/tmp/scatter_cli_test_" + std::to_string(counter++) + ".out";
    std::string command = std::string(SCATTER_CLI_PATH) + " " + args;
    if (to_file) command += " --out " + path;
    command += " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    return {WEXITSTATUS(status), path};
}

std::string slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

// Parses a CSV table (leading "# meta" line, header, rows) into cells.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::istringstream fields(line);
        std::string cell;
        while (std::getline(fields, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("ambiguity: worked ratio and kinematic cutoff") {
    const auto run = run_cli("ambiguity --mu 1 --b 1 --ki 1 --theta-steps 6");
    REQUIRE(run.exit_code == 0);
    const auto rows = parse_csv(slurp(run.output_path));
    REQUIRE(rows.size() >= 6);  // header + at least 5 angles

    bool saw60 = false, saw120 = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i][0] == "60") {
            saw60 = true;
            CHECK(std::abs(std::stod(rows[i][5]) - 2.0) < 1e-9);
        }
        if (rows[i][0] == "120") {
            saw120 = true;
            CHECK(std::stod(rows[i][3]) == 0.0);
        }
    }
    CHECK(saw60);
    CHECK(saw120);
}

TEST_CASE("ambiguity: heavy-target limit erases the route difference") {
    const auto run = run_cli("ambiguity --mu 1e-8 --theta-steps 8 --format json");
    REQUIRE(run.exit_code == 0);
    const auto doc = json::parse(slurp(run.output_path));
    for (const auto& row : doc["rows"]) {
        if (row["ratio"].is_string()) continue;
        CHECK(std::abs(row["ratio"].get<double>() - 1.0) < 1e-4);
    }
    CHECK(doc["meta"]["mu0_sanity_max_ratio_deviation"].get<double>() < 1e-4);
}

TEST_CASE("identical flags and seed give byte-identical output") {
    const std::string flags = "gas-xs --ki 1 --T 1 --mu 1 --b 1 --grid 6 --samples 20000 --seed 7";
    const auto first = run_cli(flags);
    const auto second = run_cli(flags);
    REQUIRE(first.exit_code == 0);
    REQUIRE(second.exit_code == 0);
    CHECK(slurp(first.output_path) == slurp(second.output_path));

    const auto other_seed = run_cli(
        "gas-xs --ki 1 --T 1 --mu 1 --b 1 --grid 6 --samples 20000 --seed 8");
    CHECK(slurp(first.output_path) != slurp(other_seed.output_path));
}

TEST_CASE("gas-xs json carries metadata and the total") {
    const auto run =
        run_cli("gas-xs --ki 1 --T 1 --mu 1 --b 1 --grid 5 --samples 50000 --format json");
    REQUIRE(run.exit_code == 0);
    const auto doc = json::parse(slurp(run.output_path));
    CHECK(doc["meta"]["seed"].get<std::uint64_t>() == 0x5EEDCAFEULL);
    CHECK(doc["meta"]["version"].is_string());
    CHECK(doc["meta"]["total_cross_section"].get<double>() > 0.0);
    CHECK(doc["rows"].size() > 10);
}

TEST_CASE("gas-xs frozen limit: cold gas total approaches the rest value") {
    const auto run = run_cli(
        "gas-xs --ki 10 --T 0.0001 --mu 1 --b 1 --grid 8 --samples 50000 --format json");
    REQUIRE(run.exit_code == 0);
    const auto doc = json::parse(slurp(run.output_path));
    const double total = doc["meta"]["total_cross_section"].get<double>();
    CHECK(std::abs(total - 3.14159265358979) < 0.01 * 3.14159265358979);
}

TEST_CASE("temp-scan exponent lands near one half") {
    const auto run = run_cli(
        "temp-scan --ki 0.1 --Tmin 1 --Tmax 10 --points 5 --area-mode dynamic --format json");
    REQUIRE(run.exit_code == 0);
    const auto doc = json::parse(slurp(run.output_path));
    CHECK(std::abs(doc["meta"]["exponent"].get<double>() - 0.5) < 0.06);
}

TEST_CASE("temp-scan with one point cannot be fitted") {
    const auto run = run_cli("temp-scan --points 1");
    CHECK(run.exit_code == 4);
}

TEST_CASE("packet area agrees with the closed form") {
    const auto run = run_cli("packet --family dB --s 2 --what area --format json");
    REQUIRE(run.exit_code == 0);
    const auto doc = json::parse(slurp(run.output_path));
    const double numeric = doc["rows"][0]["numeric"].get<double>();
    const double closed = doc["rows"][0]["closed"].get<double>();
    CHECK(std::abs(numeric - closed) < 1e-3 * closed);
    CHECK(closed == doctest::Approx(3.14159265 / 12.0).epsilon(1e-6));
}

TEST_CASE("packet scatter weights ignore the impact parameter") {
    const auto run = run_cli("packet --family dB --s 0.05 --k 1 --what scatter --format json");
    REQUIRE(run.exit_code == 0);
    const auto doc = json::parse(slurp(run.output_path));
    for (const auto& row : doc["rows"]) {
        const double w0 = row["weight_rho0"].get<double>();
        CHECK(std::abs(row["weight_rho10"].get<double>() - w0) <= 1e-12 * w0);
        CHECK(std::abs(row["weight_rho100"].get<double>() - w0) <= 1e-12 * w0);
    }
}

TEST_CASE("nonsingular packet norm reports the infinite sentinel") {
    const auto run = run_cli("packet --family ns --what norm --format json");
    REQUIRE(run.exit_code == 0);
    const auto doc = json::parse(slurp(run.output_path));
    CHECK(doc["rows"][0]["norm"].get<std::string>() == "infinite");
}

TEST_CASE("singular packet evaluation exits with the singular code") {
    const auto run = run_cli("packet --family dB --t 0 --rx 0 --ry 0 --rz 0 --what value");
    CHECK(run.exit_code == 3);
}

TEST_CASE("asymptotics: residual times distance pins the discarded tail") {
    const auto run = run_cli("asymptotics --k 1 --rmin 10 --rmax 200 --points 4 --format json");
    REQUIRE(run.exit_code == 0);
    const auto doc = json::parse(slurp(run.output_path));
    for (const auto& row : doc["rows"])
        CHECK(std::abs(row["residual_times_r"].get<double>() - 1.0) < 0.05);
}

TEST_CASE("quantize: invariance rows") {
    const auto run = run_cli("quantize --mu 1 --b 1 --ki 1 --N 1000 --cone-angle 25 --format json");
    REQUIRE(run.exit_code == 0);
    const auto doc = json::parse(slurp(run.output_path));
    double before = -1.0, after = -2.0, quantized = 0.0, flat = 1.0;
    for (const auto& row : doc["rows"]) {
        const auto name = row["quantity"].get<std::string>();
        if (name == "window_square_before") before = row["value"].get<double>();
        if (name == "window_square_after") after = row["value"].get<double>();
        if (name == "quantized_dsigma_domega") quantized = row["value"].get<double>();
        if (name == "flat_dsigma_domega") flat = row["value"].get<double>();
    }
    CHECK(before == after);
    CHECK(std::abs(quantized - flat) <= 1e-12 * flat);
}

TEST_CASE("divergence probe record and not-found exit") {
    const auto found = run_cli("divergence-probe --mu 0.5 --ki 1");
    REQUIRE(found.exit_code == 0);
    const auto doc = json::parse(slurp(found.output_path));
    CHECK(std::abs(doc["discriminant"].get<double>()) <= 1e-10);
    CHECK(doc["k_f"].get<double>() > 0.0);

    CHECK(run_cli("divergence-probe --mu 0 --ki 1").exit_code == 5);
}

TEST_CASE("unknown flags exit with the usage code") {
    CHECK(run_cli("ambiguity --no-such-flag 3").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
}
