// End-to-end checks of the command-line tool: spawns the real binary and
// inspects files, stdout, and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "clarke/clarke_core.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = CLARKE_CLI_PATH;

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const fs::path out_path = fs::temp_directory_path() / "clarke_cli_stdout.txt";
    const std::string command = kCli + " " + args + " > " + out_path.string() + " 2>&1";
    const int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    return result;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

fs::path write_temp(const std::string& name, const std::string& content) {
    const fs::path path = fs::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

std::vector<std::vector<double>> parse_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream lines(text);
    std::string line;
    bool header = true;
    while (std::getline(lines, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

TEST_CASE("transform converts joints to clarke coordinates") {
    const auto cfg = write_temp("cli_cfg4.json", R"({"geometry": {"n": 4}})");
    const auto result = run_cli("transform --joints 0.001,0,-0.001,0 --config " + cfg.string());
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("rho_re,rho_im") != std::string::npos);
    CHECK(result.output.find("0.001,") != std::string::npos);
}

TEST_CASE("transform decodes the zero vector to all-zero joints") {
    const auto result = run_cli("transform --clarke 0,0");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("0,0,0,0,0") != std::string::npos);
}

TEST_CASE("transform rejects constraint-violating joints with the residual") {
    const auto cfg = write_temp("cli_cfg3.json", R"({"geometry": {"n": 3}})");
    const auto result = run_cli("transform --joints 0.001,0.001,0.001 --config " + cfg.string());
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("0.003") != std::string::npos);
}

TEST_CASE("transform interop matches the library path") {
    const auto cfg = write_temp("cli_cfg4.json", R"({"geometry": {"n": 4}})");
    const auto geom = write_temp("cli_geom3.json", R"({"n": 3})");
    const auto result = run_cli("transform --joints 1,0,-1,0 --mm --to-geometry " +
                                geom.string() + " --config " + cfg.string());
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("rho_1,rho_2,rho_3") != std::string::npos);
    CHECK(result.output.find("1,-0.4999") != std::string::npos);
}

TEST_CASE("transform requires exactly one input flavor") {
    CHECK(run_cli("transform").exit_code == 2);
    CHECK(run_cli("transform --joints 0,0,0,0,0 --clarke 0,0").exit_code == 2);
}

TEST_CASE("seeded sampling is reproducible and range-compliant") {
    const auto a = run_cli("sample --count 3 --seed 7");
    const auto b = run_cli("sample --count 3 --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    const auto rows = parse_csv(a.output);
    REQUIRE(rows.size() == 3);
    const double modulus_max = 2.0 * clarke::kPi / 3.0 * 0.01;
    for (const auto& row : rows) {
        REQUIRE(row.size() == 3 + 5);
        CHECK(std::hypot(row[1], row[2]) <= modulus_max);
    }

    CHECK(run_cli("sample --count 0 --seed 7").exit_code == 2);
}

TEST_CASE("plan output satisfies the boundary conditions") {
    const auto result = run_cli("plan --start 0,0 --goal 0.016,0 --dt 0.01");
    CHECK(result.exit_code == 0);
    const auto rows = parse_csv(result.output);
    REQUIRE(rows.size() > 10);

    // first row: start at rest
    CHECK(rows.front()[0] == 0.0);
    CHECK(rows.front()[1] == 0.0);
    CHECK(rows.front()[3] == 0.0);
    // last row: goal at rest, exactly at the duration
    CHECK(rows.back()[1] == 0.016);
    CHECK(rows.back()[3] == 0.0);
    CHECK(rows.back()[5] == 0.0);

    // time grid is strictly increasing
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][0] > rows[i - 1][0]);

    // peak velocity matches the closed-form extreme within grid error
    double peak = 0.0;
    for (const auto& row : rows) peak = std::max(peak, std::abs(row[3]));
    const double duration = rows.back()[0];
    CHECK(std::abs(peak - 35.0 / 16.0 * 0.016 / duration) / peak < 1e-3);

    // acceleration column is continuous
    const double a_bar_max = std::sqrt(2.0 / 5.0) * 0.01;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(std::abs(rows[i][5] - rows[i - 1][5]) <= a_bar_max * 0.01 * 10.0);
    }

    // decoded joints re-encode to the re/im columns
    const auto geometry = clarke::RobotGeometry::equally_spaced(5, 0.07, 0.01);
    for (const auto& row : rows) {
        clarke::JointVector rho(std::vector<double>(row.begin() + 7, row.begin() + 12));
        const auto coords = clarke::joints_to_clarke(rho, geometry);
        CHECK(std::abs(coords.re - row[1]) <= 1e-12);
        CHECK(std::abs(coords.im - row[2]) <= 1e-12);
    }
}

TEST_CASE("degenerate plans emit exactly two identical rows") {
    const auto result = run_cli("plan --start 0.001,0.002 --goal 0.001,0.002 --dt 0.01");
    CHECK(result.exit_code == 0);
    const auto rows = parse_csv(result.output);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == rows[1]);
    CHECK(rows[0][0] == 0.0);

    CHECK(run_cli("plan --start 0,0 --goal 0.01,0 --dt 0").exit_code == 2);
}

TEST_CASE("seeded runs produce byte-identical outputs") {
    const fs::path dir_a = fs::temp_directory_path() / "clarke_run_a";
    const fs::path dir_b = fs::temp_directory_path() / "clarke_run_b";
    fs::remove_all(dir_a);
    fs::remove_all(dir_b);

    const auto cfg = write_temp("cli_run_cfg.json", R"({"segments": 2})");
    const std::string base = "run --seed 99 --config " + cfg.string() + " --out-dir ";
    CHECK(run_cli(base + dir_a.string()).exit_code == 0);
    CHECK(run_cli(base + dir_b.string()).exit_code == 0);

    for (const char* name :
         {"segment_1.csv", "segment_2.csv", "manifest.json", "backbone.csv"}) {
        CHECK(read_file(dir_a / name) == read_file(dir_b / name));
    }
}

TEST_CASE("noise-free closed loop converges to the goal") {
    const fs::path dir = fs::temp_directory_path() / "clarke_run_quiet";
    fs::remove_all(dir);
    const auto cfg = write_temp("cli_quiet_cfg.json",
                                R"({"segments": 1, "plant": {"noise_amplitude": 0.0}})");
    const auto goals = write_temp("cli_goals.csv",
                                  "start_re,start_im,goal_re,goal_im\n0,0,0.008,0.004\n");
    const auto result = run_cli("run --seed 5 --config " + cfg.string() + " --goals " +
                                goals.string() + " --out-dir " + dir.string());
    CHECK(result.exit_code == 0);

    const auto rows = parse_csv(read_file(dir / "segment_1.csv"));
    REQUIRE(!rows.empty());
    const auto& last = rows.back();
    // columns: 2,3 desired re/im; 8,9 measured re/im
    CHECK(std::abs(last[2] - 0.008) <= 1e-15);
    CHECK(std::abs(last[8] - last[2]) < 1e-6);
    CHECK(std::abs(last[9] - last[3]) < 1e-6);
}

TEST_CASE("external streams replace the planner") {
    const fs::path dir = fs::temp_directory_path() / "clarke_run_external";
    fs::remove_all(dir);
    const auto cfg = write_temp("cli_ext_cfg.json",
                                R"({"segments": 1, "plant": {"noise_amplitude": 0.0}})");
    const auto source = clarke::RobotGeometry::equally_spaced(4, 0.07, 0.01);

    std::ostringstream stream;
    for (int k = 0; k < 300; ++k) {
        const double blend = std::min(1.0, k / 100.0);
        const auto rho = clarke::clarke_to_joints({0.006 * blend, 0.002 * blend}, source);
        for (std::size_t j = 0; j < rho.size(); ++j) stream << (j ? "," : "") << rho[j];
        stream << "\n";
    }
    const auto refs = write_temp("cli_ext_refs.csv", stream.str());
    const auto geom = write_temp("cli_ext_geom.json", R"({"n": 4})");

    const auto result =
        run_cli("run --seed 6 --config " + cfg.string() + " --external " + refs.string() +
                " --external-geometry " + geom.string() + " --out-dir " + dir.string());
    CHECK(result.exit_code == 0);

    const auto rows = parse_csv(read_file(dir / "segment_1.csv"));
    REQUIRE(rows.size() == 300);
    const auto& last = rows.back();
    CHECK(std::abs(last[2] - 0.006) <= 1e-12);  // desired follows the stream
    CHECK(std::abs(last[8] - last[2]) < 1e-6);  // tracked through the decoder

    // the robot has five joints even though the stream came from four
    REQUIRE(last.size() == 14 + 15);
}

TEST_CASE("output settings come from the config unless flags override") {
    const fs::path dir = fs::temp_directory_path() / "clarke_run_cfg_out";
    fs::remove_all(dir);
    const auto cfg = write_temp("cli_out_cfg.json",
                                R"({"segments": 1, "output": {"dir": ")" + dir.string() +
                                    R"(", "backbone_stride": 1000, "backbone_samples": 2}})");
    CHECK(run_cli("run --seed 4 --config " + cfg.string()).exit_code == 0);
    CHECK(fs::exists(dir / "segment_1.csv"));
    CHECK(fs::exists(dir / "backbone.csv"));

    // stride 1000 with a short episode: a single frame of 2-pose segments
    const auto rows = parse_csv(read_file(dir / "backbone.csv"));
    CHECK(rows.size() == 2);

    const auto bad = write_temp("cli_out_bad.json", R"({"output": {"path": "x"}})");
    const auto result = run_cli("run --seed 4 --config " + bad.string());
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("output.path") != std::string::npos);
}

TEST_CASE("io and validation exit codes") {
    CHECK(run_cli("sample --count 1 --seed 1 --config /does/not/exist.json").exit_code == 1);

    const auto bad = write_temp("cli_bad_cfg.json", R"({"plant": {"time_constant": -1}})");
    const auto result = run_cli("sample --count 1 --seed 1 --config " + bad.string());
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("time_constant") != std::string::npos);

    const auto unknown = write_temp("cli_unknown_cfg.json", R"({"plant": {"tau": 0.2}})");
    const auto unknown_result = run_cli("sample --count 1 --seed 1 --config " + unknown.string());
    CHECK(unknown_result.exit_code == 2);
    CHECK(unknown_result.output.find("plant.tau") != std::string::npos);

    const auto malformed = write_temp("cli_malformed.json", "{not json");
    CHECK(run_cli("sample --count 1 --seed 1 --config " + malformed.string()).exit_code == 2);
}
