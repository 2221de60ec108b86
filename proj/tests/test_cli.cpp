#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qnogo/cli.hpp"

using namespace qnogo;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string diag;
};

RunResult run_config(const cli::RunConfig& config) {
    std::ostringstream out;
    std::ostringstream diag;
    const int code = cli::run(config, out, diag);
    return {code, out.str(), diag.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream stream(text);
    while (std::getline(stream, line))
        lines.push_back(line);
    return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

} // namespace

TEST_CASE("doubles render with nine significant digits and no padding") {
    CHECK(cli::format_double(1.5849625007211562) == "1.5849625");
    CHECK(cli::format_double(1.0) == "1");
    CHECK(cli::format_double(0.5) == "0.5");
    CHECK(cli::format_double(0.0) == "0");
}

TEST_CASE("the subspace gap run emits one violating row") {
    cli::RunConfig config;
    config.command = cli::Command::DeleteGap;
    const RunResult result = run_config(config);
    CHECK(result.code == 0);

    const auto lines = lines_of(result.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == cli::kCsvHeader);
    const auto fields = fields_of(lines[1]);
    REQUIRE(fields.size() == 13);
    CHECK(fields[0] == "delete-gap");
    CHECK(fields[1] == "subspace");
    CHECK(fields[6] == "1.5849625");
    CHECK(fields[7] == "1");
    CHECK(fields[10] == "0.584962501");
    CHECK(fields[12] == "VIOLATES");

    CHECK(result.diag.find("0 unexpected verdicts") != std::string::npos);
}

TEST_CASE("the deletion sweep hits the requested overlap grid") {
    cli::RunConfig config;
    config.command = cli::Command::DeleteSweep;
    config.overlap_steps = 3;
    const RunResult result = run_config(config);
    CHECK(result.code == 0);

    const auto lines = lines_of(result.out);
    REQUIRE(lines.size() == 4);
    CHECK(fields_of(lines[1])[2] == "0");
    CHECK(fields_of(lines[2])[2] == "0.5");
    CHECK(fields_of(lines[3])[2] == "1");

    const auto mid = fields_of(lines[2]);
    CHECK(std::stod(mid[6]) == Catch::Approx(0.954434003).margin(1e-6));
    CHECK(std::stod(mid[7]) == Catch::Approx(0.811278124).margin(1e-6));
    CHECK(mid[12] == "VIOLATES");

    CHECK(fields_of(lines[1])[12] == "CONSISTENT");
    CHECK(fields_of(lines[3])[12] == "CONSISTENT");
}

TEST_CASE("identical configurations produce byte-identical output") {
    cli::RunConfig config;
    config.command = cli::Command::Conserve;
    config.trials = 20;
    config.seed = 7;
    const RunResult first = run_config(config);
    const RunResult second = run_config(config);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.diag == second.diag);
}

TEST_CASE("the combined run stays healthy and keeps experiments sorted") {
    cli::RunConfig config;
    config.command = cli::Command::All;
    config.trials = 25;
    config.overlap_steps = 5;
    const RunResult result = run_config(config);
    CHECK(result.code == 0);

    const auto lines = lines_of(result.out);
    REQUIRE(lines.size() > 1);
    CHECK(lines[0] == cli::kCsvHeader);
    std::string previous;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string experiment = fields_of(lines[i])[0];
        CHECK(previous <= experiment);
        previous = experiment;
    }
}

TEST_CASE("bad configurations exit with status 2 and emit no CSV") {
    const auto rejected = [](cli::RunConfig config) {
        const RunResult result = run_config(config);
        CHECK(result.code == 2);
        CHECK(result.out.empty());
        CHECK(result.diag.find("error:") != std::string::npos);
    };

    cli::RunConfig config;
    config.command = cli::Command::DeleteGap;

    cli::RunConfig steps = config;
    steps.overlap_steps = 1;
    rejected(steps);

    cli::RunConfig trials = config;
    trials.trials = 0;
    rejected(trials);

    cli::RunConfig tolerance = config;
    tolerance.tolerance = 0.0;
    rejected(tolerance);

    cli::RunConfig env = config;
    env.env_overlap = 1.5;
    rejected(env);

    cli::RunConfig ancilla = config;
    ancilla.ancilla_overlap = -0.1;
    rejected(ancilla);
}

TEST_CASE("the CSV can be redirected to a file") {
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "qnogo_cli_redirect_test.csv";

    cli::RunConfig config;
    config.command = cli::Command::DeleteGap;
    const RunResult inline_result = run_config(config);

    config.output_path = path.string();
    const RunResult file_result = run_config(config);
    CHECK(file_result.code == 0);
    CHECK(file_result.out.empty());

    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::ostringstream content;
    content << file.rdbuf();
    CHECK(content.str() == inline_result.out);
    std::filesystem::remove(path);

    config.output_path = "/nonexistent-dir/qnogo.csv";
    const RunResult bad = run_config(config);
    CHECK(bad.code == 2);
    CHECK(bad.diag.find("error:") != std::string::npos);
}
