#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(GRM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) res.output.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace

TEST_CASE("field subcommand emits the deterministic JSON description") {
    const auto res = run_cli("field --p 2 --r 3 --format json");
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.output);
    CHECK(j["p"] == 2);
    CHECK(j["r"] == 3);
    CHECK(j["q"] == 8);
    CHECK(j["modulus"] == nlohmann::json({1, 1, 0, 1}));
    CHECK(j["alpha"] == 2);
}

TEST_CASE("validation failures exit with 2") {
    CHECK(run_cli("field --p 4 --r 1").exit_code == 2);
    CHECK(run_cli("verify nonprime --q 6 --m 1").exit_code == 2);
    CHECK(run_cli("verify nonprime --q 5 --m 1").exit_code == 2);
    CHECK(run_cli("verify bch --p 4 --m 2").exit_code == 2);
    CHECK(run_cli("code gen --q 4 --m 2").exit_code == 2); // missing --nu
    CHECK(run_cli("definitely-not-a-subcommand").exit_code == 2);
}

TEST_CASE("verify subcommands succeed and stream one JSON object per line") {
    const auto res = run_cli("verify bch --p 2 --m 3 --format json");
    REQUIRE(res.exit_code == 0);
    std::size_t lines = 0;
    std::size_t start = 0;
    while (start < res.output.size()) {
        std::size_t end = res.output.find('\n', start);
        if (end == std::string::npos) end = res.output.size();
        const std::string line = res.output.substr(start, end - start);
        if (!line.empty()) {
            const auto j = nlohmann::json::parse(line);
            CHECK(j["verdict"] == "pass");
            ++lines;
        }
        start = end + 1;
    }
    CHECK(lines == 4);
}

TEST_CASE("json output is stable across runs") {
    const auto a = run_cli("verify duality --q 8 --m 2 --format json");
    const auto b = run_cli("verify duality --q 8 --m 2 --format json");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    auto ja = nlohmann::json::parse(a.output);
    auto jb = nlohmann::json::parse(b.output);
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    CHECK(ja == jb);
}

TEST_CASE("hpoly prints every available form") {
    const auto res = run_cli("hpoly --q 8 --i 6 --format json");
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.output);
    CHECK(j["degree"] == 6);
    CHECK(j["forms"].contains("definition"));
    CHECK(j["forms"].contains("closed"));

    const auto prime = run_cli("hpoly --p 5 --i 3 --format json");
    REQUIRE(prime.exit_code == 0);
    const auto jp = nlohmann::json::parse(prime.output);
    CHECK(jp["degree"] == 1);
    CHECK(jp["forms"].contains("product_form"));
    CHECK(jp["forms"].contains("recurrence_form"));
}

TEST_CASE("code gen CSV has the metadata header and the right shape") {
    const auto res = run_cli("code gen --q 4 --m 1 --nu 1 --format csv");
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.output.rfind("# p=2 r=2 q=4", 0) == 0);
    std::size_t rows = 0;
    for (char c : res.output) rows += c == '\n';
    CHECK(rows == 3); // header + 2 generator rows
}

TEST_CASE("dim prints the duality table") {
    const auto res = run_cli("dim --q 4 --m 2 --format json");
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.output);
    REQUIRE(j["table"].size() == 7);
    CHECK(j["table"][0]["radical_dim"] == 16);
    for (const auto& row : j["table"])
        CHECK(row["radical_dim"] == row["code_dim"]);
}

TEST_CASE("--out writes the report file") {
    const std::string path = "/tmp/grm_cli_test_out.json";
    std::remove(path.c_str());
    const auto res = run_cli("field --q 9 --format json --out " + path);
    REQUIRE(res.exit_code == 0);
    FILE* fp = std::fopen(path.c_str(), "r");
    REQUIRE(fp != nullptr);
    std::fclose(fp);
    std::remove(path.c_str());
}

TEST_CASE("verify section6 passes end to end") {
    const auto res = run_cli("verify section6 --format json");
    CHECK(res.exit_code == 0);
}

TEST_CASE("size ceiling override is honored") {
    CHECK(run_cli("code gen --q 8 --m 3 --nu 1 --max-size 100 --format csv").exit_code == 2);
    CHECK(run_cli("code gen --q 8 --m 3 --nu 1 --format csv").exit_code == 0);
}

TEST_CASE("verify all runs the whole battery") {
    const auto res = run_cli("verify all");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("all checks passed") != std::string::npos);
}
