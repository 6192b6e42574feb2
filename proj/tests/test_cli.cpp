#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "quintic/cli.hpp"
#include "quintic/rational.hpp"

using namespace quintic;
using Json = nlohmann::ordered_json;

namespace {

cli::RunConfig config(cli::Command c, int q = -1, int z = -1,
                      cli::OutputFormat fmt = cli::OutputFormat::json) {
    cli::RunConfig cfg;
    cfg.command = c;
    cfg.q_order = q;
    cfg.z_order = z;
    cfg.output = fmt;
    return cfg;
}

/// Run a shell command, capture stdout, return (exit code, output).
std::pair<int, std::string> spawn(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("instanton counts round-trip through the JSON surface") {
    cli::RunResult res = cli::run(config(cli::Command::instantons, 3));
    CHECK(res.exit_code == 0);
    Json doc = Json::parse(res.text);
    CHECK(doc.at("command") == "instantons");
    CHECK(doc.at("params").at("max_degree") == 3);
    CHECK(doc.at("pass") == true);
    CHECK(doc.at("elapsed_ms").is_number_integer());
    const Json& rows = doc.at("results");
    REQUIRE(rows.size() == 3);
    // Structural fields are JSON integers; exact values are strings, since
    // the counts outgrow double-safe integers within the first ten degrees.
    CHECK(rows[0].at("d").is_number_integer());
    CHECK(rows[0].at("n_d").is_string());
    CHECK(rows[0].at("n_d") == "2875");
    CHECK(rows[1].at("n_d") == "609250");
    CHECK(rows[2].at("n_d") == "317206375");
    // Virtual count at degree 2 carries the degree-1 double covers.
    Rational gw2 = Rational::parse(rows[1].at("N_d").get<std::string>());
    CHECK(gw2 == Rational(609250) + Rational(2875, 8));
}

TEST_CASE("degree bound zero yields an empty table and success") {
    cli::RunResult res = cli::run(config(cli::Command::instantons, 0));
    CHECK(res.exit_code == 0);
    Json doc = Json::parse(res.text);
    CHECK(doc.at("pass") == true);
    CHECK(doc.at("results").empty());
}

TEST_CASE("JSON output is deterministic up to the elapsed-time field") {
    cli::RunConfig cfg = config(cli::Command::yukawa, 4);
    Json a = Json::parse(cli::run(cfg).text);
    Json b = Json::parse(cli::run(cfg).text);
    a["elapsed_ms"] = 0;
    b["elapsed_ms"] = 0;
    CHECK(a.dump(2) == b.dump(2));
    CHECK(a.at("results")[0].at("k") == "5");
    CHECK(a.at("results")[1].at("k") == "2875");
    CHECK(a.at("results")[2].at("k") == "4876875");
}

TEST_CASE("verification commands report pass and per-degree rows") {
    cli::RunResult res = cli::run(config(cli::Command::verify_ode, 6));
    CHECK(res.exit_code == 0);
    Json doc = Json::parse(res.text);
    CHECK(doc.at("pass") == true);
    for (const Json& row : doc.at("results")) {
        CHECK(row.at("degree").is_number_integer());
        CHECK(row.at("pass") == true);
    }

    res = cli::run(config(cli::Command::verify_sigma_model, 2, 3));
    CHECK(res.exit_code == 0);
    doc = Json::parse(res.text);
    CHECK(doc.at("results")[0].at("mismatch_count") == 0);

    res = cli::run(config(cli::Command::oracle_lines));
    CHECK(res.exit_code == 0);
    doc = Json::parse(res.text);
    REQUIRE(doc.at("results").size() == 3);
    CHECK(doc.at("results")[0].at("value") == "2875");
}

TEST_CASE("degenerate weights are a configuration error, exit 2") {
    cli::RunConfig cfg = config(cli::Command::reconstruct, 2, 9);
    cfg.lambdas = WeightSpec::standard();  // collides at depth 2
    cli::RunResult res = cli::run(cfg);
    CHECK(res.exit_code == 2);
    Json doc = Json::parse(res.text);
    CHECK(doc.at("pass") == false);
    CHECK(doc.at("results")[0].at("error") == "degenerate-weights");
    CHECK(doc.at("results")[0].at("message").get<std::string>().find("pole collision") !=
          std::string::npos);
}

TEST_CASE("an underpowered solve window is a blocked computation, exit 1") {
    cli::RunResult res = cli::run(config(cli::Command::reconstruct, 2, 3));
    CHECK(res.exit_code == 1);
    Json doc = Json::parse(res.text);
    CHECK(doc.at("results")[0].at("error") == "insufficient-z-order");
    CHECK(doc.at("results")[0].at("message").get<std::string>().find("raise z_order") !=
          std::string::npos);
}

TEST_CASE("reconstruct succeeds with the documented window") {
    cli::RunResult res = cli::run(config(cli::Command::reconstruct, 2, 4));
    CHECK(res.exit_code == 0);
    Json doc = Json::parse(res.text);
    for (const Json& row : doc.at("results")) {
        CHECK(row.at("pre_anchor_nullity") == 10);
        CHECK(row.at("match") == true);
    }
}

TEST_CASE("CSV output is byte-exact with a stable column union") {
    cli::RunResult res =
        cli::run(config(cli::Command::instantons, 2, -1, cli::OutputFormat::csv));
    CHECK(res.exit_code == 0);
    CHECK(res.text == "d,N_d,n_d\n1,2875,2875\n2,4876875/8,609250\n");
}

TEST_CASE("pretty output carries the command, rows, and verdict") {
    cli::RunResult res =
        cli::run(config(cli::Command::instantons, 1, -1, cli::OutputFormat::pretty));
    CHECK(res.exit_code == 0);
    CHECK(res.text.find("command: instantons") != std::string::npos);
    CHECK(res.text.find("d=1  N_d=2875  n_d=2875") != std::string::npos);
    CHECK(res.text.find("pass: true") != std::string::npos);
}

TEST_CASE("installed binary honors the exit-code contract") {
    const std::string bin = QUINTIC_CLI_BINARY;

    auto [code, out] = spawn(bin + " instantons --max-degree 2 --json");
    CHECK(code == 0);
    Json doc = Json::parse(out);
    CHECK(doc.at("results")[0].at("n_d") == "2875");

    auto [ocode, oout] = spawn(bin + " oracle lines --json");
    CHECK(ocode == 0);
    CHECK(Json::parse(oout).at("command") == "oracle-lines");

    auto [vcode, vout] = spawn(bin + " verify ode --order 5 --json");
    CHECK(vcode == 0);
    CHECK(Json::parse(vout).at("pass") == true);

    CHECK(spawn(bin + " verify sigma-model --max-degree 1 --z-order 1 --json").first == 0);

    CHECK(spawn(bin + " --help").first == 0);
    CHECK(spawn(bin + " bogus-command 2>/dev/null").first == 2);
    CHECK(spawn(bin + " instantons --max-degree notanint 2>/dev/null").first == 2);
    CHECK(spawn(bin + " verify polynomiality --q-order 1 --lambdas 1,1,2,3,-7 2>/dev/null").first ==
          2);
    CHECK(spawn(bin + " reconstruct --q-order 2 --z-order 3 --json").first == 1);
}
