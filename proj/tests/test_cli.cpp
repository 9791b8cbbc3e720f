#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <hillpt/cli.hpp>

using namespace hillpt;
using ojson = nlohmann::ordered_json;

namespace {

struct MainResult {
    int rc;
    std::string out;
    std::string err;
};

MainResult call_main(std::vector<std::string> args) {
    args.insert(args.begin(), "hillpt");
    std::vector<char*> argv;
    argv.reserve(args.size());
    for (auto& s : args) argv.push_back(s.data());
    std::ostringstream out;
    std::ostringstream err;
    std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
    std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
    const int rc = cli_main(int(argv.size()), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {rc, out.str(), err.str()};
}

std::string usage_message(std::vector<std::string> args) {
    try {
        parse_args(std::move(args));
    } catch (const UsageError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parsing fills the run configuration") {
    const RunConfig cfg = parse_args(
        {"spectrum", "--n", "20", "--levels", "3", "--beta", "0.5", "--format", "json"});
    CHECK(cfg.mode == RunConfig::Mode::Spectrum);
    CHECK(cfg.n == 20);
    CHECK(cfg.levels == 3);
    CHECK(cfg.params.beta == 0.5);
    CHECK(cfg.params.c == 1.0);
    CHECK(cfg.params.s == 2.0);
    CHECK(cfg.format == RunConfig::Format::Json);

    const RunConfig defaults = parse_args({"spectrum"});
    CHECK(defaults.n == 35);
    CHECK(defaults.levels == 5);
    CHECK(defaults.format == RunConfig::Format::Table);
    CHECK(defaults.output_path.empty());
}

TEST_CASE("sweep orders come from a comma-separated list") {
    const RunConfig cfg = parse_args({"sweep", "--n-list", "15,20,25", "--s", "1.5"});
    CHECK(cfg.mode == RunConfig::Mode::Sweep);
    CHECK(cfg.n_list == std::vector<int>{15, 20, 25});
    CHECK(cfg.params.s == 1.5);
}

TEST_CASE("wavefunction mode requires its grid flags") {
    const RunConfig cfg = parse_args({"wavefunction", "--level", "1", "--x-min", "-1", "--x-max",
                                      "1", "--points", "11", "--n", "40"});
    CHECK(cfg.mode == RunConfig::Mode::Wavefunction);
    CHECK(cfg.level == 1);
    CHECK(cfg.points == 11);
    CHECK(cfg.x_min == -1.0);
    CHECK(cfg.x_max == 1.0);
    CHECK_THROWS_AS(parse_args({"wavefunction", "--x-min", "-1", "--x-max", "1", "--points", "9"}),
                    UsageError);
}

TEST_CASE("asymptotics defaults to a long sequence") {
    CHECK(parse_args({"asymptotics"}).n == 4000);
    CHECK(parse_args({"asymptotics", "--n", "1200"}).n == 1200);
    CHECK_THROWS_AS(parse_args({"asymptotics", "--n", "100"}), UsageError);
}

TEST_CASE("all violations are reported in one message") {
    const std::string msg = usage_message({"spectrum", "--n", "1", "--levels", "1", "--s", "-2"});
    CHECK(msg.find("--n must be at least 2") != std::string::npos);
    CHECK(msg.find("--levels") != std::string::npos);
    CHECK(msg.find("s must be positive") != std::string::npos);
}

TEST_CASE("malformed invocations are rejected") {
    CHECK_THROWS_AS(parse_args({}), UsageError);
    CHECK_THROWS_AS(parse_args({"spectrum", "--bogus"}), UsageError);
    CHECK_THROWS_AS(parse_args({"spectrum", "--n", "notanumber"}), UsageError);
    CHECK_THROWS_AS(parse_args({"spectrum", "--format", "yaml"}), UsageError);
    CHECK_THROWS_AS(parse_args({"sweep"}), UsageError);
    CHECK_THROWS_AS(parse_args({"sweep", "--n-list", "25,20"}), UsageError);
    CHECK_THROWS_AS(parse_args({"wavefunction", "--level", "0", "--x-min", "1", "--x-max", "-1",
                                "--points", "9"}),
                    UsageError);
}

TEST_CASE("help requests carry the help text") {
    CHECK_THROWS_AS(parse_args({"--help"}), HelpRequest);
    try {
        parse_args({"--help"});
    } catch (const HelpRequest& h) {
        CHECK(h.text.find("spectrum") != std::string::npos);
        CHECK(h.text.find("verify") != std::string::npos);
    }
    try {
        parse_args({"spectrum", "--help"});
    } catch (const HelpRequest& h) {
        CHECK(h.text.find("--levels") != std::string::npos);
    }
}

TEST_CASE("the spectrum artifact carries the expected json layout") {
    RunConfig cfg = parse_args({"spectrum", "--format", "json"});
    std::ostringstream out;
    std::ostringstream diag;
    REQUIRE(run(cfg, out, diag) == 0);
    const ojson doc = ojson::parse(out.str());

    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"params", "mode", "results", "diagnostics", "version"});

    CHECK(doc["mode"] == "spectrum");
    CHECK(doc["version"] == "0.1.0");
    CHECK(doc["params"]["beta"] == 1.0);
    CHECK(doc["diagnostics"]["n"] == 35);
    REQUIRE(doc["results"].size() == 5);
    CHECK(doc["results"][0]["level"] == 0);
    CHECK(std::abs(double(doc["results"][0]["re"]) - 1.6915902) <= 1e-6);
    CHECK(doc["results"][0]["real"] == true);
}

TEST_CASE("reruns are byte identical") {
    for (const char* format : {"table", "csv", "json"}) {
        RunConfig cfg = parse_args({"spectrum", "--n", "25", "--format", format});
        std::ostringstream a;
        std::ostringstream b;
        std::ostringstream diag;
        REQUIRE(run(cfg, a, diag) == 0);
        REQUIRE(run(cfg, b, diag) == 0);
        CHECK(a.str() == b.str());
        CHECK_FALSE(a.str().empty());
    }
}

TEST_CASE("the sweep table marks digits and the csv carries full precision") {
    RunConfig cfg = parse_args({"sweep", "--n-list", "15,20,25,30,35"});
    std::ostringstream out;
    std::ostringstream diag;
    REQUIRE(run(cfg, out, diag) == 0);
    CHECK(out.str().find("# digits") != std::string::npos);
    CHECK(out.str().find("1.69159") != std::string::npos);

    RunConfig csv = parse_args({"sweep", "--n-list", "15,20", "--format", "csv"});
    std::ostringstream cout_s;
    REQUIRE(run(csv, cout_s, diag) == 0);
    CHECK(cout_s.str().rfind("n,re0,im0", 0) == 0);
}

TEST_CASE("wavefunction artifacts mark points outside the trust radius") {
    RunConfig cfg = parse_args({"wavefunction", "--level", "0", "--x-min", "-2", "--x-max", "2",
                                "--points", "9", "--format", "json"});
    std::ostringstream out;
    std::ostringstream diag;
    REQUIRE(run(cfg, out, diag) == 0);
    const ojson doc = ojson::parse(out.str());
    CHECK(doc["diagnostics"]["points_outside_trust"] == 6);
    CHECK(doc["results"]["grid"].size() == 9);
    CHECK(doc["results"]["grid"][0]["re"].is_null());   // x = -2
    CHECK_FALSE(doc["results"]["grid"][4]["re"].is_null());  // x = 0
    CHECK(doc["results"]["energy"].get<double>() == doctest::Approx(1.6915902).epsilon(1e-6));
    CHECK(diag.str().find("warning") != std::string::npos);
    CHECK(diag.str().find("trust radius") != std::string::npos);
}

TEST_CASE("the asymptotics table reports the fit and the verdict") {
    RunConfig cfg = parse_args({"asymptotics"});
    std::ostringstream out;
    std::ostringstream diag;
    REQUIRE(run(cfg, out, diag) == 0);
    CHECK(out.str().find("fitted_gamma") != std::string::npos);
    CHECK(out.str().find("converges       yes") != std::string::npos);
    CHECK(out.str().find("above-threshold") != std::string::npos);
}

TEST_CASE("artifacts can be redirected to a file") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "hillpt_artifact_test.csv";
    RunConfig cfg = parse_args({"spectrum", "--n", "20", "--format", "csv", "--output",
                                path.string()});
    std::ostringstream out;
    std::ostringstream diag;
    REQUIRE(run(cfg, out, diag) == 0);
    CHECK(out.str().empty());
    std::ifstream f(path);
    std::string first;
    std::getline(f, first);
    CHECK(first == "level,re,im,real");
    f.close();
    fs::remove(path);
}

TEST_CASE("the matrix dump writes one csv row per basis index") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "hillpt_matrix_test.csv";
    RunConfig cfg = parse_args({"spectrum", "--n", "6", "--levels", "3", "--dump-matrix",
                                path.string()});
    std::ostringstream out;
    std::ostringstream diag;
    REQUIRE(run(cfg, out, diag) == 0);
    std::ifstream f(path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(f, line)) lines.push_back(line);
    f.close();
    fs::remove(path);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0].rfind("4,0,2,", 0) == 0);
}

TEST_CASE("the verify suite passes end to end") {
    RunConfig cfg = parse_args({"verify"});
    std::ostringstream out;
    std::ostringstream diag;
    CHECK(run(cfg, out, diag) == 0);
    std::size_t ok_count = 0;
    std::string::size_type pos = 0;
    while ((pos = out.str().find("ok: ", pos)) != std::string::npos) {
        ++ok_count;
        pos += 4;
    }
    CHECK(ok_count == 4);
    CHECK(out.str().find("FAIL") == std::string::npos);
}

TEST_CASE("exit codes distinguish success, usage errors, and help") {
    CHECK(call_main({"spectrum", "--n", "15", "--levels", "2"}).rc == 0);
    const MainResult usage = call_main({"spectrum", "--n", "notanumber"});
    CHECK(usage.rc == 2);
    CHECK(usage.err.find("usage error:") != std::string::npos);
    const MainResult help = call_main({"--help"});
    CHECK(help.rc == 0);
    CHECK(help.out.find("spectrum") != std::string::npos);
    const MainResult nosub = call_main({});
    CHECK(nosub.rc == 2);
}
