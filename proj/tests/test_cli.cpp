#include "anyonsim/cli.hpp"
#include "anyonsim/serialize.hpp"

#include "test_util.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace anyonsim;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json without_time(json j) {
    j.erase("wall_time_ms");
    return j;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("anyonsim_cli_" + name);
}

}  // namespace

TEST_CASE("envelope fields") {
    const Run r = run({"relations", "--rep", "ising", "--anyons", "6"});
    REQUIRE(r.code == 0);
    const json j = r.doc();
    CHECK(j["subcommand"] == "relations");
    CHECK(j["tool_version"].is_string());
    CHECK(j["seed"] == 0);
    CHECK(j["parameters"]["anyons"] == 6);
    CHECK(j["results"]["pass"] == true);
    CHECK(j["wall_time_ms"].is_number());
}

TEST_CASE("help and version exit cleanly") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"compile-weave", "--help"}).code == 0);
    const Run v = run({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out.find('.') != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"relations", "--bogus"}).code == 2);
    CHECK(run({"relations", "--rep", "su3"}).code == 2);
    const Run bad_word = run({"ising-braid", "--word", "1 x 2"});
    CHECK(bad_word.code == 2);
    CHECK(bad_word.err.find("MalformedToken") != std::string::npos);
    CHECK(run({"ising-braid", "--word", "9", "--majoranas", "4"}).code == 2);
    CHECK(run({"ising-fuse", "--word", "1", "--pairing", "(1,2)(2,3)"}).code == 2);
    CHECK(run({"--format", "csv", "relations"}).code == 2);
    CHECK(run({"compile-weave", "--workers", "0"}).code == 2);
}

TEST_CASE("runtime errors exit 1") {
    const Run r = run({"jr-zero-mode", "--m-bar", "-1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("NotNormalizable") != std::string::npos);
    CHECK(run({"--output", "/nonexistent_dir/a/b.json", "relations", "--rep", "ising"}).code == 1);
}

TEST_CASE("ising-fuse examples") {
    const json a = run({"ising-fuse", "--word", "2", "--pairing", "(1,3)(2,4)"}).doc();
    CHECK(std::abs(a["results"]["probabilities"]["00"].get<double>() - 0.5) < 1e-12);
    CHECK(std::abs(a["results"]["probabilities"]["11"].get<double>() - 0.5) < 1e-12);
    CHECK(a["results"]["probabilities"]["01"].get<double>() < 1e-20);

    const json b = run({"ising-fuse", "--word", "2 2", "--pairing", "(1,2)(3,4)"}).doc();
    CHECK(std::abs(b["results"]["probabilities"]["11"].get<double>() - 1.0) < 1e-12);
}

TEST_CASE("sampled fusion is reproducible from the seed") {
    const std::vector<std::string> args{"--seed", "17", "ising-fuse", "--word", "2", "--pairing", "(1,3)(2,4)",
                                        "--shots", "1000"};
    const json a = run(args).doc();
    const json b = run(args).doc();
    CHECK(a["results"]["counts"] == b["results"]["counts"]);
    CHECK(a["seed"] == 17);
    const auto& counts = a["results"]["counts"];
    CHECK(counts["00"].get<int>() + counts["11"].get<int>() == 1000);
    const json c = run({"--seed", "18", "ising-fuse", "--word", "2", "--pairing", "(1,3)(2,4)", "--shots", "1000"}).doc();
    CHECK(c["results"]["counts"] != a["results"]["counts"]);
}

TEST_CASE("outputs are deterministic apart from the wall time") {
    const std::vector<std::vector<std::string>> cases{
        {"relations", "--rep", "fibonacci", "--anyons", "5"},
        {"ising-braid", "--word", "1 2 -1"},
        {"fib-basis", "--anyons", "6", "--charge", "0"},
        {"fib-braid", "--anyons", "4", "--word", "1 2", "--matrix"},
        {"compile-weave", "--max-moves", "4", "--workers", "3"},
        {"berry-exchange", "--steps", "50"},
        {"bdg-spectrum", "--sites", "30"},
        {"jr-zero-mode", "--half-extent", "4", "--spacing", "0.1"},
    };
    for (const auto& args : cases) {
        const Run a = run(args);
        const Run b = run(args);
        INFO(args.front());
        REQUIRE(a.code == 0);
        CHECK(without_time(a.doc()) == without_time(b.doc()));
    }
}

TEST_CASE("fib-basis counts") {
    const json j = run({"fib-basis", "--anyons", "10"}).doc();
    CHECK(j["results"]["count"] == 89);
    CHECK(j["results"]["counts"]["vacuum"] == 34);
    CHECK(j["results"]["counts"]["tau"] == 55);
}

TEST_CASE("compile-weave default target and cache") {
    const std::filesystem::path cache = temp_path("cache.json");
    std::filesystem::remove(cache);
    const std::vector<std::string> args{"compile-weave", "--max-moves", "6", "--cache", cache.string()};
    const json a = run(args).doc();
    CHECK(a["results"]["target"] == "B1^4");
    CHECK(a["results"]["cache_hit"] == false);
    CHECK(a["results"]["distance"].get<double>() < 0.02);
    CHECK(a["results"]["controlled_gate"].size() == 4);
    const json b = run(args).doc();
    CHECK(b["results"]["cache_hit"] == true);
    CHECK(b["results"]["moves"] == a["results"]["moves"]);
    CHECK(b["results"]["distance"] == a["results"]["distance"]);
    std::filesystem::remove(cache);
}

TEST_CASE("berry-exchange reports transport defects") {
    const json j = run({"berry-exchange", "--steps", "200"}).doc();
    CHECK(j["results"]["distance"].get<double>() < 1e-3);
    CHECK(j["results"]["gamma1_to_gamma2_defect"].get<double>() < 1e-3);
    CHECK(j["results"]["gamma2_to_minus_gamma1_defect"].get<double>() < 1e-3);
    const json s = run({"berry-exchange", "--single-move", "--steps", "200"}).doc();
    CHECK(s["results"]["distance"].get<double>() < 1e-3);
}

TEST_CASE("berry-exchange custom path file") {
    const std::filesystem::path file = temp_path("path.json");
    write_text_file(file, to_json(exchange_path()).dump());
    const Run r = run({"berry-exchange", "--path", file.string(), "--steps", "100"});
    REQUIRE(r.code == 0);
    CHECK(r.doc()["results"]["closed"] == true);
    write_text_file(file, R"({"legs": [], "colour": 1})");
    CHECK(run({"berry-exchange", "--path", file.string()}).code == 2);
    std::filesystem::remove(file);
    CHECK(run({"berry-exchange", "--path", file.string()}).code == 2);
}

TEST_CASE("csv output") {
    const Run z = run({"--format", "csv", "jr-zero-mode", "--half-extent", "2", "--spacing", "0.5"});
    REQUIRE(z.code == 0);
    CHECK(z.out.rfind("x,density\n", 0) == 0);
    CHECK(std::count(z.out.begin(), z.out.end(), '\n') == 10);

    const Run s = run({"--format", "csv", "bdg-splitting", "--d-min", "40", "--d-max", "60", "--d-step", "10"});
    REQUIRE(s.code == 0);
    CHECK(s.out.rfind("d,epsilon,ln_epsilon_envelope\n40,", 0) == 0);
    CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 4);

    const Run e = run({"--format", "csv", "bdg-splitting", "--d-min", "50", "--d-max", "40"});
    CHECK(e.code == 0);
    CHECK(e.out == "d,epsilon,ln_epsilon_envelope\n");
}

TEST_CASE("output file") {
    const std::filesystem::path file = temp_path("out.json");
    const Run r = run({"--output", file.string(), "fib-basis", "--anyons", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(file);
    const json j = json::parse(in);
    CHECK(j["results"]["count"] == 3);
    std::filesystem::remove(file);
}

TEST_CASE("installed executable") {
    const std::string cmd = std::string(ANYONSIM_CLI_PATH) + " fib-basis --anyons 4 --no-paths > /dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
    const std::string bad = std::string(ANYONSIM_CLI_PATH) + " relations --bogus 2> /dev/null";
    const int status = std::system(bad.c_str());
    CHECK(WEXITSTATUS(status) == 2);
}
