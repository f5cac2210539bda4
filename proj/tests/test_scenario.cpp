#include "doctest.h"

#include "mmsim/cli.hpp"
#include "mmsim/config.hpp"
#include "mmsim/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace mmsim;
namespace fs = std::filesystem;

namespace {

const char* kFiles[] = {"inventories.csv", "prices.csv", "nlp.csv",
                        "trades.csv",      "flow.txt",   "cycle.txt"};

fs::path fresh_dir(const std::string& leaf) {
    fs::path dir = fs::temp_directory_path() / "mmsim_tests" / leaf;
    fs::remove_all(dir);
    return dir;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) out.push_back(current);
    return out;
}

ScenarioConfig lone_maker(long long steps) {
    ScenarioConfig cfg;
    cfg.steps = steps;
    cfg.seed = 1;
    cfg.price_scale = 10000;
    cfg.initial_best_bid = 99 * 10000;
    cfg.initial_best_ask = 101 * 10000;
    TraderSpec mm;
    mm.role = TraderSpec::Role::MarketMaker;
    mm.upper = 10;
    mm.lower = -10;
    mm.zeta = 4 * 10000;
    cfg.traders = {mm};
    return cfg;
}

} // namespace

TEST_CASE("a scenario run writes the full result set") {
    auto dir = fresh_dir("full_set");
    auto summary = run_scenario(preset("table1"), "table1", dir);

    for (const char* name : kFiles) CHECK(fs::exists(dir / name));
    CHECK(summary.steps == 24);
    CHECK(summary.traders == 2);
    CHECK(summary.executions > 0);
    CHECK(summary.cycle == CycleReport{true, 0, 12});
    CHECK(summary.out_dir == dir);
    CHECK(summary.one_line().find("table1") != std::string::npos);
    CHECK(summary.one_line().find("cycle period 12") != std::string::npos);

    auto inv_lines = lines_of(read_file(dir / "inventories.csv"));
    REQUIRE(inv_lines.size() == 26); // header + rows t=0..24
    CHECK(inv_lines[0] == "t,inv_1,inv_2");
    CHECK(inv_lines[1] == "0,-8,18");
    CHECK(inv_lines[13] == "12,-8,18"); // the loop closes

    auto price_lines = lines_of(read_file(dir / "prices.csv"));
    CHECK(price_lines[0] == "t,last_trade,best_bid,best_ask");
    CHECK(price_lines[1].rfind("0,100,", 0) == 0);
    CHECK(price_lines[2].rfind("1,98.7778,", 0) == 0);

    auto nlp_lines = lines_of(read_file(dir / "nlp.csv"));
    CHECK(nlp_lines[0] == "t,nlp");
    CHECK(nlp_lines[1] == "0,-0.5555555555555556");

    auto trade_lines = lines_of(read_file(dir / "trades.csv"));
    CHECK(trade_lines[0] == "t,buyer,seller,size,price");
    CHECK(trade_lines[1] == "1,1,2,10,98.7778");

    CHECK(read_file(dir / "cycle.txt").find("period 12") != std::string::npos);
    CHECK(lines_of(read_file(dir / "flow.txt")).size() == 26);
}

TEST_CASE("a zero-step run writes headers only") {
    auto dir = fresh_dir("zero_steps");
    run_scenario(lone_maker(0), "quiet", dir);
    CHECK(read_file(dir / "inventories.csv") == "t,inv_1\n");
    CHECK(read_file(dir / "prices.csv") == "t,last_trade,best_bid,best_ask\n");
    CHECK(read_file(dir / "nlp.csv") == "t,nlp\n");
    CHECK(read_file(dir / "trades.csv") == "t,buyer,seller,size,price\n");
    CHECK(lines_of(read_file(dir / "flow.txt")).size() == 1);
    CHECK(read_file(dir / "cycle.txt").find("no exact state repetition") != std::string::npos);
}

TEST_CASE("reruns with the same seed are byte-identical") {
    auto cfg = preset("paired5");
    cfg.seed = 5;
    cfg.steps = 60;
    auto dir_a = fresh_dir("rerun_a");
    auto dir_b = fresh_dir("rerun_b");
    run_scenario(cfg, "paired5", dir_a);
    run_scenario(cfg, "paired5", dir_b);
    for (const char* name : kFiles) CHECK(read_file(dir_a / name) == read_file(dir_b / name));
}

TEST_CASE("without shuffling the seed leaves every output byte unchanged") {
    auto cfg = preset("table1");
    cfg.seed = 1;
    auto dir_a = fresh_dir("seed_a");
    run_scenario(cfg, "table1", dir_a);
    cfg.seed = 2;
    auto dir_b = fresh_dir("seed_b");
    run_scenario(cfg, "table1", dir_b);
    for (const char* name : kFiles) CHECK(read_file(dir_a / name) == read_file(dir_b / name));
}

TEST_CASE("a flow window narrows flow.txt and nothing else") {
    auto dir = fresh_dir("windowed");
    run_scenario(preset("table1"), "table1", dir, true, FlowWindow{0, 2});
    CHECK(lines_of(read_file(dir / "flow.txt")).size() == 4); // header + 3 rows
    CHECK(lines_of(read_file(dir / "inventories.csv")).size() == 26);
}

TEST_CASE("an unwritable output directory raises an I/O error") {
    auto dir = fresh_dir("blocked");
    fs::create_directories(dir);
    std::ofstream(dir / "plug").put('x'); // a file where a directory must go
    CHECK_THROWS_AS(run_scenario(lone_maker(2), "quiet", dir / "plug" / "sub"), IoError);
}

TEST_CASE("cli: a preset run succeeds and writes the result set") {
    auto dir = fresh_dir("cli_run");
    CHECK(run_cli({"run", "--preset", "table1", "--out", dir.string()}) == 0);
    for (const char* name : kFiles) CHECK(fs::exists(dir / name));
}

TEST_CASE("cli: step and seed overrides reshape the run") {
    auto dir = fresh_dir("cli_override");
    CHECK(run_cli({"run", "--preset", "table1", "--out", dir.string(), "--steps", "6",
                   "--seed", "9"}) == 0);
    CHECK(lines_of(read_file(dir / "inventories.csv")).size() == 8);

    auto dir2 = fresh_dir("cli_override_bad");
    CHECK(run_cli({"run", "--preset", "table1", "--out", dir2.string(), "--steps", "-3"}) == 1);
}

TEST_CASE("cli: flow windows reach the writer") {
    auto dir = fresh_dir("cli_window");
    CHECK(run_cli({"run", "--preset", "table1", "--out", dir.string(), "--flow-window",
                   "0:2"}) == 0);
    CHECK(lines_of(read_file(dir / "flow.txt")).size() == 4);

    auto dir2 = fresh_dir("cli_window_bad");
    CHECK(run_cli({"run", "--preset", "table1", "--out", dir2.string(), "--flow-window",
                   "junk"}) == 1);
    CHECK(run_cli({"run", "--preset", "table1", "--out", dir2.string(), "--flow-window",
                   "5:1"}) == 1);
}

TEST_CASE("cli: config and usage mistakes exit with code 1") {
    auto dir = fresh_dir("cli_errors");
    CHECK(run_cli({"run", "--preset", "no-such-preset", "--out", dir.string()}) == 1);
    CHECK(run_cli({"run", "--out", dir.string()}) == 1); // neither preset nor config
    CHECK(run_cli({"run", "--preset", "table1"}) == 1);  // --out is required
    CHECK(run_cli({}) == 1);                             // a subcommand is required
    CHECK(run_cli({"frobnicate"}) == 1);

    // --config and --preset are mutually exclusive
    auto config_path = fresh_dir("cli_errors_cfg");
    fs::create_directories(config_path);
    auto file = config_path / "scenario.json";
    std::ofstream(file) << render_config(preset("table1"));
    CHECK(run_cli({"run", "--config", file.string(), "--preset", "table1", "--out",
                   dir.string()}) == 1);
    // but --config alone works
    auto dir_ok = fresh_dir("cli_config_ok");
    CHECK(run_cli({"run", "--config", file.string(), "--out", dir_ok.string()}) == 0);

    // invalid config content is a config error, not an I/O error
    auto bad = config_path / "bad.json";
    std::ofstream(bad) << "{\"steps\": -4}";
    CHECK(run_cli({"run", "--config", bad.string(), "--out", dir.string()}) == 1);
}

TEST_CASE("cli: I/O failures exit with code 3") {
    auto dir = fresh_dir("cli_io");
    fs::create_directories(dir);
    std::ofstream(dir / "plug").put('x');
    CHECK(run_cli({"run", "--preset", "table1", "--out", (dir / "plug" / "sub").string()}) ==
          3);
    CHECK(run_cli({"run", "--config", (dir / "missing.json").string(), "--out",
                   (dir / "out").string()}) == 3);
}

TEST_CASE("cli: the helper subcommands succeed") {
    CHECK(run_cli({"presets"}) == 0);
    CHECK(run_cli({"render", "--preset", "paired5"}) == 0);
    CHECK(run_cli({"render"}) == 1);
    CHECK(run_cli({"--help"}) == 0);
}
