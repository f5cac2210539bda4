#include "doctest.h"

#include "mmsim/config.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace mmsim;

namespace {

bool mentions(const ConfigError& err, const std::string& field) {
    for (const auto& issue : err.issues())
        if (issue.field == field) return true;
    return false;
}

const std::string kMinimal = R"({
  "steps": 10,
  "initial_best_bid": 99,
  "initial_best_ask": 101,
  "traders": [
    {"role": "market_maker", "upper": 10, "lower": -10}
  ]
})";

} // namespace

TEST_CASE("a minimal config parses with documented defaults") {
    auto cfg = parse_config(kMinimal);
    CHECK(cfg.steps == 10);
    CHECK(cfg.seed == 0);
    CHECK(cfg.shuffle == false);
    CHECK(cfg.price_scale == 10000);
    CHECK(cfg.initial_best_bid == 99 * 10000);
    CHECK(cfg.initial_best_ask == 101 * 10000);
    CHECK(cfg.delay == DelaySpec{0, 0, 0, 0});
    REQUIRE(cfg.traders.size() == 1);
    const auto& mm = cfg.traders[0];
    CHECK(mm.role == TraderSpec::Role::MarketMaker);
    CHECK(mm.initial_inventory == 0);
    CHECK(mm.zeta == 4 * 10000); // default skew: four ticks
    CHECK(mm.sizing == SizingMode::Deterministic);
    CHECK(mm.every == 1);
}

TEST_CASE("prices parse from integers or exact decimal strings only") {
    auto cfg = parse_config(R"({
      "steps": 1, "initial_best_bid": "98.25", "initial_best_ask": "101.5",
      "traders": [{"role": "market_maker", "upper": 5, "lower": -5, "zeta": "0.5"}]
    })");
    CHECK(cfg.initial_best_bid == 982500);
    CHECK(cfg.initial_best_ask == 1015000);
    CHECK(cfg.traders[0].zeta == 5000);

    // a float literal would smuggle in binary rounding
    CHECK_THROWS_AS(parse_config(R"({
      "steps": 1, "initial_best_bid": 98.25, "initial_best_ask": 101,
      "traders": [{"role": "market_maker", "upper": 5, "lower": -5}]
    })"),
                    ConfigError);

    // finer than the price scale resolves
    try {
        parse_config(R"({
          "steps": 1, "initial_best_bid": "98.00001", "initial_best_ask": 101,
          "traders": [{"role": "market_maker", "upper": 5, "lower": -5}]
        })");
        FAIL("expected ConfigError");
    } catch (const ConfigError& err) {
        CHECK(mentions(err, "initial_best_bid"));
        CHECK(err.issues()[0].reason.find("not representable") != std::string::npos);
    }
}

TEST_CASE("negative tick strings parse exactly") {
    auto cfg = parse_config(R"({
      "steps": 1, "initial_best_bid": 99, "initial_best_ask": 101,
      "traders": [{"role": "market_maker", "upper": 5, "lower": -5, "zeta": "-0"}]
    })");
    CHECK(cfg.traders[0].zeta == 0);
}

TEST_CASE("a scalar delay fans out to all four kinds, an object sets them apart") {
    auto uniform = parse_config(R"({
      "steps": 1, "delay": 3, "initial_best_bid": 99, "initial_best_ask": 101,
      "traders": [{"role": "market_maker", "upper": 5, "lower": -5}]
    })");
    CHECK(uniform.delay == DelaySpec{3, 3, 3, 3});
    CHECK(uniform.delay.uniform());

    auto split = parse_config(R"({
      "steps": 1, "delay": {"bids": 1, "sells": 2}, "initial_best_bid": 99,
      "initial_best_ask": 101,
      "traders": [{"role": "market_maker", "upper": 5, "lower": -5}]
    })");
    CHECK(split.delay == DelaySpec{1, 0, 0, 2});
    CHECK_FALSE(split.delay.uniform());
}

TEST_CASE("unknown fields anywhere are rejected by name") {
    try {
        parse_config(R"({
          "steps": 1, "stepz": 2, "initial_best_bid": 99, "initial_best_ask": 101,
          "traders": [{"role": "market_maker", "upper": 5, "lower": -5, "upperr": 7}]
        })");
        FAIL("expected ConfigError");
    } catch (const ConfigError& err) {
        CHECK(mentions(err, "stepz"));
        CHECK(mentions(err, "traders[0].upperr"));
    }
}

TEST_CASE("every structural problem is reported, not just the first") {
    try {
        parse_config(R"({
          "steps": -1, "initial_best_bid": 101, "initial_best_ask": 99,
          "traders": [
            {"role": "market_maker", "upper": 0, "lower": 1},
            {"role": "fundamental", "side": "hold", "omega": 0}
          ]
        })");
        FAIL("expected ConfigError");
    } catch (const ConfigError& err) {
        CHECK(err.issues().size() >= 5);
        CHECK(mentions(err, "steps"));
        CHECK(mentions(err, "initial_best_ask"));
        CHECK(mentions(err, "traders[0].upper"));
        CHECK(mentions(err, "traders[0].lower"));
        CHECK(mentions(err, "traders[1].side"));
        CHECK(mentions(err, "traders[1].omega"));
    }
}

TEST_CASE("narrow inventory bands are rejected") {
    try {
        parse_config(R"({
          "steps": 1, "initial_best_bid": 99, "initial_best_ask": 101,
          "traders": [{"role": "market_maker", "upper": 1, "lower": -1}]
        })");
        FAIL("expected ConfigError");
    } catch (const ConfigError& err) {
        CHECK(mentions(err, "traders[0].lower"));
    }
}

TEST_CASE("missing required fields are reported by name") {
    try {
        parse_config(R"({"traders": []})");
        FAIL("expected ConfigError");
    } catch (const ConfigError& err) {
        CHECK(mentions(err, "steps"));
        CHECK(mentions(err, "initial_best_bid"));
        CHECK(mentions(err, "initial_best_ask"));
    }
    CHECK_THROWS_AS(parse_config("not json at all"), ConfigError);
    CHECK_THROWS_AS(parse_config("[1,2,3]"), ConfigError);
}

TEST_CASE("rendering then parsing reproduces a config exactly") {
    for (const auto& name : preset_names()) {
        auto cfg = preset(name);
        CAPTURE(name);
        CHECK(parse_config(render_config(cfg)) == cfg);
    }

    // fractional skew and split delays survive the round trip too
    auto cfg = preset("table1");
    cfg.traders[0].zeta = 5000; // half a tick
    cfg.delay = {1, 2, 0, 3};
    cfg.initial_best_bid = 982500;
    CHECK(parse_config(render_config(cfg)) == cfg);
}

TEST_CASE("trader ids: makers count from one, the lead fundamental is zero") {
    ScenarioConfig cfg;
    TraderSpec mm;
    mm.role = TraderSpec::Role::MarketMaker;
    mm.upper = 5;
    mm.lower = -5;
    TraderSpec fund;
    fund.role = TraderSpec::Role::Fundamental;
    fund.omega = 1;
    cfg.traders = {mm, fund, mm, fund, fund};
    CHECK(assigned_ids(cfg) == std::vector<int>{1, 0, 2, 3, 4});

    cfg.traders = {fund, mm, mm};
    CHECK(assigned_ids(cfg) == std::vector<int>{0, 1, 2});
}

TEST_CASE("the preset catalogue is fixed and self-consistent") {
    auto names = preset_names();
    CHECK(names == std::vector<std::string>{"table1", "single-mm-delay", "paired5",
                                            "hetero5-up", "hetero5-down"});
    for (const auto& name : names) CHECK(validate_config(preset(name)).empty());
    CHECK_THROWS_AS(preset("tableone"), ConfigError);
}

TEST_CASE("preset table1: two opposed makers with two-step confirmations") {
    auto cfg = preset("table1");
    CHECK(cfg.steps == 24);
    CHECK(cfg.delay == DelaySpec{2, 2, 2, 2});
    CHECK_FALSE(cfg.shuffle);
    REQUIRE(cfg.traders.size() == 2);
    CHECK(cfg.traders[0].initial_inventory == -8);
    CHECK(cfg.traders[1].initial_inventory == 18);
    for (const auto& t : cfg.traders) {
        CHECK(t.upper == 10);
        CHECK(t.lower == -10);
        CHECK(t.zeta == 4 * 10000);
    }
}

TEST_CASE("preset single-mm-delay: one delayed maker against steady selling") {
    auto cfg = preset("single-mm-delay");
    CHECK(cfg.steps == 20);
    CHECK(cfg.delay == DelaySpec{2, 2, 2, 2});
    REQUIRE(cfg.traders.size() == 2);
    CHECK(cfg.traders[0].role == TraderSpec::Role::MarketMaker);
    CHECK(cfg.traders[0].initial_inventory == -8);
    CHECK(cfg.traders[1].role == TraderSpec::Role::Fundamental);
    CHECK(cfg.traders[1].side == FundamentalSide::Seller);
    CHECK(cfg.traders[1].omega == 1000);
}

TEST_CASE("preset paired5: five equal makers, shuffled, one-step confirmations") {
    auto cfg = preset("paired5");
    CHECK(cfg.steps == 100);
    CHECK(cfg.shuffle);
    CHECK(cfg.delay == DelaySpec{1, 1, 1, 1});
    REQUIRE(cfg.traders.size() == 5);
    std::vector<long long> invs;
    for (const auto& t : cfg.traders) invs.push_back(t.initial_inventory);
    CHECK(invs == std::vector<long long>{27, 27, -11, -11, 0});
}

TEST_CASE("presets hetero5-up/-down: mirrored panic cohorts, randomized sizing") {
    auto up = preset("hetero5-up");
    auto down = preset("hetero5-down");
    CHECK(up.steps == 500);
    CHECK(down.steps == 500);
    REQUIRE(up.traders.size() == 5);
    std::vector<long long> uppers;
    for (const auto& t : up.traders) {
        uppers.push_back(t.upper);
        CHECK(t.lower == -t.upper);
        CHECK(t.sizing == SizingMode::UniformRandom);
    }
    CHECK(uppers == std::vector<long long>{10, 12, 8, 14, 6});
    for (size_t i = 0; i < 5; ++i)
        CHECK(up.traders[i].initial_inventory == -down.traders[i].initial_inventory);
    // the cohort that starts beyond a limit must really be panicked
    CHECK(up.traders[1].initial_inventory <= -up.traders[1].upper);
    CHECK(down.traders[1].initial_inventory >= down.traders[1].upper);
}
