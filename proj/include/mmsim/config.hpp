#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mmsim/agents.hpp"
#include "mmsim/core.hpp"

namespace mmsim {

// Confirmation latency per execution kind. A plain number in the config sets
// all four at once; an object sets them individually.
struct DelaySpec {
    long long bids = 0, asks = 0, buys = 0, sells = 0;

    long long of(Kind k) const {
        switch (k) {
            case Kind::Bid: return bids;
            case Kind::Ask: return asks;
            case Kind::Buy: return buys;
            default: return sells;
        }
    }
    bool uniform() const { return bids == asks && asks == buys && buys == sells; }
    bool operator==(const DelaySpec&) const = default;
};

struct TraderSpec {
    enum class Role : std::uint8_t { MarketMaker, Fundamental };
    Role role = Role::MarketMaker;

    // maker fields (prices in sub-ticks)
    long long upper = 0;
    long long lower = 0;
    long long initial_inventory = 0;
    Price zeta = 0;
    SizingMode sizing = SizingMode::Deterministic;
    long long every = 1;

    // fundamental fields
    FundamentalSide side = FundamentalSide::Seller;
    Size omega = 0;
    long long timelimit = 0;
    bool exit_on_panic = false;

    bool operator==(const TraderSpec&) const = default;
};

struct ScenarioConfig {
    long long steps = 0;
    std::uint64_t seed = 0;
    bool shuffle = false;
    std::int64_t price_scale = 10000;  // sub-ticks per tick
    Price initial_best_bid = 0;
    Price initial_best_ask = 0;
    DelaySpec delay;
    std::vector<TraderSpec> traders;

    bool operator==(const ScenarioConfig&) const = default;
};

struct ConfigIssue {
    std::string field;
    std::string reason;
};

// Carries every problem found, not just the first.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<ConfigIssue> issues);
    const std::vector<ConfigIssue>& issues() const { return issues_; }

private:
    std::vector<ConfigIssue> issues_;
};

// All structural checks on an already-built config. Empty result = valid.
std::vector<ConfigIssue> validate_config(const ScenarioConfig& cfg);

// JSON text -> validated config; throws ConfigError listing every offending
// field. Prices are given in ticks, as integers or decimal strings ("97.25")
// so they parse exactly; bare floating-point numbers are rejected.
ScenarioConfig parse_config(const std::string& json_text);

// Config -> canonical JSON. parse_config(render_config(c)) == c.
std::string render_config(const ScenarioConfig& cfg);

// Trader ids by slot: makers are numbered 1..M in list order, the first
// fundamental is 0, further fundamentals continue after the makers.
std::vector<int> assigned_ids(const ScenarioConfig& cfg);

// Built-in scenarios; throws ConfigError for unknown names.
ScenarioConfig preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace mmsim
