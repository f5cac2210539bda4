#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "mmsim/analysis.hpp"
#include "mmsim/harness.hpp"

namespace mmsim {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FlowWindow {
    long long from = 0;
    long long to = 0;
};

struct RunSummary {
    std::string name;
    long long steps = 0;
    std::size_t traders = 0;
    std::size_t executions = 0;  // executed pairs across the run
    CycleReport cycle;
    Price first_price = 0;
    Price last_price = 0;
    std::int64_t price_scale = 10000;
    std::filesystem::path out_dir;

    std::string one_line() const;
};

// Runs the scenario and writes the full result set into out_dir:
//   inventories.csv  t, inventory per trader (start-of-step)
//   prices.csv       t, last trade, best bid, best ask (ticks)
//   nlp.csv          t, net liquidity pressure
//   trades.csv       t, buyer, seller, size, price -- one row per fill pair
//   flow.txt         activity table (optionally windowed)
//   cycle.txt        state-repetition scan result
// Throws IoError when the directory or a file cannot be written.
RunSummary run_scenario(const ScenarioConfig& cfg, const std::string& name,
                        const std::filesystem::path& out_dir, bool check_invariants = true,
                        std::optional<FlowWindow> window = std::nullopt);

}  // namespace mmsim
