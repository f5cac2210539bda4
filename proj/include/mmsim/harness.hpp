#pragma once

#include <array>
#include <stdexcept>
#include <variant>
#include <vector>

#include "mmsim/agents.hpp"
#include "mmsim/config.hpp"
#include "mmsim/core.hpp"
#include "mmsim/delay.hpp"
#include "mmsim/orderbook.hpp"
#include "mmsim/rng.hpp"

namespace mmsim {

// A batch of executions travelling through (or arriving from) a delay line:
// fills produced at exec_step, handed to their trader at deliver_step.
struct FlowBatch {
    long long exec_step = 0;
    long long deliver_step = 0;
    Kind kind = Kind::Bid;
    int trader = 0;
    Orders entries;
};

// Everything observable about one simulation step.
struct StepRecord {
    long long t = 0;
    std::vector<long long> inv_before;  // per trader slot, at the start of t
    std::vector<long long> inv_after;   // after this step's confirmations
    Orders orders;                      // issued this step (acting steps only)
    ExecutionBatch executions;          // fills this step (exchange steps only)
    std::vector<FlowBatch> delivered;   // confirmations handed over this step
    std::vector<FlowBatch> in_transit;  // still inside delay lines after this step
    Price best_bid = 0;                 // published quotes as of the end of t
    Price best_ask = 0;
    Price last_trade = 0;
    std::array<Size, 4> group_totals{};  // Bid/Ask/Buy/Sell flow this step
    bool fundamental_active = false;     // some fundamental may still act
};

struct TraceMeta {
    std::vector<int> trader_ids;       // by slot
    std::vector<bool> is_maker;        // by slot
    std::vector<long long> upper;      // maker limits (0 for fundamentals)
    std::vector<long long> lower;
    std::int64_t price_scale = 10000;
    DelaySpec delay;
    long long steps = 0;
};

struct Trace {
    TraceMeta meta;
    std::vector<StepRecord> records;
};

// Raised (in checked mode) when a step breaks one of the structural
// invariants; carries the offending step.
class InvariantError : public std::runtime_error {
public:
    InvariantError(long long step, const std::string& message)
        : std::runtime_error("invariant violated at step " + std::to_string(step) +
                             ": " + message),
          step_(step) {}
    long long step() const { return step_; }

private:
    long long step_;
};

// The live simulation: traders act on even steps, the exchange matches on
// odd steps, confirmations come back through per-trader delay lines.
class World {
public:
    // cfg must be valid (parse_config output, or validate_config == empty);
    // throws ConfigError otherwise.
    explicit World(const ScenarioConfig& cfg, bool check_invariants = true);

    StepRecord step();

    const TraceMeta& meta() const { return meta_; }
    long long now() const { return t_; }
    long long inventory(std::size_t slot) const;
    // true when nothing is waiting in any of the slot's delay lines
    bool transit_empty(std::size_t slot) const;

private:
    struct Slot {
        std::variant<MarketMakerState, FundamentalTrader> agent;
        long long bookkeeping_inv = 0;  // fundamentals: net position, for
                                        // conservation checks only
        std::array<DelayLine, 4> lines; // by Kind
        SplitMix64 size_stream;
        int id = 0;
    };

    Orders collect_orders(StepRecord& rec);
    ExecutionBatch run_exchange(StepRecord& rec);
    void deliver(StepRecord& rec, const ExecutionBatch& produced);
    void ensure(bool ok, const std::string& message) const;

    ScenarioConfig cfg_;
    TraceMeta meta_;
    std::vector<Slot> slots_;
    SplitMix64 shuffle_stream_;
    BestPrices published_;
    Price last_trade_ = 0;
    Orders in_flight_;
    long long t_ = 0;
    bool check_ = true;
};

// Full trace: records t = 0..steps for steps >= 1, no records for steps == 0.
Trace run(const ScenarioConfig& cfg, bool check_invariants = true);

}  // namespace mmsim
