#pragma once

#include "mmsim/core.hpp"
#include "mmsim/rng.hpp"

namespace mmsim {

enum class SizingMode : std::uint8_t { Deterministic, UniformRandom };

// Stable: quote both sides, inside the band. Panic: inventory has crossed a
// limit; dump one large executable per acting step and quote nothing.
enum class Phase : std::uint8_t { Stable, Panic };

struct MarketMakerState {
    int id = 0;
    long long inv = 0;
    long long upper = 0;   // panic at inv >= upper
    long long lower = 0;   // panic at inv <= lower
    Price zeta = 0;        // skew sensitivity, in sub-ticks
    SizingMode sizing = SizingMode::Deterministic;
    long long every = 1;   // act on every k-th acting step (k=1: all)
};

inline Phase phase(const MarketMakerState& mm) {
    return (mm.inv >= mm.upper || mm.inv <= mm.lower) ? Phase::Panic : Phase::Stable;
}

struct Quote {
    Price bid = 0;
    Price ask = 0;
};

// Quote around the published mid, one tick inside it, skewed by zeta times
// how full the inventory band is: a long maker lowers both quotes (eager to
// sell), a short one raises them. Exact integer arithmetic, rounded to the
// nearest sub-tick (ties away from zero), floored at zero.
Quote quote_prices(Price best_bid, Price best_ask, const MarketMakerState& mm,
                   std::int64_t scale);

struct RestingSizes {
    Size bid = 0;
    Size ask = 0;
};

// Largest sizes that cannot push inventory past a limit even if fully
// filled; zeroed on the side whose limit has been crossed. UniformRandom
// draws each side uniformly from [0, that bound] (two draws per call).
RestingSizes resting_sizes(const MarketMakerState& mm, SplitMix64& size_rng);

struct ExecutableSizes {
    Size buy = 0;
    Size sell = 0;
};

// Panic dump sizes: a maker at or above the upper limit sells `upper`, one
// at or below the lower limit buys `-lower`. Zero in the stable band.
ExecutableSizes executable_sizes(const MarketMakerState& mm);

// Orders one maker sends this step: nothing on exchange steps or off-beat
// acting steps; in panic exactly one executable; otherwise bid and ask
// quotes, zero-size sides omitted.
Orders market_maker_orders(const MarketMakerState& mm, long long t, Price best_bid,
                           Price best_ask, std::int64_t scale, SplitMix64& size_rng);

// Confirmed fills move inventory: filled bids/buys add, asks/sells subtract.
void apply_confirmations(MarketMakerState& mm, const ExecutionBatch& delivered);

enum class FundamentalSide : std::uint8_t { Seller, Buyer };

// One-sided flow trader: fires a fixed-size executable every acting step
// until its time limit, then goes quiet. Optionally exits the moment the
// makers split into panicked and stable.
struct FundamentalTrader {
    int id = 0;
    FundamentalSide side = FundamentalSide::Seller;
    Size omega = 0;
    long long timelimit = 0;  // active while t < timelimit
    bool exit_on_panic = false;
};

Orders fundamental_orders(const FundamentalTrader& ft, long long t);

}  // namespace mmsim
