#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mmsim/harness.hpp"

namespace mmsim {

// Exact signed fraction; net_liquidity_pressure never divides by zero
// because its denominators are 1 + a size sum.
struct Rational {
    long long num = 0;
    long long den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

// buys/(1+asks) - sells/(1+bids): aggressive demand relative to the passive
// liquidity facing it. Positive means buying pressure; its sign tracks where
// the price is headed.
Rational net_liquidity_pressure(Size buys, Size asks, Size sells, Size bids);

// The same statistic for one recorded step (acting steps use the groups
// issued, exchange steps the groups processed).
Rational net_liquidity_pressure(const StepRecord& rec);

struct CycleReport {
    bool found = false;
    long long first_index = -1;  // step of the first occurrence
    long long period = 0;

    bool operator==(const CycleReport&) const = default;
};

// Exact state-repetition scan. The compared state is: step parity, every
// trader's inventory, and the flows still in motion (orders awaiting the
// exchange at odd steps; confirmations inside delay lines) projected to
// (kind, size, trader) with their remaining delay -- prices are excluded,
// since published quotes can drift forever while the same block of
// inventory shuttles back and forth. Steps where a fundamental trader may
// still act are never treated as comparable (its remaining lifetime is not
// part of the state). Reports the earliest repetition; parity equality makes
// every period even.
CycleReport detect_cycle(const Trace& trace);

std::string cycle_report_text(const CycleReport& report, const Trace& trace);

struct StabilityVerdict {
    bool always_stable = false;
    long long panicked_at = -1;  // first step whose inventory crossed a limit

    bool operator==(const StabilityVerdict&) const = default;
};

// Scans a maker's inventory across the whole trace against its limits.
StabilityVerdict stability_verdict(const Trace& trace, std::size_t slot);

// (t, last trade price) for every recorded step; the price carries through
// trade-free steps and starts at the rounded initial mid.
std::vector<std::pair<long long, Price>> price_series(const Trace& trace);

// Pipe-separated activity table over steps [from, to]:
//   time|inv<id>(t)...|orders(size)|xorders|pending|dxorders|inv<id>(t+1)...
// Orders are labelled kind+trader+"t"+issue-step, e.g. b1t4(17); executed
// pairs render as (b1t4,S2t4)10; pending/delivered confirmations list the
// per-side labels. Cells hold space-separated tokens, so a parser can
// recover every inventory and size column exactly.
std::string flow_table(const Trace& trace, long long from, long long to);

}  // namespace mmsim
