#pragma once

#include <utility>

#include "mmsim/core.hpp"

namespace mmsim {

enum class Side : std::uint8_t { Bids, Asks };

// A half book: entries kept best-first (descending prices for bids,
// ascending for asks). Orders at the same price keep arrival order, so
// priority is price first, then time.
struct OrderBook {
    Side side = Side::Bids;
    Orders entries;

    bool empty() const { return entries.empty(); }
};

// True when entries are correctly ordered for the book's side and no entry
// has size <= 0.
bool well_ordered(const OrderBook& book);

// Insert arrivals one at a time, each placed before the first resting entry
// with a strictly worse price; equal prices queue behind (time priority).
OrderBook insert_orders(OrderBook book, const Orders& arrivals);

// Books are rebuilt from scratch every exchange step: whatever rested before
// was fill-and-kill and is gone.
std::pair<OrderBook, OrderBook> rebuild_books(const Orders& bids, const Orders& asks);

struct MatchResult {
    OrderBook book;             // what survived
    Orders executed_resting;    // fills on the resting side, in fill order
    Orders executed_aggressive; // same fills seen from the aggressive side
};

// Walk executables through the book head-first. Partial fills leave the
// remainder resting; an executable larger than the book consumes it and the
// rest of the executable (and any executables behind it) is discarded.
// Both sides of every fill carry the resting order's price.
MatchResult match(OrderBook book, const Orders& executables);

// Independent oracle for the sequence of fill prices match must produce.
// Written as the literal three-way size comparison recurrence, sharing no
// code with match.
std::vector<Price> execution_prices(Orders resting, Orders executables);

struct BestPrices {
    Price bid = 0;
    Price ask = 0;

    bool operator==(const BestPrices&) const = default;
};

// Published quotes: head of each book, or the previous published value when
// a side is empty (price feeds never blank out).
BestPrices best_prices(const OrderBook& bids, const OrderBook& asks, BestPrices previous);

}  // namespace mmsim
