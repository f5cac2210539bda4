#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mmsim {

// Prices are integer sub-ticks; the scenario's scale says how many sub-ticks
// make one tick. All arithmetic stays in integers so runs are bit-exact.
using Price = std::int64_t;
using Size = std::int64_t;

// Bid/Ask rest in the book; Buy/Sell execute immediately (fill-and-kill,
// price field 0 by convention).
enum class Kind : std::uint8_t { Bid, Ask, Buy, Sell };

constexpr const char* kind_letter(Kind k) {
    switch (k) {
        case Kind::Bid: return "b";
        case Kind::Ask: return "a";
        case Kind::Buy: return "B";
        case Kind::Sell: return "S";
    }
    return "?";
}

struct Order {
    Kind kind;
    Size size;
    Price price;
    int trader;

    bool operator==(const Order&) const = default;
};

using Orders = std::vector<Order>;

// One exchange step's executions, grouped by the kind of the order that
// produced each fill. Entries in bids/sells (and asks/buys) line up
// pairwise: bids[i] and sells[i] are the two sides of one execution.
struct ExecutionBatch {
    Orders bids, asks, buys, sells;

    bool empty() const {
        return bids.empty() && asks.empty() && buys.empty() && sells.empty();
    }
    const Orders& of(Kind k) const {
        switch (k) {
            case Kind::Bid: return bids;
            case Kind::Ask: return asks;
            case Kind::Buy: return buys;
            default: return sells;
        }
    }
    Orders& of(Kind k) {
        return const_cast<Orders&>(static_cast<const ExecutionBatch&>(*this).of(k));
    }
};

// Sum of order sizes belonging to one trader; the quantity that drives every
// inventory update. Empty sequence sums to zero.
inline Size sum_sizes(int trader, const Orders& orders) {
    Size total = 0;
    for (const Order& o : orders)
        if (o.trader == trader) total += o.size;
    return total;
}

inline Size total_size(const Orders& orders) {
    Size total = 0;
    for (const Order& o : orders) total += o.size;
    return total;
}

// Round num/den to the nearest integer, ties away from zero. den > 0.
inline std::int64_t round_half_away(std::int64_t num, std::int64_t den) {
    if (num >= 0) return (2 * num + den) / (2 * den);
    return -((-2 * num + den) / (2 * den));
}

// Render sub-ticks as ticks in exact decimal form (e.g. 972222 at scale
// 10000 -> "97.2222"). Long division, capped at 12 fractional digits; exact
// whenever the scale divides 10^12, which covers every power-of-ten scale.
std::string format_price(Price subticks, std::int64_t scale);

}  // namespace mmsim
