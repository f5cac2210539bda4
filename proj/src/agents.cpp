#include "mmsim/agents.hpp"

namespace mmsim {

namespace {

// round num/den to nearest, ties away from zero, in 128-bit to keep huge
// limit/scale combinations exact. den > 0.
Price round_div(__int128 num, __int128 den) {
    __int128 r = num >= 0 ? (2 * num + den) / (2 * den) : -((-2 * num + den) / (2 * den));
    return static_cast<Price>(r);
}

}  // namespace

Quote quote_prices(Price best_bid, Price best_ask, const MarketMakerState& mm,
                   std::int64_t scale) {
    // Band fullness r = (upper-1-inv) / (upper-lower-2) runs from 0 at the
    // top of the stable band to 1 at the bottom. Quotes are mid -/+ one tick,
    // skewed down by zeta*(1-r) on the bid and up by zeta*r on the ask, so
    // the gross spread is always two ticks plus zeta.
    __int128 d = mm.upper - mm.lower - 2;
    __int128 k = mm.upper - 1 - mm.inv;
    __int128 mid2 = static_cast<__int128>(best_bid) + best_ask;
    __int128 bid_num = mid2 * d - 2 * static_cast<__int128>(scale) * d -
                       2 * static_cast<__int128>(mm.zeta) * (d - k);
    __int128 ask_num = mid2 * d + 2 * static_cast<__int128>(scale) * d +
                       2 * static_cast<__int128>(mm.zeta) * k;
    Quote q;
    q.bid = round_div(bid_num, 2 * d);
    q.ask = round_div(ask_num, 2 * d);
    if (q.bid < 0) q.bid = 0;
    if (q.ask < 0) q.ask = 0;
    return q;
}

RestingSizes resting_sizes(const MarketMakerState& mm, SplitMix64& size_rng) {
    RestingSizes s;
    // bound on each side: what a full fill would bring inventory to stays
    // strictly inside the limits
    Size bid_bound = mm.upper - 1 - mm.inv;
    Size ask_bound = mm.inv - (mm.lower + 1);
    if (bid_bound < 0) bid_bound = 0;
    if (ask_bound < 0) ask_bound = 0;
    if (mm.inv >= mm.upper) {
        s.bid = 0;
    } else {
        s.bid = mm.sizing == SizingMode::UniformRandom
                    ? static_cast<Size>(size_rng.next() % static_cast<std::uint64_t>(bid_bound + 1))
                    : bid_bound;
    }
    if (mm.inv <= mm.lower) {
        s.ask = 0;
    } else {
        s.ask = mm.sizing == SizingMode::UniformRandom
                    ? static_cast<Size>(size_rng.next() % static_cast<std::uint64_t>(ask_bound + 1))
                    : ask_bound;
    }
    return s;
}

ExecutableSizes executable_sizes(const MarketMakerState& mm) {
    ExecutableSizes s;
    if (mm.inv >= mm.upper) s.sell = mm.upper;
    if (mm.inv <= mm.lower) s.buy = -mm.lower;
    return s;
}

Orders market_maker_orders(const MarketMakerState& mm, long long t, Price best_bid,
                           Price best_ask, std::int64_t scale, SplitMix64& size_rng) {
    Orders out;
    if (t % 2 != 0) return out;               // exchange's turn
    if ((t / 2) % mm.every != 0) return out;  // off-beat for a slow maker
    ExecutableSizes dump = executable_sizes(mm);
    if (dump.sell > 0) {
        out.push_back({Kind::Sell, dump.sell, 0, mm.id});
        return out;
    }
    if (dump.buy > 0) {
        out.push_back({Kind::Buy, dump.buy, 0, mm.id});
        return out;
    }
    RestingSizes rest = resting_sizes(mm, size_rng);
    Quote q = quote_prices(best_bid, best_ask, mm, scale);
    if (rest.bid > 0) out.push_back({Kind::Bid, rest.bid, q.bid, mm.id});
    if (rest.ask > 0) out.push_back({Kind::Ask, rest.ask, q.ask, mm.id});
    return out;
}

void apply_confirmations(MarketMakerState& mm, const ExecutionBatch& delivered) {
    mm.inv += sum_sizes(mm.id, delivered.bids) + sum_sizes(mm.id, delivered.buys) -
              sum_sizes(mm.id, delivered.asks) - sum_sizes(mm.id, delivered.sells);
}

Orders fundamental_orders(const FundamentalTrader& ft, long long t) {
    Orders out;
    if (t % 2 != 0 || t >= ft.timelimit || ft.omega <= 0) return out;
    Kind k = ft.side == FundamentalSide::Seller ? Kind::Sell : Kind::Buy;
    out.push_back({k, ft.omega, 0, ft.id});
    return out;
}

}  // namespace mmsim
