#include "mmsim/orderbook.hpp"

namespace mmsim {

bool well_ordered(const OrderBook& book) {
    for (std::size_t i = 0; i < book.entries.size(); ++i) {
        if (book.entries[i].size <= 0) return false;
        if (i == 0) continue;
        Price prev = book.entries[i - 1].price;
        Price cur = book.entries[i].price;
        if (book.side == Side::Bids ? cur > prev : cur < prev) return false;
    }
    return true;
}

OrderBook insert_orders(OrderBook book, const Orders& arrivals) {
    for (const Order& o : arrivals) {
        auto it = book.entries.begin();
        if (book.side == Side::Asks) {
            while (it != book.entries.end() && it->price <= o.price) ++it;
        } else {
            while (it != book.entries.end() && it->price >= o.price) ++it;
        }
        book.entries.insert(it, o);
    }
    return book;
}

std::pair<OrderBook, OrderBook> rebuild_books(const Orders& bids, const Orders& asks) {
    return {insert_orders(OrderBook{Side::Bids, {}}, bids),
            insert_orders(OrderBook{Side::Asks, {}}, asks)};
}

MatchResult match(OrderBook book, const Orders& executables) {
    MatchResult out;
    out.book.side = book.side;
    std::size_t head = 0;  // first live resting entry
    for (const Order& incoming : executables) {
        Size wanted = incoming.size;
        while (wanted > 0) {
            if (head >= book.entries.size()) {
                // book exhausted: this executable and everything behind it
                // dies unfilled
                return out;
            }
            Order& resting = book.entries[head];
            if (resting.size <= 0) {  // never produced by a valid insert
                ++head;
                continue;
            }
            Size fill = wanted < resting.size ? wanted : resting.size;
            out.executed_resting.push_back({resting.kind, fill, resting.price, resting.trader});
            out.executed_aggressive.push_back({incoming.kind, fill, resting.price, incoming.trader});
            resting.size -= fill;
            wanted -= fill;
            if (resting.size == 0) ++head;
        }
    }
    out.book.entries.assign(book.entries.begin() + static_cast<std::ptrdiff_t>(head),
                            book.entries.end());
    return out;
}

std::vector<Price> execution_prices(Orders resting, Orders executables) {
    // Recurrence on (r:rr, e:ee): emit the resting head's price, shrink the
    // larger of the two heads by the smaller, drop whichever was consumed.
    std::vector<Price> prices;
    std::size_t ri = 0, ei = 0;
    while (ri < resting.size() && ei < executables.size()) {
        Order& r = resting[ri];
        Order& e = executables[ei];
        prices.push_back(r.price);
        if (e.size < r.size) {
            r.size -= e.size;
            ++ei;
        } else if (e.size > r.size) {
            e.size -= r.size;
            ++ri;
        } else {
            ++ri;
            ++ei;
        }
    }
    return prices;
}

BestPrices best_prices(const OrderBook& bids, const OrderBook& asks, BestPrices previous) {
    BestPrices out = previous;
    if (!bids.empty()) out.bid = bids.entries.front().price;
    if (!asks.empty()) out.ask = asks.entries.front().price;
    return out;
}

}  // namespace mmsim
