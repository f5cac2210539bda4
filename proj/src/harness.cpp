#include "mmsim/harness.hpp"

namespace mmsim {

namespace {

constexpr std::array<Kind, 4> kAllKinds{Kind::Bid, Kind::Ask, Kind::Buy, Kind::Sell};

constexpr std::uint64_t kStreamSalt = 0x9E3779B97F4A7C15ULL;

}  // namespace

World::World(const ScenarioConfig& cfg, bool check_invariants)
    : cfg_(cfg), shuffle_stream_(cfg.seed), check_(check_invariants) {
    std::vector<ConfigIssue> issues = validate_config(cfg);
    if (!issues.empty()) throw ConfigError(issues);

    std::vector<int> ids = assigned_ids(cfg);
    meta_.trader_ids = ids;
    meta_.price_scale = cfg.price_scale;
    meta_.delay = cfg.delay;
    meta_.steps = cfg.steps;
    for (std::size_t i = 0; i < cfg.traders.size(); ++i) {
        const TraderSpec& spec = cfg.traders[i];
        Slot slot;
        slot.id = ids[i];
        // each trader sizes from its own stream so slot order never couples
        // one trader's draws to another's
        slot.size_stream =
            SplitMix64(cfg.seed ^ (static_cast<std::uint64_t>(i + 1) * kStreamSalt));
        for (Kind k : kAllKinds)
            slot.lines[static_cast<std::size_t>(k)] = DelayLine::with_delay(cfg.delay.of(k));
        if (spec.role == TraderSpec::Role::MarketMaker) {
            MarketMakerState mm;
            mm.id = ids[i];
            mm.inv = spec.initial_inventory;
            mm.upper = spec.upper;
            mm.lower = spec.lower;
            mm.zeta = spec.zeta;
            mm.sizing = spec.sizing;
            mm.every = spec.every;
            slot.agent = mm;
            meta_.is_maker.push_back(true);
            meta_.upper.push_back(spec.upper);
            meta_.lower.push_back(spec.lower);
        } else {
            FundamentalTrader ft;
            ft.id = ids[i];
            ft.side = spec.side;
            ft.omega = spec.omega;
            ft.timelimit = spec.timelimit;
            ft.exit_on_panic = spec.exit_on_panic;
            slot.agent = ft;
            meta_.is_maker.push_back(false);
            meta_.upper.push_back(0);
            meta_.lower.push_back(0);
        }
        slots_.push_back(std::move(slot));
    }
    published_ = {cfg.initial_best_bid, cfg.initial_best_ask};
    last_trade_ = round_half_away(cfg.initial_best_bid + cfg.initial_best_ask, 2);
}

long long World::inventory(std::size_t slot) const {
    const Slot& s = slots_[slot];
    if (const auto* mm = std::get_if<MarketMakerState>(&s.agent)) return mm->inv;
    return s.bookkeeping_inv;
}

bool World::transit_empty(std::size_t slot) const {
    for (const DelayLine& line : slots_[slot].lines)
        for (const Orders& batch : line.buffer)
            if (!batch.empty()) return false;
    return true;
}

void World::ensure(bool ok, const std::string& message) const {
    if (check_ && !ok) throw InvariantError(t_, message);
}

Orders World::collect_orders(StepRecord& rec) {
    // a fundamental set to leave on panic stops the moment the makers have
    // split into panicked and stable camps
    bool any_panic = false, any_stable = false;
    for (const Slot& s : slots_) {
        if (const auto* mm = std::get_if<MarketMakerState>(&s.agent)) {
            (phase(*mm) == Phase::Panic ? any_panic : any_stable) = true;
        }
    }
    Orders out;
    for (Slot& s : slots_) {
        if (auto* mm = std::get_if<MarketMakerState>(&s.agent)) {
            Orders mine = market_maker_orders(*mm, t_, published_.bid, published_.ask,
                                              cfg_.price_scale, s.size_stream);
            out.insert(out.end(), mine.begin(), mine.end());
        } else {
            auto& ft = std::get<FundamentalTrader>(s.agent);
            if (ft.exit_on_panic && any_panic && any_stable && ft.timelimit > t_)
                ft.timelimit = t_;
            Orders mine = fundamental_orders(ft, t_);
            out.insert(out.end(), mine.begin(), mine.end());
        }
    }
    for (const Order& o : out) {
        ensure(o.size > 0, "zero or negative order size issued");
        rec.group_totals[static_cast<std::size_t>(o.kind)] += o.size;
    }
    return out;
}

ExecutionBatch World::run_exchange(StepRecord& rec) {
    std::array<Orders, 4> groups;
    for (const Order& o : in_flight_) groups[static_cast<std::size_t>(o.kind)].push_back(o);
    in_flight_.clear();
    if (cfg_.shuffle)
        for (Orders& g : groups) fisher_yates(g, shuffle_stream_);
    for (std::size_t k = 0; k < 4; ++k) rec.group_totals[k] = total_size(groups[k]);

    auto [bid_book, ask_book] = rebuild_books(groups[static_cast<std::size_t>(Kind::Bid)],
                                              groups[static_cast<std::size_t>(Kind::Ask)]);
    ensure(well_ordered(bid_book) && well_ordered(ask_book), "book order broken by insert");

    // sells sweep the bid book first, then buys sweep the ask book
    MatchResult sold = match(std::move(bid_book), groups[static_cast<std::size_t>(Kind::Sell)]);
    MatchResult bought = match(std::move(ask_book), groups[static_cast<std::size_t>(Kind::Buy)]);

    ExecutionBatch x;
    x.bids = std::move(sold.executed_resting);
    x.sells = std::move(sold.executed_aggressive);
    x.asks = std::move(bought.executed_resting);
    x.buys = std::move(bought.executed_aggressive);

    ensure(total_size(x.bids) == total_size(x.sells) &&
               total_size(x.asks) == total_size(x.buys),
           "executions are not bilateral");
    for (std::size_t i = 0; i + 1 < x.bids.size(); ++i)
        ensure(x.bids[i].price >= x.bids[i + 1].price, "sell fills walked prices upward");
    for (std::size_t i = 0; i + 1 < x.asks.size(); ++i)
        ensure(x.asks[i].price <= x.asks[i + 1].price, "buy fills walked prices downward");

    published_ = best_prices(sold.book, bought.book, published_);
    if (!x.sells.empty()) last_trade_ = x.sells.back().price;
    if (!x.buys.empty()) last_trade_ = x.buys.back().price;
    return x;
}

void World::deliver(StepRecord& rec, const ExecutionBatch& produced) {
    long long applied_total = 0;
    for (Slot& s : slots_) {
        ExecutionBatch arrived;
        for (Kind k : kAllKinds) {
            auto ki = static_cast<std::size_t>(k);
            Orders mine;
            for (const Order& o : produced.of(k))
                if (o.trader == s.id) mine.push_back(o);
            Orders out = s.lines[ki].shift(std::move(mine));
            if (!out.empty()) {
                rec.delivered.push_back(
                    {t_ - cfg_.delay.of(k), t_, k, s.id, out});
                arrived.of(k) = std::move(out);
            }
        }
        long long delta = sum_sizes(s.id, arrived.bids) + sum_sizes(s.id, arrived.buys) -
                          sum_sizes(s.id, arrived.asks) - sum_sizes(s.id, arrived.sells);
        applied_total += delta;
        if (auto* mm = std::get_if<MarketMakerState>(&s.agent)) {
            apply_confirmations(*mm, arrived);
        } else {
            s.bookkeeping_inv += delta;
        }
    }
    // both sides of every fill land in the same step whenever all four
    // confirmation kinds share one delay, so positions must net to zero
    if (cfg_.delay.uniform())
        ensure(applied_total == 0, "confirmed positions do not net to zero");

    for (const Slot& s : slots_) {
        for (Kind k : kAllKinds) {
            const DelayLine& line = s.lines[static_cast<std::size_t>(k)];
            long long offset = 0;
            for (const Orders& batch : line.buffer) {
                if (!batch.empty()) {
                    long long deliver_at = t_ + 1 + offset;
                    rec.in_transit.push_back(
                        {deliver_at - line.delay, deliver_at, k, s.id, batch});
                }
                ++offset;
            }
        }
    }
}

StepRecord World::step() {
    StepRecord rec;
    rec.t = t_;
    for (std::size_t i = 0; i < slots_.size(); ++i) rec.inv_before.push_back(inventory(i));

    ExecutionBatch produced;
    if (t_ % 2 == 0) {
        rec.orders = collect_orders(rec);
        in_flight_ = rec.orders;
    } else {
        produced = run_exchange(rec);
        rec.executions = produced;
    }
    deliver(rec, produced);

    for (std::size_t i = 0; i < slots_.size(); ++i) rec.inv_after.push_back(inventory(i));
    rec.best_bid = published_.bid;
    rec.best_ask = published_.ask;
    rec.last_trade = last_trade_;
    for (const Slot& s : slots_) {
        if (const auto* ft = std::get_if<FundamentalTrader>(&s.agent))
            if (t_ < ft->timelimit) rec.fundamental_active = true;
    }
    ++t_;
    return rec;
}

Trace run(const ScenarioConfig& cfg, bool check_invariants) {
    World world(cfg, check_invariants);
    Trace trace;
    trace.meta = world.meta();
    if (cfg.steps == 0) return trace;  // an empty run has no observations
    trace.records.reserve(static_cast<std::size_t>(cfg.steps) + 1);
    for (long long t = 0; t <= cfg.steps; ++t) trace.records.push_back(world.step());
    return trace;
}

}  // namespace mmsim
