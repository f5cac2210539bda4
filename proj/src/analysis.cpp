#include "mmsim/analysis.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace mmsim {

Rational net_liquidity_pressure(Size buys, Size asks, Size sells, Size bids) {
    // buys/(1+asks) - sells/(1+bids), over the common denominator
    long long da = 1 + asks;
    long long db = 1 + bids;
    Rational r{buys * db - sells * da, da * db};
    long long g = std::gcd(r.num < 0 ? -r.num : r.num, r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

Rational net_liquidity_pressure(const StepRecord& rec) {
    return net_liquidity_pressure(rec.group_totals[static_cast<std::size_t>(Kind::Buy)],
                                  rec.group_totals[static_cast<std::size_t>(Kind::Ask)],
                                  rec.group_totals[static_cast<std::size_t>(Kind::Sell)],
                                  rec.group_totals[static_cast<std::size_t>(Kind::Bid)]);
}

namespace {

// Flattened comparable state; sentinels separate the variable-length parts.
std::vector<long long> state_key(const Trace& trace, std::size_t i) {
    const StepRecord& rec = trace.records[i];
    std::vector<long long> key;
    key.push_back(rec.t % 2);
    key.push_back(-1);
    for (long long inv : rec.inv_before) key.push_back(inv);
    key.push_back(-2);
    if (rec.t % 2 == 1 && i > 0) {
        for (const Order& o : trace.records[i - 1].orders) {
            key.push_back(static_cast<long long>(o.kind));
            key.push_back(o.size);
            key.push_back(o.trader);
        }
    }
    key.push_back(-3);
    if (i > 0) {
        for (const FlowBatch& fb : trace.records[i - 1].in_transit) {
            for (const Order& o : fb.entries) {
                key.push_back(fb.deliver_step - rec.t);  // remaining delay
                key.push_back(static_cast<long long>(o.kind));
                key.push_back(o.size);
                key.push_back(o.trader);
            }
        }
    }
    return key;
}

}  // namespace

CycleReport detect_cycle(const Trace& trace) {
    std::map<std::vector<long long>, long long> first_seen;
    for (std::size_t i = 0; i < trace.records.size(); ++i) {
        if (trace.records[i].fundamental_active) continue;
        std::vector<long long> key = state_key(trace, i);
        auto [it, inserted] = first_seen.try_emplace(std::move(key), trace.records[i].t);
        if (!inserted)
            return {true, it->second, trace.records[i].t - it->second};
    }
    return {};
}

std::string cycle_report_text(const CycleReport& report, const Trace& trace) {
    std::ostringstream os;
    if (report.found) {
        os << "cycle: period " << report.period << ", first seen at t=" << report.first_index
           << "\n";
    } else {
        os << "cycle: no exact state repetition within " << trace.records.size()
           << " records\n";
    }
    for (const StepRecord& rec : trace.records) {
        if (rec.fundamental_active) {
            os << "note: steps with an active fundamental trader are never counted as "
                  "repeats\n";
            break;
        }
    }
    return os.str();
}

StabilityVerdict stability_verdict(const Trace& trace, std::size_t slot) {
    StabilityVerdict v;
    if (!trace.meta.is_maker[slot]) {  // fundamentals have no limits to cross
        v.always_stable = true;
        return v;
    }
    long long upper = trace.meta.upper[slot];
    long long lower = trace.meta.lower[slot];
    for (const StepRecord& rec : trace.records) {
        long long inv = rec.inv_before[slot];
        if (inv >= upper || inv <= lower) {
            v.panicked_at = rec.t;
            return v;
        }
    }
    if (!trace.records.empty()) {
        long long inv = trace.records.back().inv_after[slot];
        if (inv >= upper || inv <= lower) {
            v.panicked_at = trace.records.back().t + 1;
            return v;
        }
    }
    v.always_stable = true;
    return v;
}

std::vector<std::pair<long long, Price>> price_series(const Trace& trace) {
    std::vector<std::pair<long long, Price>> out;
    out.reserve(trace.records.size());
    for (const StepRecord& rec : trace.records) out.emplace_back(rec.t, rec.last_trade);
    return out;
}

namespace {

std::string order_label(const Order& o, long long issue_step) {
    std::ostringstream os;
    os << kind_letter(o.kind) << o.trader << 't' << issue_step << '(' << o.size << ')';
    return os.str();
}

std::string pair_label(const Order& resting, const Order& aggressive, long long issue_step) {
    std::ostringstream os;
    os << '(' << kind_letter(resting.kind) << resting.trader << 't' << issue_step << ','
       << kind_letter(aggressive.kind) << aggressive.trader << 't' << issue_step << ')'
       << resting.size;
    return os.str();
}

void append_token(std::string& cell, const std::string& token) {
    if (!cell.empty()) cell += ' ';
    cell += token;
}

}  // namespace

std::string flow_table(const Trace& trace, long long from, long long to) {
    std::ostringstream os;
    os << "time";
    for (int id : trace.meta.trader_ids) os << "|inv" << id << "(t)";
    os << "|orders(size)|xorders|pending|dxorders";
    for (int id : trace.meta.trader_ids) os << "|inv" << id << "(t+1)";
    os << '\n';

    for (const StepRecord& rec : trace.records) {
        if (rec.t < from || rec.t > to) continue;
        os << rec.t;
        for (long long inv : rec.inv_before) os << '|' << inv;

        std::string orders_cell;
        for (const Order& o : rec.orders) append_token(orders_cell, order_label(o, rec.t));

        std::string x_cell;
        const ExecutionBatch& x = rec.executions;
        for (std::size_t i = 0; i < x.bids.size(); ++i)
            append_token(x_cell, pair_label(x.bids[i], x.sells[i], rec.t - 1));
        for (std::size_t i = 0; i < x.asks.size(); ++i)
            append_token(x_cell, pair_label(x.asks[i], x.buys[i], rec.t - 1));

        std::string pending_cell;
        for (const FlowBatch& fb : rec.in_transit) {
            if (fb.exec_step == rec.t) continue;  // this step's fills sit in xorders
            for (const Order& o : fb.entries)
                append_token(pending_cell, order_label(o, fb.exec_step - 1));
        }

        std::string dx_cell;
        for (const FlowBatch& fb : rec.delivered)
            for (const Order& o : fb.entries)
                append_token(dx_cell, order_label(o, fb.exec_step - 1));

        os << '|' << orders_cell << '|' << x_cell << '|' << pending_cell << '|' << dx_cell;
        for (long long inv : rec.inv_after) os << '|' << inv;
        os << '\n';
    }
    return os.str();
}

}  // namespace mmsim
