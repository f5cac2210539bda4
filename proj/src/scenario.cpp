#include "mmsim/scenario.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace mmsim {

namespace {

// shortest round-trip decimal for a double, so output never depends on
// locale or stream state
std::string compact_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

class CsvFile {
public:
    CsvFile(const std::filesystem::path& dir, const std::string& name)
        : path_(dir / name), out_(path_) {
        if (!out_) throw IoError("cannot open " + path_.string() + " for writing");
    }
    ~CsvFile() = default;

    template <typename T>
    CsvFile& operator<<(const T& v) {
        out_ << v;
        return *this;
    }

    void close() {
        out_.close();
        if (!out_) throw IoError("failed writing " + path_.string());
    }

private:
    std::filesystem::path path_;
    std::ofstream out_;
};

}  // namespace

std::string RunSummary::one_line() const {
    std::ostringstream os;
    os << name << ": " << steps << " steps, " << traders << " traders, " << executions
       << " executions, last trade " << format_price(last_price, price_scale);
    if (cycle.found)
        os << ", cycle period " << cycle.period << " from t=" << cycle.first_index;
    else
        os << ", no cycle detected";
    os << " -> " << out_dir.string();
    return os.str();
}

RunSummary run_scenario(const ScenarioConfig& cfg, const std::string& name,
                        const std::filesystem::path& out_dir, bool check_invariants,
                        std::optional<FlowWindow> window) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

    Trace trace = run(cfg, check_invariants);
    CycleReport cycle = detect_cycle(trace);

    CsvFile inv(out_dir, "inventories.csv");
    inv << "t";
    for (int id : trace.meta.trader_ids) inv << ",inv_" << id;
    inv << "\n";
    for (const StepRecord& rec : trace.records) {
        inv << rec.t;
        for (long long v : rec.inv_before) inv << "," << v;
        inv << "\n";
    }
    inv.close();

    CsvFile prices(out_dir, "prices.csv");
    prices << "t,last_trade,best_bid,best_ask\n";
    for (const StepRecord& rec : trace.records) {
        prices << rec.t << "," << format_price(rec.last_trade, cfg.price_scale) << ","
               << format_price(rec.best_bid, cfg.price_scale) << ","
               << format_price(rec.best_ask, cfg.price_scale) << "\n";
    }
    prices.close();

    CsvFile nlp(out_dir, "nlp.csv");
    nlp << "t,nlp\n";
    for (const StepRecord& rec : trace.records)
        nlp << rec.t << "," << compact_double(net_liquidity_pressure(rec).value()) << "\n";
    nlp.close();

    std::size_t executions = 0;
    CsvFile trades(out_dir, "trades.csv");
    trades << "t,buyer,seller,size,price\n";
    for (const StepRecord& rec : trace.records) {
        const ExecutionBatch& x = rec.executions;
        for (std::size_t i = 0; i < x.bids.size(); ++i) {
            trades << rec.t << "," << x.bids[i].trader << "," << x.sells[i].trader << ","
                   << x.bids[i].size << "," << format_price(x.bids[i].price, cfg.price_scale)
                   << "\n";
            ++executions;
        }
        for (std::size_t i = 0; i < x.asks.size(); ++i) {
            trades << rec.t << "," << x.buys[i].trader << "," << x.asks[i].trader << ","
                   << x.asks[i].size << "," << format_price(x.asks[i].price, cfg.price_scale)
                   << "\n";
            ++executions;
        }
    }
    trades.close();

    long long flow_from = 0, flow_to = cfg.steps;
    if (window) {
        flow_from = window->from;
        flow_to = window->to;
    }
    CsvFile flow(out_dir, "flow.txt");
    flow << flow_table(trace, flow_from, flow_to);
    flow.close();

    CsvFile cycle_file(out_dir, "cycle.txt");
    cycle_file << cycle_report_text(cycle, trace);
    cycle_file.close();

    RunSummary summary;
    summary.name = name;
    summary.steps = cfg.steps;
    summary.traders = cfg.traders.size();
    summary.executions = executions;
    summary.cycle = cycle;
    summary.price_scale = cfg.price_scale;
    summary.first_price = trace.records.empty() ? 0 : trace.records.front().last_trade;
    summary.last_price = trace.records.empty() ? 0 : trace.records.back().last_trade;
    summary.out_dir = out_dir;
    return summary;
}

}  // namespace mmsim
