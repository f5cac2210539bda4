#include "mmsim/config.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace mmsim {

using json = nlohmann::ordered_json;

namespace {

constexpr long long kForever = 1LL << 62;  // timelimit meaning "never exits"

std::string joined(const std::vector<ConfigIssue>& issues) {
    std::ostringstream os;
    os << "invalid config:";
    for (const ConfigIssue& i : issues) os << "\n  " << i.field << ": " << i.reason;
    return os.str();
}

struct Cursor {
    const json& node;
    std::string prefix;  // e.g. "traders[2]."
    std::vector<ConfigIssue>& issues;

    void complain(const std::string& key, const std::string& reason) const {
        issues.push_back({prefix + key, reason});
    }

    bool has(const std::string& key) const { return node.contains(key); }

    long long integer(const std::string& key, long long fallback, bool required = false) {
        if (!node.contains(key)) {
            if (required) complain(key, "required field is missing");
            return fallback;
        }
        const json& v = node.at(key);
        if (!v.is_number_integer() && !v.is_number_unsigned()) {
            complain(key, "must be an integer");
            return fallback;
        }
        return v.get<long long>();
    }

    std::uint64_t unsigned64(const std::string& key, std::uint64_t fallback) {
        if (!node.contains(key)) return fallback;
        const json& v = node.at(key);
        if (v.is_number_unsigned()) return v.get<std::uint64_t>();
        if (v.is_number_integer() && v.get<long long>() >= 0)
            return static_cast<std::uint64_t>(v.get<long long>());
        complain(key, "must be a non-negative integer");
        return fallback;
    }

    bool boolean(const std::string& key, bool fallback) {
        if (!node.contains(key)) return fallback;
        const json& v = node.at(key);
        if (!v.is_boolean()) {
            complain(key, "must be true or false");
            return fallback;
        }
        return v.get<bool>();
    }

    std::string text(const std::string& key, const std::string& fallback,
                     bool required = false) {
        if (!node.contains(key)) {
            if (required) complain(key, "required field is missing");
            return fallback;
        }
        const json& v = node.at(key);
        if (!v.is_string()) {
            complain(key, "must be a string");
            return fallback;
        }
        return v.get<std::string>();
    }

    // Ticks given as an integer or an exact decimal string; floats would
    // smuggle in binary rounding, so they are rejected.
    Price ticks(const std::string& key, Price fallback, std::int64_t scale,
                bool required = false) {
        if (!node.contains(key)) {
            if (required) complain(key, "required field is missing");
            return fallback;
        }
        const json& v = node.at(key);
        if (v.is_number_integer() || v.is_number_unsigned())
            return v.get<long long>() * scale;
        if (v.is_number_float()) {
            complain(key, "write fractional ticks as a string, e.g. \"97.25\"");
            return fallback;
        }
        if (!v.is_string()) {
            complain(key, "must be a tick count (integer or decimal string)");
            return fallback;
        }
        std::string s = v.get<std::string>();
        std::size_t pos = 0;
        bool negative = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) negative = s[pos++] == '-';
        long long whole = 0;
        std::size_t digits = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            whole = whole * 10 + (s[pos++] - '0');
            ++digits;
        }
        long long frac_subticks = 0;
        if (pos < s.size() && s[pos] == '.') {
            ++pos;
            long long numer = 0, denom = 1;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                numer = numer * 10 + (s[pos++] - '0');
                denom *= 10;
                ++digits;
            }
            if ((numer * scale) % denom != 0) {
                complain(key, "not representable at price_scale " + std::to_string(scale));
                return fallback;
            }
            frac_subticks = numer * scale / denom;
        }
        if (pos != s.size() || digits == 0) {
            complain(key, "malformed tick value '" + s + "'");
            return fallback;
        }
        Price magnitude = whole * scale + frac_subticks;
        return negative ? -magnitude : magnitude;
    }

    void reject_unknown(const std::vector<std::string>& known) {
        for (auto it = node.begin(); it != node.end(); ++it) {
            bool ok = false;
            for (const std::string& k : known)
                if (it.key() == k) ok = true;
            if (!ok) complain(it.key(), "unknown field");
        }
    }
};

TraderSpec parse_trader(const json& node, std::size_t index, std::int64_t scale,
                        std::vector<ConfigIssue>& issues) {
    TraderSpec t;
    std::string prefix = "traders[" + std::to_string(index) + "].";
    if (!node.is_object()) {
        issues.push_back({"traders[" + std::to_string(index) + "]", "must be an object"});
        return t;
    }
    Cursor c{node, prefix, issues};
    std::string role = c.text("role", "", true);
    if (role == "market_maker") {
        t.role = TraderSpec::Role::MarketMaker;
        c.reject_unknown({"role", "upper", "lower", "initial_inventory", "zeta",
                          "sizing", "every"});
        t.upper = c.integer("upper", 0, true);
        t.lower = c.integer("lower", 0, true);
        t.initial_inventory = c.integer("initial_inventory", 0);
        t.zeta = c.ticks("zeta", 4 * scale, scale);
        t.every = c.integer("every", 1);
        std::string sizing = c.text("sizing", "deterministic");
        if (sizing == "deterministic") {
            t.sizing = SizingMode::Deterministic;
        } else if (sizing == "uniform_random") {
            t.sizing = SizingMode::UniformRandom;
        } else {
            c.complain("sizing", "must be 'deterministic' or 'uniform_random'");
        }
    } else if (role == "fundamental") {
        t.role = TraderSpec::Role::Fundamental;
        c.reject_unknown({"role", "side", "omega", "timelimit", "exit_on_panic"});
        std::string side = c.text("side", "", true);
        if (side == "sell") {
            t.side = FundamentalSide::Seller;
        } else if (side == "buy") {
            t.side = FundamentalSide::Buyer;
        } else if (!side.empty()) {
            c.complain("side", "must be 'sell' or 'buy'");
        }
        t.omega = c.integer("omega", 0, true);
        t.exit_on_panic = c.boolean("exit_on_panic", false);
        t.timelimit = c.integer("timelimit", kForever);
    } else if (!role.empty()) {
        c.complain("role", "must be 'market_maker' or 'fundamental'");
    }
    return t;
}

}  // namespace

ConfigError::ConfigError(std::vector<ConfigIssue> issues)
    : std::runtime_error(joined(issues)), issues_(std::move(issues)) {}

std::vector<ConfigIssue> validate_config(const ScenarioConfig& cfg) {
    std::vector<ConfigIssue> issues;
    auto bad = [&](const std::string& field, const std::string& reason) {
        issues.push_back({field, reason});
    };
    if (cfg.steps < 0) bad("steps", "must be >= 0");
    if (cfg.price_scale < 1) bad("price_scale", "must be >= 1");
    if (cfg.initial_best_bid < 0) bad("initial_best_bid", "must be >= 0");
    if (cfg.initial_best_ask <= cfg.initial_best_bid)
        bad("initial_best_ask", "must be greater than initial_best_bid");
    if (cfg.delay.bids < 0) bad("delay.bids", "must be >= 0");
    if (cfg.delay.asks < 0) bad("delay.asks", "must be >= 0");
    if (cfg.delay.buys < 0) bad("delay.buys", "must be >= 0");
    if (cfg.delay.sells < 0) bad("delay.sells", "must be >= 0");
    for (std::size_t i = 0; i < cfg.traders.size(); ++i) {
        const TraderSpec& t = cfg.traders[i];
        std::string p = "traders[" + std::to_string(i) + "].";
        if (t.role == TraderSpec::Role::MarketMaker) {
            if (t.upper < 1) bad(p + "upper", "must be >= 1");
            if (t.lower > -1) bad(p + "lower", "must be <= -1");
            if (t.upper - t.lower <= 2)
                bad(p + "lower", "inventory band too narrow: upper - lower must exceed 2");
            if (t.zeta < 0) bad(p + "zeta", "must be >= 0");
            if (t.every < 1) bad(p + "every", "must be >= 1");
        } else {
            if (t.omega < 1) bad(p + "omega", "must be >= 1");
            if (t.timelimit < 0) bad(p + "timelimit", "must be >= 0");
        }
    }
    return issues;
}

ScenarioConfig parse_config(const std::string& json_text) {
    json root = json::parse(json_text, nullptr, false);
    if (root.is_discarded()) throw ConfigError(std::vector<ConfigIssue>{{"$", "not valid JSON"}});
    if (!root.is_object()) throw ConfigError(std::vector<ConfigIssue>{{"$", "top level must be an object"}});

    std::vector<ConfigIssue> issues;
    ScenarioConfig cfg;
    Cursor c{root, "", issues};
    c.reject_unknown({"steps", "seed", "shuffle", "price_scale", "initial_best_bid",
                      "initial_best_ask", "delay", "traders"});
    cfg.price_scale = c.integer("price_scale", 10000);
    if (cfg.price_scale < 1) cfg.price_scale = 1;  // keep parsing; validate reports it
    cfg.steps = c.integer("steps", 0, true);
    cfg.seed = c.unsigned64("seed", 0);
    cfg.shuffle = c.boolean("shuffle", false);
    cfg.initial_best_bid = c.ticks("initial_best_bid", 0, cfg.price_scale, true);
    cfg.initial_best_ask = c.ticks("initial_best_ask", 0, cfg.price_scale, true);

    if (root.contains("delay")) {
        const json& d = root.at("delay");
        if (d.is_number_integer() || d.is_number_unsigned()) {
            long long v = d.get<long long>();
            cfg.delay = {v, v, v, v};
        } else if (d.is_object()) {
            Cursor dc{d, "delay.", issues};
            dc.reject_unknown({"bids", "asks", "buys", "sells"});
            cfg.delay.bids = dc.integer("bids", 0);
            cfg.delay.asks = dc.integer("asks", 0);
            cfg.delay.buys = dc.integer("buys", 0);
            cfg.delay.sells = dc.integer("sells", 0);
        } else {
            issues.push_back({"delay", "must be an integer or an object"});
        }
    }

    if (!root.contains("traders")) {
        issues.push_back({"traders", "required field is missing"});
    } else if (!root.at("traders").is_array()) {
        issues.push_back({"traders", "must be an array"});
    } else {
        const json& arr = root.at("traders");
        for (std::size_t i = 0; i < arr.size(); ++i)
            cfg.traders.push_back(parse_trader(arr[i], i, cfg.price_scale, issues));
    }

    for (const ConfigIssue& i : validate_config(cfg)) issues.push_back(i);
    if (!issues.empty()) throw ConfigError(issues);
    return cfg;
}

std::string render_config(const ScenarioConfig& cfg) {
    auto ticks_json = [&](Price st) -> json {
        if (st % cfg.price_scale == 0) return json(st / cfg.price_scale);
        return json(format_price(st, cfg.price_scale));
    };
    json root;
    root["steps"] = cfg.steps;
    root["seed"] = cfg.seed;
    root["shuffle"] = cfg.shuffle;
    root["price_scale"] = cfg.price_scale;
    root["initial_best_bid"] = ticks_json(cfg.initial_best_bid);
    root["initial_best_ask"] = ticks_json(cfg.initial_best_ask);
    if (cfg.delay.uniform()) {
        root["delay"] = cfg.delay.bids;
    } else {
        root["delay"] = {{"bids", cfg.delay.bids},
                         {"asks", cfg.delay.asks},
                         {"buys", cfg.delay.buys},
                         {"sells", cfg.delay.sells}};
    }
    root["traders"] = json::array();
    for (const TraderSpec& t : cfg.traders) {
        json node;
        if (t.role == TraderSpec::Role::MarketMaker) {
            node["role"] = "market_maker";
            node["upper"] = t.upper;
            node["lower"] = t.lower;
            node["initial_inventory"] = t.initial_inventory;
            node["zeta"] = ticks_json(t.zeta);
            node["sizing"] =
                t.sizing == SizingMode::Deterministic ? "deterministic" : "uniform_random";
            node["every"] = t.every;
        } else {
            node["role"] = "fundamental";
            node["side"] = t.side == FundamentalSide::Seller ? "sell" : "buy";
            node["omega"] = t.omega;
            node["timelimit"] = t.timelimit;
            node["exit_on_panic"] = t.exit_on_panic;
        }
        root["traders"].push_back(node);
    }
    return root.dump(2) + "\n";
}

std::vector<int> assigned_ids(const ScenarioConfig& cfg) {
    std::vector<int> ids(cfg.traders.size(), 0);
    int makers = 0;
    for (const TraderSpec& t : cfg.traders)
        if (t.role == TraderSpec::Role::MarketMaker) ++makers;
    int next_maker = 1;
    int next_extra_fundamental = makers + 1;
    bool first_fundamental = true;
    for (std::size_t i = 0; i < cfg.traders.size(); ++i) {
        if (cfg.traders[i].role == TraderSpec::Role::MarketMaker) {
            ids[i] = next_maker++;
        } else if (first_fundamental) {
            ids[i] = 0;
            first_fundamental = false;
        } else {
            ids[i] = next_extra_fundamental++;
        }
    }
    return ids;
}

namespace {

TraderSpec maker(long long upper, long long lower, long long inv, long long zeta_ticks,
                 std::int64_t scale, SizingMode sizing = SizingMode::Deterministic) {
    TraderSpec t;
    t.role = TraderSpec::Role::MarketMaker;
    t.upper = upper;
    t.lower = lower;
    t.initial_inventory = inv;
    t.zeta = zeta_ticks * scale;
    t.sizing = sizing;
    return t;
}

ScenarioConfig base_config(long long steps, long long delay, bool shuffle) {
    ScenarioConfig cfg;
    cfg.steps = steps;
    cfg.seed = 1;
    cfg.shuffle = shuffle;
    cfg.price_scale = 10000;
    cfg.initial_best_bid = 99 * cfg.price_scale;
    cfg.initial_best_ask = 101 * cfg.price_scale;
    cfg.delay = {delay, delay, delay, delay};
    return cfg;
}

}  // namespace

ScenarioConfig preset(const std::string& name) {
    const std::int64_t s = 10000;
    if (name == "table1") {
        // two identical makers, confirmations two steps late, started on
        // opposite sides of the band: they trade one block back and forth
        // in a 12-step loop
        ScenarioConfig cfg = base_config(24, 2, false);
        cfg.traders = {maker(10, -10, -8, 4, s), maker(10, -10, 18, 4, s)};
        return cfg;
    }
    if (name == "single-mm-delay") {
        // one delayed maker vs a relentless seller: stale confirmations make
        // the maker over-buy past its upper limit and panic
        ScenarioConfig cfg = base_config(20, 2, false);
        cfg.traders = {maker(10, -10, -8, 4, s)};
        TraderSpec seller;
        seller.role = TraderSpec::Role::Fundamental;
        seller.side = FundamentalSide::Seller;
        seller.omega = 1000;
        seller.timelimit = 1000000;
        cfg.traders.push_back(seller);
        return cfg;
    }
    if (name == "paired5") {
        // five identical makers, two started deep long, two mildly short,
        // one flat; most runs end with at least one maker parked at
        // upper-1 while any leftover pair loops
        ScenarioConfig cfg = base_config(100, 1, true);
        cfg.traders = {maker(10, -10, 27, 4, s), maker(10, -10, 27, 4, s),
                       maker(10, -10, -11, 4, s), maker(10, -10, -11, 4, s),
                       maker(10, -10, 0, 4, s)};
        return cfg;
    }
    if (name == "hetero5-up" || name == "hetero5-down") {
        // five makers with different bands and skews, randomized quote
        // sizes; two start in panic on the same side and push the price
        // in the direction they trade out of it
        ScenarioConfig cfg = base_config(500, 1, true);
        int sign = name == "hetero5-up" ? -1 : 1;  // short panickers buy the price up
        cfg.traders = {maker(10, -10, 0, 4, s, SizingMode::UniformRandom),
                       maker(12, -12, sign * 25, 5, s, SizingMode::UniformRandom),
                       maker(8, -8, 0, 3, s, SizingMode::UniformRandom),
                       maker(14, -14, sign * 30, 6, s, SizingMode::UniformRandom),
                       maker(6, -6, 0, 2, s, SizingMode::UniformRandom)};
        return cfg;
    }
    throw ConfigError(std::vector<ConfigIssue>{{"preset", "unknown preset '" + name + "'"}});
}

std::vector<std::string> preset_names() {
    return {"table1", "single-mm-delay", "paired5", "hetero5-up", "hetero5-down"};
}

}  // namespace mmsim
