#include "mmsim/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "mmsim/config.hpp"
#include "mmsim/scenario.hpp"

namespace mmsim {

namespace {

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::optional<FlowWindow> parse_window(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto colon = text.find(':');
    FlowWindow w;
    try {
        if (colon == std::string::npos) throw std::invalid_argument("no colon");
        w.from = std::stoll(text.substr(0, colon));
        w.to = std::stoll(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw ConfigError(std::vector<ConfigIssue>{{"--flow-window", "expected FROM:TO, got '" + text + "'"}});
    }
    if (w.from > w.to)
        throw ConfigError(std::vector<ConfigIssue>{{"--flow-window", "window start is after its end"}});
    return w;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"deterministic coupled market-maker exchange simulator"};
    app.require_subcommand(1);

    std::string config_path, preset_name, out_dir, window_text;
    std::uint64_t seed = 0;
    long long steps = 0;
    bool no_assert = false;

    CLI::App* run_cmd = app.add_subcommand("run", "run a scenario and write CSV results");
    CLI::Option* opt_config = run_cmd->add_option("--config", config_path, "scenario JSON file");
    CLI::Option* opt_preset =
        run_cmd->add_option("--preset", preset_name, "built-in scenario name");
    opt_config->excludes(opt_preset);
    run_cmd->add_option("--out", out_dir, "output directory")->required();
    CLI::Option* opt_seed = run_cmd->add_option("--seed", seed, "override the config seed");
    CLI::Option* opt_steps =
        run_cmd->add_option("--steps", steps, "override the config step count");
    run_cmd->add_flag("--no-assert", no_assert, "skip per-step invariant checks");
    run_cmd->add_option("--flow-window", window_text, "limit flow.txt to steps FROM:TO");

    CLI::App* presets_cmd = app.add_subcommand("presets", "list built-in scenario names");

    std::string render_preset, render_config_path;
    CLI::App* render_cmd =
        app.add_subcommand("render", "print a scenario as canonical config JSON");
    CLI::Option* ropt_preset =
        render_cmd->add_option("--preset", render_preset, "built-in scenario name");
    CLI::Option* ropt_config =
        render_cmd->add_option("--config", render_config_path, "scenario JSON file");
    ropt_config->excludes(ropt_preset);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (presets_cmd->parsed()) {
            for (const std::string& name : preset_names()) std::cout << name << "\n";
            return 0;
        }

        if (render_cmd->parsed()) {
            if (!*ropt_preset && !*ropt_config)
                throw ConfigError(std::vector<ConfigIssue>{{"render", "give --preset or --config"}});
            ScenarioConfig cfg =
                *ropt_preset ? preset(render_preset) : load_config_file(render_config_path);
            std::cout << render_config(cfg);
            return 0;
        }

        if (!*opt_config && !*opt_preset)
            throw ConfigError(std::vector<ConfigIssue>{{"run", "give --preset or --config"}});
        ScenarioConfig cfg =
            *opt_preset ? preset(preset_name) : load_config_file(config_path);
        if (*opt_seed) cfg.seed = seed;
        if (*opt_steps) {
            cfg.steps = steps;
            std::vector<ConfigIssue> issues = validate_config(cfg);
            if (!issues.empty()) throw ConfigError(issues);
        }
        std::string name = *opt_preset ? preset_name : config_path;
        RunSummary summary =
            run_scenario(cfg, name, out_dir, !no_assert, parse_window(window_text));
        std::cout << summary.one_line() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const InvariantError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
}

}  // namespace mmsim
