#include "commands.hpp"

#include "metasurf/error.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>

using nlohmann::json;

namespace {

constexpr int kConfigError = 2;
constexpr int kSolverError = 3;

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream is(path);
    if (!is) throw msurf::ConfigError("cannot read config file " + path);
    try {
        return json::parse(is);
    } catch (const json::parse_error& e) {
        throw msurf::ConfigError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

// key=value; value parsed as JSON when possible, else taken as a string
void apply_override(json& cfg, const std::string& kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw msurf::ConfigError("override must look like key=value: " + kv);
    const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
    try {
        cfg[key] = json::parse(val);
    } catch (const json::parse_error&) {
        cfg[key] = val;
    }
}

} // namespace

int main(int argc, char** argv) {
    using Cmd = std::function<int(const json&, const msurf::cli::RunContext&)>;
    const std::map<std::string, std::pair<Cmd, std::string>> commands{
        {"dispersion", {msurf::cli::cmd_dispersion, "single-interface SPP dispersion"}},
        {"film-dispersion", {msurf::cli::cmd_film_dispersion, "thin-film even/odd plasmon branches"}},
        {"stability", {msurf::cli::cmd_stability, "corrugation stability map and zero contours"}},
        {"diffract", {msurf::cli::cmd_diffract, "diffraction amplitudes of a travelling-wave grating"}},
        {"field", {msurf::cli::cmd_field, "field snapshots around the modulated boundary"}},
        {"cerenkov", {msurf::cli::cmd_cerenkov, "Frank-Tamm spectra of a swift charge"}},
        {"casimir-du", {msurf::cli::cmd_casimir_du, "quasistatic plasmon Casimir shift of a film"}},
    };

    CLI::App app{"metasurf: plasmonic Casimir and modulated-grating solvers"};
    app.require_subcommand(1);
    std::string config_path, out_dir = ".";
    std::vector<std::string> overrides;
    unsigned threads = 0;
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, entry] : commands) {
        CLI::App* s = app.add_subcommand(name, entry.second);
        s->add_option("-c,--config", config_path, "JSON config file");
        s->add_option("-o,--out", out_dir, "output directory");
        s->add_option("-s,--set", overrides, "override a config key: key=value (JSON value)");
        s->add_option("-j,--threads", threads, "worker threads (default: METASURF_THREADS or all cores)");
        subs[name] = s;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }

    try {
        json cfg = load_config(config_path);
        if (!cfg.is_object()) throw msurf::ConfigError("config must be a JSON object");
        for (const auto& kv : overrides) apply_override(cfg, kv);
        msurf::cli::RunContext ctx{out_dir, threads};
        for (const auto& [name, s] : subs)
            if (s->parsed()) return commands.at(name).first(cfg, ctx);
    } catch (const msurf::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return kSolverError;
    }
    return kConfigError;
}
