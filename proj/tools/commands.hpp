#pragma once

#include <string>

#include "json.hpp"

namespace msurf::cli {

struct RunContext {
    std::string out_dir = ".";
    unsigned workers = 0;   // 0: METASURF_THREADS or logical cores
};

// Each command reads its parameters from cfg, writes files under out_dir and
// returns 0. Config problems throw ConfigError, solver failures msurf::Error.
int cmd_dispersion(const nlohmann::json& cfg, const RunContext& ctx);
int cmd_film_dispersion(const nlohmann::json& cfg, const RunContext& ctx);
int cmd_stability(const nlohmann::json& cfg, const RunContext& ctx);
int cmd_diffract(const nlohmann::json& cfg, const RunContext& ctx);
int cmd_field(const nlohmann::json& cfg, const RunContext& ctx);
int cmd_cerenkov(const nlohmann::json& cfg, const RunContext& ctx);
int cmd_casimir_du(const nlohmann::json& cfg, const RunContext& ctx);

} // namespace msurf::cli
