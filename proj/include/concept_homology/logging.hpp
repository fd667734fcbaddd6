#pragma once

#include <cstdlib>
#include <memory>
#include <string_view>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

namespace concept_homology {

/// Log level named by CONCEPT_HOMOLOGY_LOG (error, warn, info, debug); warn when unset or unknown.
inline spdlog::level::level_enum log_level_from_env()
{
    const char* raw = std::getenv("CONCEPT_HOMOLOGY_LOG");
    const std::string_view v = raw ? raw : "";
    if (v == "error") return spdlog::level::err;
    if (v == "info") return spdlog::level::info;
    if (v == "debug") return spdlog::level::debug;
    return spdlog::level::warn;
}

/// Library logger; writes to standard error only.
inline spdlog::logger& logger()
{
    static std::shared_ptr<spdlog::logger> instance = [] {
        auto l = std::make_shared<spdlog::logger>("concept_homology",
                                                  std::make_shared<spdlog::sinks::stderr_sink_st>());
        l->set_pattern("[%l] %v");
        l->set_level(log_level_from_env());
        return l;
    }();
    return *instance;
}

} // namespace concept_homology
