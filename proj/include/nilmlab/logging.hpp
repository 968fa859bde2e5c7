#pragma once

#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace nilm::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

// Verbosity comes from NILMLAB_LOG (error|warn|info|debug). Default: warn.
inline Level threshold() {
    static Level lvl = [] {
        const char* env = std::getenv("NILMLAB_LOG");
        if (!env) return Level::warn;
        if (std::strcmp(env, "error") == 0) return Level::error;
        if (std::strcmp(env, "info") == 0) return Level::info;
        if (std::strcmp(env, "debug") == 0) return Level::debug;
        return Level::warn;
    }();
    return lvl;
}

inline void logf(Level lvl, const char* fmt, ...) {
    if (lvl > threshold()) return;
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::fprintf(stderr, "[nilmlab %s] ", names[static_cast<int>(lvl)]);
    va_list ap;
    va_start(ap, fmt);
    std::vfprintf(stderr, fmt, ap);
    va_end(ap);
    std::fputc('\n', stderr);
}

}  // namespace nilm::log

#define NILM_ERROR(...) ::nilm::log::logf(::nilm::log::Level::error, __VA_ARGS__)
#define NILM_WARN(...) ::nilm::log::logf(::nilm::log::Level::warn, __VA_ARGS__)
#define NILM_INFO(...) ::nilm::log::logf(::nilm::log::Level::info, __VA_ARGS__)
#define NILM_DEBUG(...) ::nilm::log::logf(::nilm::log::Level::debug, __VA_ARGS__)
