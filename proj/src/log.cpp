#include "rdslink/log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>

namespace rdslink::log {

namespace {

Level initial_level() {
    const char* env = std::getenv("RDSLINK_LOG");
    if (!env) return Level::Warn;
    const std::string v(env);
    if (v == "debug") return Level::Debug;
    if (v == "info") return Level::Info;
    if (v == "warn") return Level::Warn;
    if (v == "error") return Level::Error;
    if (v == "off") return Level::Off;
    return Level::Warn;
}

std::atomic<Level> g_level{initial_level()};
std::mutex g_mutex;

const char* name(Level level) {
    switch (level) {
        case Level::Debug: return "debug";
        case Level::Info: return "info";
        case Level::Warn: return "warn";
        case Level::Error: return "error";
        default: return "?";
    }
}

}  // namespace

void set_level(Level level) { g_level.store(level); }
Level level() { return g_level.load(); }
bool enabled(Level l) { return static_cast<int>(l) >= static_cast<int>(g_level.load()); }

void write(Level l, const std::string& message) {
    if (!enabled(l)) return;
    std::lock_guard lock(g_mutex);
    std::cerr << "[" << name(l) << "] " << message << "\n";
}

}  // namespace rdslink::log
