#include "momo/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <mutex>

namespace momo::log {

namespace {

Level parse_env() {
  const char* env = std::getenv("MOMO_LOG");
  if (!env) return Level::warn;
  const std::string v(env);
  if (v == "error" || v == "0") return Level::error;
  if (v == "warn" || v == "1") return Level::warn;
  if (v == "info" || v == "2") return Level::info;
  if (v == "debug" || v == "3") return Level::debug;
  return Level::warn;
}

const char* tag(Level level) {
  switch (level) {
    case Level::error: return "error";
    case Level::warn: return "warn";
    case Level::info: return "info";
    case Level::debug: return "debug";
  }
  return "?";
}

std::mutex mu;

}  // namespace

Level level() {
  static const Level cached = parse_env();
  return cached;
}

void write(Level lvl, const std::string& message) {
  if (static_cast<int>(lvl) > static_cast<int>(level())) return;
  std::lock_guard<std::mutex> lock(mu);
  std::fprintf(stderr, "[momo][%s] %s\n", tag(lvl), message.c_str());
}

}  // namespace momo::log
