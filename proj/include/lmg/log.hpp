#pragma once

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

namespace lmg::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

inline Level threshold() {
  static const Level lvl = [] {
    const char* env = std::getenv("LMG_LOG_LEVEL");
    if (env == nullptr) return Level::Warn;
    const std::string s(env);
    if (s == "error") return Level::Error;
    if (s == "warn") return Level::Warn;
    if (s == "info") return Level::Info;
    if (s == "debug") return Level::Debug;
    return Level::Warn;
  }();
  return lvl;
}

inline void emit(Level lvl, const std::string& tag, const std::string& msg) {
  if (lvl <= threshold()) std::cerr << "[" << tag << "] " << msg << "\n";
}

inline void error(const std::string& msg) { emit(Level::Error, "error", msg); }
inline void warn(const std::string& msg) { emit(Level::Warn, "warn", msg); }
inline void info(const std::string& msg) { emit(Level::Info, "info", msg); }
inline void debug(const std::string& msg) { emit(Level::Debug, "debug", msg); }

}  // namespace lmg::log
