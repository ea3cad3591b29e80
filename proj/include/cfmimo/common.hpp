#pragma once

#include <stdexcept>
#include <string>

namespace cfmimo {

inline constexpr const char* kVersion = "0.1.0";

/// Error type thrown by all cfmimo components.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

}  // namespace cfmimo
