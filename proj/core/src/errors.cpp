#include "ringcav/errors.hpp"

#include <utility>

namespace ringcav {

namespace {

std::string decorate(const std::string& message, const std::string& key,
                     std::size_t line, std::size_t column) {
  std::string out = message;
  if (!key.empty()) out += " [key: " + key + "]";
  if (line > 0) {
    out += " [line " + std::to_string(line) + ", column " + std::to_string(column) + "]";
  }
  return out;
}

}  // namespace

ConfigError::ConfigError(const std::string& message, std::string key, std::size_t line,
                         std::size_t column)
    : Error(decorate(message, key, line, column)),
      key_(std::move(key)),
      line_(line),
      column_(column) {}

}  // namespace ringcav
