#include "ringcav/angle.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "ringcav/errors.hpp"

namespace ringcav {

namespace {

class AngleParser {
 public:
  explicit AngleParser(std::string_view text) : text_(text) {}

  double parse() {
    skip_space();
    double sign = 1.0;
    if (peek() == '-' || peek() == '+') {
      sign = take() == '-' ? -1.0 : 1.0;
      skip_space();
    }
    double coefficient = 1.0;
    int pi_power = 0;
    factor(coefficient, pi_power, false);
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c == '*' || c == '/') {
        take();
        skip_space();
        factor(coefficient, pi_power, c == '/');
      } else if (starts_with_pi()) {
        // implicit product such as "2pi"
        factor(coefficient, pi_power, false);
      } else {
        fail("unexpected character");
      }
    }
    const double value = sign * coefficient * std::pow(std::numbers::pi, pi_power);
    if (!std::isfinite(value)) fail("value is not finite");
    return value;
  }

 private:
  void factor(double& coefficient, int& pi_power, bool divide) {
    if (starts_with_pi()) {
      pos_ += 2;
      pi_power += divide ? -1 : 1;
      return;
    }
    double number = 0.0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, number);
    if (ec != std::errc{} || ptr == first) fail("expected a number or 'pi'");
    pos_ += static_cast<std::size_t>(ptr - first);
    if (divide) {
      if (number == 0.0) fail("division by zero");
      coefficient /= number;
    } else {
      coefficient *= number;
    }
  }

  bool starts_with_pi() const {
    return pos_ + 1 < text_.size() &&
           std::tolower(static_cast<unsigned char>(text_[pos_])) == 'p' &&
           std::tolower(static_cast<unsigned char>(text_[pos_ + 1])) == 'i';
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ConfigError("cannot parse angle '" + std::string(text_) + "': " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

double parse_angle(std::string_view text) {
  if (text.empty()) throw ConfigError("empty numeric literal");
  return AngleParser(text).parse();
}

std::vector<double> linspace(double start, double stop, std::size_t count) {
  std::vector<double> out;
  if (count == 0) return out;
  out.reserve(count);
  if (count == 1) {
    out.push_back(start);
    return out;
  }
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(i + 1 == count ? stop : start + step * static_cast<double>(i));
  }
  return out;
}

std::vector<double> parse_grid(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (first == std::string_view::npos || second == std::string_view::npos ||
      text.find(':', second + 1) != std::string_view::npos) {
    throw ConfigError("grid must look like start:stop:count, got '" + std::string(text) + "'");
  }
  const double start = parse_angle(text.substr(0, first));
  const double stop = parse_angle(text.substr(first + 1, second - first - 1));
  const auto count_text = text.substr(second + 1);
  std::size_t count = 0;
  auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
  if (ec != std::errc{} || ptr != count_text.data() + count_text.size() || count == 0) {
    throw ConfigError("grid count must be a positive integer, got '" + std::string(count_text) + "'");
  }
  if (count == 1 && start != stop) {
    throw ConfigError("a one-point grid needs start == stop");
  }
  return linspace(start, stop, count);
}

bool is_odd_multiple_of_half_pi(double value, double tol) {
  const double q = value / (std::numbers::pi / 2.0);
  const double nearest = std::round(q);
  if (std::abs(q - nearest) > tol) return false;
  return std::fmod(std::abs(nearest), 2.0) == 1.0;
}

bool is_multiple_of_pi(double value, double tol) {
  const double q = value / std::numbers::pi;
  return std::abs(q - std::round(q)) <= tol;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

}  // namespace ringcav
