#include "ringcav/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "ringcav/errors.hpp"

namespace ringcav {

namespace {

// Relative slack when matching times against segment boundaries.
constexpr double kTimeSlack = 1e-12;

double slack(double scale) { return kTimeSlack * std::max(1.0, std::abs(scale)); }

}  // namespace

DetuningSchedule::DetuningSchedule() : DetuningSchedule(constant(0.0)) {}

DetuningSchedule::DetuningSchedule(std::vector<DetuningSegment> segments)
    : segments_(std::move(segments)) {
  if (segments_.empty()) throw ScheduleDomainError("detuning schedule has no segments");
  if (segments_.front().t_start != 0.0) {
    throw ScheduleDomainError("detuning schedule must start at t = 0");
  }
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& s = segments_[i];
    if (!std::isfinite(s.t_start) || std::isnan(s.t_end) || !std::isfinite(s.value_start) ||
        !std::isfinite(s.value_end)) {
      throw ScheduleDomainError("detuning segment " + std::to_string(i) + " is not finite");
    }
    if (!(s.t_end > s.t_start)) {
      throw ScheduleDomainError("detuning segment " + std::to_string(i) +
                                " has non-positive duration");
    }
    if (std::isinf(s.t_end)) {
      if (i + 1 != segments_.size() || !s.is_constant()) {
        throw ScheduleDomainError("only a final constant segment may be unbounded");
      }
    }
    if (i > 0) {
      const auto& prev = segments_[i - 1];
      if (std::abs(prev.t_end - s.t_start) > slack(s.t_start)) {
        throw ScheduleDomainError("detuning segments " + std::to_string(i - 1) + " and " +
                                  std::to_string(i) + " are not contiguous");
      }
      if (!s.step && std::abs(prev.value_end - s.value_start) >
                         1e-12 * std::max(1.0, std::abs(prev.value_end))) {
        throw ScheduleDomainError("detuning jumps at t = " + std::to_string(s.t_start) +
                                  " without a step flag");
      }
    }
  }
}

DetuningSchedule DetuningSchedule::constant(double value, double t_final) {
  return DetuningSchedule({DetuningSegment{0.0, t_final, value, value, false}});
}

DetuningSchedule DetuningSchedule::ramp(double from, double to, double duration) {
  return DetuningSchedule({DetuningSegment{0.0, duration, from, to, false}});
}

double DetuningSchedule::operator()(double t) const {
  const double end = t_final();
  if (!(t >= -slack(0.0)) || t > end + slack(end)) {
    throw ScheduleDomainError("t = " + std::to_string(t) + " outside schedule domain [0, " +
                              std::to_string(end) + "]");
  }
  // Last segment whose start is <= t.
  auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                             [](double value, const DetuningSegment& s) {
                               return value < s.t_start;
                             });
  const auto& s = it == segments_.begin() ? segments_.front() : *std::prev(it);
  if (s.is_constant()) return s.value_start;
  const double u = std::clamp((t - s.t_start) / (s.t_end - s.t_start), 0.0, 1.0);
  return s.value_start + (s.value_end - s.value_start) * u;
}

double DetuningSchedule::t_final() const noexcept { return segments_.back().t_end; }

bool DetuningSchedule::covers(double t_final) const noexcept {
  const double end = this->t_final();
  return t_final <= end + slack(end);
}

bool DetuningSchedule::is_constant() const noexcept {
  const double v = segments_.front().value_start;
  return std::all_of(segments_.begin(), segments_.end(), [v](const DetuningSegment& s) {
    return s.value_start == v && s.value_end == v;
  });
}

std::vector<double> DetuningSchedule::breakpoints(double limit) const {
  std::vector<double> out;
  for (std::size_t i = 1; i < segments_.size(); ++i) {
    const double t = segments_[i].t_start;
    if (t > 0.0 && t < limit - slack(limit)) out.push_back(t);
  }
  return out;
}

bool DetuningSchedule::constant_on(double t0, double t1) const {
  std::optional<double> value;
  for (const auto& s : segments_) {
    if (s.t_end <= t0 + slack(t0) || s.t_start >= t1 - slack(t1)) continue;
    if (!s.is_constant()) return false;
    if (value && *value != s.value_start) return false;
    value = s.value_start;
  }
  return true;
}

}  // namespace ringcav
