#pragma once

#include <limits>
#include <vector>

namespace ringcav {

/// One linear piece of a detuning schedule. Times in 1/g_c, values in g_c.
/// `step` marks an intentional discontinuity at `t_start` (the value may
/// jump relative to the previous segment's end value).
struct DetuningSegment {
  double t_start = 0.0;
  double t_end = 0.0;
  double value_start = 0.0;
  double value_end = 0.0;
  bool step = false;

  bool is_constant() const noexcept { return value_start == value_end; }
  friend bool operator==(const DetuningSegment&, const DetuningSegment&) = default;
};

/// Piecewise-linear detuning Delta(t) on [0, t_final].
///
/// Segments are contiguous and ordered, the first starts at 0, and the value
/// is continuous across joins unless the later segment is flagged `step`.
/// The last segment may extend to +infinity provided it is constant, which
/// is how time-independent detunings are expressed.
class DetuningSchedule {
 public:
  /// Zero detuning forever.
  DetuningSchedule();
  explicit DetuningSchedule(std::vector<DetuningSegment> segments);

  static DetuningSchedule constant(
      double value, double t_final = std::numeric_limits<double>::infinity());
  /// Linear ramp from `from` at t=0 to `to` at t=duration.
  static DetuningSchedule ramp(double from, double to, double duration);

  /// Linear interpolation inside the containing segment. At a join the later
  /// segment wins, which only matters for step discontinuities.
  double operator()(double t) const;
  double evaluate(double t) const { return (*this)(t); }

  double t_final() const noexcept;
  bool covers(double t_final) const noexcept;
  bool is_constant() const noexcept;

  /// Segment boundaries strictly inside (0, limit).
  std::vector<double> breakpoints(double limit) const;

  /// True when the schedule has a single constant value on [t0, t1].
  bool constant_on(double t0, double t1) const;

  const std::vector<DetuningSegment>& segments() const noexcept { return segments_; }

  friend bool operator==(const DetuningSchedule&, const DetuningSchedule&) = default;

 private:
  std::vector<DetuningSegment> segments_;
};

}  // namespace ringcav
