#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ringcav {

/// Parses a real literal that may be a rational multiple of pi:
/// "0.25", "-1e-3", "pi", "-pi/2", "3*pi/4", "2pi", "pi*3/4".
/// Throws ConfigError on anything else.
double parse_angle(std::string_view text);

/// Inclusive linspace grid written as "start:stop:count", where start and
/// stop accept parse_angle syntax. count >= 1; a single point requires
/// start == stop.
std::vector<double> parse_grid(std::string_view text);

std::vector<double> linspace(double start, double stop, std::size_t count);

/// True when `value` is an odd multiple of pi/2 within `tol` (absolute,
/// measured on value / (pi/2)).
bool is_odd_multiple_of_half_pi(double value, double tol = 1e-12);

/// True when `value` is an integer multiple of pi within `tol`.
bool is_multiple_of_pi(double value, double tol = 1e-12);

/// Shortest decimal text that round-trips to the same double; '.' decimal
/// separator regardless of locale.
std::string format_double(double value);

}  // namespace ringcav
