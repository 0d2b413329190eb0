#pragma once

#include <complex>

#include <Eigen/Core>

namespace ringcav {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

}  // namespace ringcav
