#include "oracles.hpp"

#include <cmath>

namespace oracle {

namespace {

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Mat identity(Eigen::Index n) { return Mat::Identity(n, n); }

Mat annihilation(int cutoff) {
  Mat a = Mat::Zero(cutoff + 1, cutoff + 1);
  for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

// sigma^- with |1> = excited listed second, so bit value 1 means excited.
Mat lowering() {
  Mat s = Mat::Zero(2, 2);
  s(0, 1) = 1.0;
  return s;
}

// Operator `op` on factor `which` of a chain of factors with given dims.
Mat embed(const std::vector<Eigen::Index>& dims, std::size_t which, const Mat& op) {
  Mat out = identity(1);
  for (std::size_t f = 0; f < dims.size(); ++f) {
    out = kron(out, f == which ? op : identity(dims[f]));
  }
  return out;
}

}  // namespace

Mat kron_hamiltonian(const std::vector<double>& phases, double g, int cutoff, double omega_a,
                     double omega_c, const std::vector<double>& detunings) {
  const std::size_t n = phases.size();
  std::vector<Eigen::Index> dims{cutoff + 1, cutoff + 1};
  for (std::size_t m = 0; m < n; ++m) dims.push_back(2);
  const Mat a_cw = embed(dims, 0, annihilation(cutoff));
  const Mat a_ccw = embed(dims, 1, annihilation(cutoff));
  Mat h = omega_c * (a_cw.adjoint() * a_cw + a_ccw.adjoint() * a_ccw);
  for (std::size_t m = 0; m < n; ++m) {
    const Mat sm = embed(dims, 2 + m, lowering());
    const double delta = detunings.empty() ? 0.0 : detunings[m];
    h += (omega_a + delta) * sm.adjoint() * sm;
    const cd cw = g * std::polar(1.0, phases[m]);
    const cd ccw = g * std::polar(1.0, -phases[m]);
    const Mat absorb = cw * sm.adjoint() * a_cw + ccw * sm.adjoint() * a_ccw;
    h += absorb + Mat(absorb.adjoint());
  }
  return h;
}

Mat single_excitation_hamiltonian(const std::vector<double>& phases, double g, double omega_a,
                                  double omega_c, const std::vector<double>& detunings) {
  const auto n = static_cast<Eigen::Index>(phases.size());
  Mat h = Mat::Zero(n + 2, n + 2);
  h(0, 0) = omega_c;
  h(1, 1) = omega_c;
  for (Eigen::Index m = 0; m < n; ++m) {
    const double delta = detunings.empty() ? 0.0 : detunings[static_cast<std::size_t>(m)];
    h(m + 2, m + 2) = omega_a + delta;
    h(m + 2, 0) = g * std::polar(1.0, phases[static_cast<std::size_t>(m)]);
    h(m + 2, 1) = g * std::polar(1.0, -phases[static_cast<std::size_t>(m)]);
    h(0, m + 2) = std::conj(h(m + 2, 0));
    h(1, m + 2) = std::conj(h(m + 2, 1));
  }
  return h;
}

Mat taylor_propagator(const Mat& h, double t) {
  const Mat x = cd(0.0, -t) * h;
  const double norm = x.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
  const Mat y = x / std::pow(2.0, squarings);
  Mat term = identity(h.rows());
  Mat sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * y / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

Vec rk4(const std::function<Mat(double)>& h, const Vec& psi0, double t_final, int steps) {
  const double dt = t_final / steps;
  const cd minus_i(0.0, -1.0);
  Vec psi = psi0;
  for (int k = 0; k < steps; ++k) {
    const double t = k * dt;
    const Mat h_mid = h(t + dt / 2);
    const Vec k1 = minus_i * (h(t) * psi);
    const Vec k2 = minus_i * (h_mid * (psi + dt / 2 * k1));
    const Vec k3 = minus_i * (h_mid * (psi + dt / 2 * k2));
    const Vec k4 = minus_i * (h(t + dt) * (psi + dt * k3));
    psi += dt / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return psi;
}

double structure_factor_modulus(int n, double dphi) {
  cd sum = 0.0;
  for (int m = 0; m < n; ++m) sum += std::polar(1.0, 2.0 * m * dphi);
  return std::abs(sum) / n;
}

}  // namespace oracle
