#include "symleaf/sampling.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace symleaf {

namespace {

Eigen::MatrixXcd gaussian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd z(n, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(r, c) = {re, im};
    }
  return z;
}

// Divides by a fixed n-th root of det so the result has determinant 1.
Eigen::MatrixXcd normalize_det(Eigen::MatrixXcd m) {
  const auto n = static_cast<double>(m.rows());
  const std::complex<double> det = m.determinant();
  m /= std::pow(det, 1.0 / n);
  return m;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Eigen::MatrixXcd haar_su(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Eigen::MatrixXcd z = gaussian(n, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    const std::complex<double> d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return normalize_det(q);
}

Eigen::MatrixXcd random_sl(int n, std::uint64_t seed, double scale) {
  std::mt19937_64 rng(seed);
  return normalize_det(Eigen::MatrixXcd::Identity(n, n) + scale * gaussian(n, rng));
}

Eigen::MatrixXcd random_torus(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
  double total = 0.0;
  for (int k = 0; k + 1 < n; ++k) {
    const double a = angle(rng);
    total += a;
    t(k, k) = std::polar(1.0, a);
  }
  t(n - 1, n - 1) = std::polar(1.0, -total);
  return t;
}

}  // namespace symleaf
