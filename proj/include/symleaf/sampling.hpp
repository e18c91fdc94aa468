#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace symleaf {

/// SplitMix64 mix of (master, index); per-sample seeds are derived this way
/// so serial and parallel runs draw the same points.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Haar-distributed element of SU(n).
Eigen::MatrixXcd haar_su(int n, std::uint64_t seed);

/// Complex Gaussian matrix rescaled to determinant 1.
Eigen::MatrixXcd random_sl(int n, std::uint64_t seed, double scale = 1.0);

/// Element exp(i diag(theta)) of the diagonal torus of SU(n).
Eigen::MatrixXcd random_torus(int n, std::uint64_t seed);

}  // namespace symleaf
