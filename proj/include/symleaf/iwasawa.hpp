#pragma once

#include <Eigen/Dense>

namespace symleaf {

/// M = b u1 with b upper triangular, positive real diagonal, and u1 unitary.
struct IwasawaFactors {
  Eigen::MatrixXcd b;
  Eigen::MatrixXcd u1;
};

/// Factors an invertible M through the Cholesky factor of M M^*: with R the
/// reversal permutation, R M M^* R = L L^* gives b = R L R and u1 = b^{-1} M.
/// Throws IllConditioned when the condition estimate exceeds max_condition.
IwasawaFactors iwasawa(const Eigen::MatrixXcd& m, double max_condition = 1e12);

/// Right action of G on U: u^g is the unitary factor of u g.
Eigen::MatrixXcd g_act(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& g);

/// Infinitesimal Iwasawa splitting of X in sl(n, C) as compact + solvable,
/// with compact in su(n) and solvable upper triangular with real diagonal.
struct AlgebraSplit {
  Eigen::MatrixXcd compact;
  Eigen::MatrixXcd solvable;
};
AlgebraSplit iwasawa_split(const Eigen::MatrixXcd& x);

}  // namespace symleaf
