#pragma once

#include "symleaf/matrix_real_form.hpp"

#include <Eigen/Dense>

namespace symleaf {

/// Bivector with coefficients over an orthonormal basis. Only the strict
/// upper triangle is stored, so antisymmetry holds by construction. The
/// coefficient matrix B encodes sum_{a<b} B(a,b) e_a ^ e_b with
/// x ^ y = x (x) y - y (x) x.
class Bivector {
 public:
  Bivector() = default;
  explicit Bivector(int dim) : dim_(dim), upper_(Eigen::VectorXd::Zero(dim * (dim - 1) / 2)) {}

  /// Reads the strict upper triangle of m.
  static Bivector from_matrix(const Eigen::MatrixXd& m, Eigen::MatrixXcd base_point = {});

  int dim() const { return dim_; }
  double operator()(int a, int b) const;
  Eigen::MatrixXd matrix() const;
  const Eigen::VectorXd& packed() const { return upper_; }
  const Eigen::MatrixXcd& base_point() const { return base_; }

 private:
  static int index(int dim, int a, int b) { return a * dim - a * (a + 1) / 2 + (b - a - 1); }

  int dim_ = 0;
  Eigen::VectorXd upper_;
  Eigen::MatrixXcd base_;
};

/// Coefficient matrix of x ^ y.
inline Eigen::MatrixXd wedge(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  return x * y.transpose() - y * x.transpose();
}

/// Lambda = 1/4 sum_alpha X_alpha ^ Y_alpha over the basis_u of rf.
Bivector lambda(const MatrixRealForm& rf);

/// pi_U at u, right-trivialized: Lambda - Ad_u Lambda Ad_u^T.
Bivector pi_U_at(const MatrixRealForm& rf, const Eigen::MatrixXcd& u);

/// pi_0 at uK0 over the basis of i p0, tangent vectors identified by left
/// translation from the representative u.
Bivector pi_0_at(const MatrixRealForm& rf, const Eigen::MatrixXcd& u);

/// ||u^* u - 1|| + |det u - 1|.
double unitarity_residual(const Eigen::MatrixXcd& u);

/// Throws NonUnitaryInput when the residual exceeds tol.
void require_special_unitary(const Eigen::MatrixXcd& u, double tol = 1e-10);

struct RankInfo {
  int rank = 0;
  bool near_threshold = false;  // some singular value within 10x of the cutoff
  Eigen::VectorXd singular_values;
};

/// Numerical rank: singular values below rel_tol * max(s_max, 1) count as zero.
RankInfo numerical_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-8);

}  // namespace symleaf
