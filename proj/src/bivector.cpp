#include "symleaf/bivector.hpp"

#include "symleaf/errors.hpp"

namespace symleaf {

Bivector Bivector::from_matrix(const Eigen::MatrixXd& m, Eigen::MatrixXcd base_point) {
  Bivector b(static_cast<int>(m.rows()));
  for (int a = 0; a < b.dim_; ++a)
    for (int c = a + 1; c < b.dim_; ++c) b.upper_(index(b.dim_, a, c)) = m(a, c);
  b.base_ = std::move(base_point);
  return b;
}

double Bivector::operator()(int a, int b) const {
  if (a == b) return 0.0;
  return a < b ? upper_(index(dim_, a, b)) : -upper_(index(dim_, b, a));
}

Eigen::MatrixXd Bivector::matrix() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int a = 0; a < dim_; ++a) {
    for (int b = a + 1; b < dim_; ++b) {
      m(a, b) = upper_(index(dim_, a, b));
      m(b, a) = -m(a, b);
    }
  }
  return m;
}

Bivector lambda(const MatrixRealForm& rf) {
  const auto& basis = rf.basis_u();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(basis.dim(), basis.dim());
  for (const auto& rv : root_vectors(rf.n())) m += 0.25 * wedge(basis.coords(rv.x), basis.coords(rv.y));
  return Bivector::from_matrix(m, Eigen::MatrixXcd::Identity(rf.n(), rf.n()));
}

Bivector pi_U_at(const MatrixRealForm& rf, const Eigen::MatrixXcd& u) {
  require_special_unitary(u);
  const Eigen::MatrixXd lam = lambda(rf).matrix();
  const Eigen::MatrixXd ad = rf.basis_u().adjoint(u);
  return Bivector::from_matrix(lam - ad * lam * ad.transpose(), u);
}

Bivector pi_0_at(const MatrixRealForm& rf, const Eigen::MatrixXcd& u) {
  require_special_unitary(u);
  const Eigen::MatrixXd lam = lambda(rf).matrix();
  const Eigen::MatrixXd ad = rf.basis_u().adjoint(u);
  // Left-trivialized pi_U(u) = Ad_{u^{-1}} Lambda - Lambda; dp kills k0.
  const Eigen::MatrixXd left = ad.transpose() * lam * ad - lam;
  const int p = rf.dim_p0();
  return Bivector::from_matrix(left.bottomRightCorner(p, p), u);
}

double unitarity_residual(const Eigen::MatrixXcd& u) {
  const auto n = u.rows();
  return (u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).norm() + std::abs(u.determinant() - 1.0);
}

void require_special_unitary(const Eigen::MatrixXcd& u, double tol) {
  const double r = unitarity_residual(u);
  if (!(r <= tol)) throw NonUnitaryInput(r);
}

RankInfo numerical_rank(const Eigen::MatrixXd& m, double rel_tol) {
  RankInfo info;
  if (m.size() == 0) return info;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  info.singular_values = svd.singularValues();
  const double cutoff = rel_tol * std::max(1.0, info.singular_values(0));
  for (Eigen::Index i = 0; i < info.singular_values.size(); ++i) {
    const double s = info.singular_values(i);
    if (s > cutoff) ++info.rank;
    if (s > cutoff / 10.0 && s < cutoff * 10.0) info.near_threshold = true;
  }
  return info;
}

}  // namespace symleaf
