#include "symleaf/iwasawa.hpp"

#include "symleaf/errors.hpp"

#include <limits>

namespace symleaf {

namespace {

// One Cholesky step: m = b u with b from the reversed Gram matrix.
bool cholesky_step(const Eigen::MatrixXcd& m, IwasawaFactors& f) {
  const Eigen::MatrixXcd reversed = m.colwise().reverse();
  Eigen::LLT<Eigen::MatrixXcd> llt(reversed * reversed.adjoint());
  if (llt.info() != Eigen::Success) return false;
  const Eigen::MatrixXcd lower = llt.matrixL();
  f.b = lower.reverse();
  f.u1 = f.b.triangularView<Eigen::Upper>().solve(m);
  return true;
}

}  // namespace

IwasawaFactors iwasawa(const Eigen::MatrixXcd& m, double max_condition) {
  const auto n = m.rows();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  const double condition = s(n - 1) > 0.0 ? s(0) / s(n - 1) : std::numeric_limits<double>::infinity();
  if (!(condition <= max_condition)) throw IllConditioned(condition);

  // The second step re-factors the nearly unitary u1, restoring unitarity
  // lost to the squared condition number of the Gram matrix.
  IwasawaFactors first, second;
  if (!cholesky_step(m, first) || !cholesky_step(first.u1, second)) throw IllConditioned(condition);
  IwasawaFactors f;
  f.b = Eigen::MatrixXcd(first.b.triangularView<Eigen::Upper>() * second.b).triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < n; ++i) f.b(i, i) = f.b(i, i).real();
  f.u1 = second.u1;
  return f;
}

Eigen::MatrixXcd g_act(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& g) { return iwasawa(u * g).u1; }

AlgebraSplit iwasawa_split(const Eigen::MatrixXcd& x) {
  const auto n = x.rows();
  AlgebraSplit out;
  out.compact = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.compact(i, i) = std::complex<double>(0.0, x(i, i).imag());
    for (Eigen::Index j = 0; j < i; ++j) {
      out.compact(i, j) = x(i, j);
      out.compact(j, i) = -std::conj(x(i, j));
    }
  }
  out.solvable = x - out.compact;
  return out;
}

}  // namespace symleaf
