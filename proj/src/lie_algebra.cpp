#include "symleaf/lie_algebra.hpp"

namespace symleaf {

std::vector<RootVector> root_vectors(int n) {
  const double c = root_vector_scale(n);
  const cd i_unit(0.0, 1.0);
  std::vector<RootVector> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      RootVector rv;
      rv.i = i;
      rv.j = j;
      rv.e_pos = c * elementary(n, i, j);
      rv.e_neg = -theta(rv.e_pos);
      rv.x = rv.e_pos - rv.e_neg;
      rv.y = i_unit * (rv.e_pos + rv.e_neg);
      out.push_back(std::move(rv));
    }
  }
  return out;
}

Eigen::VectorXd AlgebraBasis::coords(const Eigen::MatrixXcd& x) const {
  Eigen::VectorXd c(dim());
  for (int k = 0; k < dim(); ++k) c(k) = su_inner(n_, x, elements_[static_cast<std::size_t>(k)]);
  return c;
}

Eigen::MatrixXcd AlgebraBasis::element(const Eigen::VectorXd& c) const {
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(n_, n_);
  for (int k = 0; k < dim(); ++k) x += c(k) * elements_[static_cast<std::size_t>(k)];
  return x;
}

Eigen::MatrixXd AlgebraBasis::adjoint(const Eigen::MatrixXcd& g) const {
  const Eigen::MatrixXcd g_inv = g.inverse();
  Eigen::MatrixXd ad(dim(), dim());
  for (int k = 0; k < dim(); ++k) ad.col(k) = coords(g * elements_[static_cast<std::size_t>(k)] * g_inv);
  return ad;
}

std::vector<Eigen::MatrixXcd> orthonormalize(int n, const std::vector<Eigen::MatrixXcd>& candidates, double tol) {
  std::vector<Eigen::MatrixXcd> out;
  for (const auto& candidate : candidates) {
    Eigen::MatrixXcd v = candidate;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& e : out) v -= su_inner(n, v, e) * e;
    const double norm = std::sqrt(std::max(su_inner(n, v, v), 0.0));
    if (norm > tol) out.push_back(v / norm);
  }
  return out;
}

std::vector<Eigen::MatrixXcd> standard_su_basis(int n) {
  const cd i_unit(0.0, 1.0);
  std::vector<Eigen::MatrixXcd> candidates;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      candidates.push_back(elementary(n, i, j) - elementary(n, j, i));
      candidates.push_back(i_unit * (elementary(n, i, j) + elementary(n, j, i)));
    }
  }
  for (int k = 0; k + 1 < n; ++k) candidates.push_back(i_unit * (elementary(n, k, k) - elementary(n, k + 1, k + 1)));
  return orthonormalize(n, candidates);
}

Eigen::VectorXd realify(const Eigen::MatrixXcd& x) {
  Eigen::VectorXd v(2 * x.size());
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    v(2 * k) = x.data()[k].real();
    v(2 * k + 1) = x.data()[k].imag();
  }
  return v;
}

int real_span_dim(const std::vector<Eigen::MatrixXcd>& elements, double tol) {
  if (elements.empty()) return 0;
  Eigen::MatrixXd m(2 * elements.front().size(), static_cast<Eigen::Index>(elements.size()));
  for (std::size_t k = 0; k < elements.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = realify(elements[k]);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  const double cutoff = tol * std::max(1.0, s.size() ? s(0) : 0.0);
  return static_cast<int>((s.array() > cutoff).count());
}

}  // namespace symleaf
