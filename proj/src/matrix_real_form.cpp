#include "symleaf/matrix_real_form.hpp"

#include "symleaf/errors.hpp"

#include <algorithm>

namespace symleaf {

namespace {

constexpr int kMaxRealizationSize = 4;

Eigen::MatrixXcd signature_matrix(int n, int q) {
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (i < q || i >= n - q) j(i, n - 1 - i) = 1.0;
    else j(i, i) = 1.0;
  }
  return j;
}

}  // namespace

MatrixRealForm::MatrixRealForm(Kind kind, int n, std::string label, Eigen::MatrixXcd j)
    : kind_(kind), n_(n), label_(std::move(label)), j_(std::move(j)) {
  const auto standard = standard_su_basis(n);
  std::vector<Eigen::MatrixXcd> even, odd;
  for (const auto& x : standard) {
    const Eigen::MatrixXcd tx = tau(x);
    even.push_back(0.5 * (x + tx));
    odd.push_back(0.5 * (x - tx));
  }
  auto k0 = orthonormalize(n, even);
  auto ip0 = orthonormalize(n, odd);
  dim_k0_ = static_cast<int>(k0.size());
  k0.insert(k0.end(), ip0.begin(), ip0.end());
  basis_u_ = AlgebraBasis(n, std::move(k0));
}

MatrixRealForm MatrixRealForm::sl_real(int n) {
  if (n < 2 || n > kMaxRealizationSize) throw NoMatrixRealization("sl(" + std::to_string(n) + ",R)");
  return MatrixRealForm(Kind::SplitSl, n, "sl(" + std::to_string(n) + ",R)", Eigen::MatrixXcd::Identity(n, n));
}

MatrixRealForm MatrixRealForm::su(int p, int q) {
  const std::string label = "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
  if (q < 1 || p < q || p + q > kMaxRealizationSize) throw NoMatrixRealization(label);
  return MatrixRealForm(Kind::SpecialUnitary, p + q, label, signature_matrix(p + q, q));
}

std::vector<std::string> MatrixRealForm::shipped_labels() {
  std::vector<std::string> out;
  for (int n = 2; n <= kMaxRealizationSize; ++n) out.push_back("sl(" + std::to_string(n) + ",R)");
  for (int n = 2; n <= kMaxRealizationSize; ++n)
    for (int q = 1; 2 * q <= n; ++q) out.push_back("su(" + std::to_string(n - q) + "," + std::to_string(q) + ")");
  return out;
}

bool MatrixRealForm::has_realization(std::string_view label) {
  const auto labels = shipped_labels();
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

MatrixRealForm MatrixRealForm::from_label(std::string_view label) {
  for (int n = 2; n <= kMaxRealizationSize; ++n) {
    if (label == "sl(" + std::to_string(n) + ",R)") return sl_real(n);
    for (int q = 1; 2 * q <= n; ++q)
      if (label == "su(" + std::to_string(n - q) + "," + std::to_string(q) + ")") return su(n - q, q);
  }
  throw NoMatrixRealization(std::string(label));
}

Eigen::MatrixXcd MatrixRealForm::tau(const Eigen::MatrixXcd& x) const {
  if (kind_ == Kind::SplitSl) return x.conjugate();
  return -j_ * x.adjoint() * j_;
}

Eigen::MatrixXcd MatrixRealForm::tau_group(const Eigen::MatrixXcd& g) const {
  if (kind_ == Kind::SplitSl) return g.conjugate();
  return j_ * g.adjoint().inverse() * j_;
}

std::vector<Eigen::MatrixXcd> MatrixRealForm::basis_k0() const {
  const auto& e = basis_u_.elements();
  return {e.begin(), e.begin() + dim_k0_};
}

std::vector<Eigen::MatrixXcd> MatrixRealForm::basis_ip0() const {
  const auto& e = basis_u_.elements();
  return {e.begin() + dim_k0_, e.end()};
}

std::vector<Eigen::MatrixXcd> MatrixRealForm::basis_g0() const {
  auto out = basis_k0();
  for (const auto& y : basis_ip0()) out.push_back(cd(0.0, -1.0) * y);
  return out;
}

}  // namespace symleaf
