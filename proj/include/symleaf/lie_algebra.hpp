#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace symleaf {

using cd = std::complex<double>;

/// Killing form of sl(n, C): 2n tr(XY).
template <typename A, typename B>
cd killing(int n, const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
  return 2.0 * n * (x * y).trace();
}

/// Positive-definite inner product on su(n): minus the real Killing form.
template <typename A, typename B>
double su_inner(int n, const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
  return -killing(n, x, y).real();
}

/// Cartan involution of the compact form su(n).
inline Eigen::MatrixXcd theta(const Eigen::MatrixXcd& x) { return -x.adjoint(); }

inline Eigen::MatrixXcd elementary(int n, int i, int j) {
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

/// Root data for alpha = e_i - e_j (0-based i < j) with the normalization
/// killing(E_pos, theta(E_pos)) = -1.
struct RootVector {
  int i = 0;
  int j = 0;
  Eigen::MatrixXcd e_pos;
  Eigen::MatrixXcd e_neg;  // -theta(e_pos)
  Eigen::MatrixXcd x;      // e_pos - e_neg
  Eigen::MatrixXcd y;      // i (e_pos + e_neg)
};

/// Scale c of E_alpha = c E_ij fixed by the normalization: c = 1 / sqrt(2n).
inline double root_vector_scale(int n) { return 1.0 / std::sqrt(2.0 * n); }

/// One entry per positive root, ordered by (i, j).
std::vector<RootVector> root_vectors(int n);

/// Real subspace of su(n) with an orthonormal basis for su_inner.
class AlgebraBasis {
 public:
  AlgebraBasis() = default;
  AlgebraBasis(int n, std::vector<Eigen::MatrixXcd> orthonormal) : n_(n), elements_(std::move(orthonormal)) {}

  int n() const { return n_; }
  int dim() const { return static_cast<int>(elements_.size()); }
  const Eigen::MatrixXcd& operator[](int k) const { return elements_[static_cast<std::size_t>(k)]; }
  const std::vector<Eigen::MatrixXcd>& elements() const { return elements_; }

  /// Orthogonal projection coefficients.
  Eigen::VectorXd coords(const Eigen::MatrixXcd& x) const;
  Eigen::MatrixXcd element(const Eigen::VectorXd& c) const;

  /// Matrix of x -> g x g^{-1} restricted to this subspace (columns are the
  /// coordinates of the images of the basis elements).
  Eigen::MatrixXd adjoint(const Eigen::MatrixXcd& g) const;

 private:
  int n_ = 0;
  std::vector<Eigen::MatrixXcd> elements_;
};

/// Gram-Schmidt (twice) over candidates, dropping those with residual norm
/// below tol.
std::vector<Eigen::MatrixXcd> orthonormalize(int n, const std::vector<Eigen::MatrixXcd>& candidates, double tol = 1e-10);

/// Orthonormal basis of su(n): E_ij - E_ji, i(E_ij + E_ji) for i < j, then
/// the orthonormalized diagonal i(E_kk - E_{k+1,k+1}).
std::vector<Eigen::MatrixXcd> standard_su_basis(int n);

/// Real dimension of the span of the given complex matrices viewed as real
/// vectors, by SVD with relative threshold.
int real_span_dim(const std::vector<Eigen::MatrixXcd>& elements, double tol = 1e-10);

/// Stacks (Re, Im) of every entry into a real vector of length 2 n^2.
Eigen::VectorXd realify(const Eigen::MatrixXcd& x);

}  // namespace symleaf
