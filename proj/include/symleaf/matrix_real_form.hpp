#pragma once

#include "symleaf/lie_algebra.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace symleaf {

/// Noncompact real form g0 of sl(n, C) realized so that the diagonal Cartan
/// subalgebra is stable under tau and theta and the upper-triangular Borel
/// subalgebra is Iwasawa relative to g0.
///
///   sl(n,R): tau(X) = conj(X).
///   su(p,q): tau(X) = -J X^* J with J the signature matrix pairing node i
///            with node n+1-i for the first and last q indices and equal to
///            the identity in the middle block (p >= q).
class MatrixRealForm {
 public:
  enum class Kind { SplitSl, SpecialUnitary };

  static MatrixRealForm sl_real(int n);
  static MatrixRealForm su(int p, int q);

  /// Throws NoMatrixRealization for labels without a shipped realization.
  static MatrixRealForm from_label(std::string_view label);
  static std::vector<std::string> shipped_labels();
  static bool has_realization(std::string_view label);

  int n() const { return n_; }
  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }

  /// Complex conjugation of sl(n, C) with respect to g0 (conjugate-linear).
  Eigen::MatrixXcd tau(const Eigen::MatrixXcd& x) const;
  /// The same involution lifted to SL(n, C).
  Eigen::MatrixXcd tau_group(const Eigen::MatrixXcd& g) const;
  const Eigen::MatrixXcd& signature() const { return j_; }

  /// Orthonormal basis of u = su(n): the k0 basis followed by the i p0 basis.
  const AlgebraBasis& basis_u() const { return basis_u_; }
  int dim_k0() const { return dim_k0_; }
  int dim_p0() const { return basis_u_.dim() - dim_k0_; }

  std::vector<Eigen::MatrixXcd> basis_k0() const;
  std::vector<Eigen::MatrixXcd> basis_ip0() const;
  /// Real basis of g0: the k0 basis, then -i times the i p0 basis.
  std::vector<Eigen::MatrixXcd> basis_g0() const;

 private:
  MatrixRealForm(Kind kind, int n, std::string label, Eigen::MatrixXcd j);

  Kind kind_;
  int n_;
  std::string label_;
  Eigen::MatrixXcd j_;
  AlgebraBasis basis_u_;
  int dim_k0_ = 0;
};

}  // namespace symleaf
