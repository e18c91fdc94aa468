#pragma once

#include "symleaf/matrix_real_form.hpp"
#include "symleaf/exact.hpp"

#include <Eigen/Dense>

#include <algorithm>

#include <optional>

namespace symleaf {

/// Residuals of the structural identities a realization must satisfy.
struct RealizationCheck {
  double tau_involution = 0.0;    // max ||tau(tau(X)) - X||
  double theta_involution = 0.0;  // max ||theta(theta(X)) - X||
  double commute = 0.0;           // max ||tau(theta(X)) - theta(tau(X))||
  double cartan_stable = 0.0;     // off-diagonal part of tau(H), theta(H)
  int dim_a0 = 0;                 // dim (a cap g0)
  int dim_n0 = 0;                 // dim (n cap g0)
  double max_residual() const { return std::max({tau_involution, theta_involution, commute, cartan_stable}); }
};
RealizationCheck check_realization(const MatrixRealForm& rf, std::uint64_t seed, int samples = 10);

struct AnnihilatorResult {
  int annihilator_dim = 0;  // k0-perp inside a + n under Im(killing)
  int iwasawa_dim = 0;      // dim (a0 + n0)
  double distance = 0.0;    // ||P_annihilator - P_{a0 + n0}||_2, or 1 on a dimension mismatch
};
AnnihilatorResult annihilator_check(const MatrixRealForm& rf, double tol = 1e-10);

/// Dimensions of {Z in g0 : Ad_u Z in a + n} and of {Z in g0 : Ad_u Z in t + a + n}.
struct StabilizerDims {
  int an = 0;
  int tan = 0;
};
StabilizerDims stabilizer_dims(const MatrixRealForm& rf, const Eigen::MatrixXcd& u, double tol = 1e-8);

/// Compares the image of the pi_0 sharp map at uK0 with the projected tangent
/// space of the G0-orbit through u.
struct TangencyResult {
  int bivector_rank = 0;
  int orbit_rank = 0;
  double residual = 0.0;  // sine of the largest principal angle; 1 on a dimension mismatch
};
TangencyResult leaf_tangency_check(const MatrixRealForm& rf, const Eigen::MatrixXcd& u, double tol = 1e-8);

/// tau* of the realization in simple-root coordinates of A_{n-1}, read off
/// from the action of tau on the real diagonal Cartan subalgebra.
std::optional<IntMatrix> realization_tau_star(const MatrixRealForm& rf);

/// Weyl element (simple-root coordinates of A_{n-1}) of a monomial unitary
/// matrix, via its adjoint action on the diagonal. Empty if the input does
/// not normalize the diagonal.
std::optional<IntMatrix> weyl_matrix_of(const Eigen::MatrixXcd& monomial, double tol = 1e-8);

/// Norm of the entries of m off its dominant permutation pattern; infinity
/// if the dominant entries do not form a permutation.
double off_normalizer_residual(const Eigen::MatrixXcd& m);

/// Dimensions of the fixed spaces of Ad_n tau on t = i a (t) and on a (a).
struct ToralSplit {
  int t = 0;
  int a = 0;
};
ToralSplit toral_split(const MatrixRealForm& rf, const Eigen::MatrixXcd& normalizer, double tol = 1e-8);

struct Representative {
  Eigen::MatrixXcd u;
  Eigen::MatrixXcd normalizer;  // u tau(u)^{-1}
  IntMatrix psi;
  double residual = 0.0;        // off-normalizer residual
  ToralSplit numeric;
  std::vector<int> generators;  // indices into representative_generators()
};

/// Cayley elements exp(pi/4 (E_ij - E_ji)) and exp(i pi/4 (E_ij + E_ji)),
/// then the Weyl lifts exp(pi/2 (E_k,k+1 - E_k+1,k)).
std::vector<Eigen::MatrixXcd> representative_generators(int n);

/// Bounded search over generator words of length <= depth for u with
/// u tau(u)^{-1} in the normalizer of the torus and Weyl image psi. Empty
/// when nothing is found (inconclusive, not a proof of absence).
std::optional<Representative> representative_for(const MatrixRealForm& rf, const IntMatrix& psi, int depth = 4);

}  // namespace symleaf
