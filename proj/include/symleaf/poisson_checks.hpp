#pragma once

#include "symleaf/matrix_real_form.hpp"

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <vector>

namespace symleaf {

/// Coset chart of SU(2)/SO(2): for u = [[a, b], [-conj(b), conj(a)]],
/// z = (-Im a + i Im b) / (Re a + i Re b). Throws ChartSingularity when the
/// denominator has modulus below 1e-12.
std::complex<double> chart_su2(const Eigen::MatrixXcd& u);

/// Cayley element exp(i pi/4 (E_12 + E_21)).
Eigen::MatrixXcd cayley_su2();

/// Chart on the coset space U/K0: z(uK0) = chart_su2(u^{-1} c) with c =
/// cayley_su2(). chart_su2 itself is invariant under left K0 translation.
std::complex<double> coset_chart(const Eigen::MatrixXcd& u);

/// A representative u with coset_chart(u) = z.
Eigen::MatrixXcd coset_chart_inverse(std::complex<double> z);

/// Rows (Re dz, Im dz) of the differential of coset_chart along u Y_k, Y_k
/// running over the i p0 basis of rf.
Eigen::MatrixXd coset_chart_jacobian(const MatrixRealForm& rf, const Eigen::MatrixXcd& u);

/// Coefficient of d/dx ^ d/dy (z = x + i y) of pi_0 transported through coset_chart.
double chart_coefficient(const MatrixRealForm& rf, const Eigen::MatrixXcd& u);

/// Ratio between pi_0 under the normalization used here (Killing form,
/// x ^ y = x (x) y - y (x) x) and the closed form below.
inline constexpr double kExampleScale = 0.125;

/// kExampleScale times the closed form i (1 - |z|^4) d/dz ^ d/dzbar,
/// written as c d/dx ^ d/dy.
double example_coefficient(std::complex<double> z);

using BivectorField = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

/// Max over i < j < k of |sum_cyc sum_l pi^{il} d_l pi^{jk}| at x, with
/// central differences of step h.
double jacobiator(const BivectorField& field, const Eigen::VectorXd& x, double h);

/// pi_0 in the chart x -> u0 exp(sum_k x_k Y_k) around u0K0.
BivectorField exp_chart_field(const MatrixRealForm& rf, const Eigen::MatrixXcd& u0);

double jacobi_check(const MatrixRealForm& rf, const Eigen::MatrixXcd& u0, double h = 1e-4);

/// pi_U(u) as an antisymmetric matrix on the realified ambient space
/// C^{n x n} = R^{2 n^2}, built from 1/4 sum (X u ^ Y u - u X ^ u Y).
Eigen::MatrixXd ambient_pi_U(int n, const Eigen::MatrixXcd& u);

/// ||pi_U(uv) - l_u pi_U(v) - r_v pi_U(u)|| in the ambient space.
double multiplicativity_residual(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

/// Distance between ambient_pi_U and the basis_u coefficients of pi_U_at.
double ambient_consistency_residual(const MatrixRealForm& rf, const Eigen::MatrixXcd& u);

/// max(||pi_U(t)||, ||pi_U(ut) - r_t pi_U(u)||, ||pi_U(tu) - l_t pi_U(u)||) for t in T.
double t_invariance_residual(const MatrixRealForm& rf, const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& t);

/// ||pi_0(uk) - Ad_{k^-1} pi_0(u) Ad_{k^-1}^T|| for k in K0.
double k0_descent_residual(const MatrixRealForm& rf, const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& k);

/// exp of a random element of k0.
Eigen::MatrixXcd random_k0(const MatrixRealForm& rf, std::uint64_t seed);

struct HermitianStructure {
  Eigen::MatrixXcd center;  // unit central element Z of k0
  Eigen::MatrixXcd u0;      // u0 K0 u0^{-1} = U cap P
  Eigen::MatrixXd pi_inv;   // ad_Z on i p0, scaled to eigenvalues +-i
};

/// Throws NotHermitian when k0 has trivial center.
HermitianStructure hermitian_structure(const MatrixRealForm& rf);

/// pi_infinity at uK0 over the i p0 basis.
Eigen::MatrixXd pi_infinity(const MatrixRealForm& rf, const HermitianStructure& hs, const Eigen::MatrixXcd& u);

struct HermitianFit {
  double b = 0.0;
  double residual = 0.0;       // max ||pi_0 - pi_inf - b pi_inv||
  int min_inv_rank = 0;
  std::size_t samples = 0;
};
HermitianFit hermitian_fit(const MatrixRealForm& rf, const std::vector<Eigen::MatrixXcd>& points);

}  // namespace symleaf
