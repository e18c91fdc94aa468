#include "symleaf/poisson_checks.hpp"

#include "symleaf/bivector.hpp"
#include "symleaf/errors.hpp"
#include "symleaf/sampling.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

namespace symleaf {

namespace {

const cd kI(0.0, 1.0);

// Realified matrix of the real-linear map f on C^{n x n}.
Eigen::MatrixXd realified_map(int n, const std::function<Eigen::MatrixXcd(const Eigen::MatrixXcd&)>& f) {
  const int d = 2 * n * n;
  Eigen::MatrixXd m(d, d);
  int col = 0;
  // Same ordering as realify: column-major entries, then (Re, Im).
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (cd unit : {cd(1.0, 0.0), kI}) {
        Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
        e(i, j) = unit;
        m.col(col) = realify(f(e));
        ++col;
      }
  return m;
}

std::complex<double> chart_from_entries(cd a, cd b) {
  const cd den(a.real(), b.real());
  if (std::abs(den) < 1e-12) throw ChartSingularity("|Re a + i Re b| < 1e-12");
  return cd(-a.imag(), b.imag()) / den;
}

}  // namespace

std::complex<double> chart_su2(const Eigen::MatrixXcd& u) { return chart_from_entries(u(0, 0), u(0, 1)); }

Eigen::MatrixXcd cayley_su2() {
  Eigen::MatrixXcd s(2, 2);
  s << 0.0, kI, kI, 0.0;
  return Eigen::MatrixXcd(0.25 * std::numbers::pi * s).exp();
}

std::complex<double> coset_chart(const Eigen::MatrixXcd& u) { return chart_su2(u.adjoint() * cayley_su2()); }

Eigen::MatrixXcd coset_chart_inverse(std::complex<double> z) {
  const double s = std::sqrt(1.0 + std::norm(z));
  const cd a = cd(1.0, -z.real()) / s;
  const cd b = cd(0.0, z.imag()) / s;
  Eigen::MatrixXcd v(2, 2);
  v << a, b, -std::conj(b), std::conj(a);
  return cayley_su2() * v.adjoint();
}

Eigen::MatrixXd coset_chart_jacobian(const MatrixRealForm& rf, const Eigen::MatrixXcd& u) {
  const Eigen::MatrixXcd v = u.adjoint() * cayley_su2();
  const cd a = v(0, 0), b = v(0, 1);
  const cd num(-a.imag(), b.imag());
  const cd den(a.real(), b.real());
  if (std::abs(den) < 1e-12) throw ChartSingularity("|Re a + i Re b| < 1e-12");
  const auto ip0 = rf.basis_ip0();
  Eigen::MatrixXd jac(2, static_cast<Eigen::Index>(ip0.size()));
  for (std::size_t k = 0; k < ip0.size(); ++k) {
    // u -> u exp(sY) moves v = u^{-1} c by -Y v.
    const Eigen::MatrixXcd dv = -ip0[k] * v;
    const cd da = dv(0, 0), db = dv(0, 1);
    const cd dnum(-da.imag(), db.imag());
    const cd dden(da.real(), db.real());
    const cd dz = (dnum * den - num * dden) / (den * den);
    jac(0, static_cast<Eigen::Index>(k)) = dz.real();
    jac(1, static_cast<Eigen::Index>(k)) = dz.imag();
  }
  return jac;
}

double chart_coefficient(const MatrixRealForm& rf, const Eigen::MatrixXcd& u) {
  const Eigen::MatrixXd jac = coset_chart_jacobian(rf, u);
  const Eigen::MatrixXd transported = jac * pi_0_at(rf, u).matrix() * jac.transpose();
  return transported(0, 1);
}

double example_coefficient(std::complex<double> z) {
  // d/dz ^ d/dzbar = (i/2) d/dx ^ d/dy.
  const double r2 = std::norm(z);
  return -0.5 * kExampleScale * (1.0 - r2 * r2);
}

double jacobiator(const BivectorField& field, const Eigen::VectorXd& x, double h) {
  const auto d = x.size();
  const Eigen::MatrixXd pi = field(x);
  std::vector<Eigen::MatrixXd> deriv;
  for (Eigen::Index l = 0; l < d; ++l) {
    Eigen::VectorXd xp = x, xm = x;
    xp(l) += h;
    xm(l) -= h;
    deriv.push_back((field(xp) - field(xm)) / (2.0 * h));
  }
  auto term = [&](Eigen::Index i, Eigen::Index j, Eigen::Index k) {
    double s = 0.0;
    for (Eigen::Index l = 0; l < d; ++l) s += pi(i, l) * deriv[static_cast<std::size_t>(l)](j, k);
    return s;
  };
  double worst = 0.0;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j)
      for (Eigen::Index k = j + 1; k < d; ++k)
        worst = std::max(worst, std::abs(term(i, j, k) + term(j, k, i) + term(k, i, j)));
  return worst;
}

BivectorField exp_chart_field(const MatrixRealForm& rf, const Eigen::MatrixXcd& u0) {
  const auto ip0 = rf.basis_ip0();
  const int n = rf.n();
  const int p = rf.dim_p0();
  return [&rf, ip0, n, p, u0](const Eigen::VectorXd& x) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < p; ++k) a += x(k) * ip0[static_cast<std::size_t>(k)];
    const Eigen::MatrixXcd ea = a.exp();
    const Eigen::MatrixXcd phi = u0 * ea;
    // Columns: i p0 coordinates of phi^{-1} d_k phi, from the block exponential.
    Eigen::MatrixXd tangent(p, p);
    for (int k = 0; k < p; ++k) {
      Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
      block.topLeftCorner(n, n) = a;
      block.bottomRightCorner(n, n) = a;
      block.topRightCorner(n, n) = ip0[static_cast<std::size_t>(k)];
      const Eigen::MatrixXcd dexp = block.exp().topRightCorner(n, n);
      tangent.col(k) = rf.basis_u().coords(ea.adjoint() * dexp).tail(p);
    }
    const Eigen::MatrixXd inv = tangent.inverse();
    return Eigen::MatrixXd(inv * pi_0_at(rf, phi).matrix() * inv.transpose());
  };
}

double jacobi_check(const MatrixRealForm& rf, const Eigen::MatrixXcd& u0, double h) {
  return jacobiator(exp_chart_field(rf, u0), Eigen::VectorXd::Zero(rf.dim_p0()), h);
}

Eigen::MatrixXd ambient_pi_U(int n, const Eigen::MatrixXcd& u) {
  const int d = 2 * n * n;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d, d);
  for (const auto& rv : root_vectors(n)) {
    out += 0.25 * wedge(realify(rv.x * u), realify(rv.y * u));
    out -= 0.25 * wedge(realify(u * rv.x), realify(u * rv.y));
  }
  return out;
}

double multiplicativity_residual(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  const int n = static_cast<int>(u.rows());
  const Eigen::MatrixXd left = realified_map(n, [&](const Eigen::MatrixXcd& m) { return Eigen::MatrixXcd(u * m); });
  const Eigen::MatrixXd right = realified_map(n, [&](const Eigen::MatrixXcd& m) { return Eigen::MatrixXcd(m * v); });
  const Eigen::MatrixXd expected =
      left * ambient_pi_U(n, v) * left.transpose() + right * ambient_pi_U(n, u) * right.transpose();
  return (ambient_pi_U(n, u * v) - expected).norm();
}

double ambient_consistency_residual(const MatrixRealForm& rf, const Eigen::MatrixXcd& u) {
  const Eigen::MatrixXd coeff = pi_U_at(rf, u).matrix();
  const auto& basis = rf.basis_u();
  Eigen::MatrixXd frame(2 * rf.n() * rf.n(), basis.dim());
  for (int a = 0; a < basis.dim(); ++a) frame.col(a) = realify(basis[a] * u);
  return (frame * coeff * frame.transpose() - ambient_pi_U(rf.n(), u)).norm();
}

double t_invariance_residual(const MatrixRealForm& rf, const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& t) {
  const auto& basis = rf.basis_u();
  const Eigen::MatrixXd pu = pi_U_at(rf, u).matrix();
  const Eigen::MatrixXd ad_t = basis.adjoint(t);
  // Right-trivialized: pi(ut) = pi(u) + Ad_u pi(t) Ad_u^T, pi(tu) = Ad_t pi(u) Ad_t^T + pi(t).
  const double at_t = pi_U_at(rf, t).matrix().norm();
  const double right = (pi_U_at(rf, u * t).matrix() - pu).norm();
  const double left = (pi_U_at(rf, t * u).matrix() - ad_t * pu * ad_t.transpose()).norm();
  return std::max({at_t, right, left});
}

double k0_descent_residual(const MatrixRealForm& rf, const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& k) {
  const int p = rf.dim_p0();
  const Eigen::MatrixXd ad = rf.basis_u().adjoint(k.adjoint()).bottomRightCorner(p, p);
  return (pi_0_at(rf, u * k).matrix() - ad * pi_0_at(rf, u).matrix() * ad.transpose()).norm();
}

Eigen::MatrixXcd random_k0(const MatrixRealForm& rf, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(rf.n(), rf.n());
  for (const auto& k : rf.basis_k0()) x += gauss(rng) * k;
  return x.exp();
}

HermitianStructure hermitian_structure(const MatrixRealForm& rf) {
  const auto k0 = rf.basis_k0();
  const int n = rf.n();
  const auto dim = static_cast<Eigen::Index>(k0.size());
  // Center of k0: nullspace of Z -> ([Z, K_j])_j.
  Eigen::MatrixXd brackets(2 * n * n * dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c)
    for (Eigen::Index j = 0; j < dim; ++j) {
      const auto& zc = k0[static_cast<std::size_t>(c)];
      const auto& kj = k0[static_cast<std::size_t>(j)];
      brackets.block(j * 2 * n * n, c, 2 * n * n, 1) = realify(zc * kj - kj * zc);
    }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(brackets, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cutoff = 1e-10 * std::max(1.0, s.size() ? s(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cutoff) ++rank;
  if (dim == 0 || rank == dim) throw NotHermitian(rf.label());

  Eigen::VectorXd c = svd.matrixV().col(dim - 1);
  Eigen::Index lead = 0;
  c.cwiseAbs().maxCoeff(&lead);
  if (c(lead) < 0) c = -c;
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index k = 0; k < dim; ++k) z += c(k) * k0[static_cast<std::size_t>(k)];

  HermitianStructure hs;
  hs.center = z;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(Eigen::MatrixXcd(kI * z));
  Eigen::MatrixXcd v = eig.eigenvectors();
  v.col(0) /= v.determinant();  // det 1
  hs.u0 = v.adjoint();

  const auto ip0 = rf.basis_ip0();
  const int p = rf.dim_p0();
  Eigen::MatrixXd ad(p, p);
  for (int k = 0; k < p; ++k) {
    const auto& y = ip0[static_cast<std::size_t>(k)];
    ad.col(k) = rf.basis_u().coords(z * y - y * z).tail(p);
  }
  Eigen::EigenSolver<Eigen::MatrixXd> spectrum(ad);
  const double scale = spectrum.eigenvalues().cwiseAbs().maxCoeff();
  hs.pi_inv = ad / scale;
  return hs;
}

Eigen::MatrixXd pi_infinity(const MatrixRealForm& rf, const HermitianStructure& hs, const Eigen::MatrixXcd& u) {
  const auto& basis = rf.basis_u();
  const auto ip0 = rf.basis_ip0();
  const int p = rf.dim_p0();
  const Eigen::MatrixXcd w = u * hs.u0.adjoint();
  Eigen::MatrixXd frame(basis.dim(), p);
  for (int k = 0; k < p; ++k) frame.col(k) = basis.coords(hs.u0 * ip0[static_cast<std::size_t>(k)] * hs.u0.adjoint());
  const Eigen::MatrixXd ad_inv = basis.adjoint(w.adjoint());
  const Eigen::MatrixXd left = ad_inv * pi_U_at(rf, w).matrix() * ad_inv.transpose();
  return frame.transpose() * left * frame;
}

HermitianFit hermitian_fit(const MatrixRealForm& rf, const std::vector<Eigen::MatrixXcd>& points) {
  const HermitianStructure hs = hermitian_structure(rf);
  std::vector<Eigen::MatrixXd> diffs;
  double num = 0.0, den = 0.0;
  HermitianFit fit;
  fit.min_inv_rank = numerical_rank(hs.pi_inv).rank;
  for (const auto& u : points) {
    const Eigen::MatrixXd d = pi_0_at(rf, u).matrix() - pi_infinity(rf, hs, u);
    num += (d.array() * hs.pi_inv.array()).sum();
    den += hs.pi_inv.squaredNorm();
    diffs.push_back(d);
  }
  fit.samples = points.size();
  fit.b = den > 0 ? num / den : 0.0;
  for (const auto& d : diffs) fit.residual = std::max(fit.residual, (d - fit.b * hs.pi_inv).norm());
  return fit;
}

}  // namespace symleaf
