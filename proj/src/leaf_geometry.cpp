#include "symleaf/leaf_geometry.hpp"

#include "symleaf/bivector.hpp"
#include "symleaf/iwasawa.hpp"
#include "symleaf/root_system.hpp"
#include "symleaf/sampling.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <unsupported/Eigen/MatrixFunctions>

namespace symleaf {

namespace {

const cd kI(0.0, 1.0);

Eigen::MatrixXd null_basis(const Eigen::MatrixXd& m, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cutoff = tol * std::max(1.0, s.size() ? s(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cutoff) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

Eigen::MatrixXd range_basis(const Eigen::MatrixXd& m, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double cutoff = tol * std::max(1.0, s.size() ? s(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

double subspace_distance(const Eigen::MatrixXd& q1, const Eigen::MatrixXd& q2) {
  if (q1.cols() != q2.cols()) return 1.0;
  if (q1.cols() == 0) return 0.0;
  const Eigen::MatrixXd diff = q1 * q1.transpose() - q2 * q2.transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(diff);
  return svd.singularValues()(0);
}

Eigen::MatrixXcd coroot(int n, int j) { return elementary(n, j, j) - elementary(n, j + 1, j + 1); }

// Real basis of a + n: coroots, then E_ij and i E_ij for i < j.
std::vector<Eigen::MatrixXcd> solvable_basis(int n) {
  std::vector<Eigen::MatrixXcd> out;
  for (int j = 0; j + 1 < n; ++j) out.push_back(coroot(n, j));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out.push_back(elementary(n, i, j));
      out.push_back(kI * elementary(n, i, j));
    }
  return out;
}

// Columns realify(tau(x) - x) for x in the given basis.
Eigen::MatrixXd tau_defect(const MatrixRealForm& rf, const std::vector<Eigen::MatrixXcd>& basis) {
  Eigen::MatrixXd m(2 * rf.n() * rf.n(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = realify(rf.tau(basis[k]) - basis[k]);
  return m;
}

// Coordinates of a diagonal traceless d in the coroot basis H_j.
Eigen::VectorXd coroot_coords(const Eigen::VectorXd& d) {
  Eigen::VectorXd c(d.size() - 1);
  double running = 0.0;
  for (Eigen::Index j = 0; j + 1 < d.size(); ++j) {
    running += d(j);
    c(j) = running;
  }
  return c;
}

// Matrix in simple-root coordinates of the functional map alpha -> alpha o f
// on the real diagonal of sl(n), or empty if f leaves the diagonal or the
// result is not integral.
std::optional<IntMatrix> root_action(int n, const std::function<Eigen::MatrixXcd(const Eigen::MatrixXcd&)>& f, double tol) {
  const int r = n - 1;
  Eigen::MatrixXd values(r, r);  // values(k, j) = (alpha_k o f)(H_j)
  for (int j = 0; j < r; ++j) {
    const Eigen::MatrixXcd y = f(coroot(n, j));
    Eigen::MatrixXcd off = y;
    off.diagonal().setZero();
    if (off.norm() > tol || y.diagonal().imag().norm() > tol) return std::nullopt;
    for (int k = 0; k < r; ++k) values(k, j) = (y(k, k) - y(k + 1, k + 1)).real();
  }
  const Eigen::MatrixXd cartan = cartan_matrix('A', r).cast<double>();
  // Column k holds the coordinates c with cartan * c = values.row(k)^T.
  const Eigen::MatrixXd coords = cartan.lu().solve(values.transpose());
  IntMatrix out(r, r);
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < r; ++i) {
      const double v = coords(i, k);
      if (std::abs(v - std::round(v)) > 1e-6) return std::nullopt;
      out(i, k) = static_cast<std::int64_t>(std::llround(v));
    }
  return out;
}

std::vector<std::vector<int>> words_of_length(int generators, int length) {
  std::vector<std::vector<int>> out{{}};
  for (int d = 0; d < length; ++d) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out)
      for (int g = 0; g < generators; ++g) {
        auto v = w;
        v.push_back(g);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

RealizationCheck check_realization(const MatrixRealForm& rf, std::uint64_t seed, int samples) {
  RealizationCheck out;
  const int n = rf.n();
  for (int s = 0; s < samples; ++s) {
    Eigen::MatrixXcd x = random_sl(n, derive_seed(seed, static_cast<std::uint64_t>(s)), 1.0);
    x -= (x.trace() / static_cast<double>(n)) * Eigen::MatrixXcd::Identity(n, n);
    out.tau_involution = std::max(out.tau_involution, (rf.tau(rf.tau(x)) - x).norm());
    out.theta_involution = std::max(out.theta_involution, (theta(theta(x)) - x).norm());
    out.commute = std::max(out.commute, (rf.tau(theta(x)) - theta(rf.tau(x))).norm());
  }
  for (int j = 0; j + 1 < n; ++j) {
    for (const Eigen::MatrixXcd& h : {Eigen::MatrixXcd(coroot(n, j)), Eigen::MatrixXcd(kI * coroot(n, j))}) {
      for (const Eigen::MatrixXcd& image : {rf.tau(h), theta(h)}) {
        Eigen::MatrixXcd off = image;
        off.diagonal().setZero();
        out.cartan_stable = std::max(out.cartan_stable, off.norm());
      }
    }
  }
  std::vector<Eigen::MatrixXcd> a_basis, n_basis;
  const auto ab = solvable_basis(n);
  a_basis.assign(ab.begin(), ab.begin() + (n - 1));
  n_basis.assign(ab.begin() + (n - 1), ab.end());
  out.dim_a0 = static_cast<int>(null_basis(tau_defect(rf, a_basis), 1e-10).cols());
  out.dim_n0 = static_cast<int>(null_basis(tau_defect(rf, n_basis), 1e-10).cols());
  return out;
}

AnnihilatorResult annihilator_check(const MatrixRealForm& rf, double tol) {
  const int n = rf.n();
  const auto ab = solvable_basis(n);
  const auto k0 = rf.basis_k0();
  const auto dim = static_cast<Eigen::Index>(ab.size());

  Eigen::MatrixXd pairing(static_cast<Eigen::Index>(k0.size()), dim);
  for (std::size_t k = 0; k < k0.size(); ++k)
    for (Eigen::Index b = 0; b < dim; ++b)
      pairing(static_cast<Eigen::Index>(k), b) = killing(n, ab[static_cast<std::size_t>(b)], k0[k]).imag();
  const Eigen::MatrixXd annihilator = null_basis(pairing, tol);

  // a0 + n0 as the sum of the two separate intersections with g0.
  const std::vector<Eigen::MatrixXcd> a_part(ab.begin(), ab.begin() + (n - 1));
  const std::vector<Eigen::MatrixXcd> n_part(ab.begin() + (n - 1), ab.end());
  const Eigen::MatrixXd a0 = null_basis(tau_defect(rf, a_part), tol);
  const Eigen::MatrixXd n0 = null_basis(tau_defect(rf, n_part), tol);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(dim, a0.cols() + n0.cols());
  sum.topLeftCorner(a0.rows(), a0.cols()) = a0;
  sum.bottomRightCorner(n0.rows(), n0.cols()) = n0;
  const Eigen::MatrixXd iwasawa_part = range_basis(sum, tol);

  AnnihilatorResult out;
  out.annihilator_dim = static_cast<int>(annihilator.cols());
  out.iwasawa_dim = static_cast<int>(iwasawa_part.cols());
  out.distance = subspace_distance(annihilator, iwasawa_part);
  return out;
}

StabilizerDims stabilizer_dims(const MatrixRealForm& rf, const Eigen::MatrixXcd& u, double tol) {
  const int n = rf.n();
  const auto g0 = rf.basis_g0();
  const auto cols = static_cast<Eigen::Index>(g0.size());
  Eigen::MatrixXd compact(2 * n * n, cols);
  Eigen::MatrixXd off_torus(2 * n * n, cols);
  for (Eigen::Index k = 0; k < cols; ++k) {
    Eigen::MatrixXcd part = iwasawa_split(u * g0[static_cast<std::size_t>(k)] * u.adjoint()).compact;
    compact.col(k) = realify(part);
    part.diagonal().setZero();
    off_torus.col(k) = realify(part);
  }
  return {static_cast<int>(cols - numerical_rank(compact, tol).rank),
          static_cast<int>(cols - numerical_rank(off_torus, tol).rank)};
}

TangencyResult leaf_tangency_check(const MatrixRealForm& rf, const Eigen::MatrixXcd& u, double tol) {
  const Eigen::MatrixXd pi = pi_0_at(rf, u).matrix();
  const auto g0 = rf.basis_g0();
  const int k = rf.dim_k0();
  const int p = rf.dim_p0();
  Eigen::MatrixXd orbit(p, static_cast<Eigen::Index>(g0.size()));
  for (std::size_t c = 0; c < g0.size(); ++c) {
    const Eigen::MatrixXcd right = iwasawa_split(u * g0[c] * u.adjoint()).compact;
    orbit.col(static_cast<Eigen::Index>(c)) = rf.basis_u().coords(u.adjoint() * right * u).tail(p);
  }
  (void)k;
  const Eigen::MatrixXd a = range_basis(pi, tol);
  const Eigen::MatrixXd b = range_basis(orbit, tol);
  return {static_cast<int>(a.cols()), static_cast<int>(b.cols()), subspace_distance(a, b)};
}

std::optional<IntMatrix> realization_tau_star(const MatrixRealForm& rf) {
  return root_action(rf.n(), [&](const Eigen::MatrixXcd& h) { return rf.tau(h); }, 1e-10);
}

std::optional<IntMatrix> weyl_matrix_of(const Eigen::MatrixXcd& monomial, double tol) {
  const Eigen::MatrixXcd inv = monomial.inverse();
  return root_action(static_cast<int>(monomial.rows()), [&](const Eigen::MatrixXcd& h) { return inv * h * monomial; }, tol);
}

double off_normalizer_residual(const Eigen::MatrixXcd& m) {
  const auto n = m.rows();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  double off = 0.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index best = 0;
    m.col(c).cwiseAbs().maxCoeff(&best);
    if (used[static_cast<std::size_t>(best)]) return std::numeric_limits<double>::infinity();
    used[static_cast<std::size_t>(best)] = true;
    for (Eigen::Index r = 0; r < n; ++r)
      if (r != best) off += std::norm(m(r, c));
  }
  return std::sqrt(off);
}

ToralSplit toral_split(const MatrixRealForm& rf, const Eigen::MatrixXcd& normalizer, double tol) {
  const int n = rf.n();
  const Eigen::MatrixXcd inv = normalizer.inverse();
  Eigen::MatrixXd on_a(n - 1, n - 1), on_t(n - 1, n - 1);
  for (int j = 0; j + 1 < n; ++j) {
    const Eigen::MatrixXcd h = coroot(n, j);
    const Eigen::MatrixXcd ya = normalizer * rf.tau(h) * inv;
    const Eigen::MatrixXcd yt = normalizer * rf.tau(kI * h) * inv;
    on_a.col(j) = coroot_coords(ya.diagonal().real());
    on_t.col(j) = coroot_coords(yt.diagonal().imag());
  }
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n - 1, n - 1);
  ToralSplit out;
  out.a = (n - 1) - numerical_rank(on_a - id, tol).rank;
  out.t = (n - 1) - numerical_rank(on_t - id, tol).rank;
  return out;
}

std::vector<Eigen::MatrixXcd> representative_generators(int n) {
  const double quarter = std::numbers::pi / 4.0;
  std::vector<Eigen::MatrixXcd> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out.push_back(Eigen::MatrixXcd(quarter * (elementary(n, i, j) - elementary(n, j, i))).exp());
      out.push_back(Eigen::MatrixXcd(quarter * kI * (elementary(n, i, j) + elementary(n, j, i))).exp());
    }
  for (int k = 0; k + 1 < n; ++k)
    out.push_back(Eigen::MatrixXcd(2.0 * quarter * (elementary(n, k, k + 1) - elementary(n, k + 1, k))).exp());
  return out;
}

std::optional<Representative> representative_for(const MatrixRealForm& rf, const IntMatrix& psi, int depth) {
  const int n = rf.n();
  const auto generators = representative_generators(n);
  const int g = static_cast<int>(generators.size());
  for (int len = 0; len <= depth; ++len) {
    for (const auto& word : words_of_length(g, len)) {
      Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
      for (int k : word) u = u * generators[static_cast<std::size_t>(k)];
      const Eigen::MatrixXcd normalizer = u * rf.tau_group(u).inverse();
      const double residual = off_normalizer_residual(normalizer);
      if (!(residual <= 1e-10)) continue;
      const auto w = weyl_matrix_of(normalizer);
      if (!w || *w != psi) continue;
      Representative rep;
      rep.u = u;
      rep.normalizer = normalizer;
      rep.psi = *w;
      rep.residual = residual;
      rep.numeric = toral_split(rf, normalizer);
      rep.generators = word;
      return rep;
    }
  }
  return std::nullopt;
}

}  // namespace symleaf
