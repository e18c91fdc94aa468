// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.
#include "symleaf/bivector.hpp"
#include "symleaf/catalog.hpp"
#include "symleaf/iwasawa.hpp"
#include "symleaf/leaf_atlas.hpp"
#include "symleaf/leaf_geometry.hpp"
#include "symleaf/matrix_real_form.hpp"
#include "symleaf/poisson_checks.hpp"
#include "symleaf/sampling.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

using namespace symleaf;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string failures;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      failures += (failures.empty() ? "" : "; ") + what;
      pass = false;
    }
  }
  std::string text() const { return failures.empty() ? detail.str() : "failed: " + failures + " | " + detail.str(); }
};

RealForm form_of(const std::string& label) { return RealForm::analyze(*find_form(builtin_catalog(), label)); }

const OrbitClass* class_with_word(const AtlasReport& r, const std::string& word) {
  for (const auto& c : r.classes)
    if (c.psi.word_string() == word) return &c;
  return nullptr;
}

int max_sampled_rank(const MatrixRealForm& rf, int points, std::uint64_t stream) {
  int best = 0;
  for (int i = 0; i < points; ++i) {
    const MatrixXcd u = haar_su(rf.n(), derive_seed(stream, static_cast<std::uint64_t>(i)));
    const int r = numerical_rank(pi_0_at(rf, u).matrix(), 1e-8).rank;
    if (r % 2 != 0 || r > rf.dim_p0()) return -1;
    best = std::max(best, r);
  }
  return best;
}

// Chart transport with a finite-difference Jacobian, independent of the
// analytic one used by chart_coefficient.
double fd_chart_coefficient(const MatrixRealForm& rf, const MatrixXcd& u) {
  const auto ip0 = rf.basis_ip0();
  const double h = 1e-5;
  MatrixXd jac(2, static_cast<Eigen::Index>(ip0.size()));
  for (std::size_t k = 0; k < ip0.size(); ++k) {
    const std::complex<double> zp = coset_chart(u * MatrixXcd(h * ip0[k]).exp());
    const std::complex<double> zm = coset_chart(u * MatrixXcd(-h * ip0[k]).exp());
    const std::complex<double> d = (zp - zm) / (2 * h);
    jac(0, static_cast<Eigen::Index>(k)) = d.real();
    jac(1, static_cast<Eigen::Index>(k)) = d.imag();
  }
  return (jac * pi_0_at(rf, u).matrix() * jac.transpose())(0, 1);
}

Outcome criterion1() {
  Outcome o;
  const auto r = atlas(form_of("sl(2,R)"));
  o.require(r.classes.size() == 2, "expected 2 twisted involutions");
  const auto* s1 = class_with_word(r, "s1");
  const auto* e = class_with_word(r, "e");
  o.require(s1 && s1->codim_Y == 0 && s1->a == 0 && s1->t == 1 && s1->leaf_dim == 2 && s1->is_open,
            "class s1 invariants");
  o.require(e && e->codim_Y == 1 && e->a == 1 && e->t == 0 && e->leaf_dim == 0 && e->family_dim == 1,
            "class e invariants");
  o.require(r.has_open_leaves, "open leaves");
  o.detail << "classes s1 (codim 0, a 0, t 1, leaf 2, open), e (codim 1, a 1, t 0, leaf 0, family 1)";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto rf = MatrixRealForm::sl_real(2);
  double worst = 0.0, worst_fd = 0.0;
  int off_rank_bad = 0, on_rank_bad = 0, off_points = 0;
  for (int i = 0; i < 100; ++i) {
    const MatrixXcd u = haar_su(2, derive_seed(2001, static_cast<std::uint64_t>(i)));
    const auto z = coset_chart(u);
    const double want = kExampleScale * -0.5 * (1.0 - std::pow(std::abs(z), 4));
    worst = std::max(worst, std::abs(chart_coefficient(rf, u) - want) / std::abs(want));
    worst_fd = std::max(worst_fd, std::abs(fd_chart_coefficient(rf, u) - want) / std::abs(want));
    if (std::abs(std::abs(z) - 1.0) > 1e-6) {
      ++off_points;
      off_rank_bad += numerical_rank(pi_0_at(rf, u).matrix(), 1e-8).rank != 2;
    }
  }
  for (int i = 0; i < 100; ++i) {
    const auto z = std::polar(1.0, 2.0 * M_PI * i / 100.0 + 0.01);
    const MatrixXcd u = coset_chart_inverse(z);
    on_rank_bad += numerical_rank(pi_0_at(rf, u).matrix(), 1e-8).rank != 0;
  }
  o.require(worst <= 1e-8, "relative error above 1e-8");
  o.require(worst_fd <= 1e-6, "finite-difference transport disagrees");
  o.require(off_rank_bad == 0, "rank != 2 off the equator");
  o.require(on_rank_bad == 0, "rank != 0 on the equator");
  o.detail << "max rel err " << worst << " (fd transport " << worst_fd << "), rank 2 at " << off_points
           << " off-equator points, rank 0 at 100 equator points";
  return o;
}

Outcome criterion3() {
  Outcome o;
  // rank k0 and rank g0 from the label: so(2), so(3), u(2), so(2).
  const std::map<std::string, std::pair<int, int>> ranks{
      {"sl(2,R)", {1, 1}}, {"sl(3,R)", {1, 2}}, {"su(2,1)", {2, 2}}, {"su(1,1)", {1, 1}}};
  const std::map<std::string, bool> expected{
      {"sl(2,R)", true}, {"sl(3,R)", false}, {"su(2,1)", true}, {"su(1,1)", true}};
  for (const auto& [label, want] : expected) {
    const auto form = form_of(label);
    const bool got = open_leaf_test(form);
    const bool oracle = ranks.at(label).first == ranks.at(label).second;
    // Numerical rank of k0: dimension of the centralizer of a generic element.
    const auto rf = MatrixRealForm::from_label(label);
    const auto k0 = rf.basis_k0();
    MatrixXcd x = MatrixXcd::Zero(rf.n(), rf.n());
    for (std::size_t i = 0; i < k0.size(); ++i) x += std::cos(0.7 * static_cast<double>(i) + 0.3) * k0[i];
    MatrixXd comm(2 * rf.n() * rf.n(), static_cast<Eigen::Index>(k0.size()));
    for (std::size_t i = 0; i < k0.size(); ++i)
      comm.col(static_cast<Eigen::Index>(i)) = realify(MatrixXcd(x * k0[i] - k0[i] * x));
    const int numeric_rank_k0 = static_cast<int>(k0.size()) - numerical_rank(comm).rank;
    o.require(got == want, label + " open_leaf_test");
    o.require(oracle == want, label + " rank oracle");
    o.require(numeric_rank_k0 == ranks.at(label).first, label + " numeric rank k0");
    o.require((compact_cartan_defect(form) == 0) == want, label + " defect");
    o.detail << label << "=" << (got ? "true" : "false") << " ";
  }
  return o;
}

Outcome rank_ceiling(const std::string& label, int expected, Outcome o) {
  const auto rf = MatrixRealForm::from_label(label);
  const auto report = atlas(form_of(label));
  const auto min_codim = min_realizable_leaf_codim(report);
  const int max_rank = max_sampled_rank(rf, 200, 4000 + static_cast<std::uint64_t>(rf.n()));
  o.require(max_rank >= 0, "odd or oversized rank");
  o.require(min_codim.has_value() && max_rank == report.form.dim_X - *min_codim, "max rank vs atlas");
  o.require(max_rank == expected, "max rank value");
  o.detail << "max rank " << max_rank << " over 200 points, dim_X " << report.form.dim_X << ", min leaf_codim "
           << min_codim.value_or(-1);
  return o;
}

Outcome criterion4() { return rank_ceiling("sl(3,R)", 4, Outcome{}); }

Outcome criterion5() {
  Outcome o;
  const auto report = atlas(form_of("su(2,1)"));
  const auto& big = report.classes[report.largest_leaf_class];
  o.require(report.has_open_leaves && big.is_open, "open class");
  o.require(big.leaf_dim == 4 && big.family_dim == 0, "open class leaf_dim 4, family_dim 0");
  o.detail << "open class " << big.psi.word_string() << " leaf_dim " << big.leaf_dim << " family_dim "
           << big.family_dim << "; ";
  return rank_ceiling("su(2,1)", 4, std::move(o));
}

Outcome criterion6() {
  Outcome o;
  int entries = 0, classes = 0;
  for (const auto& sd : builtin_catalog()) {
    if (sd.type.rank > 4) continue;
    ++entries;
    const auto form = RealForm::analyze(sd);
    const auto& rs = form.roots();
    const auto& d = form.data();
    const IntMatrix& w0 = d.w0.matrix();
    const IntMatrix& wb = d.w_b.matrix();
    const IntMatrix& tau = d.tau_star;
    o.require(w0 * wb == wb * w0, sd.label + " w0 wb");
    o.require(tau * w0 == w0 * tau, sd.label + " tau w0");
    o.require(tau * wb == wb * tau, sd.label + " tau wb");
    // Lengths by counting positive roots sent negative.
    auto len = [&](const IntMatrix& w) {
      int n = 0;
      for (const auto& beta : rs.positive_roots()) n += (w * beta).maxCoeff() <= 0;
      return n;
    };
    o.require(len(wb * w0) == len(w0) - len(wb), sd.label + " length identity");
    const auto report = atlas(form);
    for (const auto& c : report.classes) {
      ++classes;
      const MatrixXd m = (c.psi.matrix() * tau).cast<double>();
      const MatrixXd id = MatrixXd::Identity(m.rows(), m.cols());
      const int a = static_cast<int>(m.rows() - Eigen::FullPivLU<MatrixXd>(m - id).rank());
      const int t = static_cast<int>(m.rows() - Eigen::FullPivLU<MatrixXd>(m + id).rank());
      o.require(a == c.a && t == c.t, sd.label + " t/a oracle");
      o.require(c.t + c.a == rs.rank(), sd.label + " t + a = rank");
      o.require(c.leaf_codim == c.a + c.codim_Y, sd.label + " leaf_codim");
      o.require(c.codim_Y == len(c.psi.matrix() * wb * w0), sd.label + " codim_Y");
    }
  }
  o.detail << entries << " entries, " << classes << " classes";
  return o;
}

Outcome criterion7() {
  Outcome o;
  double worst = 0.0, worst_action = 0.0;
  bool shape_ok = true;
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 + i % 3;
    const MatrixXcd m = random_sl(n, derive_seed(7001, static_cast<std::uint64_t>(i)));
    const auto f = iwasawa(m);
    worst = std::max(worst, (f.b * f.u1 - m).norm());
    for (int r = 0; r < n; ++r) {
      shape_ok = shape_ok && f.b(r, r).real() > 0.0 && f.b(r, r).imag() == 0.0;
      for (int c = 0; c < r; ++c) shape_ok = shape_ok && f.b(r, c) == std::complex<double>(0.0);
    }
    shape_ok = shape_ok && (f.u1.adjoint() * f.u1 - MatrixXcd::Identity(n, n)).norm() < 1e-12;
  }
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 3;
    const auto s = static_cast<std::uint64_t>(i);
    const MatrixXcd u = haar_su(n, derive_seed(7002, s));
    const MatrixXcd g = random_sl(n, derive_seed(7003, s));
    const MatrixXcd h = random_sl(n, derive_seed(7004, s));
    worst_action = std::max(worst_action, (g_act(g_act(u, g), h) - g_act(u, g * h)).norm());
  }
  o.require(worst <= 1e-12, "roundtrip residual");
  o.require(shape_ok, "factor shape");
  o.require(worst_action <= 1e-10, "action axiom");
  o.detail << "roundtrip " << worst << " over 1000 matrices, action " << worst_action << " over 200 triples";
  return o;
}

Outcome criterion8() {
  Outcome o;
  double j2 = 0.0, j3 = 0.0, mult = 0.0, ann = 0.0;
  const auto sl2 = MatrixRealForm::sl_real(2), sl3 = MatrixRealForm::sl_real(3);
  for (int i = 0; i < 20; ++i) j2 = std::max(j2, jacobi_check(sl2, haar_su(2, derive_seed(8001, i)), 1e-4));
  for (int i = 0; i < 10; ++i) j3 = std::max(j3, jacobi_check(sl3, haar_su(3, derive_seed(8002, i)), 1e-4));
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 3;
    mult = std::max(mult, multiplicativity_residual(haar_su(n, derive_seed(8003, i)), haar_su(n, derive_seed(8004, i))));
  }
  for (const auto& label : MatrixRealForm::shipped_labels()) {
    const auto r = annihilator_check(MatrixRealForm::from_label(label));
    ann = std::max(ann, r.distance);
    o.require(r.annihilator_dim == r.iwasawa_dim, label + " annihilator dims");
  }
  o.require(j2 <= 1e-6, "Jacobi SU(2)/SO(2)");
  o.require(j3 <= 1e-5, "Jacobi SU(3)/SO(3)");
  o.require(mult <= 1e-8, "multiplicativity");
  o.require(ann <= 1e-12, "annihilator");
  o.detail << "jacobi " << j2 << " / " << j3 << ", multiplicativity " << mult << ", annihilator " << ann;
  return o;
}

Outcome criterion9() {
  Outcome o;
  int found = 0, total = 0;
  for (const auto& label : {"sl(2,R)", "sl(3,R)"}) {
    const auto rf = MatrixRealForm::from_label(label);
    for (const auto& c : atlas(form_of(label)).classes) {
      ++total;
      const auto rep = representative_for(rf, c.psi.matrix());
      if (!rep) continue;
      ++found;
      const auto d = stabilizer_dims(rf, rep->u, 1e-8);
      o.require(d.an == c.a + c.codim_Y, std::string(label) + " " + c.psi.word_string() + " AN");
      o.require(d.tan == c.t + c.a + c.codim_Y, std::string(label) + " " + c.psi.word_string() + " TAN");
    }
  }
  o.require(found > 0, "no representatives");
  o.detail << found << " of " << total << " classes have witnesses, all stabilizer dims match";
  return o;
}

Outcome criterion10() {
  Outcome o;
  const auto rf = MatrixRealForm::su(1, 1);
  std::vector<MatrixXcd> a, b;
  for (int i = 0; i < 100; ++i) {
    a.push_back(haar_su(2, derive_seed(10001, i)));
    b.push_back(haar_su(2, derive_seed(10002, i)));
  }
  const auto fa = hermitian_fit(rf, a), fb = hermitian_fit(rf, b);
  o.require(fa.residual <= 1e-8, "fit residual");
  o.require(std::abs(fa.b - fb.b) <= 1e-8, "refit");
  o.require(fa.min_inv_rank == 2, "pi_inv rank");
  o.detail << "b = " << fa.b << " (refit " << fb.b << "), residual " << fa.residual;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"sl(2,R) atlas", 1, criterion1},
      {"SU(2) closed-form example", 5, criterion2},
      {"open-leaf criterion", 10, criterion3},
      {"sl(3,R) rank ceiling", 30, criterion4},
      {"su(2,1) realization", 30, criterion5},
      {"catalog structural invariants", 10, criterion6},
      {"Iwasawa and action properties", 5, criterion7},
      {"Poisson verification", 60, criterion8},
      {"stabilizer dimensions", 10, criterion9},
      {"Hermitian decomposition", 10, criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < criteria[i].limit_s, "time limit");
    failures += o.pass ? 0 : 1;
    std::printf("%s [%zu] %s (%.3f s, limit %.0f s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                criteria[i].limit_s, o.text().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
