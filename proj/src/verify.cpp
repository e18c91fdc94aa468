#include "symleaf/verify.hpp"

#include "symleaf/bivector.hpp"
#include "symleaf/errors.hpp"
#include "symleaf/iwasawa.hpp"
#include "symleaf/leaf_geometry.hpp"
#include "symleaf/poisson_checks.hpp"
#include "symleaf/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symleaf {

Tolerances::Tolerances()
    : values_{
          {"action", 1e-10},         {"annihilator", 1e-12},   {"example", 1e-8},  {"hermitian", 1e-8},
          {"invariance", 1e-10},     {"iwasawa", 1e-12},       {"jacobi_large", 1e-5}, {"jacobi_small", 1e-6},
          {"jacobi_step", 1e-4},     {"multiplicativity", 1e-8}, {"rank", 1e-8},   {"realization", 1e-12},
          {"stabilizer", 1e-8},      {"tangency", 1e-8},
      } {}

double Tolerances::operator[](const std::string& name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) throw std::invalid_argument("unknown tolerance '" + name + "'");
  return it->second;
}

void Tolerances::set(const std::string& name, double value) {
  const auto it = values_.find(name);
  if (it == values_.end()) throw std::invalid_argument("unknown tolerance '" + name + "'");
  if (!(value > 0.0)) throw std::invalid_argument("tolerance '" + name + "' must be positive");
  it->second = value;
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

namespace {

class Battery {
 public:
  explicit Battery(VerifyReport& report) : report_(report) {}

  void residual(const std::string& name, double value, double tol, std::string detail = {}) {
    report_.checks.push_back({name, value, tol, value <= tol, std::move(detail)});
  }

  void exact(const std::string& name, bool ok, std::string detail = {}) {
    report_.checks.push_back({name, ok ? 0.0 : 1.0, 0.0, ok, std::move(detail)});
  }

 private:
  VerifyReport& report_;
};

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return derive_seed(derive_seed(seed, stream), index);
}

}  // namespace

VerifyReport run_verify(const MatrixRealForm& rf, const RealForm& form, const VerifyOptions& opts) {
  const Tolerances& tol = opts.tol;
  const int n = rf.n();
  const auto samples = static_cast<std::uint64_t>(std::max(1, opts.samples));

  VerifyReport report;
  report.form = rf.label();
  report.n = n;
  report.samples = static_cast<int>(samples);
  report.seed = opts.seed;
  report.tolerances = tol.values();
  Battery battery(report);

  auto point = [&](std::uint64_t stream, std::uint64_t i) { return haar_su(n, sub_seed(opts.seed, stream, i)); };

  // Realization structure.
  const RealizationCheck rc = check_realization(rf, sub_seed(opts.seed, 1, 0));
  battery.residual("realization_involutions", rc.max_residual(), tol["realization"]);
  battery.exact("iwasawa_borel", rc.dim_a0 + rc.dim_n0 == rf.dim_p0(),
                "dim a0 + dim n0 = " + std::to_string(rc.dim_a0 + rc.dim_n0) + ", dim p0 = " + std::to_string(rf.dim_p0()));
  const auto ts = realization_tau_star(rf);
  battery.exact("tau_star_matches_diagram", ts && *ts == form.data().tau_star);
  battery.exact("dimensions_match_atlas",
                rf.dim_k0() == form.data().dim_k0 && rf.dim_p0() == form.data().dim_X,
                "dim k0 " + std::to_string(rf.dim_k0()) + ", dim X " + std::to_string(rf.dim_p0()));

  // Bivector identities on U.
  battery.residual("pi_U_identity", pi_U_at(rf, Eigen::MatrixXcd::Identity(n, n)).matrix().norm(), tol["invariance"]);
  double t_inv = 0.0, mult = 0.0, ambient = 0.0, descent = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Eigen::MatrixXcd u = point(2, i);
    t_inv = std::max(t_inv, t_invariance_residual(rf, u, random_torus(n, sub_seed(opts.seed, 3, i))));
    mult = std::max(mult, multiplicativity_residual(u, point(4, i)));
    ambient = std::max(ambient, ambient_consistency_residual(rf, u));
    descent = std::max(descent, k0_descent_residual(rf, u, random_k0(rf, sub_seed(opts.seed, 5, i))));
  }
  battery.residual("t_invariance", t_inv, tol["invariance"]);
  battery.residual("multiplicativity", mult, tol["multiplicativity"]);
  battery.residual("ambient_consistency", ambient, tol["invariance"]);
  battery.residual("k0_descent", descent, tol["invariance"]);

  // Iwasawa factorization and the right action.
  double roundtrip = 0.0, action = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Eigen::MatrixXcd m = random_sl(n, sub_seed(opts.seed, 6, i));
    const IwasawaFactors f = iwasawa(m);
    roundtrip = std::max(roundtrip, (f.b * f.u1 - m).norm());
    const Eigen::MatrixXcd u = point(7, i);
    const Eigen::MatrixXcd g = random_sl(n, sub_seed(opts.seed, 8, i));
    const Eigen::MatrixXcd h = random_sl(n, sub_seed(opts.seed, 9, i));
    action = std::max(action, (g_act(g_act(u, g), h) - g_act(u, g * h)).norm());
  }
  battery.residual("iwasawa_roundtrip", roundtrip, tol["iwasawa"]);
  battery.residual("action_axiom", action, tol["action"]);

  // Annihilator identity.
  const AnnihilatorResult ann = annihilator_check(rf);
  battery.residual("annihilator", ann.distance, tol["annihilator"],
                   "dims " + std::to_string(ann.annihilator_dim) + " / " + std::to_string(ann.iwasawa_dim));

  // Jacobi identity in exponential charts.
  const bool small = n == 2;
  const std::uint64_t jacobi_points = std::min<std::uint64_t>(samples, small ? 20 : 10);
  double jac = 0.0;
  for (std::uint64_t i = 0; i < jacobi_points; ++i) jac = std::max(jac, jacobi_check(rf, point(10, i), tol["jacobi_step"]));
  battery.residual("jacobi", jac, small ? tol["jacobi_small"] : tol["jacobi_large"],
                   std::to_string(jacobi_points) + " points");

  // Rank sampling against the atlas.
  const AtlasReport atlas_report = atlas(form);
  RankSummary& ranks = report.ranks;
  ranks.samples = static_cast<int>(std::max<std::uint64_t>(samples, 200));
  ranks.dim_X = form.data().dim_X;
  ranks.expected_max_rank = ranks.dim_X - min_realizable_leaf_codim(atlas_report).value_or(ranks.dim_X);
  bool ranks_even = true;
  for (int i = 0; i < ranks.samples; ++i) {
    const RankInfo info = numerical_rank(pi_0_at(rf, point(11, static_cast<std::uint64_t>(i))).matrix(), tol["rank"]);
    ranks.max_rank = std::max(ranks.max_rank, info.rank);
    ranks.near_threshold += info.near_threshold ? 1 : 0;
    ++ranks.histogram[info.rank];
    ranks_even = ranks_even && info.rank % 2 == 0 && info.rank <= ranks.dim_X;
  }
  battery.exact("ranks_even_and_bounded", ranks_even);
  battery.exact("max_rank_matches_atlas", ranks.max_rank == ranks.expected_max_rank,
                "max sampled rank " + std::to_string(ranks.max_rank) + ", expected " +
                    std::to_string(ranks.expected_max_rank));

  // Closed-form example on SU(2)/SO(2).
  if (rf.kind() == MatrixRealForm::Kind::SplitSl && n == 2) {
    double rel = 0.0;
    bool off_equator = true;
    for (std::uint64_t i = 0; i < samples; ++i) {
      const Eigen::MatrixXcd u = point(12, i);
      const auto z = coset_chart(u);
      const double expected = example_coefficient(z);
      rel = std::max(rel, std::abs(chart_coefficient(rf, u) - expected) / std::abs(expected));
      if (std::abs(std::abs(z) - 1.0) > 1e-6)
        off_equator = off_equator && numerical_rank(pi_0_at(rf, u).matrix(), tol["rank"]).rank == 2;
    }
    battery.residual("example_formula", rel, tol["example"], "relative error against the closed form");
    bool equator = true;
    for (std::uint64_t i = 0; i < samples; ++i) {
      const double angle = 2.0 * 3.14159265358979323846 * static_cast<double>(i) / static_cast<double>(samples);
      const Eigen::MatrixXcd u = coset_chart_inverse(std::polar(1.0, angle));
      equator = equator && numerical_rank(pi_0_at(rf, u).matrix(), tol["rank"]).rank == 0;
    }
    battery.exact("example_rank_off_equator", off_equator);
    battery.exact("example_rank_on_equator", equator);
  }

  // Classes: witnesses, stabilizers, tangency.
  int stabilizer_mismatch = 0, toral_mismatch = 0, tangency_mismatch = 0;
  double tangency = 0.0;
  for (const OrbitClass& c : atlas_report.classes) {
    ClassWitness w;
    w.psi_word = c.psi.word_string();
    w.expected_an = c.a + c.codim_Y;
    w.expected_tan = c.t + c.a + c.codim_Y;
    const auto rep = representative_for(rf, c.psi.matrix(), opts.search_depth);
    if (rep) {
      w.found = true;
      const StabilizerDims s = stabilizer_dims(rf, rep->u, tol["stabilizer"]);
      w.an = s.an;
      w.tan = s.tan;
      w.numeric_t = rep->numeric.t;
      w.numeric_a = rep->numeric.a;
      const TangencyResult tg = leaf_tangency_check(rf, rep->u, tol["rank"]);
      w.bivector_rank = tg.bivector_rank;
      w.orbit_rank = tg.orbit_rank;
      w.tangency = tg.residual;
      stabilizer_mismatch += (w.an != w.expected_an || w.tan != w.expected_tan) ? 1 : 0;
      toral_mismatch += (w.numeric_t != c.t || w.numeric_a != c.a) ? 1 : 0;
      tangency_mismatch += (tg.bivector_rank != c.leaf_dim || tg.orbit_rank != c.leaf_dim) ? 1 : 0;
      tangency = std::max(tangency, tg.residual);
    }
    report.witnesses.push_back(w);
  }
  battery.exact("stabilizer_dims", stabilizer_mismatch == 0, std::to_string(stabilizer_mismatch) + " mismatches");
  battery.exact("toral_split", toral_mismatch == 0, std::to_string(toral_mismatch) + " mismatches");
  battery.exact("leaf_dim_at_witnesses", tangency_mismatch == 0, std::to_string(tangency_mismatch) + " mismatches");
  battery.residual("leaf_tangency", tangency, tol["tangency"]);

  // Hermitian decomposition when k0 has a center.
  try {
    std::vector<Eigen::MatrixXcd> first, second;
    for (std::uint64_t i = 0; i < samples; ++i) {
      first.push_back(point(13, i));
      second.push_back(point(14, i));
    }
    const HermitianFit a = hermitian_fit(rf, first);
    const HermitianFit b = hermitian_fit(rf, second);
    report.hermitian = HermitianSummary{a.b, b.b, std::max(a.residual, b.residual)};
    battery.residual("hermitian_fit", std::max(a.residual, b.residual), tol["hermitian"]);
    battery.residual("hermitian_refit", std::abs(a.b - b.b), tol["hermitian"]);
    battery.exact("hermitian_pi_inv_nondegenerate", a.min_inv_rank == rf.dim_p0());
  } catch (const NotHermitian&) {
  }

  return report;
}

}  // namespace symleaf
