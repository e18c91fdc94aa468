#include "symleaf/report.hpp"

#include "symleaf/verify.hpp"
#include "symleaf/version.hpp"

#include <sstream>

namespace symleaf {

using nlohmann::ordered_json;

namespace {

ordered_json header(const ReportContext& ctx) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["seed"] = ctx.seed;
  j["catalog_hash"] = ctx.catalog_hash;
  return j;
}

ordered_json class_json(const OrbitClass& c) {
  ordered_json j;
  j["psi_word"] = c.psi.word_string();
  j["psi_matrix"] = int_matrix_json(c.psi.matrix());
  j["codim_Y"] = c.codim_Y;
  j["a"] = c.a;
  j["t"] = c.t;
  j["orbit_dim"] = c.orbit_dim;
  j["leaf_dim"] = c.leaf_dim;
  j["leaf_codim"] = c.leaf_codim;
  j["family_dim"] = c.family_dim;
  j["is_open"] = c.is_open;
  j["is_closed_class"] = c.is_closed_class;
  j["parity_ok"] = c.parity_ok;
  j["bounds_ok"] = c.bounds_ok;
  return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

ordered_json int_matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(row);
  }
  return rows;
}

ordered_json to_json(const AtlasReport& report, const ReportContext& ctx) {
  ordered_json j = header(ctx);
  const auto& d = report.diagram;
  const auto& f = report.form;

  ordered_json form;
  form["label"] = d.label;
  form["type"] = d.type.name();
  form["rank"] = report.rank;
  form["black"] = ordered_json(std::vector<int>(d.black.begin(), d.black.end()));
  ordered_json arrows = ordered_json::array();
  for (const auto& [x, y] : d.arrows) arrows.push_back({x, y});
  form["arrows"] = arrows;
  form["num_positive_roots"] = report.num_positive_roots;
  form["tau_star"] = int_matrix_json(f.tau_star);
  form["sigma"] = f.sigma;
  form["w0"] = f.w0.word_string();
  form["w_b"] = f.w_b.word_string();
  form["real_rank"] = f.real_rank;
  form["dim_g"] = f.dim_g;
  form["dim_k0"] = f.dim_k0;
  form["dim_p0"] = f.dim_p0;
  form["dim_X"] = f.dim_X;
  ordered_json roots = ordered_json::array();
  for (const auto& r : f.restricted_roots) {
    ordered_json rj;
    rj["coordinates"] = r.coordinates();
    rj["multiplicity"] = r.multiplicity;
    roots.push_back(rj);
  }
  form["restricted_roots"] = roots;
  j["form"] = form;

  ordered_json classes = ordered_json::array();
  for (const auto& c : report.classes) classes.push_back(class_json(c));
  j["classes"] = classes;
  j["flags"] = {{"has_open_leaves", report.has_open_leaves}};
  j["largest_leaf_class"] =
      report.classes.empty() ? ordered_json(nullptr) : ordered_json(report.classes[report.largest_leaf_class].psi.word_string());
  j["notes"] = report.notes;
  return j;
}

std::string to_markdown(const AtlasReport& report, const ReportContext& ctx) {
  const auto& f = report.form;
  std::ostringstream os;
  os << "# Leaf atlas: " << report.diagram.label << "\n\n";
  os << "- type: " << report.diagram.type.name() << "\n";
  os << "- real rank: " << f.real_rank << "\n";
  os << "- dim g0 = " << f.dim_g << ", dim k0 = " << f.dim_k0 << ", dim X = " << f.dim_X << "\n";
  os << "- w0 = " << f.w0.word_string() << ", w_b = " << f.w_b.word_string() << "\n";
  os << "- open leaves: " << yes_no(report.has_open_leaves) << "\n";
  if (!report.classes.empty())
    os << "- largest leaves: psi = " << report.classes[report.largest_leaf_class].psi.word_string() << "\n";
  os << "- seed: " << ctx.seed << ", catalog: " << ctx.catalog_hash << "\n\n";
  os << "| psi | codim_Y | a | t | leaf_dim | leaf_codim | family_dim | open | closed | parity | bounds |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& c : report.classes) {
    os << "| " << c.psi.word_string() << " | " << c.codim_Y << " | " << c.a << " | " << c.t << " | " << c.leaf_dim
       << " | " << c.leaf_codim << " | " << c.family_dim << " | " << yes_no(c.is_open) << " | "
       << yes_no(c.is_closed_class) << " | " << (c.parity_ok ? "ok" : "FAIL") << " | "
       << (c.bounds_ok ? "ok" : "FAIL") << " |\n";
  }
  os << "\n## Notes\n\n";
  for (const auto& n : report.notes) os << "- " << n << "\n";
  return os.str();
}

ordered_json to_json(const VerifyReport& report, const ReportContext& ctx) {
  ordered_json j = header(ctx);
  j["form"] = report.form;
  j["n"] = report.n;
  j["samples"] = report.samples;
  j["ok"] = report.ok();
  j["tolerances"] = report.tolerances;

  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["value"] = c.value;
    cj["tolerance"] = c.tolerance;
    cj["passed"] = c.passed;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;

  const auto& r = report.ranks;
  ordered_json hist = ordered_json::object();
  for (const auto& [rank, count] : r.histogram) hist[std::to_string(rank)] = count;
  j["ranks"] = {{"samples", r.samples},       {"max_rank", r.max_rank},
                {"expected_max_rank", r.expected_max_rank}, {"dim_X", r.dim_X},
                {"near_threshold", r.near_threshold}, {"histogram", hist}};

  ordered_json witnesses = ordered_json::array();
  for (const auto& w : report.witnesses) {
    ordered_json wj;
    wj["psi_word"] = w.psi_word;
    wj["status"] = w.found ? "found" : "inconclusive";
    wj["expected_an_stabilizer"] = w.expected_an;
    wj["expected_tan_stabilizer"] = w.expected_tan;
    if (w.found) {
      wj["an_stabilizer"] = w.an;
      wj["tan_stabilizer"] = w.tan;
      wj["numeric_t"] = w.numeric_t;
      wj["numeric_a"] = w.numeric_a;
      wj["bivector_rank"] = w.bivector_rank;
      wj["orbit_rank"] = w.orbit_rank;
      wj["tangency_residual"] = w.tangency;
    }
    witnesses.push_back(wj);
  }
  j["witnesses"] = witnesses;
  if (report.hermitian) {
    j["hermitian"] = {{"b", report.hermitian->b},
                      {"b_refit", report.hermitian->b_refit},
                      {"residual", report.hermitian->residual},
                      {"normalization", "pi_inv = ad_Z on i p0 scaled to eigenvalues +-i"}};
  }
  return j;
}

std::string to_markdown(const VerifyReport& report, const ReportContext& ctx) {
  std::ostringstream os;
  os << "# Verification: " << report.form << "\n\n";
  os << "- result: " << (report.ok() ? "PASS" : "FAIL") << "\n";
  os << "- samples: " << report.samples << ", seed: " << ctx.seed << "\n";
  os << "- max sampled rank " << report.ranks.max_rank << " (expected " << report.ranks.expected_max_rank
     << ", dim X " << report.ranks.dim_X << ", near threshold " << report.ranks.near_threshold << ")\n";
  if (report.hermitian) os << "- hermitian fit: b = " << report.hermitian->b << "\n";
  os << "\n| check | value | tolerance | result | detail |\n|---|---|---|---|---|\n";
  for (const auto& c : report.checks)
    os << "| " << c.name << " | " << format_double(c.value) << " | " << format_double(c.tolerance) << " | "
       << (c.passed ? "pass" : "FAIL") << " | " << c.detail << " |\n";
  os << "\n## Class witnesses\n\n| psi | status | AN (expected) | TAN (expected) | leaf rank |\n|---|---|---|---|---|\n";
  for (const auto& w : report.witnesses) {
    os << "| " << w.psi_word << " | " << (w.found ? "found" : "inconclusive") << " | ";
    if (w.found)
      os << w.an << " (" << w.expected_an << ") | " << w.tan << " (" << w.expected_tan << ") | " << w.bivector_rank
         << " |\n";
    else
      os << "- (" << w.expected_an << ") | - (" << w.expected_tan << ") | - |\n";
  }
  return os.str();
}

}  // namespace symleaf
