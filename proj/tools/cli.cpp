#include "cli.hpp"

#include "symleaf/catalog.hpp"
#include "symleaf/errors.hpp"
#include "symleaf/leaf_atlas.hpp"
#include "symleaf/report.hpp"
#include "symleaf/verify.hpp"
#include "symleaf/version.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace leafatlas {

namespace {

using namespace symleaf;

struct RunConfig {
  std::string form;
  std::string type;
  int rank = 0;
  std::string black = "{}";
  std::string arrows = "{}";
  std::string format = "json";
  std::vector<std::string> tol;
  int samples = 100;
  std::uint64_t seed = 42;
  std::size_t weyl_cap = kDefaultWeylCap;
  std::string catalog;
  std::string output;
  int depth = 4;
  bool dump = false;
};

struct Failure {
  int code;
  std::string message;
};

struct LoadedCatalog {
  std::vector<SatakeDiagram> diagrams;
  std::string hash;
  std::string source;
};

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot read catalog file '" + path + "'"};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

LoadedCatalog load(const RunConfig& cfg) {
  std::string path = cfg.catalog;
  if (path.empty()) {
    if (const char* env = std::getenv("LEAFATLAS_CATALOG"); env && *env) path = env;
  }
  LoadedCatalog out;
  const std::string text = path.empty() ? builtin_catalog_text() : read_file(path);
  out.source = path.empty() ? "builtin" : path;
  try {
    out.diagrams = load_catalog(text);
  } catch (const CatalogParseError& e) {
    throw Failure{kDomain, out.source + ": " + e.what()};
  }
  out.hash = "fnv1a64:" + hex64(fnv1a64(text));
  return out;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  const std::filesystem::path target(cfg.output);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Failure{kUsage, "cannot write '" + tmp.string() + "'"};
    f << text;
    if (!f) throw Failure{kUsage, "write failed for '" + tmp.string() + "'"};
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw Failure{kUsage, "cannot move output into place: " + ec.message()};
}

std::string available_labels(const std::vector<SatakeDiagram>& diagrams) {
  std::string s;
  for (const auto& d : diagrams) s += (s.empty() ? "" : ", ") + d.label;
  return s;
}

SatakeDiagram resolve_form(const RunConfig& cfg, const LoadedCatalog& cat) {
  if (!cfg.form.empty() && !cfg.type.empty()) throw Failure{kUsage, "--form and --type are mutually exclusive"};
  if (!cfg.form.empty()) {
    auto sd = find_form(cat.diagrams, cfg.form);
    if (!sd) throw Failure{kUsage, "unknown form '" + cfg.form + "'; available: " + available_labels(cat.diagrams)};
    return *sd;
  }
  if (cfg.type.empty()) throw Failure{kUsage, "give --form or --type/--rank"};
  SatakeDiagram sd;
  try {
    std::string spec = cfg.type;
    if (cfg.rank > 0 && (spec.size() == 1)) spec += std::to_string(cfg.rank);
    sd.type = parse_cartan_type(spec);
    if (cfg.rank > 0 && sd.type.rank != cfg.rank) throw Failure{kUsage, "--rank disagrees with --type"};
    sd.black = parse_node_set(cfg.black);
    sd.arrows = parse_arrows(cfg.arrows);
  } catch (const Error& e) {
    throw Failure{kUsage, e.what()};
  } catch (const std::invalid_argument& e) {
    throw Failure{kUsage, e.what()};
  }
  sd.label = "inline " + sd.type.name() + " black=" + cfg.black + " arrows=" + cfg.arrows;
  return sd;
}

void check_format(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "md") throw Failure{kUsage, "--format must be json or md"};
}

int cmd_atlas(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg);
  const LoadedCatalog cat = load(cfg);
  const SatakeDiagram sd = resolve_form(cfg, cat);
  const ValidationReport validation = validate(sd);
  if (!validation.ok()) {
    const auto* f = validation.first_failure();
    throw Failure{kDomain, "diagram '" + sd.label + "' failed check " + f->name + (f->detail.empty() ? "" : ": " + f->detail)};
  }
  AtlasReport report;
  try {
    report = atlas(RealForm::analyze(sd), cfg.weyl_cap);
  } catch (const Error& e) {
    throw Failure{kDomain, e.what()};
  }
  const ReportContext ctx{cfg.seed, cat.hash};
  emit(cfg, cfg.format == "json" ? to_json(report, ctx).dump(2) + "\n" : to_markdown(report, ctx), out);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg);
  if (cfg.form.empty()) throw Failure{kUsage, "verify needs --form"};
  if (cfg.samples < 1) throw Failure{kUsage, "--samples must be positive"};
  VerifyOptions opts;
  opts.samples = cfg.samples;
  opts.seed = cfg.seed;
  opts.search_depth = cfg.depth;
  for (const auto& item : cfg.tol) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Failure{kUsage, "--tol expects name=value, got '" + item + "'"};
    try {
      opts.tol.set(item.substr(0, eq), std::stod(item.substr(eq + 1)));
    } catch (const std::exception& e) {
      throw Failure{kUsage, "bad --tol '" + item + "': " + e.what()};
    }
  }
  const LoadedCatalog cat = load(cfg);
  const SatakeDiagram sd = resolve_form(cfg, cat);
  if (!MatrixRealForm::has_realization(sd.label)) {
    std::string shipped;
    for (const auto& l : MatrixRealForm::shipped_labels()) shipped += (shipped.empty() ? "" : ", ") + l;
    throw Failure{kDomain, NoMatrixRealization(sd.label).what() + std::string("; shipped: ") + shipped};
  }
  VerifyReport report;
  try {
    report = run_verify(MatrixRealForm::from_label(sd.label), RealForm::analyze(sd), opts);
  } catch (const Error& e) {
    throw Failure{kDomain, e.what()};
  }
  const ReportContext ctx{cfg.seed, cat.hash};
  emit(cfg, cfg.format == "json" ? to_json(report, ctx).dump(2) + "\n" : to_markdown(report, ctx), out);
  return report.ok() ? kOk : kDomain;
}

int cmd_catalog(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_format(cfg);
  if (cfg.dump) {
    emit(cfg, builtin_catalog_text(), out);
    return kOk;
  }
  const LoadedCatalog cat = load(cfg);
  if (cat.diagrams.empty()) err << "warning: catalog " << cat.source << " has no entries\n";
  bool all_ok = true;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  std::ostringstream md;
  md << "# Catalog " << cat.source << " (" << cat.hash << ")\n\n| form | type | result | detail |\n|---|---|---|---|\n";
  for (const auto& sd : cat.diagrams) {
    const ValidationReport v = validate(sd);
    all_ok = all_ok && v.ok();
    const auto* f = v.first_failure();
    nlohmann::ordered_json e;
    e["label"] = sd.label;
    e["type"] = sd.type.name();
    e["ok"] = v.ok();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : v.checks) {
      nlohmann::ordered_json cj{{"name", c.name}, {"pass", c.pass}};
      if (!c.detail.empty()) cj["detail"] = c.detail;
      checks.push_back(cj);
    }
    e["checks"] = checks;
    entries.push_back(e);
    md << "| " << sd.label << " | " << sd.type.name() << " | " << (v.ok() ? "pass" : "FAIL") << " | "
       << (f ? f->name + (f->detail.empty() ? "" : ": " + f->detail) : "") << " |\n";
  }
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["catalog_hash"] = cat.hash;
    j["source"] = cat.source;
    j["ok"] = all_ok;
    j["entries"] = entries;
    emit(cfg, j.dump(2) + "\n", out);
  } else {
    emit(cfg, md.str(), out);
  }
  return all_ok ? kOk : kDomain;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic leaf atlas for real forms of complex semisimple Lie algebras", "leafatlas"};
  app.require_subcommand(1, 1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--catalog", cfg.catalog, "catalog file (default: $LEAFATLAS_CATALOG or the builtin catalog)");
    sub->add_option("--format", cfg.format, "json or md")->check(CLI::IsMember({"json", "md"}));
    sub->add_option("--output", cfg.output, "write the report to this path atomically");
    sub->add_option("--seed", cfg.seed, "master seed, echoed into the report");
  };
  CLI::App* atlas_cmd = app.add_subcommand("atlas", "enumerate orbit classes and leaf invariants");
  add_common(atlas_cmd);
  atlas_cmd->add_option("--form", cfg.form, "catalog label, e.g. sl(2,R)");
  atlas_cmd->add_option("--type", cfg.type, "Cartan type of an inline diagram, e.g. A or A2");
  atlas_cmd->add_option("--rank", cfg.rank, "rank of an inline diagram");
  atlas_cmd->add_option("--black", cfg.black, "black nodes of an inline diagram, e.g. {1,3}");
  atlas_cmd->add_option("--arrows", cfg.arrows, "arrows of an inline diagram, e.g. {(1,2)}");
  atlas_cmd->add_option("--weyl-cap", cfg.weyl_cap, "maximum Weyl group size to enumerate");

  CLI::App* verify_cmd = app.add_subcommand("verify", "numerical checks on a shipped matrix realization");
  add_common(verify_cmd);
  verify_cmd->add_option("--form", cfg.form, "catalog label with a shipped realization");
  verify_cmd->add_option("--samples", cfg.samples, "number of seeded sample points");
  verify_cmd->add_option("--tol", cfg.tol, "tolerance override name=value (repeatable)");
  verify_cmd->add_option("--depth", cfg.depth, "word length bound of the representative search");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "validate every catalog entry");
  add_common(catalog_cmd);
  catalog_cmd->add_flag("--dump", cfg.dump, "print the builtin catalog text");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*atlas_cmd) return cmd_atlas(cfg, out);
    if (*verify_cmd) return cmd_verify(cfg, out);
    return cmd_catalog(cfg, out, err);
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
}

}  // namespace leafatlas
