#include <doctest.h>

#include "symleaf/catalog.hpp"
#include "symleaf/errors.hpp"
#include "symleaf/satake.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <sstream>

using namespace symleaf;

namespace {

SatakeDiagram parse_one(const std::string& stanza) {
  auto v = load_catalog(stanza);
  REQUIRE(v.size() == 1);
  return v.front();
}

struct LabelOracle {
  int dim_k0;
  int real_rank;
};

// Textbook dim K0 and real rank, read off the label alone.
LabelOracle label_oracle(const std::string& label) {
  static const std::map<std::string, LabelOracle> exceptional{
      {"g2(2)", {6, 2}},   {"f4(4)", {24, 4}},   {"f4(-20)", {36, 1}}, {"e6(6)", {36, 6}},
      {"e6(2)", {38, 4}},  {"e6(-14)", {46, 2}}, {"e6(-26)", {52, 2}}};
  if (auto it = exceptional.find(label); it != exceptional.end()) return it->second;
  std::smatch m;
  if (std::regex_match(label, m, std::regex(R"(sl\((\d+),R\))"))) {
    const int n = std::stoi(m[1]);
    return {n * (n - 1) / 2, n - 1};
  }
  if (std::regex_match(label, m, std::regex(R"(su\((\d+),(\d+)\))"))) {
    const int p = std::stoi(m[1]), q = std::stoi(m[2]);
    return {p * p + q * q - 1, std::min(p, q)};
  }
  if (std::regex_match(label, m, std::regex(R"(so\((\d+),(\d+)\))"))) {
    const int p = std::stoi(m[1]), q = std::stoi(m[2]);
    return {p * (p - 1) / 2 + q * (q - 1) / 2, std::min(p, q)};
  }
  if (std::regex_match(label, m, std::regex(R"(sp\((\d+),R\))"))) {
    const int n = std::stoi(m[1]);
    return {n * n, n};
  }
  if (std::regex_match(label, m, std::regex(R"(sp\((\d+),(\d+)\))"))) {
    const int p = std::stoi(m[1]), q = std::stoi(m[2]);
    return {p * (2 * p + 1) + q * (2 * q + 1), std::min(p, q)};
  }
  if (std::regex_match(label, m, std::regex(R"(su\*\((\d+)\))"))) {
    const int n = std::stoi(m[1]) / 2;
    return {n * (2 * n + 1), n - 1};
  }
  if (std::regex_match(label, m, std::regex(R"(so\*\((\d+)\))"))) {
    const int n = std::stoi(m[1]) / 2;
    return {n * n, n / 2};
  }
  FAIL("no oracle for label " << label);
  return {0, 0};
}

int count_black_span_positive(const RootSystem& rs, const std::set<int>& black) {
  int count = 0;
  for (const auto& beta : rs.positive_roots()) {
    bool inside = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (beta(i) != 0 && !black.count(i + 1)) inside = false;
    count += inside ? 1 : 0;
  }
  return count;
}

IntMatrix cols(std::initializer_list<std::initializer_list<std::int64_t>> columns) {
  const int n = static_cast<int>(columns.size());
  IntMatrix m(n, n);
  int c = 0;
  for (const auto& col : columns) {
    int r = 0;
    for (auto x : col) m(r++, c) = x;
    ++c;
  }
  return m;
}

}  // namespace

TEST_CASE("load_catalog: reference stanzas") {
  const auto sl2 = parse_one("name=sl(2,R); type=A1; black={}; arrows={}");
  CHECK(sl2.label == "sl(2,R)");
  CHECK(sl2.type == CartanType{'A', 1});
  CHECK(sl2.black.empty());
  CHECK(sl2.arrows.empty());

  const auto su21 = parse_one("name=su(2,1); type=A2; black={}; arrows={(1,2)}");
  CHECK(su21.arrows == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(validate(su21).ok());

  const auto su31 = parse_one("name=su(3,1); type=A3; black={2}; arrows={(1,3)}");
  CHECK(su31.black == std::set<int>{2});
  CHECK(su31.arrows == std::vector<std::pair<int, int>>{{1, 3}});
  CHECK(validate(su31).ok());
}

TEST_CASE("load_catalog: grammar details") {
  const auto v = load_catalog(
      "# header\n"
      "\n"
      "  name = x1 ; type = A ; rank = 3 ;  # trailing comment\n"
      "  black = { 2 } ; arrows = { ( 3 , 1 ) }\n"
      "name=x2; type=B2\n");
  REQUIRE(v.size() == 2);
  CHECK(v[0].type == CartanType{'A', 3});
  CHECK(v[0].black == std::set<int>{2});
  CHECK(v[0].arrows == std::vector<std::pair<int, int>>{{1, 3}});
  CHECK(v[1].black.empty());
  CHECK(load_catalog("").empty());
  CHECK(load_catalog("# only comments\n\n").empty());
  CHECK(parse_arrows("{(4,1),(2,3)}") == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}});
  CHECK(parse_node_set("{3,1}") == std::set<int>{1, 3});
}

TEST_CASE("load_catalog: errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      load_catalog(text);
    } catch (const CatalogParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("name=a; type=A1\nname=a; type=A2\n") == 2);         // duplicate label
  CHECK(line_of("name=a; type=A1\nname=b; type=A1; colour=red\n") == 2);  // unknown key
  CHECK(line_of("# c\ntype=A1\n") == 2);                              // key before name
  CHECK(line_of("name=a; type A1\n") == 1);                           // missing '='
  CHECK(line_of("name=a; type=A1; type=A2\n") == 1);                  // repeated key
  CHECK(line_of("name=a\n\nname=b; type=A1\n") == 1);                 // missing type
  CHECK(line_of("name=a; type=A2; rank=3\n") == 1);                   // mismatch
  CHECK(line_of("name=a; type=H3\n") == 1);                           // unsupported
  CHECK(line_of("name=a; type=A2; black={1,x}\n") == 1);
  CHECK(line_of("name=a; type=A2; arrows={(1,2}\n") == 1);
}

TEST_CASE("tau_star: examples") {
  const auto sl2 = RealForm::analyze(parse_one("name=sl(2,R); type=A1"));
  CHECK(sl2.data().tau_star == IntMatrix::Identity(1, 1));

  const auto su21 = RealForm::analyze(parse_one("name=su(2,1); type=A2; arrows={(1,2)}"));
  CHECK(su21.data().tau_star == cols({{0, 1}, {1, 0}}));
  CHECK(su21.data().sigma == std::vector<int>{2, 1});

  const auto su31 = RealForm::analyze(parse_one("name=su(3,1); type=A3; black={2}; arrows={(1,3)}"));
  const IntMatrix& t = su31.data().tau_star;
  CHECK(t == cols({{0, 1, 1}, {0, -1, 0}, {1, 1, 0}}));
  CHECK(t * t == IntMatrix::Identity(3, 3));
  CHECK(t == IntMatrix(su31.data().w_b.matrix() * cols({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})));
}

TEST_CASE("tau_star: sigma on black components is the opposition involution") {
  // su*(4): black {1,3} are two A1 components, fixed by opposition.
  const auto rf = RealForm::analyze(*find_form(builtin_catalog(), "su*(4)"));
  CHECK(rf.data().sigma == std::vector<int>{1, 2, 3});
  // so(1,6): black {2,3} is B2, opposition is trivial.
  CHECK(RealForm::analyze(*find_form(builtin_catalog(), "so(1,6)")).data().sigma == std::vector<int>{1, 2, 3});
  // e6(-26): black {2,3,4,5} is D4, opposition trivial; e6(2) uses arrows.
  CHECK(RealForm::analyze(*find_form(builtin_catalog(), "e6(2)")).data().sigma ==
        std::vector<int>{6, 2, 5, 4, 3, 1});
  // su(4,1): black {2,3} is A2, opposition swaps 2 and 3.
  CHECK(RealForm::analyze(*find_form(builtin_catalog(), "su(4,1)")).data().sigma ==
        std::vector<int>{4, 3, 2, 1});
}

TEST_CASE("w_b: examples") {
  const auto rs3 = RootSystem::build('A', 3);
  SatakeDiagram sd{"x", {'A', 3}, {}, {}};
  CHECK(w_b(rs3, sd) == WeylElement::identity(3));
  sd.black = {2};
  CHECK(w_b(rs3, sd) == reflect(rs3, 2));
  sd.black = {1, 2, 3};
  CHECK(w_b(rs3, sd) == longest_element(rs3));
}

TEST_CASE("restricted_roots: examples") {
  const auto sl2 = RealForm::analyze(parse_one("name=sl(2,R); type=A1"));
  CHECK(sl2.data().real_rank == 1);
  CHECK(sl2.data().positive_multiplicity == 1);
  REQUIRE(sl2.data().restricted_roots.size() == 2);
  for (const auto& r : sl2.data().restricted_roots) CHECK(r.multiplicity == 1);

  const auto su21 = RealForm::analyze(parse_one("name=su(2,1); type=A2; arrows={(1,2)}"));
  CHECK(su21.data().real_rank == 1);
  CHECK(su21.data().positive_multiplicity == 3);
  std::map<std::vector<std::int64_t>, int> mult;
  for (const auto& r : su21.data().restricted_roots) mult[to_std(r.doubled)] = r.multiplicity;
  CHECK(mult == std::map<std::vector<std::int64_t>, int>{{{1, 1}, 2}, {{2, 2}, 1}, {{-1, -1}, 2}, {{-2, -2}, 1}});
  for (const auto& r : su21.data().restricted_roots)
    if (to_std(r.doubled) == std::vector<std::int64_t>{1, 1})
      CHECK(r.coordinates() == std::vector<std::string>{"1/2", "1/2"});

  // su(3,1): alpha_2 projects to zero, alpha_1 and alpha_3 do not.
  const auto su31 = RealForm::analyze(parse_one("name=su(3,1); type=A3; black={2}; arrows={(1,3)}"));
  const IntMatrix p2 = IntMatrix::Identity(3, 3) + su31.data().tau_star;
  CHECK(p2.col(1).isZero());
  CHECK(!p2.col(0).isZero());
  CHECK(!p2.col(2).isZero());
}

TEST_CASE("dims: examples") {
  const auto sl2 = RealForm::analyze(parse_one("name=sl(2,R); type=A1")).data();
  CHECK(sl2.dim_g == 3);
  CHECK(sl2.dim_k0 == 1);
  CHECK(sl2.dim_p0 == 2);
  CHECK(sl2.dim_X == 2);
  const auto su21 = RealForm::analyze(parse_one("name=su(2,1); type=A2; arrows={(1,2)}")).data();
  CHECK(su21.dim_g == 8);
  CHECK(su21.dim_k0 == 4);
  CHECK(su21.dim_p0 == 4);
  const auto sl3 = RealForm::analyze(parse_one("name=sl(3,R); type=A2")).data();
  CHECK(sl3.dim_g == 8);
  CHECK(sl3.dim_k0 == 3);
  CHECK(sl3.dim_p0 == 5);
  CHECK(sl3.real_rank == 2);
}

TEST_CASE("validate: examples") {
  CHECK(validate(parse_one("name=sl(2,R); type=A1")).ok());
  CHECK(validate(parse_one("name=su(3,1); type=A3; black={2}; arrows={(1,3)}")).ok());

  // Not an admissible diagram: the commutation and length checks catch it.
  const auto bad = validate(parse_one("name=bad; type=A2; black={1}"));
  CHECK(!bad.ok());
  std::map<std::string, bool> by_name;
  for (const auto& c : bad.checks) by_name[c.name] = c.pass;
  CHECK(!by_name.at("tau_commutes_w0"));
  CHECK(!by_name.at("w0_commutes_wb"));
  CHECK(by_name.at("length_wb_w0"));  // l(s1 w0) = 2 = l(w0) - l(s1)
  CHECK_THROWS_AS(RealForm::analyze(parse_one("name=bad; type=A2; black={1}")), InconsistentSatakeData);

  // Arrow on a black node, overlapping arrows, out-of-range node: inconsistent.
  for (const char* text : {"name=b; type=A3; black={1}; arrows={(1,3)}", "name=b; type=A3; arrows={(1,3),(1,2)}",
                           "name=b; type=A2; black={3}", "name=b; type=A3; arrows={(1,2)}"}) {
    CAPTURE(text);
    CHECK(!validate(parse_one(text)).ok());
    CHECK_THROWS_AS(RealForm::analyze(parse_one(text)), InconsistentSatakeData);
  }
}

TEST_CASE("validate: compact forms are rejected") {
  const auto su3 = parse_one("name=su(3); type=A2; black={1,2}");
  CHECK(su3.is_compact());
  CHECK(!validate(su3).ok());
  CHECK(validate(su3).first_failure()->name == "noncompact");
  CHECK_THROWS_AS(RealForm::analyze(su3), CompactRealForm);
}

TEST_CASE("catalog: every entry validates and matches label oracles") {
  const auto catalog = builtin_catalog();
  CHECK(catalog.size() == 39);
  for (const auto& sd : catalog) {
    CAPTURE(sd.label);
    const auto report = validate(sd);
    CHECK(report.ok());
    const auto form = RealForm::analyze(sd);
    const auto& rs = form.roots();
    const auto& d = form.data();
    const auto oracle = label_oracle(sd.label);
    CHECK(d.dim_k0 == oracle.dim_k0);
    CHECK(d.real_rank == oracle.real_rank);
    CHECK(d.real_rank == exact_nullity(IntMatrix(d.tau_star - IntMatrix::Identity(rs.rank(), rs.rank()))));
    CHECK(d.tau_star * d.tau_star == IntMatrix::Identity(rs.rank(), rs.rank()));
    IntMatrix sigma = IntMatrix::Zero(rs.rank(), rs.rank());
    for (int i = 0; i < rs.rank(); ++i) sigma(d.sigma[static_cast<std::size_t>(i)] - 1, i) = 1;
    CHECK(d.tau_star == IntMatrix(d.w_b.matrix() * sigma));
    CHECK(d.w_b == longest_element(rs, sd.black));
    CHECK(d.dim_k0 + d.dim_p0 == d.dim_g);
    CHECK(d.dim_X == d.dim_p0);
    CHECK(d.dim_g == rs.rank() + 2 * static_cast<int>(rs.num_positive_roots()));
    CHECK(d.dim_p0 == d.real_rank + d.positive_multiplicity);
    CHECK(d.dim_k0 >= static_cast<int>(sd.black.size()));
    CHECK(d.dim_p0 >= d.real_rank);
    CHECK(d.dim_k0 > 0);
    // Roots that project to zero are exactly the black-span roots.
    CHECK(d.positive_multiplicity + count_black_span_positive(rs, sd.black) ==
          static_cast<int>(rs.num_positive_roots()));
    for (int i = 1; i <= rs.rank(); ++i) {
      const IntVector img = d.tau_star * rs.simple_root(i);
      CHECK((img == IntVector(-rs.simple_root(i))) == (sd.black.count(i) == 1));
    }
    for (const auto& beta : rs.positive_roots()) {
      const IntVector img = d.tau_star * beta;
      if (img != IntVector(-beta)) CHECK(rs.is_positive_root(img));
    }
    int total = 0;
    for (const auto& r : d.restricted_roots) {
      CHECK(IntVector(d.tau_star * r.doubled) == r.doubled);
      total += r.multiplicity;
    }
    CHECK(total == 2 * d.positive_multiplicity);
    // Split forms: restricted system = root system, multiplicities 1.
    if (sd.black.empty() && sd.arrows.empty()) {
      CHECK(d.real_rank == rs.rank());
      CHECK(d.restricted_roots.size() == 2 * rs.num_positive_roots());
      for (const auto& r : d.restricted_roots) CHECK(r.multiplicity == 1);
    }
  }
}

TEST_CASE("catalog: text round trip and shipped file") {
  const std::string text = builtin_catalog_text();
  const auto parsed = load_catalog(text);
  CHECK(parsed.size() == builtin_catalog().size());
  CHECK(format_catalog(parsed) == format_catalog(builtin_catalog()));
  for (const auto& sd : parsed) CHECK(load_catalog(format_stanza(sd)).front().label == sd.label);

  std::ifstream in(std::string(LEAFATLAS_SOURCE_DIR) + "/data/catalog.txt");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == text);
}

TEST_CASE("catalog: generator coverage") {
  const auto classical = generate_classical(4);
  std::set<std::string> labels;
  for (const auto& sd : classical) labels.insert(sd.label);
  for (const char* l : {"sl(2,R)", "sl(5,R)", "su*(4)", "su(1,1)", "su(2,2)", "so(4,5)", "so(4,4)", "sp(4,R)",
                        "sp(1,1)", "sp(2,2)", "so*(8)"})
    CHECK(labels.count(l) == 1);
  CHECK(!find_form(classical, "nope").has_value());
}

TEST_CASE("fnv1a64: reference vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}
