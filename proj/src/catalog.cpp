#include "symleaf/catalog.hpp"

#include "symleaf/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace symleaf {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view text) {
  text = trim(text);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw Error("expected an integer, got '" + std::string(text) + "'");
  return value;
}

std::string_view braces(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') throw Error("expected a braced set, got '" + std::string(text) + "'");
  return trim(text.substr(1, text.size() - 2));
}

struct PendingStanza {
  int line = 0;
  std::string name;
  std::optional<std::string> type;
  std::optional<int> rank;
  std::set<int> black;
  std::vector<std::pair<int, int>> arrows;
  std::set<std::string> seen_keys;
};

SatakeDiagram finish(const PendingStanza& p) {
  if (!p.type) throw CatalogParseError(p.line, "stanza '" + p.name + "' has no type");
  SatakeDiagram sd;
  sd.label = p.name;
  sd.black = p.black;
  sd.arrows = p.arrows;
  try {
    const bool has_digits = p.type->size() > 1;
    if (has_digits) {
      sd.type = parse_cartan_type(*p.type);
      if (p.rank && *p.rank != sd.type.rank) throw CatalogParseError(p.line, "rank disagrees with type " + *p.type);
    } else {
      if (!p.rank) throw CatalogParseError(p.line, "type '" + *p.type + "' needs a rank");
      sd.type = parse_cartan_type(*p.type + std::to_string(*p.rank));
    }
  } catch (const UnsupportedCartanType& e) {
    throw CatalogParseError(p.line, e.what());
  }
  return sd;
}

}  // namespace

std::set<int> parse_node_set(std::string_view text) {
  std::set<int> out;
  std::string_view body = braces(text);
  while (!body.empty()) {
    const auto comma = body.find(',');
    out.insert(parse_int(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  return out;
}

std::vector<std::pair<int, int>> parse_arrows(std::string_view text) {
  std::vector<std::pair<int, int>> out;
  std::string_view body = braces(text);
  while (!body.empty()) {
    body = trim(body);
    if (body.front() != '(') throw Error("expected '(' in arrow set");
    const auto close = body.find(')');
    if (close == std::string_view::npos) throw Error("unterminated arrow pair");
    const std::string_view inside = body.substr(1, close - 1);
    const auto comma = inside.find(',');
    if (comma == std::string_view::npos) throw Error("arrow pair needs two nodes");
    const int a = parse_int(inside.substr(0, comma));
    const int b = parse_int(inside.substr(comma + 1));
    out.emplace_back(std::min(a, b), std::max(a, b));
    body = trim(body.substr(close + 1));
    if (!body.empty()) {
      if (body.front() != ',') throw Error("expected ',' between arrow pairs");
      body = body.substr(1);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SatakeDiagram> load_catalog(std::string_view text) {
  std::vector<SatakeDiagram> out;
  std::set<std::string> labels;
  std::optional<PendingStanza> pending;

  auto flush = [&]() {
    if (!pending) return;
    SatakeDiagram sd = finish(*pending);
    if (!labels.insert(sd.label).second) throw CatalogParseError(pending->line, "duplicate label '" + sd.label + "'");
    out.push_back(std::move(sd));
    pending.reset();
  };

  std::istringstream stream{std::string(text)};
  std::string raw;
  int line_number = 0;
  while (std::getline(stream, raw)) {
    ++line_number;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t start = 0;
    while (start <= line.size()) {
      const auto end = line.find(';', start);
      const std::string_view piece = trim(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
      start = end == std::string_view::npos ? line.size() + 1 : end + 1;
      if (piece.empty()) continue;
      const auto eq = piece.find('=');
      if (eq == std::string_view::npos) throw CatalogParseError(line_number, "expected key=value, got '" + std::string(piece) + "'");
      const std::string key(trim(piece.substr(0, eq)));
      const std::string_view value = trim(piece.substr(eq + 1));
      if (key == "name") {
        flush();
        if (value.empty()) throw CatalogParseError(line_number, "empty name");
        pending = PendingStanza{};
        pending->line = line_number;
        pending->name = std::string(value);
        pending->seen_keys.insert(key);
        continue;
      }
      if (key != "type" && key != "rank" && key != "black" && key != "arrows")
        throw CatalogParseError(line_number, "unknown key '" + key + "'");
      if (!pending) throw CatalogParseError(line_number, "key '" + key + "' before any name");
      if (!pending->seen_keys.insert(key).second) throw CatalogParseError(line_number, "repeated key '" + key + "'");
      try {
        if (key == "type") pending->type = std::string(value);
        else if (key == "rank") pending->rank = parse_int(value);
        else if (key == "black") pending->black = parse_node_set(value);
        else pending->arrows = parse_arrows(value);
      } catch (const CatalogParseError&) {
        throw;
      } catch (const Error& e) {
        throw CatalogParseError(line_number, e.what());
      }
    }
  }
  flush();
  return out;
}

std::vector<SatakeDiagram> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read catalog file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_catalog(buffer.str());
}

std::string format_stanza(const SatakeDiagram& sd) {
  std::ostringstream out;
  out << "name=" << sd.label << "; type=" << sd.type.name() << "; black={";
  bool first = true;
  for (int b : sd.black) {
    out << (first ? "" : ",") << b;
    first = false;
  }
  out << "}; arrows={";
  first = true;
  for (auto [i, j] : sd.arrows) {
    out << (first ? "" : ",") << "(" << i << "," << j << ")";
    first = false;
  }
  out << "}";
  return out.str();
}

std::string format_catalog(const std::vector<SatakeDiagram>& diagrams) {
  std::string out;
  for (const auto& sd : diagrams) out += format_stanza(sd) + "\n";
  return out;
}

std::vector<SatakeDiagram> generate_classical(int max_rank) {
  std::vector<SatakeDiagram> out;
  auto range = [](int lo, int hi) {
    std::set<int> s;
    for (int i = lo; i <= hi; ++i) s.insert(i);
    return s;
  };
  auto push = [&](std::string label, char family, int rank, std::set<int> black, std::vector<std::pair<int, int>> arrows = {}) {
    out.push_back({std::move(label), {family, rank}, std::move(black), std::move(arrows)});
  };
  auto signature = [](const char* prefix, int p, int q) {
    return std::string(prefix) + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  };

  // AI: sl(n,R), split.
  for (int r = 1; r <= max_rank; ++r) push("sl(" + std::to_string(r + 1) + ",R)", 'A', r, {});
  // AII: su*(2n) on A_{2n-1}, odd nodes black.
  for (int n = 2; 2 * n - 1 <= max_rank; ++n) {
    std::set<int> black;
    for (int i = 1; i <= 2 * n - 1; i += 2) black.insert(i);
    push("su*(" + std::to_string(2 * n) + ")", 'A', 2 * n - 1, black);
  }
  // AIII: su(p,q), p >= q, on A_{p+q-1}.
  for (int r = 1; r <= max_rank; ++r) {
    for (int q = 1; 2 * q <= r + 1; ++q) {
      const int p = r + 1 - q;
      std::vector<std::pair<int, int>> arrows;
      for (int i = 1; i <= q && i < r + 1 - i; ++i) arrows.emplace_back(i, r + 1 - i);
      push(signature("su", p, q), 'A', r, range(q + 1, r - q), arrows);
    }
  }
  // BI: so(p,q), p + q = 2r + 1, p <= q.
  for (int r = 2; r <= max_rank; ++r)
    for (int p = 1; p <= r; ++p) push(signature("so", p, 2 * r + 1 - p), 'B', r, range(p + 1, r));
  // CI: sp(n,R), split.
  for (int r = 2; r <= max_rank; ++r) push("sp(" + std::to_string(r) + ",R)", 'C', r, {});
  // CII: sp(p,q), p <= q; white nodes 2, 4, ..., 2p.
  for (int r = 2; r <= max_rank; ++r) {
    for (int p = 1; 2 * p <= r; ++p) {
      std::set<int> black = range(1, r);
      for (int i = 2; i <= 2 * p; i += 2) black.erase(i);
      push(signature("sp", p, r - p), 'C', r, black);
    }
  }
  // DI: so(p,q), p + q = 2r, p <= q.
  for (int r = 4; r <= max_rank; ++r) {
    for (int p = 1; p <= r; ++p) {
      if (p <= r - 2) push(signature("so", p, 2 * r - p), 'D', r, range(p + 1, r));
      else if (p == r - 1) push(signature("so", p, 2 * r - p), 'D', r, {}, {{r - 1, r}});
      else push(signature("so", p, 2 * r - p), 'D', r, {});
    }
  }
  // DIII: so*(2n); odd nodes black, plus an arrow on the fork when n is odd.
  for (int r = 4; r <= max_rank; ++r) {
    std::set<int> black;
    if (r % 2 == 0) {
      for (int i = 1; i < r; i += 2) black.insert(i);
      push("so*(" + std::to_string(2 * r) + ")", 'D', r, black);
    } else {
      for (int i = 1; i <= r - 2; i += 2) black.insert(i);
      push("so*(" + std::to_string(2 * r) + ")", 'D', r, black, {{r - 1, r}});
    }
  }
  return out;
}

std::string_view exceptional_stanzas() {
  return R"(# Exceptional real forms (optional data stanzas).
name=g2(2); type=G2; black={}; arrows={}
name=f4(4); type=F4; black={}; arrows={}
name=f4(-20); type=F4; black={1,2,3}; arrows={}
name=e6(6); type=E6; black={}; arrows={}
name=e6(2); type=E6; black={}; arrows={(1,6),(3,5)}
name=e6(-14); type=E6; black={3,4,5}; arrows={(1,6)}
name=e6(-26); type=E6; black={2,3,4,5}; arrows={}
)";
}

std::vector<SatakeDiagram> builtin_catalog() {
  auto out = generate_classical(4);
  auto extra = load_catalog(exceptional_stanzas());
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

std::string builtin_catalog_text() {
  return "# Classical families up to rank 4 (generated).\n" + format_catalog(generate_classical(4)) +
         std::string(exceptional_stanzas());
}

std::optional<SatakeDiagram> find_form(const std::vector<SatakeDiagram>& catalog, std::string_view label) {
  for (const auto& sd : catalog)
    if (sd.label == label) return sd;
  return std::nullopt;
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace symleaf
