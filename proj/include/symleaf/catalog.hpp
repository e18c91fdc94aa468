#pragma once

#include "symleaf/satake.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symleaf {

/// Parses catalog text into diagrams without validating them (see
/// docs/catalog_format.md). Throws CatalogParseError with a 1-based line
/// number on malformed input, unknown keys, or a repeated name.
std::vector<SatakeDiagram> load_catalog(std::string_view text);

/// Reads a catalog file; throws Error on I/O failure.
std::vector<SatakeDiagram> load_catalog_file(const std::string& path);

std::string format_stanza(const SatakeDiagram& sd);
std::string format_catalog(const std::vector<SatakeDiagram>& diagrams);

/// "{}" or "{1,3}"
std::set<int> parse_node_set(std::string_view text);
/// "{}" or "{(1,2),(3,4)}"; pairs are normalized to (smaller, larger) and sorted.
std::vector<std::pair<int, int>> parse_arrows(std::string_view text);

/// Classical families AI, AII, AIII, BI, DI, CI, CII, DIII up to max_rank.
std::vector<SatakeDiagram> generate_classical(int max_rank = 4);

/// Exceptional diagrams shipped as catalog text.
std::string_view exceptional_stanzas();

/// Classical generator output followed by the exceptional stanzas.
std::vector<SatakeDiagram> builtin_catalog();
std::string builtin_catalog_text();

std::optional<SatakeDiagram> find_form(const std::vector<SatakeDiagram>& catalog, std::string_view label);

/// 64-bit FNV-1a, used to fingerprint catalog text in reports.
std::uint64_t fnv1a64(std::string_view text);

}  // namespace symleaf
