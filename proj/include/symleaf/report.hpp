#pragma once

#include "symleaf/leaf_atlas.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace symleaf {

struct VerifyReport;

/// Provenance fields shared by every serialized report.
struct ReportContext {
  std::uint64_t seed = 0;
  std::string catalog_hash;
};

nlohmann::ordered_json to_json(const AtlasReport& report, const ReportContext& ctx);
std::string to_markdown(const AtlasReport& report, const ReportContext& ctx);

nlohmann::ordered_json to_json(const VerifyReport& report, const ReportContext& ctx);
std::string to_markdown(const VerifyReport& report, const ReportContext& ctx);

nlohmann::ordered_json int_matrix_json(const IntMatrix& m);

}  // namespace symleaf
