#pragma once

// JSON reports emitted by the command-line tool. Every report carries the
// same top-level keys (null where a command has nothing to say), and the exit
// code is computed from the report alone.
//
//   command, error, wellformed, b1, b2, components, checks, obstructions,
//   search, bundle, canon, diagnostics

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sldrep/conditions.hpp"
#include "sldrep/obstructions.hpp"
#include "sldrep/search.hpp"
#include "sldrep/sld_format.hpp"

namespace sldrep::report {

using Json = nlohmann::ordered_json;

/// Skeleton with every top-level key present.
Json empty_report(const std::string& command);

/// Report for input that could not be read or parsed.
Json error_report(const std::string& command, const std::string& kind, const std::string& message,
                  std::optional<std::size_t> line = std::nullopt, std::optional<std::size_t> column = std::nullopt);

Json check_report(const sld::SldDocument& doc, const SwOptions& sw = {});

struct SearchRequest {
  std::optional<GroupName> group;  ///< overrides the file's group statement
  DedupMode dedup = DedupMode::so3_canonical;
  bool involutions_only_on_hopfs = true;
  bool exhaustive_sw_paths = false;
  unsigned threads = 1;

  /// Stable text form, part of the cache key.
  std::string to_string(const sld::SldDocument& doc) const;
};

GroupName effective_group(const sld::SldDocument& doc, const SearchRequest& req);

Json search_report(const sld::SldDocument& doc, const SearchRequest& req);

/// Either b2 or summands (or both, when they agree).
Json obstruct_report(std::optional<std::int64_t> b2, const std::vector<std::int64_t>& summands);

Json bundle_report(std::int64_t b1, std::int64_t b2, std::int64_t c2);

Json canon_report(const sld::SldDocument& doc);

/// 2 for unreadable or malformed input, 1 when the command's verdict is
/// negative, 0 otherwise.
int exit_code(const Json& report);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace sldrep::report
