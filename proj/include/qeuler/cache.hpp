#pragma once

#include "qeuler/eulerian.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace qeuler {

inline constexpr std::string_view kCacheHeader = "# qeulerian-cache v1";

/// Canonical text: header line, then "E n d m coefficient" sorted by (n, d, m).
std::string serialize_cache(const EulerianTable& table);

/// Parses and validates every E_n. Throws std::runtime_error naming the
/// offending n (or line) on a bad header, malformed or out-of-order records,
/// or an E_n that fails validation.
EulerianTable parse_cache(std::string_view text);

void cache_save(const std::filesystem::path& path, const EulerianTable& table);
EulerianTable cache_load(const std::filesystem::path& path);

} // namespace qeuler
