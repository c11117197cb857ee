#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace kloverify {

// Cache directory resolution: explicit override wins, then the
// KLOVERIFY_CACHE environment variable; empty result disables caching.
std::string resolve_cache_dir(const std::string& override_dir);

// FNV-1a 64-bit digest (hex) of a byte string; used for cache sidecars.
std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

// Load dir/name, verifying the dir/name.sum sidecar digest.  Returns false
// (and leaves `out` untouched) when the file is absent, unreadable, corrupt,
// or fails the checksum -- corruption always triggers recomputation upstream,
// never silent reuse.
bool cache_load(const std::string& dir, const std::string& name,
                nlohmann::ordered_json& out);

// Serialize doc to dir/name (creating dir if needed) plus the .sum sidecar.
void cache_store(const std::string& dir, const std::string& name,
                 const nlohmann::ordered_json& doc);

// process-lifetime counters for run manifests
int cache_hit_count();
int cache_miss_count();

}  // namespace kloverify
