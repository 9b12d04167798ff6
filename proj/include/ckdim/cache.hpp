#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "ckdim/closed.hpp"

namespace ckdim {

inline constexpr const char* kCacheEnvVar = "CKDIM_CACHE_DIR";

struct CacheConfig {
  bool enabled = false;
  std::filesystem::path dir;
};

// Resolve the cache directory: explicit flag wins, then the
// environment variable. Throws when enabled with no directory.
CacheConfig resolve_cache(bool enabled, const std::string& dir_flag);

// Stable file name for a (spec, N) key.
std::string cache_entry_name(const QuotientSpec& spec, long N);

// Series for spec at degrees 1..N, via the cache when enabled.
// Entries are invalidated on tool version mismatch.
GradedDims cached_graded_series(const QuotientSpec& spec, long N, const CacheConfig& cache);

// Recompute every entry in the cache directory and compare; returns
// the number of mismatching entries (0 = coherent).
int verify_cache(const CacheConfig& cache, std::ostream& diagnostics);

}  // namespace ckdim
