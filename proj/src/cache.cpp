#include "ckdim/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ckdim/version.hpp"

namespace ckdim {

namespace {

constexpr const char* kCacheMagic = "ckdim-cache-v1";

QuotientSpec spec_from_canonical(const std::string& canonical) {
  auto parse_param = [&](const std::string& prefix) {
    size_t eq = canonical.find('=');
    size_t close = canonical.rfind(')');
    (void)prefix;
    return std::stol(canonical.substr(eq + 1, close - eq - 1));
  };
  if (canonical.rfind("free_lcs(", 0) == 0)
    return {QuotientKind::FreeLcs, parse_param("free_lcs")};
  if (canonical.rfind("surface_lcs(", 0) == 0)
    return {QuotientKind::SurfaceLcs, parse_param("surface_lcs")};
  if (canonical.rfind("free_metabelian(", 0) == 0)
    return {QuotientKind::FreeMetabelian, parse_param("free_metabelian")};
  if (canonical.rfind("surface_metabelian(", 0) == 0)
    return {QuotientKind::SurfaceMetabelian, parse_param("surface_metabelian")};
  if (canonical == "cm_truncation") return {QuotientKind::CmTruncation, 0};
  throw std::runtime_error("cache: unrecognized spec \"" + canonical + "\"");
}

struct CacheEntry {
  std::string version;
  std::string spec;
  long N = 0;
  std::string provenance;
  std::vector<Int> dims;
};

std::optional<CacheEntry> read_entry(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  CacheEntry entry;
  std::string magic;
  if (!std::getline(in, magic) || magic != kCacheMagic) return std::nullopt;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "tool_version")
      ls >> entry.version;
    else if (key == "spec")
      ls >> entry.spec;
    else if (key == "N")
      ls >> entry.N;
    else if (key == "provenance")
      ls >> entry.provenance;
    else if (key == "dims") {
      std::string value;
      while (ls >> value) entry.dims.emplace_back(value);
    } else if (!key.empty()) {
      return std::nullopt;  // unknown line: treat as a miss, recompute
    }
  }
  if (entry.N != static_cast<long>(entry.dims.size())) return std::nullopt;
  return entry;
}

void write_entry(const std::filesystem::path& path, const QuotientSpec& spec, long N,
                 const GradedDims& dims) {
  std::ofstream out(path);
  out << kCacheMagic << "\n";
  out << "tool_version " << kToolVersion << "\n";
  out << "spec " << spec.canonical() << "\n";
  out << "N " << N << "\n";
  out << "provenance " << (is_oracle_backed(spec) ? "oracle" : "closed-form") << "\n";
  out << "dims";
  for (const Int& d : dims.dims) out << " " << d.str();
  out << "\n";
}

}  // namespace

CacheConfig resolve_cache(bool enabled, const std::string& dir_flag) {
  CacheConfig config;
  config.enabled = enabled;
  if (!enabled) return config;
  if (!dir_flag.empty()) {
    config.dir = dir_flag;
  } else if (const char* env = std::getenv(kCacheEnvVar); env && *env) {
    config.dir = env;
  } else {
    throw std::invalid_argument("cache enabled but no directory given (flag or " +
                                std::string(kCacheEnvVar) + ")");
  }
  std::filesystem::create_directories(config.dir);
  return config;
}

std::string cache_entry_name(const QuotientSpec& spec, long N) {
  std::string key = spec.canonical();
  for (char& c : key) {
    if (c == '(' || c == ')' || c == '=' || c == ',') c = '_';
  }
  return key + "_N" + std::to_string(N) + ".dims";
}

GradedDims cached_graded_series(const QuotientSpec& spec, long N, const CacheConfig& cache) {
  if (!cache.enabled) return graded_series(spec, N);
  const std::filesystem::path path = cache.dir / cache_entry_name(spec, N);
  if (auto entry = read_entry(path);
      entry && entry->version == kToolVersion && entry->spec == spec.canonical() &&
      entry->N == N) {
    GradedDims out;
    out.dims = entry->dims;
    return out;
  }
  GradedDims computed = graded_series(spec, N);
  write_entry(path, spec, N, computed);
  return computed;
}

int verify_cache(const CacheConfig& cache, std::ostream& diagnostics) {
  if (!cache.enabled) throw std::invalid_argument("verify_cache: cache is not enabled");
  int mismatches = 0;
  for (const auto& file : std::filesystem::directory_iterator(cache.dir)) {
    if (file.path().extension() != ".dims") continue;
    auto entry = read_entry(file.path());
    if (!entry) {
      diagnostics << "unreadable entry: " << file.path().filename().string() << "\n";
      ++mismatches;
      continue;
    }
    if (entry->version != kToolVersion) {
      diagnostics << "stale version (" << entry->version
                  << "): " << file.path().filename().string() << "\n";
      continue;  // stale entries are invalid, not incoherent
    }
    GradedDims recomputed = graded_series(spec_from_canonical(entry->spec), entry->N);
    if (recomputed.dims != entry->dims) {
      diagnostics << "MISMATCH: " << file.path().filename().string() << "\n";
      ++mismatches;
    } else {
      diagnostics << "ok: " << file.path().filename().string() << "\n";
    }
  }
  return mismatches;
}

}  // namespace ckdim
