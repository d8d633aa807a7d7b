#pragma once

#include <stdexcept>
#include <string>

#include "qsuper/algebra.hpp"

namespace qsuper {

constexpr int kCacheSchemaVersion = 1;

// Raised when a cache file exists but fails its version or checksum test.
struct CacheCorruption : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Directory named by QSUPER_CACHE_DIR, or empty.
std::string cache_dir_from_env();

std::string block_cache_path(const std::string& dir, const RootDatum& rd, const Grade& mu);
// Returns false when no file exists; throws CacheCorruption on a damaged file.
bool load_block(const std::string& dir, const RootDatum& rd, const Grade& mu, WeightBlock& out);
void save_block(const std::string& dir, const RootDatum& rd, const WeightBlock& b);

// Canonical JSON text of a block (sorted keys, decimal integers).
std::string block_to_json(const RootDatum& rd, const WeightBlock& b);
WeightBlock block_from_json(const RootDatum& rd, const std::string& text);

}  // namespace qsuper
