#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuspforms/arith.hpp"

namespace cuspforms {

// Coefficient rows persisted as decimal-string CSV: a header "weight,order"
// followed by exactly `order` rows "n,value" with n running 1..order.
struct CoefficientCacheFile {
  std::string weight_token;
  std::uint64_t order = 0;
  std::vector<Int> values;  // values[i] holds the row for n = i + 1
};

class cache_format_error : public std::runtime_error {
 public:
  cache_format_error(const std::string& message, std::size_t line)
      : std::runtime_error(message + " (line " + std::to_string(line) + ")"),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

CoefficientCacheFile parse_cache(const std::string& text);
std::string serialize_cache(const CoefficientCacheFile& file);

CoefficientCacheFile read_cache_file(const std::filesystem::path& path);

// Writes through a temporary sibling renamed into place, so a concurrent
// reader never observes a partial file.
void write_cache_file(const std::filesystem::path& path, const CoefficientCacheFile& file);

// Reads the file, re-serializes it, verifies byte identity, and rewrites it
// atomically.  Returns false only when the rewrite would alter the bytes.
bool cache_roundtrip(const std::filesystem::path& path);

// Precedence: explicit flag value, then CUSPFORM_CACHE, then ./cache.
std::filesystem::path resolve_cache_dir(const std::string& flag_value);

}  // namespace cuspforms
