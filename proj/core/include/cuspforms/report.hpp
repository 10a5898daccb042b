#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cuspforms/arith.hpp"

namespace cuspforms {

std::uint64_t fnv1a64(std::string_view data);

// Structured result of a scan or verification run.  Witness rows are ordered
// maps so serialization is stable; the digest covers kind and parameters only,
// never timings, so replaying the same inputs reproduces it.
struct ScanReport {
  std::string kind;
  std::map<std::string, std::string> parameters;
  std::map<std::string, std::uint64_t> counters;
  std::vector<std::map<std::string, std::string>> witnesses;
  std::map<std::string, std::string> annotations;
  double wall_seconds = 0.0;
  std::uint64_t input_digest = 0;
};

std::uint64_t report_digest(const std::string& kind,
                            const std::map<std::string, std::string>& parameters);

void finalize_digest(ScanReport& report);

// Pretty-printed JSON with sorted keys.  With include_timing=false the
// wall_seconds field is omitted, making the output a pure function of the
// report content.
std::string render_json(const ScanReport& report, bool include_timing = true);

// Exact decimal rendering of a rational to six places, ties rounded away
// from zero.
std::string decimal6(const Rat& value);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}

  double seconds() const {
    auto elapsed = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double>(elapsed).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace cuspforms
