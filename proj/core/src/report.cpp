#include "cuspforms/report.hpp"

#include <cstdio>

#include <json.hpp>

#include "cuspforms/version.hpp"

namespace cuspforms {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char byte : data) {
    hash ^= byte;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::uint64_t report_digest(const std::string& kind,
                            const std::map<std::string, std::string>& parameters) {
  std::string canonical = kind;
  canonical += '\n';
  for (const auto& [key, value] : parameters) {
    canonical += key;
    canonical += '=';
    canonical += value;
    canonical += '\n';
  }
  return fnv1a64(canonical);
}

void finalize_digest(ScanReport& report) {
  report.input_digest = report_digest(report.kind, report.parameters);
}

namespace {

std::string hex16(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace

std::string render_json(const ScanReport& report, bool include_timing) {
  nlohmann::json doc;
  doc["kind"] = report.kind;
  doc["tool_version"] = tool_version;
  doc["input_digest"] = hex16(report.input_digest);
  doc["parameters"] = report.parameters;
  doc["counters"] = report.counters;
  doc["annotations"] = report.annotations;
  doc["witnesses"] = nlohmann::json::array();
  for (const auto& witness : report.witnesses) doc["witnesses"].push_back(witness);
  if (include_timing) doc["wall_seconds"] = report.wall_seconds;
  return doc.dump(2) + "\n";
}

std::string decimal6(const Rat& value) {
  static const Int kScale = []() {
    Int s;
    mpz_ui_pow_ui(s.get_mpz_t(), 10, 6);
    return s;
  }();
  Int num = value.get_num();
  Int den = value.get_den();
  bool negative = num < 0;
  if (negative) num = -num;

  Int scaled = num * kScale;
  Int quotient, remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled.get_mpz_t(),
              den.get_mpz_t());
  if (2 * remainder >= den) quotient += 1;

  Int whole = quotient / kScale;
  Int frac = quotient % kScale;
  std::string frac_digits = frac.get_str();
  frac_digits.insert(0, 6 - frac_digits.size(), '0');

  std::string out;
  if (negative && quotient != 0) out += '-';
  out += whole.get_str();
  out += '.';
  out += frac_digits;
  return out;
}

}  // namespace cuspforms
