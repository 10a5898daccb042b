#include "cuspforms/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cuspforms {

namespace {

bool is_canonical_unsigned(const std::string& s) {
  if (s.empty()) return false;
  if (s == "0") return true;
  if (s[0] == '0') return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

bool is_canonical_signed(const std::string& s) {
  if (!s.empty() && s[0] == '-') return s.size() > 1 && s != "-0" && is_canonical_unsigned(s.substr(1));
  return is_canonical_unsigned(s);
}

}  // namespace

CoefficientCacheFile parse_cache(const std::string& text) {
  if (text.empty() || text.back() != '\n')
    throw cache_format_error("missing trailing newline", text.empty() ? 1 : std::count(text.begin(), text.end(), '\n') + 1);

  CoefficientCacheFile file;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::size_t comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      throw cache_format_error("expected exactly one comma", line_no);
    std::string left = line.substr(0, comma);
    std::string right = line.substr(comma + 1);

    if (line_no == 1) {
      if (left.empty() || left.find_first_of("\r\n,") != std::string::npos)
        throw cache_format_error("invalid weight token", line_no);
      if (!is_canonical_unsigned(right))
        throw cache_format_error("invalid order field", line_no);
      file.weight_token = left;
      file.order = std::stoull(right);
      file.values.reserve(file.order);
      continue;
    }

    if (!is_canonical_unsigned(left))
      throw cache_format_error("invalid row index", line_no);
    if (std::stoull(left) != line_no - 1)
      throw cache_format_error("row index out of sequence", line_no);
    if (!is_canonical_signed(right))
      throw cache_format_error("invalid coefficient value", line_no);
    file.values.emplace_back(right);
  }

  if (line_no == 0) throw cache_format_error("empty file", 1);
  if (file.values.size() != file.order)
    throw cache_format_error("row count disagrees with declared order", line_no);
  return file;
}

std::string serialize_cache(const CoefficientCacheFile& file) {
  std::string out = file.weight_token;
  out += ',';
  out += std::to_string(file.order);
  out += '\n';
  for (std::size_t i = 0; i < file.values.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += file.values[i].get_str();
    out += '\n';
  }
  return out;
}

CoefficientCacheFile read_cache_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open cache file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_cache(buffer.str());
}

void write_cache_file(const std::filesystem::path& path, const CoefficientCacheFile& file) {
  if (file.values.size() != file.order)
    throw std::invalid_argument("cache value count disagrees with order");
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open cache file for writing: " + tmp.string());
    out << serialize_cache(file);
    if (!out) throw std::runtime_error("short write to cache file: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

bool cache_roundtrip(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open cache file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string original = buffer.str();
  in.close();

  CoefficientCacheFile file = parse_cache(original);
  std::string rewritten = serialize_cache(file);
  if (rewritten != original) return false;
  write_cache_file(path, file);
  return true;
}

std::filesystem::path resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("CUSPFORM_CACHE"); env && *env) return env;
  return "cache";
}

}  // namespace cuspforms
