#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cuspforms/cache.hpp"

using namespace cuspforms;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  auto dir = fs::temp_directory_path() / "cuspform-cache-tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("serialize and parse are inverse on representative content") {
  CoefficientCacheFile file;
  file.weight_token = "12";
  file.order = 4;
  file.values = {Int(1), Int(-24), Int("123456789012345678901234567890"), Int(0)};

  std::string text = serialize_cache(file);
  CHECK(text == "12,4\n1,1\n2,-24\n3,123456789012345678901234567890\n4,0\n");

  auto parsed = parse_cache(text);
  CHECK(parsed.weight_token == file.weight_token);
  CHECK(parsed.order == file.order);
  CHECK(parsed.values == file.values);
  CHECK(serialize_cache(parsed) == text);
}

TEST_CASE("fractional weight tokens survive the round trip") {
  CoefficientCacheFile file;
  file.weight_token = "1/2";
  file.order = 2;
  file.values = {Int(-1), Int(-1)};
  auto parsed = parse_cache(serialize_cache(file));
  CHECK(parsed.weight_token == "1/2");
}

TEST_CASE("parse_cache rejects malformed input with line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_cache(text);
    } catch (const cache_format_error& e) {
      return e.line();
    }
    return 0;
  };

  CHECK(line_of("") == 1);
  CHECK(line_of("12,2\n1,1\n2,-24") == 3);        // no trailing newline
  CHECK(line_of("12,2\n1,1\n") == 2);             // truncated
  CHECK(line_of("12,two\n") == 1);                // bad order field
  CHECK(line_of("12;2\n") == 1);                  // no comma
  CHECK(line_of("12,2,9\n1,1\n2,2\n") == 1);      // extra comma
  CHECK(line_of("12,2\n1,1\n3,-24\n") == 3);      // index gap
  CHECK(line_of("12,2\n2,1\n1,-24\n") == 2);      // wrong start index
  CHECK(line_of("12,1\n1,007\n") == 2);           // non-canonical value
  CHECK(line_of("12,1\n1,-0\n") == 2);            // negative zero
  CHECK(line_of("12,1\n01,5\n") == 2);            // non-canonical index
  CHECK(line_of("12,1\n1,1\n2,2\n") == 3);        // more rows than declared
}

TEST_CASE("write_cache_file then cache_roundtrip is byte stable") {
  CoefficientCacheFile file;
  file.weight_token = "16";
  file.order = 3;
  file.values = {Int(1), Int(216), Int(-3348)};

  auto path = temp_file("roundtrip.csv");
  write_cache_file(path, file);
  std::string before = slurp(path);
  CHECK(cache_roundtrip(path));
  CHECK(slurp(path) == before);
  CHECK_FALSE(fs::exists(path.string() + ".tmp"));
  fs::remove(path);
}

TEST_CASE("cache_roundtrip rejects corrupted files") {
  auto path = temp_file("corrupt.csv");
  {
    std::ofstream out(path, std::ios::binary);
    out << "12,3\n1,1\n2,-24\n";
  }
  CHECK_THROWS_AS(cache_roundtrip(path), cache_format_error);
  fs::remove(path);
  CHECK_THROWS_AS(cache_roundtrip(path), std::runtime_error);
}

TEST_CASE("write_cache_file validates the declared order") {
  CoefficientCacheFile file;
  file.weight_token = "12";
  file.order = 5;
  file.values = {Int(1)};
  CHECK_THROWS_AS(write_cache_file(temp_file("bad.csv"), file), std::invalid_argument);
}

TEST_CASE("resolve_cache_dir precedence") {
  unsetenv("CUSPFORM_CACHE");
  CHECK(resolve_cache_dir("") == fs::path("cache"));
  setenv("CUSPFORM_CACHE", "/tmp/from-env", 1);
  CHECK(resolve_cache_dir("") == fs::path("/tmp/from-env"));
  CHECK(resolve_cache_dir("/tmp/from-flag") == fs::path("/tmp/from-flag"));
  unsetenv("CUSPFORM_CACHE");
}
