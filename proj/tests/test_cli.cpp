#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_tool(const std::string& args) {
  std::string command = std::string(CUSPFORM_TOOL_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  char buffer[4096];
  std::size_t read = 0;
  while ((read = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, read);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("cuspform_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string extract_field(const std::string& output, const std::string& key) {
  auto pos = output.find("\"" + key + "\"");
  if (pos == std::string::npos) return {};
  auto start = output.find(':', pos);
  auto end = output.find_first_of(",\n", start);
  return output.substr(start + 1, end - start - 1);
}

}  // namespace

TEST_CASE("coefficient lookups print exact values") {
  TempDir dir;
  std::string cache = " --cache-dir " + dir.path().string();

  auto r1 = run_tool("tau --weight 12 --n 7" + cache);
  CHECK(r1.exit_code == 0);
  CHECK(r1.output == "-16744\n");

  auto r2 = run_tool("tau --weight 18 --n 2" + cache);
  CHECK(r2.exit_code == 0);
  CHECK(r2.output == "-528\n");

  auto r3 = run_tool("tau --weight 12 --n 1" + cache);
  CHECK(r3.exit_code == 0);
  CHECK(r3.output == "1\n");

  auto r4 = run_tool("tau --weight 12 --range 6:8" + cache);
  CHECK(r4.exit_code == 0);
  CHECK(r4.output == "6,-6048\n7,-16744\n8,84480\n");

  auto r5 = run_tool("tau --weight 11 --n 2" + cache);
  CHECK(r5.exit_code == 2);

  auto r6 = run_tool("tau --weight 12" + cache);
  CHECK(r6.exit_code == 2);
}

TEST_CASE("expansions write round-trippable coefficient files") {
  TempDir dir;
  auto eta_path = (dir.path() / "eta.csv").string();
  auto r1 = run_tool("expand eta --terms 7 --out " + eta_path);
  CHECK(r1.exit_code == 0);
  std::ifstream in(eta_path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == "1/2,7\n1,-1\n2,-1\n3,0\n4,0\n5,1\n6,0\n7,1\n");

  auto e4_path = (dir.path() / "e4.csv").string();
  auto r2 = run_tool("expand eisenstein --w 4 --terms 2 --out " + e4_path);
  CHECK(r2.exit_code == 0);
  std::ifstream e4(e4_path);
  std::string e4_text((std::istreambuf_iterator<char>(e4)), std::istreambuf_iterator<char>());
  CHECK(contains(e4_text, "1,240"));
  CHECK(contains(e4_text, "2,2160"));

  auto tau_path = (dir.path() / "tau.csv").string();
  auto r3 = run_tool("expand eta-power --r 24 --terms 8 --out " + tau_path);
  CHECK(r3.exit_code == 0);
  std::ifstream tp(tau_path);
  std::string tau_text((std::istreambuf_iterator<char>(tp)), std::istreambuf_iterator<char>());
  CHECK(contains(tau_text, "7,84480"));

  auto r4 = run_tool("cache-roundtrip " + eta_path);
  CHECK(r4.exit_code == 0);
  CHECK(contains(r4.output, "roundtrip ok"));

  std::ofstream truncated(eta_path, std::ios::trunc);
  truncated << "1/2,7\n1,-1\n";
  truncated.close();
  auto r5 = run_tool("cache-roundtrip " + eta_path);
  CHECK(r5.exit_code == 1);
  CHECK(contains(r5.output, "line"));

  auto r6 = run_tool("expand eisenstein --w 12 --terms 2 --out " +
                     (dir.path() / "e12.csv").string());
  CHECK(r6.exit_code == 2);
}

TEST_CASE("verification suites succeed and emit reports") {
  auto r1 = run_tool("verify congruence --weight 12 --limit 1000");
  CHECK(r1.exit_code == 0);
  CHECK(contains(r1.output, "\"kind\": \"congruence\""));
  CHECK(extract_field(r1.output, "violations") == " 0");

  auto r2 = run_tool("verify hecke --weight 12 --limit 30");
  CHECK(r2.exit_code == 0);
  CHECK(extract_field(r2.output, "checked") == " 900");

  auto r3 = run_tool("verify deligne --weight 26 --limit 1000");
  CHECK(r3.exit_code == 0);

  auto r4 = run_tool("verify odd-square --weight 16 --limit 2000");
  CHECK(r4.exit_code == 0);

  auto r5 = run_tool("verify spectral --weight 12 --limit 10");
  CHECK(r5.exit_code == 2);
}

TEST_CASE("scans respect expectation flags and replay digests") {
  auto r1 = run_tool("scan lehmer --weight 12 --limit 2000 --expect-empty");
  CHECK(r1.exit_code == 0);
  CHECK(contains(r1.output, "\"kind\": \"lehmer-scan\""));

  auto r2 = run_tool("scan residue --weight 12 --q 2 --a 0 --limit 2000");
  CHECK(r2.exit_code == 0);
  CHECK(contains(r2.output, "\"ratio-exact\": \"1\""));

  auto r3 = run_tool("scan signs --weight 12 --limit 7");
  CHECK(r3.exit_code == 0);
  CHECK(extract_field(r3.output, "positive") == " 2");
  CHECK(extract_field(r3.output, "negative") == " 2");

  auto r4 = run_tool("scan nonordinary --weight 12 --limit 3000");
  CHECK(r4.exit_code == 0);
  auto digest_a = extract_field(r4.output, "input_digest");
  auto r5 = run_tool("scan nonordinary --weight 12 --limit 3000");
  auto digest_b = extract_field(r5.output, "input_digest");
  CHECK(digest_a == digest_b);
  CHECK_FALSE(digest_a.empty());

  auto r6 = run_tool("scan values --weight 12 --limit 1000");
  CHECK(r6.exit_code == 0);
}

TEST_CASE("curve derivations and back substitution drive exit codes") {
  auto r1 = run_tool("dioph derive --t 2");
  CHECK(r1.exit_code == 0);
  CHECK(extract_field(r1.output, "elimination-consistent") == " 1");
  CHECK(contains(r1.output, "paper-discrepancy"));

  auto r2 = run_tool("dioph backsub --t 2 --x=-687 --y 474727");
  CHECK(r2.exit_code == 0);
  CHECK(contains(r2.output, "\"validated-u\": \"-690\""));
  CHECK(contains(r2.output, "\"quadratic-solution\": \"688\""));
  CHECK(contains(r2.output, "\"factorization\": \"2^4*43\""));

  auto r3 = run_tool("dioph backsub --t 2 --x=-695 --y 480255");
  CHECK(r3.exit_code == 1);

  auto r4 = run_tool("dioph witness --weight 12 --p 2");
  CHECK(r4.exit_code == 0);
  CHECK(contains(r4.output, "\"residual\": \"0\""));

  auto r5 = run_tool("dioph points --t 2 --x-bound 1000");
  CHECK(r5.exit_code == 0);
  CHECK(extract_field(r5.output, "points") == " 3");

  auto r6 = run_tool("dioph derive");
  CHECK(r6.exit_code == 2);
}

TEST_CASE("usage errors and help behave consistently") {
  CHECK(run_tool("--help").exit_code == 0);
  CHECK(run_tool("").exit_code == 2);
  CHECK(run_tool("unknown-subcommand").exit_code == 2);
  CHECK(run_tool("scan unknown-kind --weight 12").exit_code == 2);
}
