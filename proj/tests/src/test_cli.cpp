#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

const char* kCli = XIDEFORM_CLI_PATH;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args, const fs::path& cache) {
  fs::path log = fs::temp_directory_path() / "xideform_cli_test.log";
  std::string cmd = "XIDEFORM_CACHE_DIR='" + cache.string() + "' '" +
                    std::string(kCli) + "' " + args + " > '" + log.string() +
                    "' 2>&1";
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = (raw == -1) ? -1 : WEXITSTATUS(raw);
  std::ifstream in(log);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("xideform_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval prints a value and exits cleanly") {
  TempDir tmp;
  auto r = run("eval --spec zeta --what f --s 2 --digits 25", tmp.path);
  CHECK(r.code == 0);
  CHECK(r.out.find("1.6449340668482264") != std::string::npos);
  auto x = run("eval --spec chi4 --what xif --s 0.5+6i", tmp.path);
  CHECK(x.code == 0);
}

TEST_CASE("usage errors exit with 2, math refusals with 3") {
  TempDir tmp;
  CHECK(run("eval --spec zeta --nonsense", tmp.path).code == 2);
  CHECK(run("frobnicate", tmp.path).code == 2);
  // t > 0 is a domain refusal, not a parse error
  auto r = run("eval --spec zeta --what ft --s 2 --t 1", tmp.path);
  CHECK(r.code == 3);
  CHECK(r.out.find("DomainError") != std::string::npos);
}

TEST_CASE("zeros output is deterministic and cache-stable") {
  TempDir tmp;
  fs::path a = tmp.path / "a.csv";
  fs::path b = tmp.path / "b.csv";
  std::string base = "zeros --spec zeta --t -1 --what series "
                     "--strip -0.3:-0.2 --ymin 100 --ymax 110 --out ";
  auto r1 = run(base + "'" + a.string() + "'", tmp.path);
  REQUIRE(r1.code == 0);
  auto r2 = run(base + "'" + b.string() + "'", tmp.path);
  REQUIRE(r2.code == 0);
  std::string ca = slurp(a), cb = slurp(b);
  CHECK(!ca.empty());
  CHECK(ca == cb);
  // one zero in that window
  CHECK(ca.find("103.914") != std::string::npos);
  // second run was served from the cache
  CHECK(!fs::is_empty(tmp.path));
}

}
