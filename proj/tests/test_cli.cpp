// Drives the normcomm binary and checks exit codes and output shape.
// Usage: test_cli <path-to-normcomm>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

std::string binary;
int failures = 0;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = binary + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void expect(bool ok, const std::string& what) {
  std::cout << (ok ? "ok   " : "FAIL ") << what << '\n';
  if (!ok) ++failures;
}

void expect_code(const std::string& args, int code) {
  const auto r = run(args);
  expect(r.code == code, "exit " + std::to_string(code) + " <- " + args + " (got " +
                             std::to_string(r.code) + ")");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: test_cli <normcomm>\n";
    return 2;
  }
  binary = argv[1];
  using nlohmann::json;

  expect_code("catalog list", 0);
  expect_code("catalog show S3 --format json", 0);
  expect_code("catalog show nothing", 2);
  expect_code("compute --algebra A5 --h '(1 2)(3 4)'", 2);
  expect_code("compute --algebra A5 --h '(1 2)' --k @K", 2);
  expect_code("compute --algebra A5 --h '(1 9)' --k @K", 2);
  expect_code("compute --algebra M3-absorbing --h all --k all", 3);
  expect_code("classify --algebra S3 --k '(1 2)'", 0);
  expect_code("verify --suite nothing", 2);
  expect_code("verify --suite oracle --pair-cap 8 --budget 10", 1);
  expect_code("examples", 0);

  {
    const auto r = run("compute --algebra A5 --h @H --k @K --oracle --format json");
    const auto j = json::parse(r.out, nullptr, false);
    expect(r.code == 0 && !j.is_discarded(), "compute emits JSON");
    if (!j.is_discarded()) {
      expect(j["higgins"]["order"] == 3, "A5 Higgins order 3");
      expect(j["huq"]["order"] == 60, "A5 Huq order 60");
      expect(j["oracle"]["stabilized"] == true, "A5 oracle stabilized");
    }
  }
  {
    const auto r = run("classify --algebra M3-absorbing --k @K --format json");
    const auto j = json::parse(r.out, nullptr, false);
    expect(!j.is_discarded() && j["is_seminormal"] == true && j["is_kernel"] == false,
           "monoid separation via classify");
  }
  {
    const auto a = run("verify --suite examples --format json");
    const auto b = run("verify --suite examples --format json --serial");
    const auto ja = json::parse(a.out, nullptr, false);
    const auto jb = json::parse(b.out, nullptr, false);
    expect(!ja.is_discarded() && !jb.is_discarded() && ja["records"] == jb["records"],
           "verify records independent of execution mode");
  }
  {
    const auto r = run("compute --algebra S3 --h '(1 2)' --k '(1 2 3)'");
    expect(r.out.find("higgins:") != std::string::npos, "text output renders keys");
  }

  std::cout << (failures == 0 ? "all CLI checks passed" : "CLI checks failed") << '\n';
  return failures == 0 ? 0 : 1;
}
