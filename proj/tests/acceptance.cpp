#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <iostream>

#include "ghj/cli.hpp"

int main() {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / ("ghj-acceptance-" + std::to_string(::getpid()));
  ghj::cli::Cache cache(dir);
  ghj::cli::Workspace ws(&cache);
  int failed = 0;
  ghj::cli::run_acceptance(ws, [&](const ghj::cli::CheckResult& r) {
    if (!r.passed) ++failed;
    std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name;
    if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
    std::cout << std::endl;
  });
  std::error_code ec;
  fs::remove_all(dir, ec);
  std::cout << (failed ? "acceptance: FAILED " + std::to_string(failed) : std::string("acceptance: all passed"))
            << std::endl;
  return failed ? 1 : 0;
}
