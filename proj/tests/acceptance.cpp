#include <iostream>

#include "xcoh/jobs.hpp"

int main() {
  auto run = xcoh::run_selftest({});
  for (const auto& r : run.results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << "\n";
    for (const auto& d : r.details) std::cout << "    " << d << "\n";
  }
  std::cout << (run.ok() ? "all criteria pass" : "some criteria fail") << "\n";
  return run.ok() ? 0 : 1;
}
