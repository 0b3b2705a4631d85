// Prints one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "ua/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<ua::acceptance::Outcome> outcomes;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) outcomes.push_back(ua::acceptance::run(std::stoi(argv[i])));
  } else {
    outcomes = ua::acceptance::run_all();
  }
  bool ok = true;
  for (const auto& o : outcomes) {
    std::cout << ua::acceptance::format_line(o) << "\n";
    ok = ok && o.passed;
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
