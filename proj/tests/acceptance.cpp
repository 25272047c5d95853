// Runs every acceptance criterion with exact arithmetic and prints one line per criterion.
// Exit status is nonzero if any criterion fails.

#include <iostream>

#include "whopf/zoo.hpp"

int main() {
  try {
    const auto results = whopf::run_acceptance_suite();
    bool all = true;
    for (const auto& r : results) {
      std::size_t ok = 0;
      for (const auto& c : r.cases) ok += c.passed ? 1 : 0;
      std::cout << "criterion " << r.id << ": " << (r.passed() ? "PASS" : "FAIL") << " - " << r.title << " ("
                << ok << "/" << r.cases.size() << ")\n";
      for (const auto& c : r.cases)
        if (!c.passed) std::cout << "    " << c.name << ": " << c.detail << "\n";
      all = all && r.passed();
    }
    return all ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << "\n";
    return 2;
  }
}
