#pragma once

// Deterministic enumeration of small integer coefficient vectors.

#include <cstdlib>
#include <string>
#include <vector>

namespace whopf {

/// Largest height used by coefficient searches: WHOPF_MAX_HEIGHT if set to a positive
/// integer, else 8.
inline int max_search_height() {
  if (const char* env = std::getenv("WHOPF_MAX_HEIGHT")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1 << 20) return static_cast<int>(v);
  }
  return 8;
}

/// Heights 1, 2, 4, ... up to and including `max_height`.
inline std::vector<int> search_heights(int max_height) {
  std::vector<int> out;
  for (int h = 1; h < max_height; h *= 2) out.push_back(h);
  out.push_back(max_height);
  return out;
}

/// Visits every integer vector of length m with max-norm in (previous, height], in a fixed
/// order: each coordinate runs through 1, -1, 2, -2, ..., height, -height, 0 with the first
/// coordinate varying slowest. Stops early when `visit` returns true; returns whether it did.
template <class F>
bool enumerate_height_shell(int m, int previous, int height, F&& visit) {
  std::vector<int> digits;
  for (int k = 1; k <= height; ++k) {
    digits.push_back(k);
    digits.push_back(-k);
  }
  digits.push_back(0);
  const std::size_t base = digits.size();
  std::vector<std::size_t> pos(static_cast<std::size_t>(m), 0);
  std::vector<int> v(static_cast<std::size_t>(m));
  while (true) {
    int norm = 0;
    for (int i = 0; i < m; ++i) {
      v[static_cast<std::size_t>(i)] = digits[pos[static_cast<std::size_t>(i)]];
      norm = std::max(norm, std::abs(v[static_cast<std::size_t>(i)]));
    }
    if (norm > previous && visit(v)) return true;
    int i = m - 1;
    while (i >= 0 && ++pos[static_cast<std::size_t>(i)] == base) pos[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return false;
  }
}

/// Runs the shells for heights 1, 2, 4, ..., max_height in turn.
template <class F>
bool enumerate_by_height(int m, int max_height, F&& visit) {
  int previous = 0;
  for (int h : search_heights(max_height)) {
    if (enumerate_height_shell(m, previous, h, visit)) return true;
    previous = h;
  }
  return false;
}

}  // namespace whopf
