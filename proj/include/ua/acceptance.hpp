#pragma once

#include <string>
#include <vector>

namespace ua::acceptance {

struct Outcome {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;
};

inline constexpr int kCriteria = 11;

/// Runs one numbered criterion (1..kCriteria). A criterion passes only if its
/// checks hold and it finishes inside its time limit.
[[nodiscard]] Outcome run(int id);
[[nodiscard]] std::vector<Outcome> run_all();

/// `PASS  3  dimension identity ...  (0.12 s, limit 30 s)  detail`
[[nodiscard]] std::string format_line(const Outcome& o);

}  // namespace ua::acceptance
