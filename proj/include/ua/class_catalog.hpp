#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ua/group_spec.hpp"
#include "ua/partition.hpp"

namespace ua {

struct ClassRecord {
  Partition partition;
  GroupSpec group;
  /// Number of even parts that are singular; only meaningful for p = 2.
  std::optional<int> singular_even_count;
};

/// Checks parity and the singular-count bound. Throws DomainError.
void validate(const ClassRecord& rec);

/// Closed interval; lo == hi when the value is exact.
struct DimRange {
  long long lo = 0;
  long long hi = 0;

  [[nodiscard]] bool exact() const { return lo == hi; }
  [[nodiscard]] bool contains(long long v) const { return lo <= v && v <= hi; }
  friend bool operator==(const DimRange&, const DimRange&) = default;
};

/// Σ (λ*_i)² over the dual partition.
[[nodiscard]] long long dual_square_sum(const Partition& p);

/// Centralizer dimension of a unipotent element with the recorded Jordan type.
///
/// Good characteristic uses the classical formulas. For p = 2 in Sp / SO_{2n} / O_{2n}
/// the value is the complex symplectic formula on the same Jordan blocks plus
/// the number of singular even parts; without singularity data the result is
/// the interval [base, base + #even parts]. SO_{2n+1} with p = 2 is refused.
[[nodiscard]] DimRange centralizer_dim(const ClassRecord& rec);

/// dim G minus the centralizer dimension.
[[nodiscard]] DimRange class_dim(const ClassRecord& rec);

/// Unipotent classes ordered by dominance of their Jordan types.
struct ClassPoset {
  GroupSpec group;
  std::vector<ClassRecord> nodes;          // descending lexicographic
  std::vector<std::vector<bool>> below;    // below[i][j]: node i < node j
  std::vector<std::pair<int, int>> covers; // (lower, upper), transitive reduction

  [[nodiscard]] int index_of(const Partition& p) const;  // -1 when absent
};

/// Refuses p = 2 outside GL with UnsupportedRegime.
[[nodiscard]] ClassPoset closure_poset(const GroupSpec& g);

}  // namespace ua
