#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ua/group_spec.hpp"

namespace ua {

/// Integer partition in canonical form: weakly decreasing, no zero parts.
///
/// Positional access past the last part reads as zero, which is how all
/// two-partition comparisons pad the shorter operand.
class Partition {
 public:
  Partition() = default;
  /// Accepts parts in any order; zeros are dropped and the rest sorted
  /// descending. Negative parts throw DomainError.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  [[nodiscard]] std::span<const int> parts() const { return parts_; }
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] int sum() const { return sum_; }
  /// Zero-padded, zero-based.
  [[nodiscard]] int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  [[nodiscard]] int largest() const { return part(0); }
  [[nodiscard]] int multiplicity(int value) const;
  [[nodiscard]] int count_even_parts() const;
  [[nodiscard]] int count_odd_parts() const;

  /// Multiset union.
  [[nodiscard]] Partition merged(const Partition& other) const;

  // Lexicographic on the padded part sequence; used only for ordering output.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

/// `4,2,1`, empty string for the empty partition.
[[nodiscard]] std::string to_string(const Partition& p);
/// Inverse of to_string; whitespace around numbers is tolerated.
[[nodiscard]] Partition parse_partition(std::string_view text);

/// λ*_i = #{j : λ_j >= i}.
[[nodiscard]] Partition dual(const Partition& p);

enum class Dominance { Less, Equal, Greater, Incomparable };
[[nodiscard]] std::string to_string(Dominance d);

/// Dominance order by prefix sums. Throws DomainError if the sums differ.
[[nodiscard]] Dominance compare_dominance(const Partition& a, const Partition& b);

/// Chain a = ν(0) < ν(1) < … < ν(r) = b in which consecutive members differ in
/// exactly two positions. Requires compare_dominance(a, b) == Less.
[[nodiscard]] std::vector<Partition> two_place_chain(const Partition& a, const Partition& b);

/// Number of (zero-padded) positions where a and b differ.
[[nodiscard]] std::size_t count_differing_places(const Partition& a, const Partition& b);

/// Every partition of n, in descending lexicographic order.
[[nodiscard]] std::vector<Partition> partitions_of(int n);

/// Jordan-type parity conditions of the natural module of g.
///
/// SO_{2n+1} in characteristic 2 is tested through Sp_{2n}: the partition must
/// contain a part 1 whose removal leaves a valid symplectic type.
[[nodiscard]] bool satisfies_parity(const Partition& p, const GroupSpec& g);

/// All parity-valid partitions of the natural-module dimension, descending lexicographic.
[[nodiscard]] std::vector<Partition> enumerate_class_partitions(const GroupSpec& g);

}  // namespace ua
