#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ua/group_spec.hpp"
#include "ua/partition.hpp"

namespace ua {

enum class RootFamily { A, B, C, D, E6, E7, E8, F4, G2 };

[[nodiscard]] std::string to_string(RootFamily f);
/// `a`..`d` (rank given separately) or `e6`, `e7`, `e8`, `f4`, `g2`.
[[nodiscard]] RootFamily parse_root_family(std::string_view text);
/// Fixed rank of an exceptional family, 0 for the classical ones.
[[nodiscard]] int exceptional_rank(RootFamily f);

/// Coefficients of a root in the basis of simple roots, indexed by Bourbaki label - 1.
using RootVector = std::vector<int>;

/// Subset J of the Bourbaki node set {1, …, rank}.
class ParabolicLabel {
 public:
  ParabolicLabel() = default;
  explicit ParabolicLabel(std::uint64_t mask) : mask_(mask) {}
  /// From 1-based node indices.
  static ParabolicLabel from_nodes(const std::vector<int>& nodes);

  [[nodiscard]] bool contains(int node) const { return node >= 1 && ((mask_ >> (node - 1)) & 1U) != 0; }
  [[nodiscard]] std::uint64_t mask() const { return mask_; }
  [[nodiscard]] std::vector<int> nodes() const;
  [[nodiscard]] int size() const;

  friend bool operator==(const ParabolicLabel&, const ParabolicLabel&) = default;
  friend auto operator<=>(const ParabolicLabel&, const ParabolicLabel&) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Comma-separated Bourbaki indices; empty text is the Borel.
[[nodiscard]] ParabolicLabel parse_nodes(std::string_view text);
[[nodiscard]] std::string to_string(const ParabolicLabel& j);

/// Positive roots of an irreducible root system in simple-root coordinates.
/// Rank 0 of type A is accepted as the empty system (it backs GL_1).
class RootSystem {
 public:
  /// Generated by closing the simple roots under simple reflections.
  static RootSystem build(RootFamily family, int rank);

  [[nodiscard]] RootFamily family() const { return family_; }
  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const std::vector<RootVector>& positive_roots() const { return positive_; }
  /// Root with the largest height.
  [[nodiscard]] const RootVector& highest_root() const;
  [[nodiscard]] std::string name() const;

  /// Every J ⊆ Δ must fit in the mask.
  [[nodiscard]] std::uint64_t full_mask() const { return rank_ == 64 ? ~0ULL : ((1ULL << rank_) - 1); }
  [[nodiscard]] bool is_valid(const ParabolicLabel& j) const { return (j.mask() & ~full_mask()) == 0; }

 private:
  RootFamily family_ = RootFamily::A;
  int rank_ = 0;
  std::vector<RootVector> positive_;
};

/// Σ of the coefficients over nodes outside J.
[[nodiscard]] int p_height(const RootVector& root, const ParabolicLabel& j);

/// Whether every node in the support of `root` lies in J.
[[nodiscard]] bool supported_in(const RootVector& root, const ParabolicLabel& j);

struct RadicalDims {
  int dim_q = 0;             // #Φ(Q)
  int dim_q_mod_qprime = 0;  // roots of Φ(Q) with P-height 1
  int dim_l_mod_z = 0;       // rank + |Φ_J|

  friend bool operator==(const RadicalDims&, const RadicalDims&) = default;
};

[[nodiscard]] RadicalDims radical_dims(const RootSystem& rs, const ParabolicLabel& j);

/// dim L/Z equals the number of P-height-1 radical roots. No characteristic enters.
[[nodiscard]] bool is_distinguished(const RootSystem& rs, const ParabolicLabel& j);

/// Levi partition (n_1, …, n_s) ⊕ m of a parabolic.
struct LeviDatum {
  Partition gl_parts;
  int cl_rank = 0;

  [[nodiscard]] int total() const { return gl_parts.sum() + cl_rank; }
  friend bool operator==(const LeviDatum&, const LeviDatum&) = default;
};

/// Grammar `n1,n2,...+m`, with `+m` optional (m = 0) and an empty GL list allowed.
[[nodiscard]] LeviDatum parse_levi(std::string_view text);
[[nodiscard]] std::string to_string(const LeviDatum& levi);

/// Root system of g: A_{n-1} for GL_n, B_n, C_n, D_n for SO_{2n+1}, Sp_{2n}, SO_{2n} / O_{2n}.
[[nodiscard]] RootSystem root_system_for(const GroupSpec& g);

/// Levi partition of the standard parabolic P_J of g.
///
/// For D_n, a J containing exactly one fork node α_{n-1}, α_n is first moved by
/// the diagram automorphism so that it contains α_{n-1}; a classical factor
/// SO_{2m} appears only when both fork nodes lie in J.
[[nodiscard]] LeviDatum levi_partition(const RootSystem& rs, const ParabolicLabel& j, const GroupSpec& g);

/// Σ n_i² plus the dimension of the classical factor Cl_m.
[[nodiscard]] long long levi_dim(const GroupSpec& g, const LeviDatum& levi);

/// The D_n diagram automorphism exchanging α_{n-1} and α_n.
[[nodiscard]] ParabolicLabel fork_swap(const ParabolicLabel& j, int rank);

}  // namespace ua
