#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ua/gf.hpp"
#include "ua/group_spec.hpp"
#include "ua/partition.hpp"
#include "ua/root_system.hpp"

namespace ua::oracle {

/// Natural module F_q^N of a split classical group.
///
/// Basis order is e_1..e_n, (w), f_n..f_1, so coordinate i pairs with N-1-i
/// (zero-based). The Gram matrix is antidiagonal with sign[i] at (i, N-1-i):
/// +1 throughout for the orthogonal families, +1 then -1 for Sp. Orthogonal
/// spaces over even q use the quadratic form Σ x_i x_{N-1-i} over i < n.
struct FormSpace {
  Family family = Family::GL;
  int n = 0;
  int q = 2;
  int dim = 0;
  std::vector<std::uint8_t> sign;  // empty for GL
  bool quadratic = false;

  [[nodiscard]] const gf::Field& field() const { return gf::field(q); }
  [[nodiscard]] bool has_form() const { return family != Family::GL; }
  [[nodiscard]] gf::Matrix gram() const;
  [[nodiscard]] std::uint8_t beta(const std::uint8_t* u, const std::uint8_t* v) const;
  [[nodiscard]] std::uint8_t phi(const std::uint8_t* u) const;
  /// The group whose Jordan types the space realises (O_{2n} rules when q is even).
  [[nodiscard]] GroupSpec parity_group() const;
};

/// Throws DomainError for unsupported q and UnsupportedRegime for SO_{2n+1} over even q.
[[nodiscard]] FormSpace build_space(Family family, int n, int q);

/// Natural flag of a parabolic as block sizes of consecutive basis vectors.
struct FlagSpec {
  std::vector<int> blocks;  // factor dimensions d_i - d_{i-1}

  [[nodiscard]] std::vector<int> dims() const;  // d_1 < ... < d_l = N
  [[nodiscard]] int length() const { return static_cast<int>(blocks.size()); }
};

[[nodiscard]] FlagSpec flag_for(const FormSpace& fs, const LeviDatum& levi);

/// dim Q = (dim G - dim L) / 2.
[[nodiscard]] int radical_dimension(const FormSpace& fs, const LeviDatum& levi);

struct EnumerationOptions {
  std::uint64_t budget = 1'000'000;
  /// When set, draw this many samples instead of enumerating exhaustively.
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 1;
};

/// Visitor returns false to stop early.
using Visitor = std::function<bool(const gf::Matrix&)>;

/// Every element of the unipotent radical (matrices acting trivially on each
/// flag factor and preserving the form), or seeded samples of it.
///
/// Exhaustive mode throws BudgetExceeded when q^{dim Q} exceeds the budget.
/// Returns the number of matrices visited.
std::uint64_t enumerate_radical(const FormSpace& fs, const LeviDatum& levi, const EnumerationOptions& opts,
                                const Visitor& visit);

/// Jordan type of a unipotent matrix. Throws DomainError otherwise.
[[nodiscard]] Partition jordan_type(const gf::Field& f, const gf::Matrix& g);

/// g^T B g = B, and φ∘g = φ for quadratic spaces.
[[nodiscard]] bool preserves_form(const FormSpace& fs, const gf::Matrix& g);
/// (g - 1) W_i ⊆ W_{i-1} for every step of the flag.
[[nodiscard]] bool acts_trivially_on_factors(const FormSpace& fs, const FlagSpec& flag, const gf::Matrix& g);

struct Report {
  bool all_le = true;
  bool attained = false;
  bool parity_ok = true;
  bool exhaustive = true;
  std::uint64_t attained_count = 0;
  std::uint64_t total = 0;
  int q = 0;
  int dim_q = 0;
  std::vector<Partition> observed;  // distinct Jordan types, descending lexicographic

  [[nodiscard]] bool passed() const { return all_le && attained; }
};

/// Scans the radical and compares every Jordan type against `predicted`.
[[nodiscard]] Report verify_richardson(const FormSpace& fs, const LeviDatum& levi, const Partition& predicted,
                                       const EnumerationOptions& opts = {});

/// Runs verify_richardson at q, then at the larger admissible orders of the
/// same characteristic class from {2, 3, 4, 5} while the prediction is not attained.
[[nodiscard]] Report verify_with_retry(Family family, int n, int q, const LeviDatum& levi, const Partition& predicted,
                                       const EnumerationOptions& opts = {});

/// Whether a Jordan chain v_1..v_x of g with β(v_1, v_x) != 0 turns up among
/// `attempts` random chain tops. Throws DomainError if x is not a part.
[[nodiscard]] bool chain_nonsingular_witness(const FormSpace& fs, const gf::Matrix& g, int x, std::uint64_t seed = 1,
                                             int attempts = 1000);

}  // namespace ua::oracle
