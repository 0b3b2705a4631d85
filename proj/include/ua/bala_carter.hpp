#pragma once

#include <vector>

#include "ua/group_spec.hpp"
#include "ua/partition.hpp"
#include "ua/root_system.hpp"

namespace ua {

/// Bala-Carter label: GL Levi factor sizes plus the distinguished Jordan type
/// of the classical factor.
///
/// For GL_n the classical slot holds the single block (n) when L = G and is
/// empty otherwise, so every class has exactly one label.
struct BCPair {
  Partition gl_factors;
  Partition dist_partition;

  friend bool operator==(const BCPair&, const BCPair&) = default;
  friend auto operator<=>(const BCPair& a, const BCPair& b) {
    if (auto c = a.dist_partition <=> b.dist_partition; c != 0) return c;
    return a.gl_factors <=> b.gl_factors;
  }
};

/// Jordan types of distinguished Richardson classes of g.
///
/// For SO_{2n+1} with p = 2 the gap condition on even positions i is applied
/// only while λ_i is nonzero. Rank 0 gives the trivial class ({} or {(1)}).
[[nodiscard]] std::vector<Partition> distinguished_partitions(const GroupSpec& g);

/// Every J with is_distinguished(rs, J), ordered by node mask.
[[nodiscard]] std::vector<ParabolicLabel> enumerate_distinguished_parabolics(const RootSystem& rs);

/// The classical factor of g left after removing GL factors summing to `gl_total`.
[[nodiscard]] GroupSpec classical_factor(const GroupSpec& g, int gl_total);

/// Throws DomainError unless `pair` labels a class in g.
void validate(const GroupSpec& g, const BCPair& pair);

/// Jordan type of the class obtained by extending the pair's Richardson class to G.
[[nodiscard]] Partition bc_image(const GroupSpec& g, const BCPair& pair);

/// Inverse of bc_image in good characteristic. p = 2 throws UnsupportedRegime.
[[nodiscard]] BCPair bc_label(const GroupSpec& g, const Partition& lambda);

/// All labels of g in good characteristic.
[[nodiscard]] std::vector<BCPair> bc_enumerate(const GroupSpec& g);

/// Whether dim L/Z separates the distinguished parabolics of rs.
[[nodiscard]] bool check_levi_dim_injectivity(const RootSystem& rs);

}  // namespace ua
