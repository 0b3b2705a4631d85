#pragma once

#include <vector>

#include "ua/group_spec.hpp"
#include "ua/partition.hpp"
#include "ua/root_system.hpp"

namespace ua {

/// Checks sum(gl_parts) + cl_rank == rank and cl_rank == 0 for GL.
void validate_levi(const GroupSpec& g, const LeviDatum& levi);

/// ψ(Λ): the multiset whose dual is the Richardson Jordan type.
///
/// Parts are processed by size j with multiplicity c(j), each emitting the
/// row of the Jordan-block table selected by family and characteristic;
/// zero parts are dropped. SO_{2n+1} with p = 2 has no row of its own and
/// throws UnsupportedRegime (use richardson_partition).
[[nodiscard]] Partition psi_image(const GroupSpec& g, const LeviDatum& levi);

/// Jordan type of the Richardson class of a parabolic with Levi datum `levi`.
///
/// SO_{2n+1} with p = 2 uses the Sp_{2n} rule on the same Levi datum and
/// appends a single block of size 1. O_{2n} uses the SO_{2n} rule.
[[nodiscard]] Partition richardson_partition(const GroupSpec& g, const LeviDatum& levi);

/// The ψ image actually dualised by richardson_partition (for SO_{2n+1},
/// p = 2 this is the symplectic one).
[[nodiscard]] Partition richardson_psi(const GroupSpec& g, const LeviDatum& levi);

/// Jordan types of the regular unipotent classes. O_{2n} with p = 2 has two.
[[nodiscard]] std::vector<Partition> regular_partition(const GroupSpec& g);

/// Levi datum λ* ⊕ 0 whose Richardson class in GL_n has Jordan type λ.
[[nodiscard]] LeviDatum gl_richardson_preimage(const Partition& lambda);

/// Number of terms ℓ of a natural flag for the parabolic.
[[nodiscard]] int natural_flag_length(const GroupSpec& g, const LeviDatum& levi);

}  // namespace ua
