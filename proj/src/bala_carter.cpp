#include "ua/bala_carter.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ua/errors.hpp"

namespace ua {

namespace {

bool distinct_parts(const Partition& p) {
  for (std::size_t i = 1; i < p.length(); ++i) {
    if (p.part(i) == p.part(i - 1)) return false;
  }
  return true;
}

bool all_parts_have_parity(const Partition& p, int parity) {
  return std::all_of(p.parts().begin(), p.parts().end(), [&](int v) { return v % 2 == parity; });
}

bool multiplicities_at_most_two(const Partition& p) {
  for (int v : p.parts()) {
    if (p.multiplicity(v) > 2) return false;
  }
  return true;
}

// Gap condition at even 1-based positions i: λ_i - λ_{i+1} >= 4.
// `require_next_nonzero` selects the SO_{2n} guard (λ_{i+1} != 0); otherwise the
// condition applies whenever λ_i != 0.
bool even_position_gaps(const Partition& p, bool require_next_nonzero) {
  for (std::size_t i = 2; i <= p.length(); i += 2) {
    const int here = p.part(i - 1);
    const int next = p.part(i);
    const bool applies = require_next_nonzero ? next != 0 : here != 0;
    if (applies && here - next < 4) return false;
  }
  return true;
}

}  // namespace

std::vector<Partition> distinguished_partitions(const GroupSpec& g) {
  validate(g);
  const bool two = g.char_class == CharClass::Two;
  std::vector<Partition> out;
  switch (g.family) {
    case Family::GL:
      out.push_back(Partition{g.rank});
      return out;
    case Family::Sp:
      for (auto& p : partitions_of(2 * g.rank)) {
        if (distinct_parts(p) && all_parts_have_parity(p, 0)) out.push_back(std::move(p));
      }
      return out;
    case Family::SOeven:
      for (auto& p : partitions_of(2 * g.rank)) {
        const bool ok = two ? (p.length() % 2 == 0 && all_parts_have_parity(p, 0) && multiplicities_at_most_two(p) &&
                               even_position_gaps(p, true))
                            : (distinct_parts(p) && all_parts_have_parity(p, 1));
        if (ok) out.push_back(std::move(p));
      }
      return out;
    case Family::SOodd:
      if (!two) {
        for (auto& p : partitions_of(2 * g.rank + 1)) {
          if (distinct_parts(p) && all_parts_have_parity(p, 1)) out.push_back(std::move(p));
        }
        return out;
      }
      for (auto& p : partitions_of(2 * g.rank)) {
        if (all_parts_have_parity(p, 0) && multiplicities_at_most_two(p) && even_position_gaps(p, false)) {
          out.push_back(p.merged(Partition{1}));
        }
      }
      return out;
    case Family::Oeven:
      break;
  }
  throw DomainError("distinguished partitions are tabulated for GL, SO and Sp only");
}

std::vector<ParabolicLabel> enumerate_distinguished_parabolics(const RootSystem& rs) {
  if (rs.rank() > 24) throw DomainError("subset enumeration is limited to rank <= 24");
  std::vector<ParabolicLabel> out;
  for (std::uint64_t mask = 0; mask <= rs.full_mask(); ++mask) {
    const ParabolicLabel j(mask);
    if (is_distinguished(rs, j)) out.push_back(j);
  }
  return out;
}

GroupSpec classical_factor(const GroupSpec& g, int gl_total) {
  return GroupSpec{g.family, g.rank - gl_total, g.char_class};
}

void validate(const GroupSpec& g, const BCPair& pair) {
  validate(g);
  if (g.family == Family::GL) {
    const bool whole_group = pair.gl_factors.empty() && pair.dist_partition == Partition{g.rank};
    const bool proper_levi =
        pair.dist_partition.empty() && pair.gl_factors.length() >= 2 && pair.gl_factors.sum() == g.rank;
    if (!whole_group && !proper_levi) {
      throw DomainError("GL_n labels are (gl empty, dist = (n)) or (gl with >= 2 parts summing to n, dist empty)");
    }
    return;
  }
  if (g.family == Family::Oeven) throw DomainError("Bala-Carter labels are modelled for GL, SO and Sp only");
  const int gl_total = pair.gl_factors.sum();
  if (2 * gl_total + pair.dist_partition.sum() != g.natural_dim()) {
    throw DomainError("pair does not fill the natural module of " + to_string(g));
  }
  const GroupSpec cl = classical_factor(g, gl_total);
  if (cl.rank < 0) throw DomainError("GL factors exceed the rank");
  const auto dist = distinguished_partitions(cl);
  if (std::find(dist.begin(), dist.end(), pair.dist_partition) == dist.end()) {
    throw DomainError("(" + to_string(pair.dist_partition) + ") is not a distinguished class of " + to_string(cl));
  }
}

Partition bc_image(const GroupSpec& g, const BCPair& pair) {
  validate(g, pair);
  if (g.family == Family::GL) return pair.gl_factors.merged(pair.dist_partition);
  return pair.gl_factors.merged(pair.gl_factors).merged(pair.dist_partition);
}

BCPair bc_label(const GroupSpec& g, const Partition& lambda) {
  validate(g);
  if (!satisfies_parity(lambda, g)) {
    throw DomainError(to_string(lambda) + " violates the parity conditions of " + to_string(g));
  }
  if (g.family == Family::GL) {
    if (lambda.length() == 1) return BCPair{Partition{}, lambda};
    return BCPair{lambda, Partition{}};
  }
  if (g.char_class == CharClass::Two) {
    throw UnsupportedRegime("Bala-Carter labels in characteristic 2 involve singularity data that is not modelled");
  }
  if (g.family == Family::Oeven) throw DomainError("Bala-Carter labels are modelled for GL, SO and Sp only");

  // Sp keeps even sizes of odd multiplicity as the distinguished part; SO keeps odd ones.
  const int dist_parity = g.family == Family::Sp ? 0 : 1;
  std::map<int, int> mult;
  for (int v : lambda.parts()) ++mult[v];
  std::vector<int> gl;
  std::vector<int> dist;
  for (const auto& [j, c] : mult) {
    const bool to_dist = j % 2 == dist_parity && c % 2 == 1;
    if (to_dist) dist.push_back(j);
    for (int k = 0; k < (c - (to_dist ? 1 : 0)) / 2; ++k) gl.push_back(j);
  }
  return BCPair{Partition(std::move(gl)), Partition(std::move(dist))};
}

std::vector<BCPair> bc_enumerate(const GroupSpec& g) {
  validate(g);
  std::vector<BCPair> out;
  if (g.family == Family::GL) {
    out.push_back(BCPair{Partition{}, Partition{g.rank}});
    for (auto& p : partitions_of(g.rank)) {
      if (p.length() >= 2) out.push_back(BCPair{std::move(p), Partition{}});
    }
    return out;
  }
  if (g.char_class == CharClass::Two) {
    throw UnsupportedRegime("Bala-Carter enumeration is a bijection only in good characteristic");
  }
  if (g.family == Family::Oeven) throw DomainError("Bala-Carter labels are modelled for GL, SO and Sp only");
  for (int k = 0; k <= g.rank; ++k) {
    const GroupSpec cl{g.family, k, g.char_class};
    const auto dists = distinguished_partitions(cl);
    if (dists.empty()) continue;
    const auto gls = partitions_of(g.rank - k);
    for (const auto& d : dists) {
      for (const auto& l : gls) out.push_back(BCPair{l, d});
    }
  }
  return out;
}

bool check_levi_dim_injectivity(const RootSystem& rs) {
  std::set<int> dims;
  for (const auto& j : enumerate_distinguished_parabolics(rs)) {
    if (!dims.insert(radical_dims(rs, j).dim_l_mod_z).second) return false;
  }
  return true;
}

}  // namespace ua
