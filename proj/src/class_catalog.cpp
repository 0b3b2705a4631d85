#include "ua/class_catalog.hpp"

#include "ua/errors.hpp"

namespace ua {

void validate(const ClassRecord& rec) {
  if (!satisfies_parity(rec.partition, rec.group)) {
    throw DomainError(to_string(rec.partition) + " violates the parity conditions of " + to_string(rec.group));
  }
  if (rec.singular_even_count) {
    const int s = *rec.singular_even_count;
    if (s < 0 || s > rec.partition.count_even_parts()) {
      throw DomainError("singular even count " + std::to_string(s) + " exceeds the even parts of " +
                        to_string(rec.partition));
    }
  }
}

long long dual_square_sum(const Partition& p) {
  const Partition d = dual(p);
  long long s = 0;
  for (int v : d.parts()) s += static_cast<long long>(v) * v;
  return s;
}

DimRange centralizer_dim(const ClassRecord& rec) {
  validate(rec);
  const Partition& l = rec.partition;
  const long long sq = dual_square_sum(l);
  const long long odd = l.count_odd_parts();
  const bool two = rec.group.char_class == CharClass::Two;

  switch (rec.group.family) {
    case Family::GL:
      return {sq, sq};
    case Family::Sp:
    case Family::SOeven:
    case Family::Oeven:
      if (!two) {
        const long long v = rec.group.family == Family::Sp ? (sq + odd) / 2 : (sq - odd) / 2;
        return {v, v};
      }
      break;
    case Family::SOodd:
      if (two) throw UnsupportedRegime("centralizer dimensions for SO_{2n+1} with p=2 are not modelled");
      return {(sq - odd) / 2, (sq - odd) / 2};
  }
  const long long base = (sq + odd) / 2;
  if (rec.singular_even_count) return {base + *rec.singular_even_count, base + *rec.singular_even_count};
  return {base, base + l.count_even_parts()};
}

DimRange class_dim(const ClassRecord& rec) {
  const DimRange c = centralizer_dim(rec);
  const long long g = rec.group.dim();
  return {g - c.hi, g - c.lo};
}

int ClassPoset::index_of(const Partition& p) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].partition == p) return static_cast<int>(i);
  }
  return -1;
}

ClassPoset closure_poset(const GroupSpec& g) {
  validate(g);
  if (g.char_class == CharClass::Two && g.family != Family::GL) {
    throw UnsupportedRegime("closure order in characteristic 2 for " + to_string(g) +
                            " is outside the modelled (good characteristic) regime");
  }
  ClassPoset poset;
  poset.group = g;
  for (auto& p : enumerate_class_partitions(g)) poset.nodes.push_back(ClassRecord{std::move(p), g, std::nullopt});

  const std::size_t n = poset.nodes.size();
  poset.below.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      poset.below[i][j] = compare_dominance(poset.nodes[i].partition, poset.nodes[j].partition) == Dominance::Less;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!poset.below[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) covered = !(poset.below[i][k] && poset.below[k][j]);
      if (covered) poset.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return poset;
}

}  // namespace ua
