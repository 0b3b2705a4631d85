#include <doctest.h>

#include <algorithm>

#include "ua/class_catalog.hpp"
#include "ua/errors.hpp"
#include "ua/richardson.hpp"

using namespace ua;

namespace {

long long exact(const Partition& p, const GroupSpec& g, std::optional<int> singular = std::nullopt) {
  const DimRange d = centralizer_dim(ClassRecord{p, g, singular});
  REQUIRE(d.exact());
  return d.lo;
}

// Reachability closure of the cover relation.
std::vector<std::vector<bool>> reach(const ClassPoset& p) {
  const std::size_t n = p.nodes.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (const auto& [lo, hi] : p.covers) r[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (r[i][k] && r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

}  // namespace

TEST_CASE("centralizer examples") {
  CHECK(exact(Partition{3}, GroupSpec{Family::GL, 3, CharClass::Good}) == 3);
  CHECK(exact(Partition{2, 2}, GroupSpec{Family::Sp, 2, CharClass::Good}) == 4);
  CHECK(exact(Partition{3, 1, 1}, GroupSpec{Family::SOodd, 2, CharClass::Good}) == 4);
  CHECK(exact(Partition{2, 2}, GroupSpec{Family::Sp, 2, CharClass::Two}, 2) == 6);
  const DimRange open = centralizer_dim(ClassRecord{Partition{2, 2}, GroupSpec{Family::Sp, 2, CharClass::Two}, std::nullopt});
  CHECK(open == DimRange{4, 6});
  CHECK_THROWS_AS(static_cast<void>(centralizer_dim(
                      ClassRecord{Partition{2, 2, 1}, GroupSpec{Family::SOodd, 2, CharClass::Two}, std::nullopt})),
                  UnsupportedRegime);
  CHECK_THROWS_AS(static_cast<void>(centralizer_dim(ClassRecord{Partition{3, 1}, GroupSpec{Family::Sp, 2, CharClass::Good}, std::nullopt})),
                  DomainError);
  CHECK_THROWS_AS(static_cast<void>(centralizer_dim(ClassRecord{Partition{2, 2}, GroupSpec{Family::Sp, 2, CharClass::Two}, 3})),
                  DomainError);
}

TEST_CASE("class dimension examples") {
  for (Family f : {Family::GL, Family::Sp, Family::SOodd, Family::SOeven}) {
    const GroupSpec g{f, 3, CharClass::Good};
    const Partition trivial(std::vector<int>(static_cast<std::size_t>(g.natural_dim()), 1));
    CHECK(class_dim(ClassRecord{trivial, g, std::nullopt}) == DimRange{0, 0});
  }
  CHECK(class_dim(ClassRecord{Partition{4}, GroupSpec{Family::Sp, 2, CharClass::Good}, std::nullopt}) == DimRange{8, 8});
  CHECK(class_dim(ClassRecord{Partition{3, 3}, GroupSpec{Family::SOeven, 3, CharClass::Good}, std::nullopt}) ==
        DimRange{10, 10});
}

TEST_CASE("regular classes have centralizer dimension equal to the rank") {
  for (Family f : {Family::GL, Family::Sp, Family::SOodd, Family::SOeven}) {
    for (int n = 1; n <= 10; ++n) {
      const GroupSpec g{f, n, CharClass::Good};
      for (const auto& p : regular_partition(g)) CHECK(exact(p, g) == n);
    }
  }
}

TEST_CASE("dimension is strictly monotone along dominance") {
  for (Family f : {Family::Sp, Family::SOodd, Family::SOeven}) {
    for (int n = 1; n <= 8; ++n) {
      const GroupSpec g{f, n, CharClass::Good};
      const auto all = enumerate_class_partitions(g);
      std::vector<long long> dims;
      for (const auto& p : all) dims.push_back(class_dim(ClassRecord{p, g, std::nullopt}).lo);
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
          if (compare_dominance(all[i], all[j]) == Dominance::Less) REQUIRE(dims[i] < dims[j]);
        }
      }
    }
  }
}

TEST_CASE("closure poset examples") {
  const ClassPoset sp4 = closure_poset(GroupSpec{Family::Sp, 2, CharClass::Good});
  REQUIRE(sp4.nodes.size() == 4);
  const std::vector<Partition> chain{Partition{1, 1, 1, 1}, Partition{2, 1, 1}, Partition{2, 2}, Partition{4}};
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    const int lo = sp4.index_of(chain[k]);
    const int hi = sp4.index_of(chain[k + 1]);
    CHECK(std::find(sp4.covers.begin(), sp4.covers.end(), std::make_pair(lo, hi)) != sp4.covers.end());
  }
  CHECK(sp4.covers.size() == 3);

  const ClassPoset gl4 = closure_poset(GroupSpec{Family::GL, 4, CharClass::Good});
  CHECK(gl4.nodes.size() == 5);
  CHECK(gl4.covers.size() == 4);

  const ClassPoset gl6 = closure_poset(GroupSpec{Family::GL, 6, CharClass::Good});
  const auto a = static_cast<std::size_t>(gl6.index_of(Partition{3, 3}));
  const auto b = static_cast<std::size_t>(gl6.index_of(Partition{4, 1, 1}));
  CHECK_FALSE(gl6.below[a][b]);
  CHECK_FALSE(gl6.below[b][a]);
  CHECK(gl6.index_of(Partition{7}) == -1);

  CHECK_THROWS_AS(static_cast<void>(closure_poset(GroupSpec{Family::Sp, 2, CharClass::Two})), UnsupportedRegime);
  CHECK(closure_poset(GroupSpec{Family::GL, 3, CharClass::Two}).nodes.size() == 3);
}

TEST_CASE("covers reduce exactly to dominance; regular is the maximum and trivial the minimum") {
  for (Family f : {Family::GL, Family::Sp, Family::SOodd, Family::SOeven}) {
    for (int n = 1; n <= (f == Family::GL ? 10 : 5); ++n) {
      const GroupSpec g{f, n, CharClass::Good};
      const ClassPoset p = closure_poset(g);
      REQUIRE(reach(p) == p.below);
      const auto top = static_cast<std::size_t>(p.index_of(regular_partition(g).front()));
      const auto bottom =
          static_cast<std::size_t>(p.index_of(Partition(std::vector<int>(static_cast<std::size_t>(g.natural_dim()), 1))));
      for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        if (i != top) CHECK(p.below[i][top]);
        if (i != bottom) CHECK(p.below[bottom][i]);
      }
    }
  }
}

TEST_CASE("characteristic 2 bound contains every supplied singular count") {
  for (int n = 1; n <= 6; ++n) {
    const GroupSpec g{Family::Sp, n, CharClass::Two};
    for (const auto& p : enumerate_class_partitions(g)) {
      const DimRange open = centralizer_dim(ClassRecord{p, g, std::nullopt});
      for (int s = 0; s <= p.count_even_parts(); ++s) CHECK(open.contains(exact(p, g, s)));
    }
  }
}
