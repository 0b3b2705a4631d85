#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "ua/bala_carter.hpp"
#include "ua/errors.hpp"
#include "ua/richardson.hpp"

using namespace ua;

namespace {

std::set<Partition> as_set(const std::vector<Partition>& v) { return {v.begin(), v.end()}; }

bool distinct_parts(const Partition& p) {
  return std::adjacent_find(p.parts().begin(), p.parts().end()) == p.parts().end();
}

// Distinguished-class conditions written out directly.
std::set<Partition> expected_distinguished(const GroupSpec& g) {
  std::set<Partition> out;
  const int dim = g.natural_dim();
  for (const auto& p : partitions_of(dim)) {
    const auto& v = p.parts();
    bool ok = true;
    switch (g.family) {
      case Family::GL:
        ok = p.length() == 1;
        break;
      case Family::Sp:
        ok = distinct_parts(p) && std::all_of(v.begin(), v.end(), [](int x) { return x % 2 == 0; });
        break;
      case Family::SOodd:
      case Family::SOeven:
        if (g.char_class == CharClass::Good) {
          ok = distinct_parts(p) && std::all_of(v.begin(), v.end(), [](int x) { return x % 2 == 1; });
        } else if (g.family == Family::SOeven) {
          std::map<int, int> mult;
          for (int x : v) ++mult[x];
          ok = v.size() % 2 == 0;
          for (const auto& [x, m] : mult) ok = ok && x % 2 == 0 && m <= 2;
          for (std::size_t i = 2; i <= v.size(); i += 2) {
            if (p.part(i) != 0) ok = ok && p.part(i - 1) - p.part(i) >= 4;
          }
        } else {
          if (p.multiplicity(1) == 0) {
            ok = false;
            break;
          }
          std::vector<int> rest(v.begin(), v.end());
          rest.pop_back();
          const Partition lam(rest);
          std::map<int, int> mult;
          for (int x : rest) ++mult[x];
          for (const auto& [x, m] : mult) ok = ok && x % 2 == 0 && m <= 2;
          for (std::size_t i = 2; i <= rest.size(); i += 2) {
            if (lam.part(i - 1) != 0) ok = ok && lam.part(i - 1) - lam.part(i) >= 4;
          }
        }
        break;
      default:
        ok = false;
    }
    if (ok) out.insert(p);
  }
  return out;
}

Partition doubled(const Partition& gl) {
  std::vector<int> v;
  for (int x : gl.parts()) {
    v.push_back(x);
    v.push_back(x);
  }
  return Partition(v);
}

}  // namespace

TEST_CASE("distinguished partition examples") {
  CHECK(as_set(distinguished_partitions(GroupSpec{Family::Sp, 3, CharClass::Good})) ==
        std::set<Partition>{Partition{6}, Partition{4, 2}});
  CHECK(as_set(distinguished_partitions(GroupSpec{Family::Sp, 3, CharClass::Two})) ==
        std::set<Partition>{Partition{6}, Partition{4, 2}});
  CHECK(as_set(distinguished_partitions(GroupSpec{Family::SOeven, 4, CharClass::Good})) ==
        std::set<Partition>{Partition{7, 1}, Partition{5, 3}});
  CHECK(as_set(distinguished_partitions(GroupSpec{Family::SOeven, 4, CharClass::Two})) ==
        std::set<Partition>{Partition{6, 2}, Partition{4, 4}});
  CHECK(as_set(distinguished_partitions(GroupSpec{Family::SOodd, 4, CharClass::Two})) ==
        std::set<Partition>{Partition{8, 1}, Partition{4, 4, 1}});
  CHECK(as_set(distinguished_partitions(GroupSpec{Family::GL, 5, CharClass::Good})) == std::set<Partition>{Partition{5}});
}

TEST_CASE("distinguished partitions match the row conditions") {
  for (Family f : {Family::GL, Family::Sp, Family::SOodd, Family::SOeven}) {
    for (CharClass c : {CharClass::Good, CharClass::Two}) {
      for (int n = f == Family::SOeven ? 2 : 1; n <= 8; ++n) {
        const GroupSpec g{f, n, c};
        INFO(to_string(g));
        CHECK(as_set(distinguished_partitions(g)) == expected_distinguished(g));
      }
    }
  }
}

TEST_CASE("distinguished parabolic examples") {
  CHECK(enumerate_distinguished_parabolics(RootSystem::build(RootFamily::A, 4)) == std::vector<ParabolicLabel>{ParabolicLabel(0)});
  CHECK(enumerate_distinguished_parabolics(RootSystem::build(RootFamily::C, 3)) ==
        std::vector<ParabolicLabel>{ParabolicLabel(0), ParabolicLabel(std::uint64_t{1} << 1)});
  const auto g2 = enumerate_distinguished_parabolics(RootSystem::build(RootFamily::G2, 2));
  REQUIRE(g2.size() == 2);
  CHECK(g2[0] == ParabolicLabel(0));
  CHECK(g2[1].size() == 1);
}

TEST_CASE("distinguished partitions are the Richardson images of distinguished parabolics") {
  for (Family f : {Family::Sp, Family::SOodd, Family::SOeven}) {
    for (CharClass c : {CharClass::Good, CharClass::Two}) {
      for (int n = f == Family::SOeven ? 2 : 1; n <= 7; ++n) {
        const GroupSpec g{f, n, c};
        const RootSystem rs = root_system_for(g);
        std::set<Partition> images;
        std::size_t count = 0;
        for (const auto& j : enumerate_distinguished_parabolics(rs)) {
          images.insert(richardson_partition(g, levi_partition(rs, j, g)));
          ++count;
        }
        INFO(to_string(g));
        CHECK(images == as_set(distinguished_partitions(g)));
        CHECK(images.size() == count);
        CHECK(distinguished_partitions(g).size() ==
              distinguished_partitions(GroupSpec{f, n, c == CharClass::Good ? CharClass::Two : CharClass::Good}).size());
      }
    }
  }
}

TEST_CASE("bc_image examples") {
  CHECK(bc_image(GroupSpec{Family::Sp, 2, CharClass::Good}, BCPair{Partition{2}, Partition{}}) == Partition{2, 2});
  CHECK(bc_image(GroupSpec{Family::Sp, 3, CharClass::Good}, BCPair{Partition{}, Partition{4, 2}}) == Partition{4, 2});
  CHECK(bc_image(GroupSpec{Family::Sp, 2, CharClass::Good}, BCPair{Partition{1}, Partition{2}}) == Partition{2, 1, 1});
  CHECK(bc_image(GroupSpec{Family::Sp, 2, CharClass::Good}, BCPair{Partition{2}, Partition{}}) ==
        richardson_partition(GroupSpec{Family::Sp, 2, CharClass::Good}, {Partition{2}, 0}));
  CHECK_THROWS_AS(static_cast<void>(bc_image(GroupSpec{Family::Sp, 2, CharClass::Good}, BCPair{Partition{1}, Partition{1, 1}})),
                  DomainError);
  CHECK_THROWS_AS(static_cast<void>(bc_image(GroupSpec{Family::Sp, 2, CharClass::Good}, BCPair{Partition{3}, Partition{}})),
                  DomainError);
}

TEST_CASE("bc_label examples") {
  CHECK(bc_label(GroupSpec{Family::Sp, 5, CharClass::Good}, Partition{4, 4, 2}) == BCPair{Partition{4}, Partition{2}});
  CHECK(bc_label(GroupSpec{Family::Sp, 2, CharClass::Good}, Partition{2, 2}) == BCPair{Partition{2}, Partition{}});
  CHECK(bc_label(GroupSpec{Family::SOeven, 6, CharClass::Good}, Partition{5, 3, 2, 2}) ==
        BCPair{Partition{2}, Partition{5, 3}});
  CHECK_THROWS_AS(static_cast<void>(bc_label(GroupSpec{Family::Sp, 2, CharClass::Two}, Partition{2, 2})), UnsupportedRegime);
  CHECK_THROWS_AS(static_cast<void>(bc_label(GroupSpec{Family::Sp, 2, CharClass::Good}, Partition{3, 1})), DomainError);
}

TEST_CASE("bc_enumerate examples") {
  CHECK(bc_enumerate(GroupSpec{Family::Sp, 2, CharClass::Good}).size() == 4);
  CHECK(bc_enumerate(GroupSpec{Family::GL, 3, CharClass::Good}).size() == 3);
  CHECK(bc_enumerate(GroupSpec{Family::SOodd, 2, CharClass::Good}).size() ==
        enumerate_class_partitions(GroupSpec{Family::SOodd, 2, CharClass::Good}).size());
}

TEST_CASE("round trip and bijection, ranks up to 8") {
  for (Family f : {Family::GL, Family::Sp, Family::SOodd, Family::SOeven}) {
    for (int n = 1; n <= 8; ++n) {
      const GroupSpec g{f, n, CharClass::Good};
      const auto classes = enumerate_class_partitions(g);
      for (const auto& lam : classes) {
        const BCPair pair = bc_label(g, lam);
        REQUIRE_NOTHROW(validate(g, pair));
        REQUIRE(bc_image(g, pair) == lam);
      }
      const auto pairs = bc_enumerate(g);
      REQUIRE(pairs.size() == classes.size());
      std::set<Partition> images;
      for (const auto& p : pairs) images.insert(bc_image(g, p));
      CHECK(images == as_set(classes));
    }
  }
}

TEST_CASE("images compose through a classical Levi factor") {
  for (Family f : {Family::Sp, Family::SOodd, Family::SOeven}) {
    for (int n = 1; n <= 6; ++n) {
      const GroupSpec g{f, n, CharClass::Good};
      for (int outer = 0; outer <= n; ++outer) {
        const GroupSpec h = classical_factor(g, outer);
        if ((h.family == Family::SOeven && h.rank == 1) || h.rank == 0) continue;
        for (const auto& gl : partitions_of(outer)) {
          for (const auto& inner : bc_enumerate(h)) {
            const BCPair merged{gl.merged(inner.gl_factors), inner.dist_partition};
            CHECK(bc_image(g, merged) == doubled(gl).merged(bc_image(h, inner)));
          }
        }
      }
    }
  }
}

TEST_CASE("Levi dimension separates distinguished parabolics") {
  CHECK(check_levi_dim_injectivity(RootSystem::build(RootFamily::A, 4)));
  CHECK(check_levi_dim_injectivity(RootSystem::build(RootFamily::C, 3)));
  CHECK(check_levi_dim_injectivity(RootSystem::build(RootFamily::F4, 4)));
  CHECK(check_levi_dim_injectivity(RootSystem::build(RootFamily::G2, 2)));
  CHECK(check_levi_dim_injectivity(RootSystem::build(RootFamily::E6, 6)));
}
