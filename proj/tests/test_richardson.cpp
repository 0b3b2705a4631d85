#include <doctest.h>

#include <algorithm>

#include "ua/errors.hpp"
#include "ua/oracle.hpp"
#include "ua/richardson.hpp"

using namespace ua;

namespace {

const GroupSpec kSp3{Family::Sp, 3, CharClass::Good};

std::vector<LeviDatum> all_levi_data(const GroupSpec& g) {
  std::vector<LeviDatum> out;
  const int top = g.family == Family::GL ? 0 : g.rank;
  for (int m = 0; m <= top; ++m) {
    for (auto& p : partitions_of(g.rank - m)) out.push_back(LeviDatum{std::move(p), m});
  }
  return out;
}

}  // namespace

TEST_CASE("psi examples") {
  CHECK(psi_image(GroupSpec{Family::Sp, 4, CharClass::Good}, {Partition{2, 1}, 1}) == Partition{2, 2, 2, 2});
  CHECK(psi_image(GroupSpec{Family::Sp, 4, CharClass::Two}, {Partition{2, 1}, 1}) == Partition{2, 2, 2, 2});
  CHECK(psi_image(GroupSpec{Family::SOeven, 3, CharClass::Good}, {Partition{2, 1}, 0}) == Partition{2, 2, 2});
  CHECK(psi_image(GroupSpec{Family::SOeven, 2, CharClass::Two}, {Partition{1, 1}, 0}) == Partition{2, 2});
  CHECK(psi_image(GroupSpec{Family::GL, 3, CharClass::Good}, {Partition{2, 1}, 0}) == Partition{2, 1});
  CHECK_THROWS_AS(static_cast<void>(psi_image(GroupSpec{Family::SOodd, 2, CharClass::Two}, {Partition{1}, 1})),
                  UnsupportedRegime);
  CHECK_THROWS_AS(static_cast<void>(psi_image(kSp3, {Partition{2, 2}, 0})), DomainError);
  CHECK_THROWS_AS(static_cast<void>(psi_image(GroupSpec{Family::GL, 3, CharClass::Good}, {Partition{2}, 1})),
                  DomainError);
}

TEST_CASE("richardson examples") {
  CHECK(richardson_partition(GroupSpec{Family::Sp, 4, CharClass::Good}, {Partition{2, 2}, 0}) == Partition{4, 4});
  CHECK(richardson_partition(GroupSpec{Family::Sp, 4, CharClass::Two}, {Partition{2, 2}, 0}) == Partition{4, 4});
  CHECK(richardson_partition(GroupSpec{Family::SOeven, 3, CharClass::Good}, {Partition{2, 1}, 0}) == Partition{3, 3});
  CHECK(richardson_partition(GroupSpec{Family::SOodd, 2, CharClass::Two}, {Partition{1}, 1}) == Partition{2, 2, 1});
  CHECK(richardson_partition(kSp3, {Partition{2, 1}, 0}) == Partition{4, 2});
  CHECK(richardson_psi(GroupSpec{Family::SOodd, 2, CharClass::Two}, {Partition{1}, 1}) == Partition{2, 2});
}

TEST_CASE("regular examples") {
  CHECK(regular_partition(kSp3) == std::vector<Partition>{Partition{6}});
  CHECK(regular_partition(GroupSpec{Family::SOeven, 4, CharClass::Good}) == std::vector<Partition>{Partition{7, 1}});
  auto o8 = regular_partition(GroupSpec{Family::Oeven, 4, CharClass::Two});
  std::sort(o8.begin(), o8.end());
  CHECK(o8 == std::vector<Partition>{Partition{6, 2}, Partition{8}});
  CHECK_THROWS_AS(static_cast<void>(regular_partition(GroupSpec{Family::SOodd, 2, CharClass::Two})), DomainError);
}

TEST_CASE("GL preimage examples and round trip") {
  CHECK(gl_richardson_preimage(Partition{3, 2}) == LeviDatum{Partition{2, 2, 1}, 0});
  CHECK(gl_richardson_preimage(Partition{4}) == LeviDatum{Partition{1, 1, 1, 1}, 0});
  CHECK(gl_richardson_preimage(Partition{1, 1, 1}) == LeviDatum{Partition{3}, 0});
  for (int n = 1; n <= 12; ++n) {
    for (const auto& p : partitions_of(n)) {
      CHECK(richardson_partition(GroupSpec{Family::GL, n, CharClass::Good}, gl_richardson_preimage(p)) == p);
    }
  }
}

TEST_CASE("parity of every Richardson partition, ranks up to 8") {
  for (Family fam : {Family::GL, Family::SOodd, Family::SOeven, Family::Sp, Family::Oeven}) {
    for (CharClass c : {CharClass::Good, CharClass::Two}) {
      for (int n = fam == Family::SOeven || fam == Family::Oeven ? 2 : 1; n <= 8; ++n) {
        const GroupSpec g{fam, n, c};
        const RootSystem rs = root_system_for(g);
        for (std::uint64_t mask = 0; mask <= rs.full_mask(); ++mask) {
          const Partition lambda = richardson_partition(g, levi_partition(rs, ParabolicLabel(mask), g));
          REQUIRE(lambda.sum() == g.natural_dim());
          REQUIRE(satisfies_parity(lambda, g));
        }
      }
    }
  }
}

TEST_CASE("Borel parabolics give the regular classes") {
  for (Family fam : {Family::GL, Family::SOodd, Family::SOeven, Family::Sp, Family::Oeven}) {
    for (CharClass c : {CharClass::Good, CharClass::Two}) {
      if (fam == Family::SOodd && c == CharClass::Two) continue;
      for (int n = 2; n <= 8; ++n) {
        const GroupSpec g{fam, n, c};
        const Partition borel = richardson_partition(g, {Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), 0});
        const auto regular = regular_partition(g);
        CHECK(std::find(regular.begin(), regular.end(), borel) != regular.end());
      }
    }
  }
  for (int n = 1; n <= 8; ++n) {
    const GroupSpec g{Family::SOodd, n, CharClass::Two};
    CHECK(richardson_partition(g, {Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), 0}) ==
          Partition{2 * n, 1});
  }
}

TEST_CASE("top parts follow the natural-flag formulas") {
  for (Family fam : {Family::SOodd, Family::SOeven, Family::Sp}) {
    for (CharClass c : {CharClass::Good, CharClass::Two}) {
      if (fam == Family::SOodd && c == CharClass::Two) continue;
      for (int n = 1; n <= 8; ++n) {
        const GroupSpec g{fam, n, c};
        const oracle::FormSpace fs = oracle::build_space(fam, n, c == CharClass::Two ? 2 : 3);
        for (const auto& levi : all_levi_data(g)) {
          const Partition mu = richardson_partition(g, levi);
          const int l = natural_flag_length(g, levi);
          const int c1 = levi.gl_parts.multiplicity(1);
          const int m = levi.cl_rank;
          const oracle::FlagSpec flag = oracle::flag_for(fs, levi);
          REQUIRE(flag.length() == l);

          const int r = fam == Family::SOodd ? 1 : 2;
          int bound = 0;
          for (int b : flag.blocks) bound += std::min(r, b);
          REQUIRE(bound == mu.part(0) + (r == 2 ? mu.part(1) : 0));

          int w1 = l;
          int w2 = l - 2 * c1;
          if (fam == Family::SOeven && c == CharClass::Good && m == 0 && c1 >= 1) {
            w1 = l - 1;
            w2 = l - 2 * c1 + 1;
          } else if (fam == Family::SOeven && c == CharClass::Two) {
            if (m == 0 && c1 >= 2) {
              w1 = l - 2;
              w2 = l - 2 * c1 + 2;
            } else if ((m == 0 && c1 == 1) || (m >= 1 && c1 >= 1)) {
              w1 = l - 1;
              w2 = l - 2 * c1 + 1;
            }
          } else if (fam == Family::Sp && m >= 1 && c1 >= 1) {
            w1 = l - 1;
            w2 = l - 2 * c1 + 1;
          }
          INFO(to_string(g) << " levi " << to_string(levi) << " -> " << to_string(mu));
          REQUIRE(mu.part(0) == w1);
          if (r == 2) REQUIRE(mu.part(1) == w2);
        }
      }
    }
  }
}
