#include "ua/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ua/bala_carter.hpp"
#include "ua/class_catalog.hpp"
#include "ua/errors.hpp"
#include "ua/oracle.hpp"
#include "ua/richardson.hpp"
#include "ua/root_system.hpp"

namespace ua::acceptance {

namespace {

struct Tally {
  long long checked = 0;
  long long failed = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what();
  }

  [[nodiscard]] bool ok() const { return failed == 0; }
  [[nodiscard]] std::string summary() const {
    std::ostringstream os;
    os << (checked - failed) << "/" << checked << " checks";
    if (failed > 0) os << "; first failure: " << first_failure;
    return os.str();
  }
};

Partition repeated(int value, int count) { return Partition(std::vector<int>(static_cast<std::size_t>(count), value)); }

Partition twos_ones(int a, int b) { return repeated(2, a).merged(repeated(1, b)); }

// --- 1 --------------------------------------------------------------------

Outcome base_cases() {
  Tally t;
  auto check = [&](Family fam, CharClass c, const LeviDatum& levi, const Partition& want, const char* label) {
    const GroupSpec g{fam, levi.total(), c};
    Partition got;
    try {
      got = richardson_partition(g, levi);
    } catch (const std::exception& e) {
      t.expect(false, [&] { return std::string(label) + " threw " + e.what(); });
      return;
    }
    t.expect(got == want, [&] {
      return std::string(label) + " " + to_string(g) + " levi " + to_string(levi) + ": got " + to_string(got) +
             ", want " + to_string(want);
    });
  };
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const auto two = CharClass::Two;
      const auto good = CharClass::Good;
      check(Family::SOeven, two, {repeated(2, a), 0}, Partition{2 * a, 2 * a}, "(i)(a)");
      check(Family::SOeven, two, {twos_ones(a, 1), 0}, Partition{2 * a + 1, 2 * a + 1}, "(i)(b)");
      if (b >= 2) check(Family::SOeven, two, {twos_ones(a, b), 0}, Partition{2 * a + 2 * b - 2, 2 * a + 2}, "(i)(c)");
      check(Family::SOeven, good, {repeated(2, a), 0}, Partition{2 * a, 2 * a}, "(ii)(a)");
      check(Family::SOeven, good, {twos_ones(a, b), 0}, Partition{2 * a + 2 * b - 1, 2 * a + 1}, "(ii)(b)");
      for (auto c : {good, two}) {
        check(Family::Sp, c, {repeated(2, a), 0}, Partition{2 * a, 2 * a}, "(iii)(a)");
        check(Family::Sp, c, {twos_ones(a, b), 0}, Partition{2 * a + 2 * b, 2 * a}, "(iii)(b)");
        check(Family::Sp, c, {repeated(2, a), 1}, Partition{2 * a + 1, 2 * a + 1}, "(iii)(c)");
        check(Family::Sp, c, {twos_ones(a, b), 1}, Partition{2 * a + 2 * b, 2 * a + 2}, "(iii)(d)");
      }
    }
  }
  return {1, "two-block base cases", t.ok(), 0, 1, t.summary()};
}

// --- 2 --------------------------------------------------------------------

Outcome regular_goldens() {
  Tally t;
  auto check = [&](Family fam, int n, CharClass c, std::vector<Partition> want) {
    const GroupSpec g{fam, n, c};
    std::vector<Partition> got;
    try {
      got = regular_partition(g);
    } catch (const std::exception& e) {
      t.expect(false, [&] { return to_string(g) + " threw " + e.what(); });
      return;
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    t.expect(got == want, [&] { return to_string(g) + ": got " + (got.empty() ? "" : to_string(got.front())); });
  };
  for (int n = 1; n <= 10; ++n) {
    for (auto c : {CharClass::Good, CharClass::Two}) {
      check(Family::GL, n, c, {Partition{n}});
      check(Family::Sp, n, c, {Partition{2 * n}});
    }
    check(Family::SOodd, n, CharClass::Good, {Partition{2 * n + 1}});
    check(Family::SOeven, n, CharClass::Good, {Partition{2 * n - 1, 1}});
    // Rank 1 is a torus in characteristic 2; the two-block shapes start at n = 2.
    if (n >= 2) {
      check(Family::SOeven, n, CharClass::Two, {Partition{2 * n - 2, 2}});
      check(Family::Oeven, n, CharClass::Two, {Partition{2 * n}, Partition{2 * n - 2, 2}});
    }
  }
  return {2, "regular classes", t.ok(), 0, 1, t.summary()};
}

// --- 3 --------------------------------------------------------------------

long long dim_l_from_roots(const RootSystem& rs, const ParabolicLabel& j, int group_rank) {
  long long in_j = 0;
  for (const auto& r : rs.positive_roots()) {
    if (supported_in(r, j)) ++in_j;
  }
  return group_rank + 2 * in_j;
}

Outcome dimension_identity() {
  Tally t;
  for (Family fam : {Family::GL, Family::SOodd, Family::SOeven, Family::Sp}) {
    for (int n = fam == Family::SOeven ? 2 : 1; n <= 7; ++n) {
      const GroupSpec g{fam, n, CharClass::Good};
      const RootSystem rs = root_system_for(g);
      for (std::uint64_t mask = 0; mask <= rs.full_mask(); ++mask) {
        const ParabolicLabel j(mask);
        const LeviDatum levi = levi_partition(rs, j, g);
        const Partition lambda = richardson_partition(g, levi);
        const long long from_roots = dim_l_from_roots(rs, j, n);
        const DimRange c = centralizer_dim(ClassRecord{lambda, g, std::nullopt});
        t.expect(c.exact() && c.lo == from_roots && levi_dim(g, levi) == from_roots, [&] {
          return to_string(g) + " J={" + to_string(j) + "}: centralizer " + std::to_string(c.lo) + ", dim L " +
                 std::to_string(from_roots);
        });
        t.expect(satisfies_parity(lambda, g), [&] { return to_string(g) + " parity of " + to_string(lambda); });
      }
    }
  }
  return {3, "centralizer dimension equals dim L", t.ok(), 0, 30, t.summary()};
}

// --- 4 --------------------------------------------------------------------

Outcome char_two_bound() {
  Tally t;
  std::map<std::string, std::pair<int, int>> per_family;  // holds / total
  int shifted_holds = 0;
  int shifted_total = 0;
  for (Family fam : {Family::Sp, Family::SOeven}) {
    for (int n = fam == Family::SOeven ? 2 : 1; n <= 7; ++n) {
      const GroupSpec g{fam, n, CharClass::Two};
      const RootSystem rs = root_system_for(g);
      for (std::uint64_t mask = 0; mask <= rs.full_mask(); ++mask) {
        const ParabolicLabel j(mask);
        const LeviDatum levi = levi_partition(rs, j, g);
        const Partition lambda = richardson_partition(g, levi);
        const long long base = (dual_square_sum(lambda) + lambda.count_odd_parts()) / 2;
        const long long evens = lambda.count_even_parts();
        const long long dl = levi_dim(g, levi);
        const bool holds = base <= dl && dl <= base + evens;
        auto& pf = per_family[to_string(fam)];
        pf.first += holds ? 1 : 0;
        ++pf.second;
        if (fam == Family::SOeven) {
          const long long parts = static_cast<long long>(lambda.length());
          shifted_holds += (base - parts <= dl && dl <= base - parts + evens) ? 1 : 0;
          ++shifted_total;
        }
        t.expect(holds, [&] {
          return to_string(g) + " J={" + to_string(j) + "} lambda " + to_string(lambda) + ": base " +
                 std::to_string(base) + ", dim L " + std::to_string(dl) + ", even parts " + std::to_string(evens);
        });
      }
    }
  }
  std::ostringstream os;
  for (const auto& [name, v] : per_family) os << name << " " << v.first << "/" << v.second << "; ";
  os << "so-even with base - #parts: " << shifted_holds << "/" << shifted_total << "; " << t.summary();
  return {4, "characteristic 2 centralizer bound", t.ok(), 0, 30, os.str()};
}

// --- 5 --------------------------------------------------------------------

Outcome gl_round_trip() {
  Tally t;
  for (int n = 1; n <= 12; ++n) {
    const GroupSpec g{Family::GL, n, CharClass::Good};
    for (const auto& lambda : partitions_of(n)) {
      const Partition back = richardson_partition(g, gl_richardson_preimage(lambda));
      t.expect(back == lambda, [&] { return to_string(lambda) + " came back as " + to_string(back); });
    }
  }
  return {5, "every GL_n class is Richardson", t.ok(), 0, 5, t.summary()};
}

// --- 6 --------------------------------------------------------------------

Outcome distinguished_table() {
  Tally t;
  for (Family fam : {Family::Sp, Family::SOodd, Family::SOeven}) {
    for (int n = fam == Family::SOeven ? 2 : 1; n <= 7; ++n) {
      std::map<CharClass, std::vector<ParabolicLabel>> by_char;
      for (auto c : {CharClass::Good, CharClass::Two}) {
        const GroupSpec g{fam, n, c};
        const RootSystem rs = root_system_for(g);
        const auto js = enumerate_distinguished_parabolics(rs);
        by_char[c] = js;
        std::set<Partition> image;
        for (const auto& j : js) image.insert(richardson_partition(g, levi_partition(rs, j, g)));
        const auto table = distinguished_partitions(g);
        const std::set<Partition> expected(table.begin(), table.end());
        t.expect(image == expected, [&] {
          return to_string(g) + ": " + std::to_string(image.size()) + " images vs " + std::to_string(expected.size()) +
                 " tabulated";
        });
        t.expect(image.size() == js.size(), [&] { return to_string(g) + ": map not injective"; });
      }
      t.expect(by_char[CharClass::Good] == by_char[CharClass::Two],
               [&] { return to_string(fam) + " rank " + std::to_string(n) + ": distinguished set depends on p"; });
    }
  }
  return {6, "distinguished parabolics match the tabulated classes", t.ok(), 0, 10, t.summary()};
}

// --- 7, 8 -----------------------------------------------------------------

std::vector<RootSystem> criterion_systems() {
  std::vector<RootSystem> out;
  for (int n = 1; n <= 7; ++n) out.push_back(RootSystem::build(RootFamily::A, n));
  for (int n = 1; n <= 7; ++n) out.push_back(RootSystem::build(RootFamily::B, n));
  for (int n = 1; n <= 7; ++n) out.push_back(RootSystem::build(RootFamily::C, n));
  for (int n = 2; n <= 7; ++n) out.push_back(RootSystem::build(RootFamily::D, n));
  for (RootFamily f : {RootFamily::G2, RootFamily::F4, RootFamily::E6, RootFamily::E7, RootFamily::E8}) {
    out.push_back(RootSystem::build(f, exceptional_rank(f)));
  }
  return out;
}

Outcome levi_dim_injectivity() {
  Tally t;
  for (const auto& rs : criterion_systems()) {
    t.expect(check_levi_dim_injectivity(rs), [&] { return rs.name() + ": dim L/Z repeats"; });
  }
  return {7, "dim L/Z separates distinguished parabolics", t.ok(), 0, 10, t.summary()};
}

Outcome richardson_inequality() {
  Tally t;
  for (const auto& rs : criterion_systems()) {
    for (std::uint64_t mask = 0; mask <= rs.full_mask(); ++mask) {
      const ParabolicLabel j(mask);
      long long in_j = 0;
      long long height_one = 0;
      for (const auto& r : rs.positive_roots()) {
        if (supported_in(r, j)) ++in_j;
        if (p_height(r, j) == 1) ++height_one;
      }
      const long long lz = rs.rank() + 2 * in_j;
      const bool dist = is_distinguished(rs, j);
      t.expect(lz >= height_one && (lz == height_one) == dist, [&] {
        return rs.name() + " J={" + to_string(j) + "}: dim L/Z " + std::to_string(lz) + ", dim Q/Q' " +
               std::to_string(height_one);
      });
    }
  }
  return {8, "dim L/Z >= dim Q/Q', equality exactly when distinguished", t.ok(), 0, 10, t.summary()};
}

// --- 9 --------------------------------------------------------------------

Outcome bala_carter_bijection() {
  Tally t;
  auto family_check = [&](const GroupSpec& g) {
    const auto classes = enumerate_class_partitions(g);
    const auto labels = bc_enumerate(g);
    t.expect(classes.size() == labels.size(), [&] {
      return to_string(g) + ": " + std::to_string(labels.size()) + " labels for " + std::to_string(classes.size()) +
             " classes";
    });
    for (const auto& lambda : classes) {
      const Partition back = bc_image(g, bc_label(g, lambda));
      t.expect(back == lambda, [&] { return to_string(g) + " " + to_string(lambda) + " -> " + to_string(back); });
    }
  };
  for (int n = 1; n <= 8; ++n) {
    for (Family fam : {Family::Sp, Family::SOodd, Family::SOeven}) family_check(GroupSpec{fam, n, CharClass::Good});
  }
  for (int n = 1; n <= 10; ++n) family_check(GroupSpec{Family::GL, n, CharClass::Good});
  return {9, "Bala-Carter labels biject onto classes", t.ok(), 0, 10, t.summary()};
}

// --- 10 -------------------------------------------------------------------

Outcome oracle_suite() {
  struct Instance {
    Family family;
    int n;
    int q;
    std::vector<int> nodes;
    std::optional<Partition> expect;
  };
  const std::vector<Instance> instances{
      {Family::Sp, 2, 3, {}, std::nullopt},          {Family::Sp, 2, 3, {1}, std::nullopt},
      {Family::Sp, 2, 3, {2}, std::nullopt},         {Family::Sp, 3, 2, {}, std::nullopt},
      {Family::SOodd, 2, 3, {1}, std::nullopt},      {Family::SOodd, 2, 3, {2}, std::nullopt},
      {Family::SOeven, 3, 3, {1}, std::nullopt},     {Family::SOeven, 3, 3, {1, 2}, std::nullopt},
      {Family::SOeven, 3, 3, {1, 3}, std::nullopt},  {Family::SOeven, 4, 2, {}, Partition{6, 2}},
      {Family::GL, 4, 2, {1}, std::nullopt},         {Family::GL, 4, 2, {1, 3}, std::nullopt},
  };
  Tally t;
  std::ostringstream os;
  for (const auto& in : instances) {
    const GroupSpec g{in.family, in.n, in.q % 2 == 0 ? CharClass::Two : CharClass::Good};
    const RootSystem rs = root_system_for(g);
    const ParabolicLabel j = ParabolicLabel::from_nodes(in.nodes);
    const LeviDatum levi = levi_partition(rs, j, g);
    const Partition predicted = richardson_partition(g, levi);
    const std::string tag = to_string(g) + "/F" + std::to_string(in.q) + " J={" + to_string(j) + "}";
    if (in.expect) {
      t.expect(predicted == *in.expect, [&] { return tag + " predicts " + to_string(predicted); });
    }
    oracle::Report rep;
    try {
      rep = oracle::verify_with_retry(in.family, in.n, in.q, levi, predicted);
    } catch (const std::exception& e) {
      t.expect(false, [&] { return tag + " threw " + e.what(); });
      continue;
    }
    std::uint64_t expected_total = 1;
    for (int i = 0; i < rep.dim_q; ++i) expected_total *= static_cast<std::uint64_t>(rep.q);
    t.expect(rep.passed() && rep.exhaustive && rep.total == expected_total && rep.parity_ok, [&] {
      return tag + ": all_le " + std::to_string(rep.all_le) + " attained " + std::to_string(rep.attained) + " total " +
             std::to_string(rep.total);
    });
    if (rep.q != in.q) os << tag << " attained at q=" << rep.q << "; ";
  }
  return {10, "finite-field oracle", t.ok(), 0, 300, os.str() + t.summary()};
}

// --- 11 -------------------------------------------------------------------

Outcome order_theory() {
  Tally t;
  for (int n = 1; n <= 10; ++n) {
    const auto all = partitions_of(n);
    for (const auto& a : all) {
      t.expect(dual(dual(a)) == a, [&] { return "dual is not an involution on " + to_string(a); });
      for (const auto& b : all) {
        if (compare_dominance(a, b) != Dominance::Less) continue;
        t.expect(compare_dominance(dual(b), dual(a)) == Dominance::Less,
                 [&] { return "duality is not antitone on " + to_string(a) + " < " + to_string(b); });
        const auto chain = two_place_chain(a, b);
        bool ok = chain.size() >= 2 && chain.front() == a && chain.back() == b;
        for (std::size_t k = 0; ok && k + 1 < chain.size(); ++k) {
          ok = compare_dominance(chain[k], chain[k + 1]) == Dominance::Less &&
               count_differing_places(chain[k], chain[k + 1]) == 2;
        }
        t.expect(ok, [&] { return "bad chain from " + to_string(a) + " to " + to_string(b); });
      }
    }
  }
  const ClassPoset sp = closure_poset(GroupSpec{Family::Sp, 2, CharClass::Good});
  bool chain = sp.nodes.size() == 4 && sp.covers.size() == 3;
  for (std::size_t i = 0; chain && i < sp.nodes.size(); ++i) {
    for (std::size_t k = 0; k < sp.nodes.size(); ++k) {
      if (i != k && !sp.below[i][k] && !sp.below[k][i]) chain = false;
    }
  }
  t.expect(chain, [] { return "Sp_4 closure order is not a 4-chain"; });
  const ClassPoset gl = closure_poset(GroupSpec{Family::GL, 6, CharClass::Good});
  const int a = gl.index_of(Partition{3, 3});
  const int b = gl.index_of(Partition{4, 1, 1});
  t.expect(a >= 0 && b >= 0 && !gl.below[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
               !gl.below[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)],
           [] { return "GL_6: (3,3) and (4,1,1) are not incomparable"; });
  return {11, "dominance order, duality and chains", t.ok(), 0, 30, t.summary()};
}

using Runner = Outcome (*)();
constexpr Runner kRunners[kCriteria] = {base_cases,         regular_goldens,      dimension_identity, char_two_bound,
                                        gl_round_trip,      distinguished_table,  levi_dim_injectivity,
                                        richardson_inequality, bala_carter_bijection, oracle_suite, order_theory};

}  // namespace

Outcome run(int id) {
  if (id < 1 || id > kCriteria) throw DomainError("criterion " + std::to_string(id) + " does not exist");
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = kRunners[id - 1]();
  } catch (const std::exception& e) {
    o.id = id;
    o.passed = false;
    o.detail = std::string("threw: ") + e.what();
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.seconds > o.limit_seconds && o.limit_seconds > 0) {
    o.passed = false;
    o.detail += "; over the time limit";
  }
  return o;
}

std::vector<Outcome> run_all() {
  std::vector<Outcome> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run(id));
  return out;
}

std::string format_line(const Outcome& o) {
  char head[160];
  std::snprintf(head, sizeof head, "%s %2d  %-58s (%.3f s, limit %g s)", o.passed ? "PASS" : "FAIL", o.id,
                o.name.c_str(), o.seconds, o.limit_seconds);
  return std::string(head) + "  " + o.detail;
}

}  // namespace ua::acceptance
