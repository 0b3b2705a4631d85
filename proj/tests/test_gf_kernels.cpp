#include <doctest.h>

#include <random>
#include <vector>

#include "ua/errors.hpp"
#include "ua/gf.hpp"
#include "ua/kernels.hpp"

using namespace ua;

namespace {

// F_4 as polynomials over F_2 modulo x^2 + x + 1, computed bit by bit.
int f4_mul(int a, int b) {
  int r = 0;
  for (int i = 0; i < 2; ++i) {
    if ((b >> i) & 1) r ^= a << i;
  }
  if (r & 4) r ^= 0b111;
  return r;
}

int ref_add(int q, int a, int b) { return q == 4 ? (a ^ b) : (a + b) % q; }
int ref_mul(int q, int a, int b) { return q == 4 ? f4_mul(a, b) : (a * b) % q; }

std::vector<std::uint8_t> random_row(std::mt19937_64& rng, int q, std::size_t len) {
  std::uniform_int_distribution<int> d(0, q - 1);
  std::vector<std::uint8_t> v(len);
  for (auto& x : v) x = static_cast<std::uint8_t>(d(rng));
  return v;
}

gf::Matrix random_matrix(std::mt19937_64& rng, int q, int rows, int cols) {
  std::uniform_int_distribution<int> d(0, q - 1);
  gf::Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m.at(i, j) = static_cast<std::uint8_t>(d(rng));
  }
  return m;
}

// Every vector of F_q^n in lexicographic order.
std::vector<std::vector<std::uint8_t>> all_vectors(int q, int n) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(v);
    int i = 0;
    while (i < n && ++v[static_cast<std::size_t>(i)] == q) v[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return out;
}

std::vector<std::uint8_t> apply(const gf::Field& f, const gf::Matrix& m, const std::vector<std::uint8_t>& x) {
  std::vector<std::uint8_t> y(static_cast<std::size_t>(m.rows()), 0);
  for (int i = 0; i < m.rows(); ++i) {
    std::uint8_t s = 0;
    for (int j = 0; j < m.cols(); ++j) s = f.add[s][f.mul[m.at(i, j)][x[static_cast<std::size_t>(j)]]];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

bool is_zero_vec(const std::vector<std::uint8_t>& v) {
  for (auto x : v) {
    if (x != 0) return false;
  }
  return true;
}

long long ipow(int q, int e) {
  long long r = 1;
  while (e-- > 0) r *= q;
  return r;
}

std::vector<const kernels::RowOps*> available_variants() {
  std::vector<const kernels::RowOps*> out{&kernels::scalar_ops()};
  if (const auto* a = kernels::avx2_ops()) out.push_back(a);
  if (const auto* n = kernels::neon_ops()) out.push_back(n);
  return out;
}

}  // namespace

TEST_CASE("field tables match reference arithmetic") {
  for (int q : {2, 3, 4, 5}) {
    const gf::Field& f = gf::field(q);
    CHECK(f.q == q);
    CHECK(f.xor_add == (q % 2 == 0));
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        CHECK(f.add[a][b] == ref_add(q, a, b));
        CHECK(f.mul[a][b] == ref_mul(q, a, b));
        CHECK(f.add[f.sub[a][b]][b] == a);
      }
      if (a != 0) CHECK(f.mul[a][f.inv[a]] == 1);
      CHECK(f.add[a][f.neg(static_cast<std::uint8_t>(a))] == 0);
      for (int x = 0; x < 16; ++x) CHECK(f.mul16[a][x] == (x < q ? f.mul[a][x] : 0));
    }
  }
  CHECK(gf::is_supported_order(4));
  CHECK_FALSE(gf::is_supported_order(7));
  CHECK_THROWS_AS(static_cast<void>(gf::field(7)), DomainError);
}

TEST_CASE("field axioms") {
  for (int q : {2, 3, 4, 5}) {
    const gf::Field& f = gf::field(q);
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        CHECK(f.add[a][b] == f.add[b][a]);
        CHECK(f.mul[a][b] == f.mul[b][a]);
        for (int c = 0; c < q; ++c) {
          CHECK(f.mul[a][f.add[b][c]] == f.add[f.mul[a][b]][f.mul[a][c]]);
          CHECK(f.mul[f.mul[a][b]][c] == f.mul[a][f.mul[b][c]]);
          CHECK(f.add[f.add[a][b]][c] == f.add[a][f.add[b][c]]);
        }
      }
    }
  }
}

TEST_CASE("dispatch reports a usable variant") {
  const auto& ops = kernels::active();
  CHECK(ops.axpy != nullptr);
  CHECK(ops.scale != nullptr);
  CHECK_FALSE(kernels::to_string(ops.isa).empty());
  kernels::force(&kernels::scalar_ops());
  CHECK(kernels::active().isa == kernels::Isa::Scalar);
  kernels::force(nullptr);
}

TEST_CASE("vector kernels agree with the scalar reference") {
  std::mt19937_64 rng(7);
  const auto& ref = kernels::scalar_ops();
  for (const auto* ops : available_variants()) {
    INFO(kernels::to_string(ops->isa));
    for (int q : {2, 3, 4, 5}) {
      const gf::Field& f = gf::field(q);
      for (std::size_t len : {std::size_t{32}, std::size_t{64}, std::size_t{96}, std::size_t{256}}) {
        for (int c = 0; c < q; ++c) {
          for (int trial = 0; trial < 8; ++trial) {
            const auto src = random_row(rng, q, len);
            auto a = random_row(rng, q, len);
            auto b = a;
            ref.axpy(f, a.data(), src.data(), static_cast<std::uint8_t>(c), len);
            ops->axpy(f, b.data(), src.data(), static_cast<std::uint8_t>(c), len);
            REQUIRE(a == b);
            for (std::size_t i = 0; i < len; ++i) REQUIRE(a[i] < q);
            ref.scale(f, a.data(), static_cast<std::uint8_t>(c), len);
            ops->scale(f, b.data(), static_cast<std::uint8_t>(c), len);
            REQUIRE(a == b);
          }
        }
      }
    }
  }
}

TEST_CASE("scalar axpy and scale follow the definition") {
  std::mt19937_64 rng(11);
  const auto& ref = kernels::scalar_ops();
  for (int q : {2, 3, 4, 5}) {
    const gf::Field& f = gf::field(q);
    for (int c = 0; c < q; ++c) {
      const auto src = random_row(rng, q, 32);
      const auto dst = random_row(rng, q, 32);
      auto out = dst;
      ref.axpy(f, out.data(), src.data(), static_cast<std::uint8_t>(c), 32);
      for (std::size_t i = 0; i < 32; ++i) CHECK(out[i] == ref_add(q, dst[i], ref_mul(q, c, src[i])));
      out = dst;
      ref.scale(f, out.data(), static_cast<std::uint8_t>(c), 32);
      for (std::size_t i = 0; i < 32; ++i) CHECK(out[i] == ref_mul(q, c, dst[i]));
    }
  }
}

TEST_CASE("matrix basics") {
  const gf::Matrix id = gf::Matrix::identity(5);
  CHECK(id.stride() % gf::kRowAlign == 0);
  CHECK(id.at(2, 2) == 1);
  CHECK(id.at(2, 3) == 0);
  std::mt19937_64 rng(3);
  for (int q : {2, 3, 4, 5}) {
    const gf::Field& f = gf::field(q);
    const gf::Matrix a = random_matrix(rng, q, 4, 6);
    CHECK(gf::multiply(f, gf::Matrix::identity(4), a) == a);
    CHECK(gf::transpose(gf::transpose(a)) == a);
    CHECK(gf::is_zero(gf::subtract(f, a, a)));
    const gf::Matrix b = random_matrix(rng, q, 6, 3);
    const gf::Matrix ab = gf::multiply(f, a, b);
    CHECK(gf::transpose(ab) == gf::multiply(f, gf::transpose(b), gf::transpose(a)));
  }
}

TEST_CASE("rank and nullspace agree with brute force") {
  std::mt19937_64 rng(5);
  for (int q : {2, 3, 4, 5}) {
    const gf::Field& f = gf::field(q);
    for (int trial = 0; trial < 20; ++trial) {
      const int rows = std::uniform_int_distribution<int>(1, 4)(rng);
      const int cols = std::uniform_int_distribution<int>(1, q == 5 ? 4 : 5)(rng);
      const gf::Matrix m = random_matrix(rng, q, rows, cols);
      long long kernel = 0;
      for (const auto& x : all_vectors(q, cols)) kernel += is_zero_vec(apply(f, m, x)) ? 1 : 0;
      const int r = gf::rank(f, m);
      CHECK(kernel == ipow(q, cols - r));
      const gf::Matrix ns = gf::nullspace(f, m);
      CHECK(ns.rows() == cols - r);
      CHECK(gf::rank(f, ns) == ns.rows());
      for (int i = 0; i < ns.rows(); ++i) {
        std::vector<std::uint8_t> x(ns.row(i), ns.row(i) + cols);
        CHECK(is_zero_vec(apply(f, m, x)));
      }
    }
  }
}

TEST_CASE("solve agrees with brute force") {
  std::mt19937_64 rng(9);
  for (int q : {2, 3, 4, 5}) {
    const gf::Field& f = gf::field(q);
    for (int trial = 0; trial < 30; ++trial) {
      const int rows = std::uniform_int_distribution<int>(1, 4)(rng);
      const int unknowns = std::uniform_int_distribution<int>(1, 4)(rng);
      const gf::Matrix aug = random_matrix(rng, q, rows, unknowns + 1);
      gf::Matrix a(rows, unknowns);
      std::vector<std::uint8_t> b(static_cast<std::size_t>(rows));
      for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < unknowns; ++j) a.at(i, j) = aug.at(i, j);
        b[static_cast<std::size_t>(i)] = aug.at(i, unknowns);
      }
      long long solutions = 0;
      for (const auto& x : all_vectors(q, unknowns)) solutions += apply(f, a, x) == b ? 1 : 0;
      const auto sol = gf::solve(f, aug, unknowns);
      if (solutions == 0) {
        CHECK_FALSE(sol.has_value());
        continue;
      }
      REQUIRE(sol.has_value());
      CHECK(apply(f, a, sol->base) == b);
      CHECK(solutions == ipow(q, static_cast<int>(sol->directions.size())));
      for (const auto& d : sol->directions) CHECK(is_zero_vec(apply(f, a, d)));
    }
  }
}
