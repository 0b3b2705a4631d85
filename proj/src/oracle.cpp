#include "ua/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "ua/errors.hpp"
#include "ua/richardson.hpp"

namespace ua::oracle {

using gf::Field;
using gf::Matrix;

gf::Matrix FormSpace::gram() const {
  Matrix b(dim, dim);
  if (!has_form()) return b;
  for (int i = 0; i < dim; ++i) b.at(i, dim - 1 - i) = sign[static_cast<std::size_t>(i)];
  return b;
}

std::uint8_t FormSpace::beta(const std::uint8_t* u, const std::uint8_t* v) const {
  const Field& f = field();
  std::uint8_t s = 0;
  for (int i = 0; i < dim; ++i) {
    s = f.add[s][f.mul[f.mul[u[i]][sign[static_cast<std::size_t>(i)]]][v[dim - 1 - i]]];
  }
  return s;
}

std::uint8_t FormSpace::phi(const std::uint8_t* u) const {
  const Field& f = field();
  std::uint8_t s = 0;
  for (int i = 0; i < n; ++i) s = f.add[s][f.mul[u[i]][u[dim - 1 - i]]];
  return s;
}

GroupSpec FormSpace::parity_group() const {
  const CharClass c = q % 2 == 0 ? CharClass::Two : CharClass::Good;
  if (family == Family::SOeven && c == CharClass::Two) return GroupSpec{Family::Oeven, n, c};
  return GroupSpec{family, n, c};
}

FormSpace build_space(Family family, int n, int q) {
  static_cast<void>(gf::field(q));
  if (n < 0) throw DomainError("rank must be nonnegative");
  if (family == Family::SOodd && q % 2 == 0) {
    throw UnsupportedRegime("SO_{2n+1} over a field of characteristic 2 is not modelled by the oracle");
  }
  FormSpace fs;
  fs.family = family;
  fs.n = n;
  fs.q = q;
  fs.dim = GroupSpec{family, n, CharClass::Good}.natural_dim();
  if (family != Family::GL) {
    const std::uint8_t minus_one = gf::field(q).neg(1);
    fs.sign.assign(static_cast<std::size_t>(fs.dim), 1);
    if (family == Family::Sp) {
      for (int i = n; i < fs.dim; ++i) fs.sign[static_cast<std::size_t>(i)] = minus_one;
    }
    fs.quadratic = q % 2 == 0 && family != Family::Sp;
  }
  return fs;
}

std::vector<int> FlagSpec::dims() const {
  std::vector<int> out;
  int d = 0;
  for (int b : blocks) out.push_back(d += b);
  return out;
}

FlagSpec flag_for(const FormSpace& fs, const LeviDatum& levi) {
  validate_levi(GroupSpec{fs.family, fs.n, CharClass::Good}, levi);
  FlagSpec flag;
  const auto parts = levi.gl_parts.parts();
  flag.blocks.assign(parts.begin(), parts.end());
  if (fs.family == Family::GL) return flag;
  const int mid = 2 * levi.cl_rank + (fs.family == Family::SOodd ? 1 : 0);
  if (mid > 0) flag.blocks.push_back(mid);
  flag.blocks.insert(flag.blocks.end(), parts.rbegin(), parts.rend());
  return flag;
}

int radical_dimension(const FormSpace& fs, const LeviDatum& levi) {
  const GroupSpec g{fs.family, fs.n, CharClass::Good};
  validate_levi(g, levi);
  return static_cast<int>((g.dim() - levi_dim(g, levi)) / 2);
}

namespace {

std::uint64_t checked_power(int q, int e, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int i = 0; i < e; ++i) {
    v *= static_cast<std::uint64_t>(q);
    if (v > cap) return cap + 1;
  }
  return v;
}

// Depth-first construction of the radical one column at a time. Column j is
// e_j plus a combination of the basis vectors of strictly earlier blocks; the
// pairing with earlier columns is linear in those coordinates and the
// diagonal condition (β(c,c) or φ(c)) is checked pointwise.
class RadicalWalker {
 public:
  RadicalWalker(const FormSpace& fs, const FlagSpec& flag) : fs_(fs), f_(fs.field()), cols_(fs.dim, fs.dim) {
    int start = 0;
    for (int b : flag.blocks) {
      for (int k = 0; k < b; ++k) free_rows_.push_back(start);
      start += b;
    }
    for (int j = 0; j < fs.dim; ++j) cols_.at(j, j) = 1;
  }

  // Solutions for column j given columns 0..j-1; empty when inconsistent.
  std::optional<gf::AffineSpace> column_space(int j) const {
    const int u = free_rows_[static_cast<std::size_t>(j)];
    if (!fs_.has_form()) {
      gf::AffineSpace s;
      s.base.assign(static_cast<std::size_t>(u), 0);
      for (int k = 0; k < u; ++k) {
        std::vector<std::uint8_t> d(static_cast<std::size_t>(u), 0);
        d[static_cast<std::size_t>(k)] = 1;
        s.directions.push_back(std::move(d));
      }
      return s;
    }
    const int n = fs_.dim;
    Matrix aug(std::max(j, 1), u + 1);
    for (int i = 0; i < j; ++i) {
      const std::uint8_t* ci = cols_.row(i);
      for (int k = 0; k < u; ++k) aug.at(i, k) = f_.mul[ci[n - 1 - k]][sign(n - 1 - k)];
      const std::uint8_t target = j == n - 1 - i ? sign(i) : 0;
      aug.at(i, u) = f_.sub[target][f_.mul[ci[n - 1 - j]][sign(n - 1 - j)]];
    }
    return gf::solve(f_, std::move(aug), u);
  }

  void set_column(int j, const std::vector<std::uint8_t>& x) {
    std::uint8_t* c = cols_.row(j);
    for (std::size_t k = 0; k < x.size(); ++k) c[k] = x[k];
  }

  bool diagonal_ok(int j) const {
    const std::uint8_t* c = cols_.row(j);
    if (fs_.quadratic) return fs_.phi(c) == 0;
    if (fs_.family == Family::Sp || fs_.family == Family::GL) return true;
    const std::uint8_t target = 2 * j == fs_.dim - 1 ? sign(j) : 0;
    return fs_.beta(c, c) == target;
  }

  [[nodiscard]] Matrix matrix() const { return gf::transpose(cols_); }
  [[nodiscard]] int dim() const { return fs_.dim; }
  [[nodiscard]] const Field& field() const { return f_; }

 private:
  std::uint8_t sign(int i) const { return fs_.sign[static_cast<std::size_t>(i)]; }

  const FormSpace& fs_;
  const Field& f_;
  Matrix cols_;  // row j holds column j of the element
  std::vector<int> free_rows_;
};

void point(const Field& f, const gf::AffineSpace& s, const std::vector<std::uint8_t>& t, std::vector<std::uint8_t>& out) {
  out = s.base;
  for (std::size_t d = 0; d < s.directions.size(); ++d) {
    if (t[d] == 0) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.add[out[k]][f.mul[t[d]][s.directions[d][k]]];
  }
}

// Advances t as a base-q counter; false after the last point.
bool next_counter(std::vector<std::uint8_t>& t, int q) {
  for (auto& v : t) {
    if (++v < q) return true;
    v = 0;
  }
  return false;
}

bool walk_exhaustive(RadicalWalker& w, int j, const Visitor& visit, std::uint64_t& count) {
  if (j == w.dim()) {
    ++count;
    return visit(w.matrix());
  }
  const auto space = w.column_space(j);
  if (!space) return true;
  std::vector<std::uint8_t> t(space->directions.size(), 0);
  std::vector<std::uint8_t> x;
  do {
    point(w.field(), *space, t, x);
    w.set_column(j, x);
    if (w.diagonal_ok(j) && !walk_exhaustive(w, j + 1, visit, count)) return false;
  } while (next_counter(t, w.field().q));
  return true;
}

bool draw_sample(RadicalWalker& w, std::mt19937_64& rng) {
  const int q = w.field().q;
  std::uniform_int_distribution<int> digit(0, q - 1);
  std::vector<std::uint8_t> x;
  for (int j = 0; j < w.dim(); ++j) {
    const auto space = w.column_space(j);
    if (!space) return false;
    std::vector<std::uint8_t> t(space->directions.size(), 0);
    const std::uint64_t points = checked_power(q, static_cast<int>(t.size()), 1U << 16);
    if (points <= (1U << 16)) {
      std::vector<std::vector<std::uint8_t>> good;
      do {
        point(w.field(), *space, t, x);
        w.set_column(j, x);
        if (w.diagonal_ok(j)) good.push_back(x);
      } while (next_counter(t, q));
      if (good.empty()) return false;
      std::uniform_int_distribution<std::size_t> pick(0, good.size() - 1);
      w.set_column(j, good[pick(rng)]);
    } else {
      bool found = false;
      for (int attempt = 0; attempt < 4096 && !found; ++attempt) {
        for (auto& v : t) v = static_cast<std::uint8_t>(digit(rng));
        point(w.field(), *space, t, x);
        w.set_column(j, x);
        found = w.diagonal_ok(j);
      }
      if (!found) return false;
    }
  }
  return true;
}

Matrix power(const Field& f, const Matrix& m, int k) {
  Matrix r = Matrix::identity(m.rows());
  for (int i = 0; i < k; ++i) r = gf::multiply(f, r, m);
  return r;
}

}  // namespace

std::uint64_t enumerate_radical(const FormSpace& fs, const LeviDatum& levi, const EnumerationOptions& opts,
                                const Visitor& visit) {
  const FlagSpec flag = flag_for(fs, levi);
  RadicalWalker walker(fs, flag);
  std::uint64_t count = 0;
  if (opts.sample) {
    std::mt19937_64 rng(opts.seed);
    for (std::uint64_t s = 0; s < *opts.sample; ++s) {
      bool ok = false;
      for (int attempt = 0; attempt < 1000 && !ok; ++attempt) ok = draw_sample(walker, rng);
      if (!ok) break;
      ++count;
      if (!visit(walker.matrix())) break;
    }
    return count;
  }
  const int e = radical_dimension(fs, levi);
  if (checked_power(fs.q, e, opts.budget) > opts.budget) {
    throw BudgetExceeded("radical has " + std::to_string(fs.q) + "^" + std::to_string(e) +
                         " elements, over the budget of " + std::to_string(opts.budget));
  }
  walk_exhaustive(walker, 0, visit, count);
  return count;
}

Partition jordan_type(const Field& f, const Matrix& g) {
  if (g.rows() != g.cols()) throw DomainError("Jordan type needs a square matrix");
  const int n = g.rows();
  const Matrix nil = gf::subtract(f, g, Matrix::identity(n));
  std::vector<int> kernel{0};
  Matrix m = nil;
  for (int k = 1; k <= n; ++k) {
    const int r = gf::rank(f, m);
    kernel.push_back(n - r);
    if (r == 0) break;
    m = gf::multiply(f, m, nil);
  }
  if (kernel.back() != n) throw DomainError("matrix is not unipotent");
  std::vector<int> dual_parts;
  for (std::size_t k = 1; k < kernel.size(); ++k) dual_parts.push_back(kernel[k] - kernel[k - 1]);
  return dual(Partition(std::move(dual_parts)));
}

bool preserves_form(const FormSpace& fs, const Matrix& g) {
  if (!fs.has_form()) return true;
  const Field& f = fs.field();
  const Matrix b = fs.gram();
  if (gf::multiply(f, gf::multiply(f, gf::transpose(g), b), g) != b) return false;
  if (fs.quadratic) {
    const Matrix cols = gf::transpose(g);
    for (int j = 0; j < fs.dim; ++j) {
      if (fs.phi(cols.row(j)) != 0) return false;
    }
  }
  return true;
}

bool acts_trivially_on_factors(const FormSpace& fs, const FlagSpec& flag, const Matrix& g) {
  int start = 0;
  for (int b : flag.blocks) {
    for (int j = start; j < start + b; ++j) {
      for (int k = start; k < fs.dim; ++k) {
        if (g.at(k, j) != (k == j ? 1 : 0)) return false;
      }
    }
    start += b;
  }
  return true;
}

Report verify_richardson(const FormSpace& fs, const LeviDatum& levi, const Partition& predicted,
                         const EnumerationOptions& opts) {
  if (predicted.sum() != fs.dim) throw DomainError("predicted partition does not match the natural module");
  const Field& f = fs.field();
  const GroupSpec parity = fs.parity_group();
  Report rep;
  rep.q = fs.q;
  rep.dim_q = radical_dimension(fs, levi);
  rep.exhaustive = !opts.sample.has_value();
  std::set<Partition, std::greater<>> seen;
  rep.total = enumerate_radical(fs, levi, opts, [&](const Matrix& g) {
    const Partition jt = jordan_type(f, g);
    switch (compare_dominance(jt, predicted)) {
      case Dominance::Equal:
        ++rep.attained_count;
        break;
      case Dominance::Less:
        break;
      default:
        rep.all_le = false;
    }
    if (seen.insert(jt).second && !satisfies_parity(jt, parity)) rep.parity_ok = false;
    return true;
  });
  rep.attained = rep.attained_count > 0;
  rep.observed.assign(seen.begin(), seen.end());
  return rep;
}

Report verify_with_retry(Family family, int n, int q, const LeviDatum& levi, const Partition& predicted,
                         const EnumerationOptions& opts) {
  Report rep = verify_richardson(build_space(family, n, q), levi, predicted, opts);
  for (int next = q + 1; next <= 5 && rep.all_le && !rep.attained; ++next) {
    if (next % 2 != q % 2) continue;
    try {
      rep = verify_richardson(build_space(family, n, next), levi, predicted, opts);
    } catch (const BudgetExceeded&) {
      break;
    }
  }
  return rep;
}

bool chain_nonsingular_witness(const FormSpace& fs, const Matrix& g, int x, std::uint64_t seed, int attempts) {
  if (!fs.has_form()) throw DomainError("GL_n carries no form to test chains against");
  const Field& f = fs.field();
  const Partition jt = jordan_type(f, g);
  if (x <= 0 || jt.multiplicity(x) == 0) {
    throw DomainError(std::to_string(x) + " is not a part of the Jordan type " + to_string(jt));
  }
  const int n = fs.dim;
  const Matrix nil = gf::subtract(f, g, Matrix::identity(n));
  const Matrix top_space = gf::nullspace(f, power(f, nil, x));
  const Matrix lower = gf::nullspace(f, power(f, nil, x - 1));
  const Matrix above = gf::multiply(f, gf::nullspace(f, power(f, nil, x + 1)), gf::transpose(nil));

  // Chain tops must avoid ker N^{x-1} + N ker N^{x+1}, else the chain sits inside a longer block.
  Matrix excluded(lower.rows() + above.rows() + 1, n);
  for (int i = 0; i < lower.rows(); ++i) std::copy_n(lower.row(i), n, excluded.row(i));
  for (int i = 0; i < above.rows(); ++i) std::copy_n(above.row(i), n, excluded.row(lower.rows() + i));
  const int last = excluded.rows() - 1;
  const int base_rank = gf::rank(f, excluded);

  const Matrix lift = power(f, nil, x - 1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> digit(0, f.q - 1);
  Matrix v(1, n);
  for (int a = 0; a < attempts; ++a) {
    std::fill_n(v.row(0), n, 0);
    for (int i = 0; i < top_space.rows(); ++i) {
      const auto c = static_cast<std::uint8_t>(digit(rng));
      for (int k = 0; k < n; ++k) v.at(0, k) = f.add[v.at(0, k)][f.mul[c][top_space.at(i, k)]];
    }
    std::copy_n(v.row(0), n, excluded.row(last));
    if (gf::rank(f, excluded) == base_rank) continue;
    const Matrix bottom = gf::multiply(f, v, gf::transpose(lift));
    if (fs.beta(bottom.row(0), v.row(0)) != 0) return true;
  }
  return false;
}

}  // namespace ua::oracle
