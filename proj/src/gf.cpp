#include "ua/gf.hpp"

#include <array>
#include <string>

#include "ua/errors.hpp"
#include "ua/kernels.hpp"

namespace ua::gf {

namespace {

std::uint8_t f4_mul(std::uint8_t a, std::uint8_t b) {
  // Carry-less product reduced by ω² = ω + 1.
  std::uint8_t r = 0;
  for (int i = 0; i < 2; ++i) {
    if ((b >> i) & 1U) r ^= static_cast<std::uint8_t>(a << i);
  }
  if (r & 4U) r ^= 7U;
  return r;
}

Field make_field(int q) {
  Field f;
  f.q = q;
  f.xor_add = q == 2 || q == 4;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (q == 4) {
        f.add[a][b] = static_cast<std::uint8_t>(a ^ b);
        f.sub[a][b] = static_cast<std::uint8_t>(a ^ b);
        f.mul[a][b] = f4_mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b));
      } else {
        f.add[a][b] = static_cast<std::uint8_t>((a + b) % q);
        f.sub[a][b] = static_cast<std::uint8_t>((a - b + q) % q);
        f.mul[a][b] = static_cast<std::uint8_t>((a * b) % q);
      }
      f.mul16[a][b] = f.mul[a][b];
    }
  }
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (f.mul[a][b] == 1) f.inv[a] = static_cast<std::uint8_t>(b);
    }
  }
  return f;
}

std::size_t padded(int cols) {
  const auto c = static_cast<std::size_t>(cols);
  return c == 0 ? kRowAlign : (c + kRowAlign - 1) / kRowAlign * kRowAlign;
}

}  // namespace

bool is_supported_order(int q) { return q >= 2 && q <= 5; }

const Field& field(int q) {
  static const std::array<Field, 4> fields{make_field(2), make_field(3), make_field(4), make_field(5)};
  if (!is_supported_order(q)) throw DomainError("field order " + std::to_string(q) + " is not one of 2, 3, 4, 5");
  return fields[static_cast<std::size_t>(q - 2)];
}

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), stride_(padded(cols)), data_(static_cast<std::size_t>(rows) * stride_, 0) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix shape");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix shapes do not compose");
  const auto& ops = kernels::active();
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const std::uint8_t v = a.at(i, k);
      if (v != 0) ops.axpy(f, c.row(i), b.row(k), v, c.stride());
    }
  }
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  }
  return t;
}

Matrix subtract(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shapes differ");
  const auto& ops = kernels::active();
  Matrix c = a;
  const std::uint8_t minus_one = f.neg(1);
  for (int i = 0; i < a.rows(); ++i) ops.axpy(f, c.row(i), b.row(i), minus_one, c.stride());
  return c;
}

bool is_zero(const Matrix& a) {
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) != 0) return false;
    }
  }
  return true;
}

std::vector<int> row_reduce(const Field& f, Matrix& m, int ncols) {
  const auto& ops = kernels::active();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < ncols && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t k = 0; k < m.stride(); ++k) std::swap(m.row(p)[k], m.row(r)[k]);
    }
    ops.scale(f, m.row(r), f.inv[m.at(r, c)], m.stride());
    for (int i = 0; i < m.rows(); ++i) {
      if (i != r && m.at(i, c) != 0) ops.axpy(f, m.row(i), m.row(r), f.neg(m.at(i, c)), m.stride());
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(const Field& f, Matrix m) { return static_cast<int>(row_reduce(f, m, m.cols()).size()); }

Matrix nullspace(const Field& f, const Matrix& m) {
  Matrix r = m;
  const auto pivots = row_reduce(f, r, r.cols());
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  Matrix basis(m.cols() - static_cast<int>(pivots.size()), m.cols());
  int b = 0;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis.at(b, free) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) basis.at(b, pivots[k]) = f.neg(r.at(static_cast<int>(k), free));
    ++b;
  }
  return basis;
}

std::optional<AffineSpace> solve(const Field& f, Matrix augmented, int unknowns) {
  const auto pivots = row_reduce(f, augmented, unknowns);
  for (int i = static_cast<int>(pivots.size()); i < augmented.rows(); ++i) {
    if (augmented.at(i, unknowns) != 0) return std::nullopt;
  }
  const auto u = static_cast<std::size_t>(unknowns);
  AffineSpace out;
  out.base.assign(u, 0);
  std::vector<bool> is_pivot(u, false);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    is_pivot[static_cast<std::size_t>(pivots[k])] = true;
    out.base[static_cast<std::size_t>(pivots[k])] = augmented.at(static_cast<int>(k), unknowns);
  }
  for (int free = 0; free < unknowns; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<std::uint8_t> dir(u, 0);
    dir[static_cast<std::size_t>(free)] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      dir[static_cast<std::size_t>(pivots[k])] = f.neg(augmented.at(static_cast<int>(k), free));
    }
    out.directions.push_back(std::move(dir));
  }
  return out;
}

}  // namespace ua::gf
