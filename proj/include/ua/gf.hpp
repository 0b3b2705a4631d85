#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ua::gf {

/// Rows are padded to this many bytes so kernels never need a tail loop.
inline constexpr std::size_t kRowAlign = 32;

/// Arithmetic tables for F_2, F_3, F_4, F_5.
///
/// F_4 elements are bit patterns a + b·ω with ω² = ω + 1, so addition is XOR.
struct Field {
  int q = 2;
  bool xor_add = false;  // characteristic 2
  std::uint8_t add[5][5] = {};
  std::uint8_t sub[5][5] = {};
  std::uint8_t mul[5][5] = {};
  std::uint8_t inv[5] = {};
  alignas(16) std::uint8_t mul16[5][16] = {};  // mul16[c][x] = c·x for x < q, 0 above

  [[nodiscard]] std::uint8_t neg(std::uint8_t a) const { return sub[0][a]; }
  [[nodiscard]] bool characteristic_two() const { return xor_add; }
};

[[nodiscard]] bool is_supported_order(int q);
/// Shared immutable tables. Throws DomainError for q outside {2, 3, 4, 5}.
[[nodiscard]] const Field& field(int q);

/// Dense matrix over a small field with padded rows.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  [[nodiscard]] std::size_t stride() const { return stride_; }

  [[nodiscard]] std::uint8_t* row(int i) { return data_.data() + static_cast<std::size_t>(i) * stride_; }
  [[nodiscard]] const std::uint8_t* row(int i) const { return data_.data() + static_cast<std::size_t>(i) * stride_; }
  [[nodiscard]] std::uint8_t& at(int i, int j) { return row(i)[j]; }
  [[nodiscard]] std::uint8_t at(int i, int j) const { return row(i)[j]; }

  static Matrix identity(int n);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint8_t> data_;
};

[[nodiscard]] Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix transpose(const Matrix& a);
/// a - b entrywise.
[[nodiscard]] Matrix subtract(const Field& f, const Matrix& a, const Matrix& b);
[[nodiscard]] bool is_zero(const Matrix& a);

/// Reduced row echelon form in place over the first `ncols` columns; returns pivot columns.
std::vector<int> row_reduce(const Field& f, Matrix& m, int ncols);

[[nodiscard]] int rank(const Field& f, Matrix m);

/// Rows form a basis of {x : m·x = 0}.
[[nodiscard]] Matrix nullspace(const Field& f, const Matrix& m);

/// Solution set base + span(directions) of A x = b.
struct AffineSpace {
  std::vector<std::uint8_t> base;
  std::vector<std::vector<std::uint8_t>> directions;
};

/// `augmented` holds [A | b] with `unknowns` columns in A. Empty result when inconsistent.
[[nodiscard]] std::optional<AffineSpace> solve(const Field& f, Matrix augmented, int unknowns);

}  // namespace ua::gf
