#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "ua/gf.hpp"

namespace ua::kernels {

enum class Isa { Scalar, Avx2, Neon };

[[nodiscard]] std::string to_string(Isa isa);

/// Row primitives over a padded row; `len` is a multiple of gf::kRowAlign.
struct RowOps {
  Isa isa = Isa::Scalar;
  /// dst += c · src
  void (*axpy)(const gf::Field& f, std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t len) = nullptr;
  /// dst = c · dst
  void (*scale)(const gf::Field& f, std::uint8_t* dst, std::uint8_t c, std::size_t len) = nullptr;
};

[[nodiscard]] const RowOps& scalar_ops();
/// nullptr when the variant is not compiled in or the CPU lacks it.
[[nodiscard]] const RowOps* avx2_ops();
[[nodiscard]] const RowOps* neon_ops();

/// Best available variant; UA_SIMD=scalar in the environment forces the reference path.
[[nodiscard]] const RowOps& active();
/// Override for tests. nullptr restores automatic selection.
void force(const RowOps* ops);

}  // namespace ua::kernels
