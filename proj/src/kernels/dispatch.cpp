#include <atomic>
#include <cstdlib>
#include <string_view>

#include "ua/kernels.hpp"

namespace ua::kernels {

namespace {

std::atomic<const RowOps*> forced{nullptr};

const RowOps& detect() {
  const char* env = std::getenv("UA_SIMD");
  if (env != nullptr && std::string_view(env) == "scalar") return scalar_ops();
  if (const RowOps* ops = avx2_ops()) return *ops;
  if (const RowOps* ops = neon_ops()) return *ops;
  return scalar_ops();
}

}  // namespace

std::string to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "scalar";
}

const RowOps& active() {
  if (const RowOps* ops = forced.load(std::memory_order_relaxed)) return *ops;
  static const RowOps& chosen = detect();
  return chosen;
}

void force(const RowOps* ops) { forced.store(ops, std::memory_order_relaxed); }

}  // namespace ua::kernels
