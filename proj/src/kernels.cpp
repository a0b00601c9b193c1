#include "dclust/kernels.hpp"

#include <cstdlib>
#include <limits>
#include <vector>

namespace dclust::kernels {

#if defined(DCLUST_BUILD_AVX2)
const Ops& avx2_ops();
#endif

namespace {

#if defined(__aarch64__)
// NEON is baseline on aarch64; the compiler autovectorizes the scalar loops,
// so the reference kernels double as the NEON variant.
const Ops& neon_ops() {
  static const Ops ops{"neon", scalar_ops().sq_l2, scalar_ops().dot};
  return ops;
}
#endif

std::vector<const Ops*> usable_variants() {
  std::vector<const Ops*> v;
  v.push_back(&scalar_ops());
#if defined(DCLUST_BUILD_AVX2)
  if (__builtin_cpu_supports("avx2")) v.push_back(&avx2_ops());
#endif
#if defined(__aarch64__)
  v.push_back(&neon_ops());
#endif
  return v;
}

const Ops* initial_choice() {
  const auto variants = usable_variants();
  const Ops* chosen = variants.back();  // widest usable ISA
  if (const char* env = std::getenv("DCLUST_KERNELS")) {
    for (const Ops* ops : variants) {
      if (std::string(ops->name) == env) {
        chosen = ops;
        break;
      }
    }
  }
  return chosen;
}

const Ops*& current() {
  static const Ops* ptr = initial_choice();
  return ptr;
}

}  // namespace

const Ops& active() { return *current(); }

bool select(const std::string& name) {
  for (const Ops* ops : usable_variants()) {
    if (name == ops->name) {
      current() = ops;
      return true;
    }
  }
  return false;
}

std::string available() {
  std::string out;
  for (const Ops* ops : usable_variants()) {
    if (!out.empty()) out += ",";
    out += ops->name;
  }
  return out;
}

std::size_t argmin_sq_l2(const double* p, const double* centers, std::size_t k,
                         std::size_t d, double* best_sq) {
  const Ops& ops = active();
  std::size_t best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < k; ++j) {
    const double v = ops.sq_l2(p, centers + j * d, d);
    if (v < best_val) {
      best_val = v;
      best = j;
    }
  }
  if (best_sq) *best_sq = best_val;
  return best;
}

}  // namespace dclust::kernels
