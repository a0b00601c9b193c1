#pragma once

#include <cstddef>
#include <string>

namespace dclust::kernels {

// Arithmetic inner loops used by every distance scan in the library.
// A scalar reference implementation always exists; wider ISA variants are
// registered at startup and picked at runtime. The DCLUST_KERNELS
// environment variable (scalar|avx2|neon) forces a variant.
struct Ops {
  const char* name;
  double (*sq_l2)(const double* a, const double* b, std::size_t n);
  double (*dot)(const double* a, const double* b, std::size_t n);
};

const Ops& scalar_ops();

// Currently selected variant.
const Ops& active();

// Force a variant by name; returns false if it is not available on this CPU.
bool select(const std::string& name);

// Comma-separated list of variants compiled in and usable on this CPU.
std::string available();

inline double sq_l2(const double* a, const double* b, std::size_t n) {
  return active().sq_l2(a, b, n);
}

inline double dot(const double* a, const double* b, std::size_t n) {
  return active().dot(a, b, n);
}

// Index of the row of `centers` (k rows of length d) closest to `p` in
// squared l2; ties broken by lowest index.
std::size_t argmin_sq_l2(const double* p, const double* centers, std::size_t k,
                         std::size_t d, double* best_sq = nullptr);

}  // namespace dclust::kernels
