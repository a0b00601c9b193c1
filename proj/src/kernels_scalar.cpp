#include "dclust/kernels.hpp"

namespace dclust::kernels {

namespace {

double sq_l2_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{"scalar", &sq_l2_scalar, &dot_scalar};
  return ops;
}

}  // namespace dclust::kernels
