#ifndef HOLANT_COMPLEX_HPP
#define HOLANT_COMPLEX_HPP

#include <algorithm>
#include <cmath>
#include <complex>

namespace holant {

using Complex = std::complex<double>;

// Numeric comparison policy: relative tolerance with an absolute floor.
struct Tolerance {
  double relative = 1e-9;
  double absolute = 1e-12;

  bool close(const Complex &a, const Complex &b) const {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= std::max(absolute, relative * scale);
  }

  // |v| below tolerance at the given magnitude scale.
  bool negligible(const Complex &v, double scale = 1.0) const {
    return std::abs(v) <= std::max(absolute, relative * scale);
  }
};

inline bool is_finite(const Complex &v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// z^k for integer k >= 0, with 0^0 = 1.
inline Complex ipow(Complex z, int k) {
  Complex r{1.0, 0.0};
  while (k > 0) {
    if (k & 1) r *= z;
    z *= z;
    k >>= 1;
  }
  return r;
}

}  // namespace holant

#endif
