#pragma once

#include <cmath>
#include <complex>

namespace lagtet {

using cx = std::complex<double>;

// Numerical policy shared across the geometric routines. tol is the working
// tolerance for residual and identity tests, cluster the coarser radius used
// to merge nearby roots. Invariant: 0 < tol < cluster.
struct Tol {
  double tol = 1e-9;
  double cluster = 1e-6;
};

inline double sq(double x) { return x * x; }

inline bool near(double a, double b, double eps) { return std::abs(a - b) <= eps; }

inline bool near(cx a, cx b, double eps) { return std::abs(a - b) <= eps; }

// Square root with determinant-normalization branch: result s has
// arg(s) in (-pi/2, pi/2], so s is determined up to the global sign
// convention used when scaling matrices to det 1.
inline cx principal_sqrt(cx z) {
  cx s = std::sqrt(z);
  if (s.real() < 0 || (s.real() == 0 && s.imag() < 0)) s = -s;
  return s;
}

inline constexpr double pi() { return 3.14159265358979323846; }

}  // namespace lagtet
