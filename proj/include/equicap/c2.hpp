#pragma once

#include <cmath>
#include <complex>

namespace equicap {

struct C2 {
  std::complex<double> z1, z2;
};

inline std::complex<double> wedge(const C2& z, const C2& w) { return z.z1 * w.z2 - z.z2 * w.z1; }

inline double norm(const C2& z) { return std::hypot(std::abs(z.z1), std::abs(z.z2)); }

// Proportional when |z ^ w| < tol ||z|| ||w||.
inline bool proportional(const C2& z, const C2& w, double tol = 1e-12) {
  return std::abs(wedge(z, w)) < tol * norm(z) * norm(w);
}

}  // namespace equicap
