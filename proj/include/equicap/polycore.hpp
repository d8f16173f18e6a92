#pragma once

// Exact integer-polynomial arithmetic (resultants, discriminants, Bezout)
// and numerical root extraction.

#include <array>
#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace equicap {

using BigInt = boost::multiprecision::mpz_int;
using cplx = std::complex<double>;

// log|x| for arbitrarily large x; -inf for zero.
double log_abs(const BigInt& x);
// Nearest double; throws ConditioningError outside double range.
double to_double(const BigInt& x);

/// Univariate polynomial over Z. coeffs()[i] is the coefficient of z^i;
/// trailing zeros are stripped so the leading coefficient is nonzero
/// unless the polynomial is zero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly monomial(const BigInt& c, int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  // Zero beyond the degree.
  BigInt coeff(int i) const;
  const BigInt& lead() const;
  BigInt constant_term() const { return coeff(0); }

  IntPoly derivative() const;
  IntPoly pow(unsigned k) const;
  // Horner evaluation in double precision.
  cplx eval(cplx z) const;

  // Whitespace-separated integers, lowest degree first.
  static IntPoly parse(std::string_view text);
  std::string str() const;

  friend IntPoly operator+(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator-(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator*(const BigInt& c, const IntPoly& p);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Numeric shadow of a polynomial with complex double coefficients;
/// coeffs()[i] multiplies z^i and the leading coefficient is nonzero.
class ComplexPoly {
 public:
  explicit ComplexPoly(std::vector<cplx> coeffs);
  // Throws ConditioningError when a coefficient exceeds double range.
  static ComplexPoly from(const IntPoly& p);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const cplx> coeffs() const { return coeffs_; }
  const cplx& lead() const { return coeffs_.back(); }
  cplx eval(cplx z) const;
  // p(z) and p'(z) in one Horner pass.
  std::pair<cplx, cplx> eval_with_derivative(cplx z) const;
  // sum |a_i| |z|^i, the backward-error scale of eval(z).
  double eval_scale(cplx z) const;

 private:
  std::vector<cplx> coeffs_;
};

/// res_{d,d}(p, q): the 2d x 2d Sylvester determinant with both polynomials
/// read as degree d (leading zeros allowed).
BigInt resultant_dd(const IntPoly& p, const IntPoly& q, int d);

/// Standard resultant with actual degrees.
BigInt resultant(const IntPoly& p, const IntPoly& q);

/// (-1)^{d(d-1)/2} lead^{2d-2} prod_{i != j}(x_i - x_j); 1 for linear p.
BigInt discriminant(const IntPoly& p);

namespace detail {
// Both routes are exposed so they can be checked against each other.
BigInt resultant_sylvester(const IntPoly& p, int dp, const IntPoly& q, int dq);
BigInt resultant_subresultant(const IntPoly& p, const IntPoly& q);
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);
}  // namespace detail

struct BezoutResult {
  BigInt g, x, y;  // g = gcd > 0 and a1 x + a2 y = g
};
BezoutResult bezout(const BigInt& a1, const BigInt& a2);

/// 2x2 integer matrix acting on column vectors; also a linear map of C^2.
struct IntMatrix2 {
  std::array<std::array<BigInt, 2>, 2> m;

  BigInt det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  std::array<BigInt, 2> apply(const BigInt& z1, const BigInt& z2) const {
    return {m[0][0] * z1 + m[0][1] * z2, m[1][0] * z1 + m[1][1] * z2};
  }
};

/// Phi(z1, z2) = (-a2 z1 + a1 z2, -x z1 - y z2) with a1 x + a2 y = 1, so that
/// Phi(-a1, -a2) = (0, 1) and det Phi = 1. Requires gcd(a1, a2) = 1.
IntMatrix2 unimodular_shift(const BigInt& a1, const BigInt& a2);

struct RootOptions {
  int max_iterations = 200;
  double residual_tol = 1e-10;
};

/// All deg p roots (with repetition) by Aberth-Ehrlich iteration seeded on a
/// circle of Fujiwara-bound radius, followed by Newton polishing. Restarts
/// once from perturbed seeds, then throws ConvergenceError.
std::vector<cplx> roots(const ComplexPoly& p, const RootOptions& opt = {});

/// Roots of an integer polynomial computed entirely in ~330-bit binary
/// floating point from the exact coefficients, rounded to double at the end.
/// Independent of roots(); intended for ill-conditioned expansions.
std::vector<cplx> roots_multiprecision(const IntPoly& p, int max_iterations = 1000);

}  // namespace equicap
