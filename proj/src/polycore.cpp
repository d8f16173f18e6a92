#include "equicap/polycore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "equicap/errors.hpp"

namespace equicap {

double log_abs(const BigInt& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.backend().data());
  return std::log(std::abs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double to_double(const BigInt& x) {
  if (mpz_sizeinbase(x.backend().data(), 2) > 1023)
    throw ConditioningError("integer " + std::to_string(mpz_sizeinbase(x.backend().data(), 2)) +
                            " bits wide exceeds double range");
  return x.convert_to<double>();
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const BigInt& c, int k) {
  std::vector<BigInt> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return BigInt(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const BigInt& IntPoly::lead() const {
  if (is_zero()) throw MathDomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return IntPoly();
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::pow(unsigned k) const {
  IntPoly result{1};
  IntPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

cplx IntPoly::eval(cplx z) const {
  cplx acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + to_double(*it);
  return acc;
}

IntPoly IntPoly::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<BigInt> v;
  std::string tok;
  while (in >> tok) {
    const bool ok = !tok.empty() &&
                    std::all_of(tok.begin() + ((tok[0] == '-' || tok[0] == '+') ? 1 : 0), tok.end(),
                                [](unsigned char ch) { return std::isdigit(ch); }) &&
                    tok.find_first_of("0123456789") != std::string::npos;
    if (!ok) throw MathDomainError("bad integer coefficient '" + tok + "'");
    v.emplace_back(tok[0] == '+' ? tok.substr(1) : tok);
  }
  return IntPoly(std::move(v));
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ' ';
    s += coeffs_[i].str();
  }
  return s;
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
  std::vector<BigInt> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) v[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) v[i] += q.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) {
  std::vector<BigInt> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) v[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) v[i] -= q.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return IntPoly();
  std::vector<BigInt> v(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const BigInt& c, const IntPoly& p) {
  std::vector<BigInt> v(p.coeffs_.begin(), p.coeffs_.end());
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

// ------------------------------------------------------------ ComplexPoly

ComplexPoly::ComplexPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == cplx(0)) coeffs_.pop_back();
  if (coeffs_.empty()) throw MathDomainError("zero polynomial");
  for (const auto& c : coeffs_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw ConditioningError("non-finite polynomial coefficient");
}

ComplexPoly ComplexPoly::from(const IntPoly& p) {
  std::vector<cplx> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(to_double(c), 0.0);
  return ComplexPoly(std::move(v));
}

cplx ComplexPoly::eval(cplx z) const {
  cplx acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::pair<cplx, cplx> ComplexPoly::eval_with_derivative(cplx z) const {
  cplx p = 0, dp = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

double ComplexPoly::eval_scale(cplx z) const {
  const double r = std::abs(z);
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

// ------------------------------------------------------------- resultants

namespace detail {

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return BigInt(1);
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return BigInt(0);
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = t / prev;  // exact
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : BigInt(-m[n - 1][n - 1]);
}

BigInt resultant_sylvester(const IntPoly& p, int dp, const IntPoly& q, int dq) {
  const int n = dp + dq;
  std::vector<std::vector<BigInt>> s(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
  for (int i = 0; i < dq; ++i)
    for (int k = 0; k <= dp; ++k) s[i][i + k] = p.coeff(dp - k);
  for (int i = 0; i < dp; ++i)
    for (int k = 0; k <= dq; ++k) s[dq + i][i + k] = q.coeff(dq - k);
  return bareiss_determinant(std::move(s));
}

namespace {

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) g = boost::multiprecision::gcd(g, c);
  return abs(g);
}

IntPoly divide_exact(const IntPoly& p, const BigInt& c) {
  std::vector<BigInt> v(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : v) x /= c;
  return IntPoly(std::move(v));
}

// lc(b)^(deg a - deg b + 1) * a mod b
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const BigInt& lb = b.lead();
  int e = a.degree() - db + 1;
  int dr = a.degree();
  while (dr >= db) {
    const BigInt lr = r[static_cast<std::size_t>(dr)];
    for (int i = 0; i <= dr; ++i) r[i] *= lb;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= lr * b.coeff(i);
    --e;
    --dr;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
  }
  IntPoly rem(std::move(r));
  if (e > 0) {
    BigInt f = boost::multiprecision::pow(lb, static_cast<unsigned>(e));
    rem = f * rem;
  }
  return rem;
}

BigInt ipow(const BigInt& b, int e) { return boost::multiprecision::pow(b, static_cast<unsigned>(e)); }

}  // namespace

// Subresultant pseudo-remainder sequence (Collins / Brown), as in Cohen,
// "A Course in Computational Algebraic Number Theory", Alg. 3.3.7.
BigInt resultant_subresultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return BigInt(0);
  IntPoly a = p, b = q;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) s = -1;
  }
  if (b.degree() == 0) return s * ipow(b.lead(), a.degree());
  const BigInt ca = content(a), cb = content(b);
  a = divide_exact(a, ca);
  b = divide_exact(b, cb);
  const BigInt t = ipow(ca, b.degree()) * ipow(cb, a.degree());
  BigInt g = 1, h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = b;
    if (r.is_zero()) return BigInt(0);
    b = divide_exact(r, g * ipow(h, delta));
    g = a.lead();
    if (delta > 0) h = ipow(g, delta) / ipow(h, delta - 1);
    if (b.degree() == 0) break;
  }
  const int da = a.degree();
  h = ipow(b.lead(), da) / ipow(h, da - 1);
  return s * t * h;
}

}  // namespace detail

BigInt resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw MathDomainError("resultant of a zero polynomial");
  if (p.degree() + q.degree() <= 128) return detail::resultant_sylvester(p, p.degree(), q, q.degree());
  return detail::resultant_subresultant(p, q);
}

BigInt resultant_dd(const IntPoly& p, const IntPoly& q, int d) {
  if (p.is_zero() || q.is_zero()) throw MathDomainError("res_{d,d} of a zero polynomial");
  if (d < 1 || d < std::max(p.degree(), q.degree()))
    throw MathDomainError("res_{d,d}: d = " + std::to_string(d) + " below polynomial degree");
  if (d <= 64) return detail::resultant_sylvester(p, d, q, d);
  // Degree padding: expanding the Sylvester matrix along its leading column
  // peels off one lead(p) per missing degree of q, with sign +1. Swapping the
  // two row blocks costs (-1)^(d*d).
  const auto pw = [](const BigInt& b, int e) { return boost::multiprecision::pow(b, static_cast<unsigned>(e)); };
  if (p.degree() == d) return pw(p.lead(), d - q.degree()) * resultant(p, q);
  if (q.degree() == d) {
    BigInt r = pw(q.lead(), d - p.degree()) * resultant(q, p);
    return (d & 1) ? BigInt(-r) : r;
  }
  return BigInt(0);
}

BigInt discriminant(const IntPoly& p) {
  if (p.is_zero()) throw MathDomainError("discriminant of the zero polynomial");
  const int d = p.degree();
  if (d < 1) throw MathDomainError("discriminant needs degree >= 1");
  if (d == 1) return BigInt(1);
  BigInt r = resultant(p, p.derivative()) / p.lead();
  return ((d * (d - 1) / 2) % 2) ? BigInt(-r) : r;
}

// --------------------------------------------------------------- Bezout

BezoutResult bezout(const BigInt& a1, const BigInt& a2) {
  if (a1 == 0 && a2 == 0) throw MathDomainError("bezout(0, 0) is undefined");
  BigInt old_r = a1, r = a2, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt quo = old_r / r;
    BigInt tmp = old_r - quo * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quo * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quo * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

IntMatrix2 unimodular_shift(const BigInt& a1, const BigInt& a2) {
  const auto [g, x, y] = bezout(a1, a2);
  if (g != 1) throw MathDomainError("unimodular_shift needs coprime constants, gcd = " + g.str());
  IntMatrix2 phi;
  phi.m[0][0] = -a2;
  phi.m[0][1] = a1;
  phi.m[1][0] = -x;
  phi.m[1][1] = -y;
  return phi;
}

}  // namespace equicap
