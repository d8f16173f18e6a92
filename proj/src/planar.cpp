#include "equicap/planar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "equicap/errors.hpp"

namespace equicap {
namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double base_green_inf(const BaseSet& K, cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw MathDomainError("green_inf: z must be finite (use robin_inf for the pole)");
  return std::visit(
      overloaded{
          [&](const Interval& I) {
            const cplx u = (2.0 * z - (I.a + I.b)) / (I.b - I.a);
            // sqrt(u-1) sqrt(u+1) is cut only along [-1, 1]; the max picks the
            // exterior branch even on the cut.
            const cplx s = std::sqrt(u - 1.0) * std::sqrt(u + 1.0);
            const double m = std::max(std::abs(u + s), std::abs(u - s));
            return std::max(0.0, std::log(m));
          },
          [&](const Circle& C) { return std::max(0.0, std::log(std::abs(z - C.center) / C.radius)); }},
      K);
}

double base_robin_inf(const BaseSet& K) {
  return std::visit(overloaded{[](const Interval& I) { return -std::log((I.b - I.a) / 4.0); },
                               [](const Circle& C) { return -std::log(C.radius); }},
                    K);
}

BaseSet base_invert(const BaseSet& K) {
  return std::visit(
      overloaded{[](const Interval& I) -> BaseSet {
                   if (I.a <= 0.0 && I.b >= 0.0)
                     throw MathDomainError("interval contains 0; no pole at 0 possible");
                   return Interval{1.0 / I.b, 1.0 / I.a};
                 },
                 [](const Circle& C) -> BaseSet {
                   const double D = std::norm(C.center) - C.radius * C.radius;
                   if (std::abs(D) <= 1e-14 * C.radius * C.radius)
                     throw MathDomainError("circle passes through 0");
                   return Circle{std::conj(C.center) / D, C.radius / std::abs(D)};
                 }},
      K);
}

double base_green_zero(const BaseSet& K, cplx z) {
  if (z == cplx(0)) throw MathDomainError("green_zero: z = 0 is the pole");
  return base_green_inf(base_invert(K), 1.0 / z);
}

GameMatrix2 base_gamma(const BaseSet& K) {
  const BaseSet inv = base_invert(K);
  return {base_robin_inf(inv), base_green_inf(K, 0.0), base_green_inf(inv, 0.0), base_robin_inf(K)};
}

BaseSet as_base(const PlanarSet& K, const char* what) {
  if (const auto* I = std::get_if<Interval>(&K)) return *I;
  if (const auto* C = std::get_if<Circle>(&K)) return *C;
  throw MathDomainError(std::string(what) +
                        ": only the weighted Green combination exists for preimage sets");
}

}  // namespace

cplx MonicRationalMap::eval(cplx z) const {
  if (z == cplx(0)) throw MathDomainError("rational map has a pole at 0");
  return numerator.eval(z) / std::pow(z, pole_order);
}

Interval make_interval(double a, double b) {
  if (!(std::isfinite(a) && std::isfinite(b) && a < b))
    throw MathDomainError("interval needs finite a < b");
  return {a, b};
}

Circle make_circle(cplx center, double radius) {
  if (!(std::isfinite(center.real()) && std::isfinite(center.imag())))
    throw MathDomainError("circle center must be finite");
  if (!(radius > 0.0 && std::isfinite(radius))) throw MathDomainError("circle radius must be > 0");
  return {center, radius};
}

MonicRationalMap make_map(IntPoly numerator, int pole_order) {
  const int n = numerator.degree();
  if (n < 2) throw MathDomainError("rational map numerator needs degree >= 2");
  if (numerator.lead() != 1) throw MathDomainError("rational map numerator must be monic");
  const BigInt c0 = numerator.constant_term();
  if (c0 != 1 && c0 != -1) throw MathDomainError("rational map numerator needs N(0) = +-1");
  if (pole_order < 1 || pole_order >= n) throw MathDomainError("pole order must satisfy 1 <= j < n");
  return {std::move(numerator), pole_order};
}

RationalPreimage make_preimage(MonicRationalMap map, BaseSet base) {
  map = make_map(std::move(map.numerator), map.pole_order);
  if (std::abs(base_robin_inf(base)) > 1e-12)
    throw MathDomainError("preimage base must have logarithmic capacity 1");
  return {std::move(map), std::move(base)};
}

PlanarSet as_planar(const BaseSet& E) {
  return std::visit([](const auto& x) -> PlanarSet { return x; }, E);
}

PlanarSet invert(const PlanarSet& K) { return as_planar(base_invert(as_base(K, "invert"))); }

double green_inf(const PlanarSet& K, cplx z) { return base_green_inf(as_base(K, "green_inf"), z); }
double green_zero(const PlanarSet& K, cplx z) { return base_green_zero(as_base(K, "green_zero"), z); }
double robin_inf(const PlanarSet& K) { return base_robin_inf(as_base(K, "robin_inf")); }
double robin_zero(const PlanarSet& K) {
  return base_robin_inf(base_invert(as_base(K, "robin_zero")));
}

std::pair<double, double> payoffs(const GameMatrix2& g, const ProbVector2& s) {
  return {g.g11 * s.s1 + g.g12 * s.s2, g.g21 * s.s1 + g.g22 * s.s2};
}

GameMatrix2 gamma_matrix(const PlanarSet& K) { return base_gamma(as_base(K, "gamma_matrix")); }

namespace {
// Crossing point of the two row payoffs as a function of s1, if any.
std::optional<double> crossing(const GameMatrix2& g) {
  const double D = g.g11 - g.g12 - g.g21 + g.g22;
  if (D == 0.0) return std::nullopt;
  return (g.g22 - g.g12) / D;
}
}  // namespace

double game_value(const GameMatrix2& g) {
  auto lower = [&](double s1) {
    const auto [f1, f2] = payoffs(g, {s1, 1.0 - s1});
    return std::min(f1, f2);
  };
  double v = std::max(lower(0.0), lower(1.0));
  if (auto s = crossing(g); s && *s > 0.0 && *s < 1.0) v = std::max(v, lower(*s));
  return v;
}

std::optional<ProbVector2> equalizing_vector(const GameMatrix2& g) {
  const auto s = crossing(g);
  if (!s) {
    if (g.g12 == g.g22) return ProbVector2{0.5, 0.5};
    return std::nullopt;
  }
  double s1 = *s;
  if (s1 < -1e-14 || s1 > 1.0 + 1e-14) return std::nullopt;
  s1 = std::clamp(s1, 0.0, 1.0);
  return ProbVector2{s1, 1.0 - s1};
}

double pullback_green(const MonicRationalMap& r, const BaseSet& base, cplx z) {
  if (z == cplx(0)) throw MathDomainError("pullback_green: z = 0 is a pole of r");
  return base_green_inf(base, r.eval(z));
}

PreimagePayoffs preimage_payoffs(const RationalPreimage& K) {
  const int n = K.map.n(), j = K.map.j();
  const ProbVector2 s{static_cast<double>(j) / n, static_cast<double>(n - j) / n};
  // Far enough out for the o(1) terms to be ~1e-10, close enough that r(z)
  // stays inside double range.
  const double ex = std::min(10.0, 150.0 / n);
  const cplx dir = std::polar(1.0, 0.7);
  const double small = std::pow(10.0, -ex), big = std::pow(10.0, ex);
  const double w0 = pullback_green(K.map, K.base, small * dir) / n;
  const double winf = pullback_green(K.map, K.base, big * dir) / n;
  return {s, w0 + s.s1 * std::log(small), winf - s.s2 * std::log(big)};
}

double cantor_capacity(const PlanarSet& K) {
  if (const auto* P = std::get_if<RationalPreimage>(&K)) {
    const auto pp = preimage_payoffs(*P);
    return std::exp(-0.5 * (pp.payoff0 + pp.payoffinf));
  }
  return std::exp(-game_value(gamma_matrix(K)));
}

HeightReport height(const PlanarSet& K, const IntPoly& p) {
  if (p.degree() < 1) throw MathDomainError("height needs deg p >= 1");
  if (p.constant_term() == 0) throw MathDomainError("height undefined when p(0) = 0");
  return height(K, p, roots(ComplexPoly::from(p)));
}

HeightReport height(const PlanarSet& K, const IntPoly& p, const std::vector<cplx>& zeros) {
  const int d = p.degree();
  if (d < 1) throw MathDomainError("height needs deg p >= 1");
  if (p.constant_term() == 0) throw MathDomainError("height undefined when p(0) = 0");
  if (static_cast<int>(zeros.size()) != d) throw MathDomainError("height: need deg p zeros");
  HeightReport h;
  h.log_const_lead = log_abs(p.constant_term()) + log_abs(p.lead());
  if (const auto* P = std::get_if<RationalPreimage>(&K)) {
    h.weighted = true;
    const double n = P->map.n();
    for (const cplx& x : zeros) h.green_sum += pullback_green(P->map, P->base, x) / n;
  } else {
    const BaseSet E = as_base(K, "height");
    const BaseSet inv = base_invert(E);
    for (const cplx& x : zeros) h.green_sum += base_green_inf(inv, 1.0 / x) + base_green_inf(E, x);
  }
  h.total = (h.log_const_lead + h.green_sum) / d;
  return h;
}

double nu_density(const Interval& K, NuKind which, double t) {
  if (!(t > K.a && t < K.b)) throw MathDomainError("nu_density: t outside the open interval");
  const double root = std::sqrt((t - K.a) * (K.b - t));
  if (which == NuKind::inf) return 1.0 / (kPi * root);
  if (!(K.a > 0)) throw MathDomainError("nu_density: harmonic measure from 0 needs a > 0");
  return std::sqrt(K.a * K.b) / (kPi * t * root);
}

double nu_integrate(const Interval& K, NuKind which, const std::function<double(double)>& f) {
  if (which == NuKind::zero && !(K.a > 0))
    throw MathDomainError("nu_integrate: harmonic measure from 0 needs a > 0");
  const double mid = 0.5 * (K.a + K.b), half = 0.5 * (K.b - K.a), sab = std::sqrt(K.a * K.b);
  auto g = [&](double th) {
    const double t = mid + half * std::cos(th);
    return which == NuKind::inf ? f(t) : f(t) * sab / t;
  };
  auto trap = [&](int N) {
    double s = 0.5 * (g(0.0) + g(kPi));
    for (int k = 1; k < N; ++k) s += g(kPi * k / N);
    return s / N;
  };
  double prev = trap(64);
  for (int N = 128; N <= (1 << 20); N *= 2) {
    const double cur = trap(N);
    if (std::abs(cur - prev) <= 1e-15 * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  throw ConvergenceError("nu_integrate: trapezoid rule did not settle");
}

double nu_moment(const Interval& K, NuKind which, int k) {
  return nu_integrate(K, which, [k](double t) { return std::pow(t, k); });
}

double DiscreteMeasure1D::total_mass() const {
  double s = mass_at_infinity;
  for (double w : weights) s += w;
  return s;
}

DiscreteMeasure1D sample_nu_K(const RationalPreimage& K, const ProbVector2& s, int count,
                              std::uint64_t seed) {
  const int n = K.map.n(), j = K.map.j();
  if (count < 1) throw MathDomainError("sample_nu_K: count must be positive");
  if (std::abs(s.s1 - static_cast<double>(j) / n) > 1e-12 ||
      std::abs(s.s2 - static_cast<double>(n - j) / n) > 1e-12)
    throw MathDomainError("sample_nu_K: s must be (j/n, (n-j)/n) for this map");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<cplx> N;
  for (const BigInt& c : K.map.numerator.coeffs()) N.emplace_back(to_double(c), 0.0);

  DiscreteMeasure1D out;
  out.points.reserve(static_cast<std::size_t>(n) * count);
  const double w = 1.0 / (static_cast<double>(n) * count);
  for (int i = 0; i < count; ++i) {
    const cplx target = std::visit(
        overloaded{[&](const Circle& C) { return C.center + std::polar(C.radius, 2.0 * kPi * U(rng)); },
                   [&](const Interval& I) {
                     return cplx(0.5 * (I.a + I.b) + 0.5 * (I.b - I.a) * std::cos(kPi * U(rng)));
                   }},
        K.base);
    std::vector<cplx> c = N;
    c[j] -= target;
    for (const cplx& z : roots(ComplexPoly(std::move(c)))) {
      out.points.push_back(z);
      out.weights.push_back(w);
    }
  }
  return out;
}

double base_cdf(const BaseSet& base, double x) {
  return std::visit(overloaded{[&](const Circle&) { return std::clamp(x / (2.0 * kPi), 0.0, 1.0); },
                               [&](const Interval& I) {
                                 const double u = std::clamp((2.0 * x - I.a - I.b) / (I.b - I.a), -1.0, 1.0);
                                 return 1.0 - std::acos(u) / kPi;
                               }},
                    base);
}

double base_coordinate(const BaseSet& base, cplx w) {
  return std::visit(overloaded{[&](const Circle& C) {
                                 double t = std::arg(w - C.center);
                                 if (t < 0) t += 2.0 * kPi;
                                 return t;
                               },
                               [&](const Interval&) { return w.real(); }},
                    base);
}

}  // namespace equicap
