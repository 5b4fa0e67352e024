#pragma once

// Continuum eigenstates of the unperturbed double barrier.
//
// Even states:  cos(kx) inside, A e^{kx kappa} + B e^{-kappa x} in the
// barrier, C cos(kx) + sign(x) D sin(kx) outside. Odd states carry
// sin(kx) inside and the sign-symmetrized outer pieces. The squared
// normalization n^2 = C^2 + D^2 uses literal squares (no conjugation) so
// that it stays analytic in k and possesses complex zeros.
//
// All evaluators are templated on the complex type so the same formulas
// run at double and at extended (50-digit) precision. The outer
// coefficients are evaluated with the growing exponential grouped as
// P = e^{kappa (d - x0)}; no e^{2 kappa d} appears un-divided.

#include <complex>

#include "qdecay/errors.hpp"
#include "qdecay/types.hpp"

namespace qdecay {

inline constexpr double degenerate_guard = 1e-8;  // fm^-1, on |k| and |kappa|

template <typename C>
struct PiecewiseCoefficients {
  Parity parity{};
  C k{};
  C kappa{};
  C A{}, B{};        // barrier region, coefficients of e^{+kappa|x|}, e^{-kappa|x|}
  C C_out{}, D_out{};  // outer free region
  // cached shorthands
  C e1{}, e2{}, e3{}, c1{}, c2{}, s1{}, s2{};
};

namespace detail {

template <typename C> struct real_of;
template <typename T> struct real_of<std::complex<T>> { using type = T; };

template <typename C>
inline auto cabs(const C& z) { return abs(z); }
template <typename T>
inline T cabs(const std::complex<T>& z) { return std::abs(z); }

} // namespace detail

// kappa = sqrt(2 m gamma - k^2), principal branch. For real k above the
// barrier momentum p = sqrt(2 m gamma) this continues to +i|kappa|; the
// coefficient formulas below are even in kappa, so the branch choice only
// fixes intermediate values, not C, D or n^2.
template <typename C>
C kappa(const C& k, const BarrierConfig& barrier) {
  using std::sqrt;
  using R = typename detail::real_of<C>::type;
  C arg = C(R(2) * R(barrier.m) * R(barrier.gamma)) - k * k;
  if (arg.imag() == 0 && arg.real() < 0)
    return C(R(0), sqrt(-arg.real()));  // above-barrier continuation on +i
  return sqrt(arg);
}

template <typename C>
PiecewiseCoefficients<C> coefficients(Parity parity, const C& k,
                                      const BarrierConfig& barrier) {
  using std::cos;
  using std::exp;
  using std::sin;
  using R = typename detail::real_of<C>::type;
  if (barrier.kind != BarrierKind::square)
    throw Error("coefficients: square barrier required");
  PiecewiseCoefficients<C> w;
  w.parity = parity;
  w.k = k;
  w.kappa = kappa(k, barrier);
  if (detail::cabs(k) < degenerate_guard || detail::cabs(w.kappa) < degenerate_guard)
    throw DegeneratePointError("coefficients: k or kappa inside degenerate guard");

  const R x0 = R(barrier.x0), d = R(barrier.d);
  w.c1 = cos(k * x0);
  w.s1 = sin(k * x0);
  w.c2 = cos(k * d);
  w.s2 = sin(k * d);
  w.e1 = exp(w.kappa * (R(2) * x0));
  w.e2 = exp(w.kappa * (R(2) * d));
  w.e3 = exp(w.kappa * (x0 + d));

  const C P = w.e2 / w.e3;  // e^{kappa (d - x0)}, the only large factor
  const C rk = k / w.kappa;
  const C rq = w.kappa / k;

  // tA multiplies the growing exponential through the barrier; a resonance
  // is tA ~ 0.
  C tA, tB;
  if (parity == Parity::even) {
    tA = w.c1 - rk * w.s1;
    tB = w.c1 + rk * w.s1;
  } else {
    tA = w.s1 + rk * w.c1;
    tB = w.s1 - rk * w.c1;
  }
  const C fc = w.c2 - rq * w.s2;
  const C gc = w.c2 + rq * w.s2;
  const C fs = w.s2 + rq * w.c2;
  const C gs = w.s2 - rq * w.c2;

  const R half(R(1) / R(2));
  w.C_out = (P * tA * fc + tB * gc / P) * half;
  w.D_out = (P * tA * fs + tB * gs / P) * half;
  // barrier coefficients from the 2x2 continuity system at x0
  w.A = tA * half * exp(-w.kappa * x0);
  w.B = tB * half * exp(w.kappa * x0);
  return w;
}

template <typename C>
struct NormalizationValue {
  Parity parity{};
  C k{};
  C n_sq{};  // C^2 + D^2, analytic continuation
  C n{};     // principal square root
};

template <typename C>
C norm_sq(Parity parity, const C& k, const BarrierConfig& barrier) {
  if (barrier.kind == BarrierKind::square) {
    auto w = coefficients(parity, k, barrier);
    return w.C_out * w.C_out + w.D_out * w.D_out;
  }
  // delta kind
  using std::cos;
  using std::sin;
  using R = typename detail::real_of<C>::type;
  if (detail::cabs(k) < degenerate_guard)
    throw DegeneratePointError("norm_sq: k inside degenerate guard");
  const R a = R(barrier.m) * R(barrier.nu);
  const C c1 = cos(k * R(barrier.x0));
  const C s1 = sin(k * R(barrier.x0));
  C Cc, Dd;
  if (parity == Parity::even) {
    Cc = C(R(1)) - (a / k) * (R(2) * s1 * c1);
    Dd = (R(2) * a / k) * c1 * c1;
  } else {
    Cc = -(R(2) * a / k) * s1 * s1;
    Dd = C(R(1)) + (a / k) * (R(2) * s1 * c1);
  }
  return Cc * Cc + Dd * Dd;
}

template <typename C>
NormalizationValue<C> norm(Parity parity, const C& k, const BarrierConfig& barrier) {
  using std::sqrt;
  NormalizationValue<C> v;
  v.parity = parity;
  v.k = k;
  v.n_sq = norm_sq(parity, k, barrier);
  v.n = sqrt(v.n_sq);
  return v;
}

// Outer-region coefficients (C, D) and n for the delta barrier: inner
// cos/sin, outer fixed by continuity and the derivative jump
// phi'(x0+) - phi'(x0-) = 2 m nu phi(x0).
template <typename C>
void delta_coefficients(Parity parity, const C& k, double nu, double x0, double m,
                        C& C_out, C& D_out, C& n_out) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  using R = typename detail::real_of<C>::type;
  const R a = R(m) * R(nu);
  const C c1 = cos(k * R(x0));
  const C s1 = sin(k * R(x0));
  if (parity == Parity::even) {
    C_out = C(R(1)) - (a / k) * (R(2) * s1 * c1);
    D_out = (R(2) * a / k) * c1 * c1;
  } else {
    C_out = -(R(2) * a / k) * s1 * s1;
    D_out = C(R(1)) + (a / k) * (R(2) * s1 * c1);
  }
  n_out = sqrt(C_out * C_out + D_out * D_out);
}

// A stationary state with every coefficient divided by n, plus 1/n itself.
// This is the numerically safe way to hand a near-resonance wave (n ~ 1e-10,
// computed at extended precision) to double-precision quadrature: all the
// ratios are O(1)..O(1/n) and representable.
struct NormalizedWave {
  Parity parity{};
  BarrierKind kind{};
  double k = 0;
  double kappa = 0;     // square kind only
  double x0 = 0, d = 0;
  double inv_n = 0;     // 1/n
  double A_n = 0, B_n = 0;   // barrier coefficients / n
  double C_n = 0, D_n = 0;   // outer coefficients / n

  // phi(k,x)/(sqrt(pi) n) and its x-derivative, for x >= 0; odd states are
  // extended by parity by the caller when needed.
  double chi(double x) const;
  double dchi(double x) const;
};

NormalizedWave make_normalized_wave(Parity parity, double k, const BarrierConfig& barrier);

// Same, but k given as a decimal string evaluated at 50-digit precision;
// required when k sits at a resonance minimum where double arithmetic
// cannot resolve the coefficient cancellation.
NormalizedWave make_normalized_wave_ext(Parity parity, const std::string& k_digits,
                                        const BarrierConfig& barrier);

// chi_{e,o}(k, x) for real k and any x (both signs), all barrier kinds.
double eval_chi(Parity parity, double k, double x, const BarrierConfig& barrier);
double eval_dchi(Parity parity, double k, double x, const BarrierConfig& barrier);

} // namespace qdecay
