#include "qdecay/stationary.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>

namespace qdecay {

namespace {

namespace mp = boost::multiprecision;
using r50 = mp::cpp_bin_float_50;
using c50 = mp::cpp_complex_50;

template <typename C>
NormalizedWave build_wave(Parity parity, const C& k, const BarrierConfig& barrier) {
  NormalizedWave w;
  w.parity = parity;
  w.kind = barrier.kind;
  w.x0 = barrier.x0;
  w.d = barrier.d;
  if (barrier.kind == BarrierKind::square) {
    auto pc = coefficients(parity, k, barrier);
    auto n = sqrt(pc.C_out * pc.C_out + pc.D_out * pc.D_out);
    w.k = static_cast<double>(k.real());
    w.kappa = static_cast<double>(pc.kappa.real());
    w.inv_n = static_cast<double>((C(1) / n).real());
    w.A_n = static_cast<double>((pc.A / n).real());
    w.B_n = static_cast<double>((pc.B / n).real());
    w.C_n = static_cast<double>((pc.C_out / n).real());
    w.D_n = static_cast<double>((pc.D_out / n).real());
  } else {
    C Cc, Dd, n;
    delta_coefficients(parity, k, barrier.nu, barrier.x0, barrier.m, Cc, Dd, n);
    w.k = static_cast<double>(k.real());
    w.inv_n = static_cast<double>((C(1) / n).real());
    w.C_n = static_cast<double>((Cc / n).real());
    w.D_n = static_cast<double>((Dd / n).real());
  }
  return w;
}

const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);

} // namespace

NormalizedWave make_normalized_wave(Parity parity, double k, const BarrierConfig& barrier) {
  return build_wave(parity, std::complex<double>(k, 0.0), barrier);
}

NormalizedWave make_normalized_wave_ext(Parity parity, const std::string& k_digits,
                                        const BarrierConfig& barrier) {
  c50 k(r50(k_digits), r50(0));
  return build_wave(parity, k, barrier);
}

double NormalizedWave::chi(double x) const {
  const bool even = parity == Parity::even;
  double v;
  if (kind == BarrierKind::square) {
    if (x < x0)
      v = (even ? std::cos(k * x) : std::sin(k * x)) * inv_n;
    else if (x < d)
      v = A_n * std::exp(kappa * x) + B_n * std::exp(-kappa * x);
    else
      v = C_n * std::cos(k * x) + D_n * std::sin(k * x);
  } else {
    if (x < x0)
      v = (even ? std::cos(k * x) : std::sin(k * x)) * inv_n;
    else
      v = C_n * std::cos(k * x) + D_n * std::sin(k * x);
  }
  return v * inv_sqrt_pi;
}

double NormalizedWave::dchi(double x) const {
  const bool even = parity == Parity::even;
  double v;
  if (kind == BarrierKind::square) {
    if (x < x0)
      v = (even ? -k * std::sin(k * x) : k * std::cos(k * x)) * inv_n;
    else if (x < d)
      v = kappa * (A_n * std::exp(kappa * x) - B_n * std::exp(-kappa * x));
    else
      v = k * (-C_n * std::sin(k * x) + D_n * std::cos(k * x));
  } else {
    if (x < x0)
      v = (even ? -k * std::sin(k * x) : k * std::cos(k * x)) * inv_n;
    else
      v = k * (-C_n * std::sin(k * x) + D_n * std::cos(k * x));
  }
  return v * inv_sqrt_pi;
}

double eval_chi(Parity parity, double k, double x, const BarrierConfig& barrier) {
  if (!(k > 0)) throw DegeneratePointError("eval_chi: k must be positive");
  const auto w = make_normalized_wave(parity, k, barrier);
  const double ax = std::fabs(x);
  const double v = w.chi(ax);
  if (parity == Parity::odd && x < 0) return -v;
  return v;
}

double eval_dchi(Parity parity, double k, double x, const BarrierConfig& barrier) {
  if (!(k > 0)) throw DegeneratePointError("eval_dchi: k must be positive");
  const auto w = make_normalized_wave(parity, k, barrier);
  const double ax = std::fabs(x);
  const double v = w.dchi(ax);
  // chi even => chi' odd; chi odd => chi' even
  if (parity == Parity::even && x < 0) return -v;
  return v;
}

} // namespace qdecay
