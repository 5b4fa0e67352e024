#include "qdecay/specfun.hpp"

#include <cmath>

#include "qdecay/errors.hpp"

namespace qdecay {

namespace {

// Neumaier-compensated complex accumulator.
struct CompensatedSum {
  double re = 0, re_c = 0, im = 0, im_c = 0;
  static void add1(double& s, double& c, double v) {
    const double t = s + v;
    if (std::fabs(s) >= std::fabs(v))
      c += (s - t) + v;
    else
      c += (v - t) + s;
    s = t;
  }
  void add(cplx v) {
    add1(re, re_c, v.real());
    add1(im, im_c, v.imag());
  }
  cplx value() const { return {re + re_c, im + im_c}; }
};

constexpr double series_trunc_rel = 1e-20;
constexpr double series_overflow_radius = 1e8;
constexpr double bessel_series_radius = 12.0;
constexpr double struve_series_radius = 30.0;
constexpr double closed_form_radius = 225.0;  // |u|; z = 2 sqrt(u) = 30
constexpr double asymptotic_crossover = 50.0; // |u|

cplx z_of_u(cplx u) { return 2.0 * std::sqrt(-u); }

// Hankel asymptotic P/Q cosine-sine expansion with
// a_k = (mu-1)(mu-9)...(mu-(2k-1)^2) / (k! 8^k),
// P = sum (-1)^s a_{2s}/z^{2s}, Q = sum (-1)^s a_{2s+1}/z^{2s+1};
// truncated at the smallest term. Valid for |z| >~ 10.
void hankel_pq(int order, cplx z, cplx& P, cplx& Q) {
  const double mu = 4.0 * order * order;
  P = 1.0;
  Q = 0.0;
  cplx t = 1.0;  // a_k / z^k
  double prev = 1e300;
  for (int k = 0; k < 30; ++k) {
    t *= (mu - (2.0 * k + 1.0) * (2.0 * k + 1.0)) / ((k + 1.0) * 8.0) / z;
    const double m = std::abs(t);
    if (m > prev) break;  // start of the divergent tail
    prev = m;
    const int kk = k + 1;
    if (kk % 2 == 1)
      Q += ((kk / 2) % 2 == 0 ? t : -t);
    else
      P += ((kk / 2) % 2 == 1 ? -t : t);
  }
}

cplx bessel_j_asymptotic(int order, cplx z) {
  cplx P, Q;
  hankel_pq(order, z, P, Q);
  const cplx chi = z - (0.5 * order + 0.25) * M_PI;
  return std::sqrt(2.0 / (M_PI * z)) * (P * std::cos(chi) - Q * std::sin(chi));
}

// H_nu(z) - Y_nu(z) ~ (1/pi) sum_k Gamma(k+1/2)/Gamma(nu+1/2-k) (z/2)^{nu-2k-1}
cplx struve_minus_y(int order, cplx z) {
  const cplx iz2 = 1.0 / (z * z);
  if (order == 0) {
    // (2/(pi z)) (1 - 1/z^2 + 9/z^4 - 225/z^6 ...)
    return 2.0 / (M_PI * z) * (1.0 + iz2 * (-1.0 + iz2 * (9.0 - 225.0 * iz2)));
  }
  // nu = 1: (2/pi) (1 + 1/z^2 - 3/z^4 + 45/z^6 ...)
  return 2.0 / M_PI * (1.0 + iz2 * (1.0 + iz2 * (-3.0 + 45.0 * iz2)));
}

} // namespace

cplx series_eval(SeriesKind kind, cplx u) {
  if (std::abs(u) > series_overflow_radius)
    throw RangeError("series_eval: |u| beyond overflow radius 1e8");
  CompensatedSum acc;
  cplx term;
  int n = 0;
  switch (kind) {
  case SeriesKind::S0:
  case SeriesKind::S1:
    term = 1.0;
    break;
  case SeriesKind::S2:
    term = u;  // n = 1 leading term
    n = 1;
    break;
  }
  acc.add(term);
  for (; n < 100000; ++n) {
    switch (kind) {
    case SeriesKind::S0:
      term *= u / double((n + 1.0) * (n + 1.0));
      break;
    case SeriesKind::S1:
      term *= u * (2.0 * n + 1.0) / ((n + 1.0) * (n + 1.0) * (2.0 * n + 3.0));
      break;
    case SeriesKind::S2:
      term *= u * (2.0 * n - 1.0) / (n * (n + 1.0) * (2.0 * n + 1.0));
      break;
    }
    acc.add(term);
    if (std::abs(term) < series_trunc_rel * std::abs(acc.value())) break;
  }
  return acc.value();
}

cplx bessel_j(int order, cplx z) {
  if (order != 0 && order != 1) throw RangeError("bessel_j: order must be 0 or 1");
  if (std::abs(z) > bessel_series_radius) return bessel_j_asymptotic(order, z);
  const cplx q = -0.25 * z * z;
  CompensatedSum acc;
  cplx term = order == 0 ? cplx(1.0) : 0.5 * z;
  acc.add(term);
  for (int m = 0; m < 200; ++m) {
    term *= q / ((m + 1.0) * (m + 1.0 + order));
    acc.add(term);
    if (std::abs(term) < 1e-18 * std::abs(acc.value())) break;
  }
  return acc.value();
}

cplx struve_h(int order, cplx z) {
  if (order != 0 && order != 1) throw RangeError("struve_h: order must be 0 or 1");
  if (std::abs(z) > struve_series_radius)
    throw RangeError("struve_h: |z| beyond validated series radius 30");
  // H_nu(z) = sum_k (-1)^k (z/2)^{2k+nu+1} / (Gamma(k+3/2) Gamma(k+nu+3/2))
  // Coefficients by recurrence from Gamma(3/2) = sqrt(pi)/2.
  const cplx h = 0.5 * z;
  const cplx q = -h * h;
  const double g32 = 0.5 * std::sqrt(M_PI);          // Gamma(3/2)
  const double gn32 = order == 0 ? g32 : 0.75 * std::sqrt(M_PI);  // Gamma(nu+3/2)
  cplx term = (order == 0 ? h : h * h) / (g32 * gn32);
  CompensatedSum acc;
  acc.add(term);
  for (int k = 0; k < 400; ++k) {
    term *= q / ((k + 1.5) * (k + order + 1.5));
    acc.add(term);
    if (std::abs(term) < 1e-18 * std::abs(acc.value())) break;
  }
  return acc.value();
}

cplx bessel_y_asymptotic(int order, cplx z) {
  cplx P, Q;
  hankel_pq(order, z, P, Q);
  const cplx chi = z - (0.5 * order + 0.25) * M_PI;
  return std::sqrt(2.0 / (M_PI * z)) * (P * std::sin(chi) + Q * std::cos(chi));
}

cplx closed_form(SeriesKind kind, cplx u) {
  if (std::abs(u) > closed_form_radius)
    throw RangeError("closed_form: |u| beyond validated radius");
  const cplx z = z_of_u(u);
  switch (kind) {
  case SeriesKind::S0:
    return bessel_j(0, z);
  case SeriesKind::S1: {
    if (std::abs(z) < 1e-12) return 1.0;  // limit; avoids 0*inf in Struve terms
    const cplx J0 = bessel_j(0, z), J1 = bessel_j(1, z);
    const cplx H0 = struve_h(0, z), H1 = struve_h(1, z);
    return J0 - 0.5 * M_PI * (J0 * H1 - J1 * H0);
  }
  case SeriesKind::S2: {
    if (std::abs(z) < 1e-12) return 0.0;
    return 0.5 * z * bessel_j(1, z) - 0.5 * z * z * closed_form(SeriesKind::S1, u);
  }
  }
  throw RangeError("closed_form: bad kind");
}

cplx asymptotic_form(SeriesKind kind, cplx u) {
  if (std::abs(u) <= asymptotic_crossover)
    throw RangeError("asymptotic_form: |u| below crossover");
  const cplx z = z_of_u(u);
  switch (kind) {
  case SeriesKind::S0:
    return bessel_j_asymptotic(0, z);
  case SeriesKind::S1: {
    // J0 - pi/2 (J0 (Y1 + K1) - J1 (Y0 + K0)), J0 Y1 - J1 Y0 = -2/(pi z)
    const cplx J0 = bessel_j_asymptotic(0, z), J1 = bessel_j_asymptotic(1, z);
    const cplx Y0 = bessel_y_asymptotic(0, z), Y1 = bessel_y_asymptotic(1, z);
    const cplx K0 = struve_minus_y(0, z), K1 = struve_minus_y(1, z);
    return J0 - 0.5 * M_PI * (J0 * (Y1 + K1) - J1 * (Y0 + K0));
  }
  case SeriesKind::S2:
    return 0.5 * z * bessel_j_asymptotic(1, z) -
           0.5 * z * z * asymptotic_form(SeriesKind::S1, u);
  }
  throw RangeError("asymptotic_form: bad kind");
}

cplx series_bracket(SeriesKind kind, cplx u) {
  const double r = std::abs(u);
  if (r <= 20.0) return series_eval(kind, u);
  if (r <= asymptotic_crossover) return closed_form(kind, u);
  return asymptotic_form(kind, u);
}

} // namespace qdecay
