#pragma once

// The three factorial power series behind the pole-sum wavefunction
// components, with closed forms in Bessel J and Struve H and large-argument
// asymptotics.
//
//   S0(u) = sum u^n / (n!)^2
//   S1(u) = sum u^n / ((n!)^2 (2n+1))
//   S2(u) = sum_{n>=1} u^n / (((n-1)!)^2 n (2n-1))
//
// All three are entire in u. With z = 2 sqrt(-u):
//   S0(u) = J0(z)
//   S1(u) = J0(z) - pi/2 (J0(z) H1(z) - J1(z) H0(z))
//   S2(u) = (z/2) J1(z) - (z^2/2) S1(u)
// The series are normative; the closed forms and asymptotics are
// cross-checked against them term by term. (The legacy notation writes the
// Bessel arguments as u itself; the series fix the mapping z = 2 sqrt(-u).)

#include <complex>

namespace qdecay {

enum class SeriesKind { S0, S1, S2 };

using cplx = std::complex<double>;

// Direct compensated summation, truncated at relative 1e-20.
// Throws RangeError for |u| > 1e8.
cplx series_eval(SeriesKind kind, cplx u);

// Bessel J of order 0 or 1: power series for |z| <= 12, Hankel asymptotic
// expansion beyond. ~1e-12 relative on the real axis.
cplx bessel_j(int order, cplx z);

// Struve H of order 0 or 1, power series; validated radius |z| <= 30,
// beyond that a RangeError is thrown.
cplx struve_h(int order, cplx z);

// Bessel Y of order 0 or 1 via the Hankel asymptotic expansion; only used
// for |z| large (the asymptotic forms below).
cplx bessel_y_asymptotic(int order, cplx z);

// Closed form of the series via z = 2 sqrt(-u); validated for |u| <= 225
// (Struve radius), RangeError beyond.
cplx closed_form(SeriesKind kind, cplx u);

// Large-|u| asymptotics (Bessel/Struve expansions); requires |u| > 50.
cplx asymptotic_form(SeriesKind kind, cplx u);

// Range-dispatched evaluation: series for |u| <= 20, closed form to 50,
// asymptotics beyond. This is what the evolution module calls.
cplx series_bracket(SeriesKind kind, cplx u);

} // namespace qdecay
