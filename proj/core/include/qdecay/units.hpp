#pragma once

// Natural units: hbar = c = 1. Lengths and times in fm, energies and
// momenta in fm^-1. Conversions to/from lab units live here and nowhere
// else.

#include <cmath>

#include "qdecay/errors.hpp"

namespace qdecay::units {

inline constexpr double hbar_c_mev_fm = 197.327;   // MeV*fm
inline constexpr double seconds_per_fm = 3.33564e-24;  // light travel time per fm

inline double mev_to_invfm(double e_mev) {
  if (!std::isfinite(e_mev)) throw Error("mev_to_invfm: non-finite energy");
  return e_mev / hbar_c_mev_fm;
}

inline double invfm_to_mev(double e_invfm) {
  if (!std::isfinite(e_invfm)) throw Error("invfm_to_mev: non-finite energy");
  return e_invfm * hbar_c_mev_fm;
}

inline double hz_to_invfm(double omega_hz) {
  if (omega_hz < 0) throw Error("hz_to_invfm: negative frequency");
  return omega_hz * seconds_per_fm;
}

inline double seconds_to_fm(double t_s) {
  if (t_s < 0) throw Error("seconds_to_fm: negative time");
  return t_s / seconds_per_fm;
}

inline double fm_to_seconds(double t_fm) { return t_fm * seconds_per_fm; }

// Linear drive coupling mu for a charged particle in a field E0 [V/m].
// 1 e*V/m = 1e-21 MeV/fm.
inline double field_to_mu(double e0_v_per_m, int charge_multiple) {
  if (e0_v_per_m < 0) throw Error("field_to_mu: negative field");
  if (charge_multiple < 1) throw Error("field_to_mu: charge multiple must be >= 1");
  const double mev_per_fm = charge_multiple * e0_v_per_m * 1e-21;
  return mev_per_fm / hbar_c_mev_fm;  // fm^-2
}

} // namespace qdecay::units
