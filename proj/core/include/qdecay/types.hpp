#pragma once

#include <string>
#include <vector>

#include "qdecay/errors.hpp"

namespace qdecay {

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }
inline Parity other(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

enum class BarrierKind { square, delta };

enum class Tier { standard, extended };

// Symmetric double barrier: gamma * [Theta(d-|x|)Theta(|x|-x0)] for the
// square kind, nu * [delta(x-x0) + delta(x+x0)] for the delta kind.
struct BarrierConfig {
  BarrierKind kind = BarrierKind::square;
  double m = 0;       // mass, fm^-1
  double gamma = 0;   // barrier height, fm^-1 (square)
  double x0 = 0;      // inner half-width, fm
  double d = 0;       // outer half-width, fm (square)
  double nu = 0;      // delta strength, dimensionless (delta)

  void validate() const {
    if (!(m > 0)) throw ConfigError("barrier invariant violated: m > 0");
    if (kind == BarrierKind::square) {
      if (!(gamma > 0)) throw ConfigError("barrier invariant violated: gamma > 0");
      if (!(x0 > 0 && x0 < d)) throw ConfigError("barrier invariant violated: 0 < x0 < d");
    } else {
      if (!(nu > 0)) throw ConfigError("barrier invariant violated: nu > 0 (delta kind)");
      if (!(x0 > 0)) throw ConfigError("barrier invariant violated: x0 > 0");
    }
  }

  // Delta-barrier counterpart with matched integrated strength nu = gamma*(d-x0).
  BarrierConfig delta_counterpart() const {
    BarrierConfig b = *this;
    b.kind = BarrierKind::delta;
    b.nu = gamma * (d - x0);
    return b;
  }
};

enum class PacketNormalization { unit, paper };

// Initial Gaussian packet exp(-x^2/Delta^2).
struct PacketSpec {
  double width = 0;  // Delta, fm
  PacketNormalization normalization = PacketNormalization::unit;

  void validate(double x0) const {
    if (!(width > 0)) throw ConfigError("packet invariant violated: width > 0");
    (void)x0;  // the well-localized regime width << x0 is reported, not enforced
  }
  bool well_localized(double x0) const { return width < x0; }
};

enum class DriveShape { harmonic, tabulated };

struct SimulationConfig;

// Time grid for survival exports: uniform in [0, t_max].
struct TimeGrid {
  double t_max = 0;   // fm
  int samples = 0;

  std::vector<double> times() const {
    std::vector<double> ts(samples);
    for (int i = 0; i < samples; ++i)
      ts[i] = samples > 1 ? t_max * i / (samples - 1) : 0.0;
    return ts;
  }
  void validate() const {
    if (!(t_max > 0)) throw ConfigError("run invariant violated: t_max > 0");
    if (samples < 2) throw ConfigError("run invariant violated: t_samples >= 2");
  }
};

} // namespace qdecay
