#include "memfir/memristor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace memfir {

MemristanceGrid::MemristanceGrid(double r_min, double r_max, unsigned bits,
                                 GridSpacing spacing)
    : r_min_(r_min), r_max_(r_max), bits_(bits), spacing_(spacing) {
  if (!(r_min > 0.0) || !(r_min < r_max)) {
    throw std::invalid_argument("invalid range: need 0 < r_min < r_max");
  }
  if (bits < 1 || bits > 16) {
    throw std::invalid_argument("invalid bits: resolution must be in [1, 16]");
  }
  const std::size_t n = std::size_t{1} << bits;
  levels_.resize(n);
  if (spacing == GridSpacing::linear_resistance) {
    for (std::size_t k = 0; k < n; ++k) {
      levels_[k] = r_min + (r_max - r_min) * static_cast<double>(k) /
                               static_cast<double>(n - 1);
    }
  } else {
    const double g_lo = 1.0 / r_max;
    const double g_hi = 1.0 / r_min;
    for (std::size_t k = 0; k < n; ++k) {
      const double g = g_lo + (g_hi - g_lo) * static_cast<double>(k) /
                                  static_cast<double>(n - 1);
      levels_[n - 1 - k] = 1.0 / g;
    }
  }
  // Endpoints are exact members regardless of rounding above.
  levels_.front() = r_min;
  levels_.back() = r_max;
  for (std::size_t k = 1; k < n; ++k) {
    if (!(levels_[k] > levels_[k - 1])) {
      throw std::invalid_argument("invalid range: too narrow for the requested resolution");
    }
  }
}

std::size_t MemristanceGrid::quantize_index(double r) const {
  if (!(r > 0.0)) {
    throw std::invalid_argument("resistance must be positive");
  }
  const auto it = std::lower_bound(levels_.begin(), levels_.end(), r);
  if (it == levels_.begin()) return 0;
  if (it == levels_.end()) return levels_.size() - 1;
  const std::size_t hi = static_cast<std::size_t>(it - levels_.begin());
  const std::size_t lo = hi - 1;
  // Ties go to the lower level.
  return (r - levels_[lo] <= levels_[hi] - r) ? lo : hi;
}

bool MemristanceGrid::contains(double r) const {
  return std::binary_search(levels_.begin(), levels_.end(), r);
}

double memristance(const MemristorState& s) {
  const double ratio = s.w / s.device.thickness_m;
  return s.device.r_on * ratio + s.device.r_off * (1.0 - ratio);
}

MemristorState step(MemristorState s, double v, double dt) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("dt must be positive");
  }
  if (std::fabs(v) <= s.device.v_threshold) {
    return s;  // dead-zone: the device retains its value
  }
  const double i = v / memristance(s);
  const double dw =
      s.device.mobility_m2_per_vs * (s.device.r_on / s.device.thickness_m) * i * dt;
  s.w = std::clamp(s.w + dw, 0.0, s.device.thickness_m);
  return s;
}

MemristorState tune(MemristorState s, double target, const MemristanceGrid& grid) {
  const auto& d = s.device;
  if (!(target >= d.r_on && target <= d.r_off)) {
    throw std::invalid_argument("tune target outside the device range [r_on, r_off]");
  }
  const double q = grid.quantize(target);
  if (!(q >= d.r_on && q <= d.r_off)) {
    throw std::invalid_argument("quantized target outside the device range [r_on, r_off]");
  }
  const double ratio = (d.r_off - q) / (d.r_off - d.r_on);
  s.w = std::clamp(ratio * d.thickness_m, 0.0, d.thickness_m);
  return s;
}

}  // namespace memfir
