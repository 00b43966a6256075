#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace memfir {

enum class GridSpacing { linear_resistance, linear_conductance };

// The finite set of memristance values a tuning circuit can program: 2^bits
// levels spanning [r_min, r_max], spaced uniformly in resistance or in
// conductance. Both endpoints are always exact members.
class MemristanceGrid {
public:
  MemristanceGrid(double r_min, double r_max, unsigned bits, GridSpacing spacing);

  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }
  unsigned bits() const { return bits_; }
  GridSpacing spacing() const { return spacing_; }
  std::size_t size() const { return levels_.size(); }
  std::span<const double> levels() const { return levels_; }

  // Nearest level; ties break toward the lower level, out-of-range values
  // clamp to the nearest endpoint. Requires r > 0.
  double quantize(double r) const { return levels_[quantize_index(r)]; }
  std::size_t quantize_index(double r) const;

  bool contains(double r) const;  // exact membership

private:
  double r_min_;
  double r_max_;
  unsigned bits_;
  GridSpacing spacing_;
  std::vector<double> levels_;  // strictly increasing
};

// HP linear ion-drift device constants. Thickness and mobility only set the
// drift rate; the toolkit uses them where the sign or zero of drift matters.
struct DeviceParams {
  double r_on = 1e3;
  double r_off = 1e6;
  double thickness_m = 10e-9;
  double mobility_m2_per_vs = 1e-14;
  double v_threshold = 0.1;  // dead-zone: |v| at or below leaves the state unchanged
};

struct MemristorState {
  double w = 0.0;  // dopant front position in [0, thickness]; 0 -> r_off, thickness -> r_on
  DeviceParams device;
};

// M(w) = r_on * (w/D) + r_off * (1 - w/D); monotone decreasing in w.
double memristance(const MemristorState& s);

// One explicit-Euler step. Voltages inside the dead-zone leave the state
// untouched (same object, bit for bit). Positive voltage into the polarity
// terminal increases w, i.e. decreases memristance. w stays clamped to
// [0, thickness]. Requires dt > 0.
MemristorState step(MemristorState s, double v, double dt);

// Programs the device to quantize(grid, target) by closed-form inversion of
// the memristance expression. target must lie in [r_on, r_off].
MemristorState tune(MemristorState s, double target, const MemristanceGrid& grid);

}  // namespace memfir
