#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "xlra/config.hpp"

namespace xlra {

using Rng = std::mt19937_64;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Per-subarray visibility of one UE, one bit per subarray.
struct VisibilityVector {
  std::vector<std::uint8_t> bits;

  int count() const;
  bool any() const;
  bool operator==(const VisibilityVector&) const = default;
};

enum class UeState { Inactive, Backoff, Active, Failed };

struct UserEquipment {
  int id = -1;
  Point position;
  VisibilityVector visibility;
  std::vector<double> beta;  // per-subarray average large-scale gain; 0 iff blocked
  double sum_beta = 0.0;     // cached sum over subarrays
  UeState state = UeState::Inactive;
  int attempts = 0;           // access attempts in the current access cycle
  int chosen_pilot = -1;      // pilot transmitted this block, -1 when silent
  int pdp_index = -1;         // payload data pilot id while Active
  int remaining_intervals = 0;
  int mu_ra_admitted = 0;     // attempts spent to get admitted, for rate accounting
};

using Population = std::vector<UserEquipment>;

/// Antenna coordinates of the linear array: equally spaced on a segment of
/// array_length_m centered at the origin along the x axis. Antennas
/// [b*M_b, (b+1)*M_b) belong to subarray b.
std::vector<Point> antenna_positions(const ScenarioConfig& cfg);

/// Linear gain 10^(-kappa*log10(d) + (g + chi)/10). Throws std::domain_error
/// for d <= 0.
double pathloss(double distance_m, double shadowing_db, const ScenarioConfig& cfg);

/// Independent Bernoulli(sa_visibility_prob) bit per subarray.
VisibilityVector sample_visibility(const ScenarioConfig& cfg, Rng& rng);

/// Subarray-averaged gains for a UE at the given position. One shadowing
/// realization is drawn per visible (UE, subarray) pair; blocked subarrays get
/// exactly zero.
std::vector<double> subarray_gains(Point position, const VisibilityVector& visibility,
                                   const std::vector<Point>& antennas,
                                   const ScenarioConfig& cfg, Rng& rng);

/// Drops `count` UEs area-uniformly on the annulus [inner_radius_m, outer_radius_m]
/// and equips each with fresh visibility and gains. All start Inactive.
Population place_users(const ScenarioConfig& cfg, int count, Rng& rng);

}  // namespace xlra
