#pragma once

#include <array>
#include <optional>
#include <vector>

namespace vacfocus::segments {

/// Two attached flat mirror segments seen from the observation point P at
/// the origin.
///
/// Angles follow the clockwise convention: an incident ray has angle θ when
/// it propagates along −θ in the usual counterclockwise frame, and a segment
/// at orientation α lies along the line with counterclockwise angle −α.
/// With that convention a ray reflected towards P from direction θ′ arrived
/// with θ = θ′ + 2α − π.
///
/// The lower segment runs from Q₀ on the ray θ′ = 0 to the joint Q₁ at unit
/// distance on θ′ = θ₁′; the upper one runs from Q₁ to Q₂ on θ′ = θ₂′.
struct SegmentMirror {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double theta1_prime = 0.0;
  double theta2_prime = 0.0;

  /// Validated construction. Needs 0 < θ₁′ < θ₂′ < π, 0 < α₁ < π − θ₁′ (so
  /// Q₀ lies on the positive x axis) and −θ₁′ < α₂ < π − θ₂′ (so Q₂ lies on
  /// its ray). Throws std::invalid_argument otherwise.
  static SegmentMirror make(double alpha1, double alpha2, double theta1_prime,
                            double theta2_prime);
  /// The mirror taken away: every direction carries the incident ray only.
  static SegmentMirror removed() { return {}; }

  bool is_removed() const { return theta1_prime == 0.0 && theta2_prime == 0.0; }

  /// True when the six-case boundaries are strictly increasing: α₂ < α₁,
  /// 2(α₁ − α₂) < min(θ₁′, θ₂′ − θ₁′) and θ₂′ + α₂ < π.
  bool table_ordering() const;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// End points Q₀, Q₁, Q₂ of the polyline.
std::array<Vec2, 3> vertices(const SegmentMirror& m);

struct RayCount {
  int incident = 0;   ///< 0 when the mirror blocks the direct ray
  int reflected = 0;  ///< single reflections reaching P (0, 1 or 2)
  int shadowed = 0;   ///< reflections lost because the other segment blocks the incoming ray
  bool operator==(const RayCount&) const = default;
};

/// Exact 2D ray trace of incident direction θ ∈ (−π, π]. Throws
/// std::invalid_argument for a zero-length segment or θ out of range.
RayCount classify_incident(const SegmentMirror& m, double theta);

/// Expected record from the six-case table; nullopt unless table_ordering()
/// holds. θ on a case boundary is assigned to the case above it.
std::optional<RayCount> six_case_table(const SegmentMirror& m, double theta);

/// Case boundaries of the six-case table in increasing order, −π and π
/// included (seven values).
std::array<double, 7> six_case_boundaries(const SegmentMirror& m);

/// Angular measures of incident directions by class. Classes partition
/// (−π, π]: blocked (no incident, no reflected), incident_only, and
/// one/two_reflected regardless of the incident ray.
struct RayCensus {
  double blocked = 0.0;
  double incident_only = 0.0;
  double one_reflected = 0.0;
  double two_reflected = 0.0;
  /// Measure of directions without the incident ray (any reflected count).
  double no_incident = 0.0;
  /// ∫(incident + reflected) dθ.
  double ray_total = 0.0;
  /// ∫reflected dθ, counted with multiplicity.
  double reflected_weighted = 0.0;
  double shadowed = 0.0;

  double total() const { return blocked + incident_only + one_reflected + two_reflected; }
};

enum class CensusMode { interval, sampled };

/// Interval mode cuts (−π, π] at every direction where a count can change
/// and classifies each piece at its midpoint; sampled mode classifies
/// `resolution` equal bins at their centres. Sampled mode needs
/// resolution ≥ 1000.
RayCensus census(const SegmentMirror& m, CensusMode mode = CensusMode::interval,
                 int resolution = 100000);

/// Directions (sorted, in (−π, π]) where the ray count can change.
std::vector<double> census_breakpoints(const SegmentMirror& m);

}  // namespace vacfocus::segments
