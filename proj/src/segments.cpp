#include "vacfocus/segments.hpp"

#include "vacfocus/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vacfocus::segments {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLengthFloor = 1e-14;
/// Hits closer than this to the ray origin are the origin itself.
constexpr double kSelfHit = 1e-12;
constexpr int kShadowScan = 4096;

Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double norm(Vec2 a) { return std::hypot(a.x, a.y); }
Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Parameter t > 0 where origin + t·dir meets segment [a, b] (end points
/// included); empty when it misses or runs parallel.
std::optional<double> ray_hits(Vec2 origin, Vec2 dir, Vec2 a, Vec2 b) {
  const Vec2 e = b - a;
  const double den = cross(dir, e);
  if (den == 0.0) return std::nullopt;
  const Vec2 w = a - origin;
  const double t = cross(w, e) / den;
  const double u = cross(w, dir) / den;
  if (t <= kSelfHit || u < 0.0 || u > 1.0) return std::nullopt;
  return t;
}

/// Wraps into (−π, π].
double wrap(double angle) {
  double r = std::remainder(angle, 2 * kPi);
  if (r <= -kPi) r += 2 * kPi;
  return r;
}

void check_traceable(const SegmentMirror& m) {
  const auto q = vertices(m);
  if (norm(q[1] - q[0]) < kLengthFloor || norm(q[2] - q[1]) < kLengthFloor) {
    throw std::invalid_argument("degenerate (zero-length) mirror segment");
  }
}

double reflected_direction(const SegmentMirror& m, int k, double theta) {
  return theta - 2 * (k == 0 ? m.alpha1 : m.alpha2) + kPi;
}

}  // namespace

SegmentMirror SegmentMirror::make(double alpha1, double alpha2, double theta1_prime,
                                  double theta2_prime) {
  if (!(theta1_prime > 0.0) || !(theta2_prime > theta1_prime) || !(theta2_prime < kPi)) {
    throw std::invalid_argument("segment angles need 0 < theta1' < theta2' < pi");
  }
  if (!(alpha1 > 0.0) || !(alpha1 + theta1_prime < kPi)) {
    throw std::invalid_argument("alpha1 must lie in (0, pi - theta1')");
  }
  // The upper line must sweep counterclockwise from Q₁ and meet the ray θ₂′
  // itself rather than its continuation through P.
  if (!(theta1_prime + alpha2 > 0.0) || !(theta2_prime + alpha2 < kPi)) {
    throw std::invalid_argument("alpha2 must lie in (-theta1', pi - theta2')");
  }
  return {alpha1, alpha2, theta1_prime, theta2_prime};
}

bool SegmentMirror::table_ordering() const {
  const auto b = six_case_boundaries(*this);
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (!(b[i] > b[i - 1])) return false;
  }
  return true;
}

std::array<Vec2, 3> vertices(const SegmentMirror& m) {
  const Vec2 q1 = unit(m.theta1_prime);
  if (m.is_removed()) return {q1, q1, q1};
  // Lower line: from Q₁ along (cos α₁, −sin α₁) down to the x axis.
  const Vec2 q0{std::sin(m.alpha1 + m.theta1_prime) / std::sin(m.alpha1), 0.0};
  // Upper line: from Q₁ along (−cos α₂, sin α₂) up to the ray θ₂′.
  const double s = std::sin(m.theta2_prime - m.theta1_prime) / std::sin(m.theta2_prime + m.alpha2);
  const Vec2 q2 = q1 + s * Vec2{-std::cos(m.alpha2), std::sin(m.alpha2)};
  return {q0, q1, q2};
}

RayCount classify_incident(const SegmentMirror& m, double theta) {
  if (!(theta > -kPi) || !(theta <= kPi)) {
    throw std::invalid_argument("incident angle must lie in (-pi, pi]");
  }
  if (m.is_removed()) return {1, 0, 0};
  check_traceable(m);
  const auto q = vertices(m);
  const std::array<std::pair<Vec2, Vec2>, 2> seg = {std::pair{q[0], q[1]}, std::pair{q[1], q[2]}};
  const Vec2 origin{0.0, 0.0};
  // The ray arriving at P with angle θ came from direction π − θ.
  const Vec2 source = unit(kPi - theta);

  RayCount out;
  const bool blocked = ray_hits(origin, source, seg[0].first, seg[0].second) ||
                       ray_hits(origin, source, seg[1].first, seg[1].second);
  out.incident = blocked ? 0 : 1;

  for (int k = 0; k < 2; ++k) {
    const Vec2 out_dir = unit(reflected_direction(m, k, theta));
    const auto& [a, b] = seg[static_cast<std::size_t>(k)];
    const auto& [oa, ob] = seg[static_cast<std::size_t>(1 - k)];
    const auto t = ray_hits(origin, out_dir, a, b);
    if (!t) continue;
    // The path P–R must be clear, and the incoming ray must reach R.
    const auto t_other = ray_hits(origin, out_dir, oa, ob);
    if (t_other && *t_other < *t) continue;
    const Vec2 r = origin + *t * out_dir;
    if (ray_hits(r, source, oa, ob)) {
      ++out.shadowed;
      continue;
    }
    ++out.reflected;
  }
  return out;
}

std::array<double, 7> six_case_boundaries(const SegmentMirror& m) {
  const double a1 = m.alpha1;
  const double a2 = m.alpha2;
  const double t1 = m.theta1_prime;
  const double t2 = m.theta2_prime;
  return {-kPi,           2 * a1 - kPi,       t1 + 2 * a2 - kPi, t1 + 2 * a1 - kPi,
          t2 + 2 * a2 - kPi, kPi - t2, kPi};
}

std::optional<RayCount> six_case_table(const SegmentMirror& m, double theta) {
  if (m.is_removed() || !m.table_ordering()) return std::nullopt;
  if (!(theta > -kPi) || !(theta <= kPi)) {
    throw std::invalid_argument("incident angle must lie in (-pi, pi]");
  }
  static constexpr std::array<RayCount, 6> cases = {
      RayCount{1, 0, 0}, RayCount{1, 1, 0}, RayCount{1, 2, 0},
      RayCount{1, 1, 0}, RayCount{1, 0, 0}, RayCount{0, 0, 0}};
  const auto b = six_case_boundaries(m);
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (theta < b[i]) return cases[i - 1];
  }
  return cases[5];
}

std::vector<double> census_breakpoints(const SegmentMirror& m) {
  std::vector<double> cuts = {-kPi, kPi};
  if (m.is_removed()) return cuts;
  check_traceable(m);
  const auto q = vertices(m);
  const std::array<std::pair<double, double>, 2> range = {
      std::pair{0.0, m.theta1_prime}, std::pair{m.theta1_prime, m.theta2_prime}};
  const std::array<double, 2> alpha = {m.alpha1, m.alpha2};
  const std::array<Vec2, 2> far_end = {q[2], q[0]};  // other segment's free end

  cuts.push_back(wrap(kPi - m.theta2_prime));
  cuts.push_back(wrap(kPi));
  for (std::size_t k = 0; k < 2; ++k) {
    auto theta_of = [&](double tp) { return tp + 2 * alpha[k] - kPi; };
    cuts.push_back(wrap(theta_of(range[k].first)));
    cuts.push_back(wrap(theta_of(range[k].second)));

    // Shadow edges: the incoming ray at R(θ′) grazes the other segment's
    // free end. Located by scanning for sign changes of the cross product.
    const Vec2 a = k == 0 ? q[0] : q[1];
    const Vec2 b = k == 0 ? q[1] : q[2];
    // Point of the segment's line seen at θ′ (the line, so that rounding at
    // the end points cannot drop the hit).
    auto point_at = [&](double tp) {
      const Vec2 d = unit(tp);
      return (cross(a, b - a) / cross(d, b - a)) * d;
    };
    auto edge = [&](double tp) {
      const Vec2 source = unit(kPi - theta_of(tp));
      return cross(source, far_end[k] - point_at(tp));
    };
    auto faces = [&](double tp) {
      const Vec2 source = unit(kPi - theta_of(tp));
      return dot(source, far_end[k] - point_at(tp)) > 0.0;
    };
    const double lo = range[k].first;
    const double step = (range[k].second - lo) / kShadowScan;
    // Stay off the end points, where the hit sits on a vertex.
    double x0 = lo + 1e-9 * step;
    double f0 = edge(x0);
    for (int i = 1; i <= kShadowScan; ++i) {
      const double x1 = i == kShadowScan ? range[k].second - 1e-9 * step : lo + i * step;
      const double f1 = edge(x1);
      if (std::signbit(f0) != std::signbit(f1)) {
        const double root = bracketed_root(edge, x0, x1, 0.0).x;
        if (faces(root)) cuts.push_back(wrap(theta_of(root)));
      }
      x0 = x1;
      f0 = f1;
    }
  }
  for (double& c : cuts) {
    if (c == -kPi) c = kPi;
  }
  cuts.push_back(-kPi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

namespace {

void tally(RayCensus& c, const RayCount& r, double w) {
  if (r.reflected == 2) {
    c.two_reflected += w;
  } else if (r.reflected == 1) {
    c.one_reflected += w;
  } else if (r.incident == 1) {
    c.incident_only += w;
  } else {
    c.blocked += w;
  }
  if (r.incident == 0) c.no_incident += w;
  c.ray_total += w * (r.incident + r.reflected);
  c.reflected_weighted += w * r.reflected;
  c.shadowed += w * r.shadowed;
}

}  // namespace

RayCensus census(const SegmentMirror& m, CensusMode mode, int resolution) {
  RayCensus c;
  if (mode == CensusMode::interval) {
    const std::vector<double> cuts = census_breakpoints(m);
    for (std::size_t i = 1; i < cuts.size(); ++i) {
      const double w = cuts[i] - cuts[i - 1];
      if (w <= 0.0) continue;
      tally(c, classify_incident(m, 0.5 * (cuts[i] + cuts[i - 1])), w);
    }
    return c;
  }
  if (resolution < 1000) {
    throw std::invalid_argument("sampled census needs at least 1000 directions, got " +
                                std::to_string(resolution));
  }
  const double w = 2 * kPi / resolution;
  for (int i = 0; i < resolution; ++i) {
    tally(c, classify_incident(m, -kPi + (i + 0.5) * w), w);
  }
  return c;
}

}  // namespace vacfocus::segments
