// Copyright 2026 The robustlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "robustlab/geometry2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "robustlab/error.hpp"

namespace robustlab::geometry2d {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Rays shorter than this (relative to the segment p -> sigma) count as no
// admissible continuation, i.e. s above ~1e9 is reported as unbounded.
constexpr double kMinContinuation = 1e-9;

Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
Point2D operator*(double s, Point2D a) { return {s * a.x, s * a.y}; }
double cross(Point2D a, Point2D b) { return a.x * b.y - a.y * b.x; }
double dot(Point2D a, Point2D b) { return a.x * b.x + a.y * b.y; }
double norm(Point2D a) { return std::hypot(a.x, a.y); }

Point2D lerp(Point2D a, Point2D b, double u) { return a + u * (b - a); }

double point_segment_distance(Point2D p, const Segment& s) {
  const Point2D e = s.b - s.a;
  const double l2 = dot(e, e);
  if (l2 == 0.0) return norm(p - s.a);
  const double u = std::clamp(dot(p - s.a, e) / l2, 0.0, 1.0);
  return norm(p - lerp(s.a, s.b, u));
}

// Parameter interval [lo, hi] of q = origin + lambda * d inside the convex
// polygon, intersected with [lo, hi] on entry. Returns false if empty.
bool clip_to_polygon(const ConvexPolygon& poly, Point2D origin, Point2D d, double& lo, double& hi,
                     double eps) {
  const std::size_t n = poly.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2D v = poly.vertices[i];
    const Point2D e = poly.vertices[(i + 1) % n] - v;
    const double scale = norm(e) * std::max(1.0, norm(origin - v));
    const double num = cross(e, origin - v);
    const double den = cross(e, d);
    if (std::abs(den) <= eps * norm(e) * std::max(norm(d), 1e-300)) {
      if (num < -eps * scale) return false;
      continue;
    }
    const double bound = -num / den;
    if (den > 0)
      lo = std::max(lo, bound);
    else
      hi = std::min(hi, bound);
    if (lo > hi) {
      // Touching a vertex or edge within round-off still counts.
      if (lo - hi <= eps) {
        hi = lo;
        continue;
      }
      return false;
    }
  }
  return true;
}

// Smallest lambda in [0, 1] with p + lambda (q - p) on the segment piece.
double first_hit_segment(Point2D p, Point2D q, const Segment& s, double eps) {
  const Point2D d = q - p;
  const Point2D e = s.b - s.a;
  const double dl = norm(d);
  const double el = norm(e);
  if (dl == 0.0) return point_segment_distance(p, s) <= eps ? 0.0 : kInf;
  const double denom = cross(d, e);
  if (std::abs(denom) > eps * dl * std::max(el, 1e-300) && el > 0.0) {
    const double lambda = cross(s.a - p, e) / denom;
    const double mu = cross(s.a - p, d) / denom;
    if (lambda >= -eps && lambda <= 1 + eps && mu >= -eps && mu <= 1 + eps)
      return std::max(lambda, 0.0);
    return kInf;
  }
  // Parallel (or a point piece): only collinear overlap hits.
  if (std::abs(cross(d, s.a - p)) > eps * dl * std::max(1.0, norm(s.a - p))) return kInf;
  const double la = dot(s.a - p, d) / (dl * dl);
  const double lb = dot(s.b - p, d) / (dl * dl);
  const double lo = std::max(0.0, std::min(la, lb));
  const double hi = std::min(1.0, std::max(la, lb));
  if (lo > hi + eps) return kInf;
  return lo;
}

double first_hit(Point2D p, Point2D q, const PlanarFreeSet& free, double eps) {
  double best = kInf;
  for (const Segment& s : free.segments) best = std::min(best, first_hit_segment(p, q, s, eps));
  for (const ConvexPolygon& poly : free.polygons) {
    double lo = 0.0;
    double hi = 1.0;
    if (clip_to_polygon(poly, p, q - p, lo, hi, eps)) best = std::min(best, lo);
  }
  return best;
}

// Boundary pieces of the free set as parametrised segments.
std::vector<Segment> boundary_pieces(const PlanarFreeSet& free) {
  std::vector<Segment> out = free.segments;
  for (const ConvexPolygon& poly : free.polygons) {
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back({poly.vertices[i], poly.vertices[(i + 1) % n]});
  }
  return out;
}

// Samples every piece at `resolution` + 1 points, then runs golden-section
// refinement around the best few samples. `cost` maps a boundary point to s.
template <class Cost>
double minimise_over_boundary(const std::vector<Segment>& pieces, const SearchOptions& opts,
                              Cost&& cost) {
  struct Sample {
    double value;
    std::size_t piece;
    double u;
  };
  const int res = std::max(opts.resolution, 1);
  std::vector<Sample> samples;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const bool point_piece = norm(pieces[k].b - pieces[k].a) == 0.0;
    const int n = point_piece ? 0 : res;
    for (int i = 0; i <= n; ++i) {
      const double u = n == 0 ? 0.0 : static_cast<double>(i) / n;
      samples.push_back({cost(lerp(pieces[k].a, pieces[k].b, u)), k, u});
    }
  }
  std::sort(samples.begin(), samples.end(),
            [](const Sample& a, const Sample& b) { return a.value < b.value; });
  double best = samples.empty() ? kInf : samples.front().value;
  if (!std::isfinite(best) || opts.refine_tol >= 1.0) return best;

  constexpr double kInvPhi = 0.6180339887498949;
  const std::size_t refine_count = std::min<std::size_t>(samples.size(), 4);
  for (std::size_t r = 0; r < refine_count; ++r) {
    const Sample& s = samples[r];
    if (!std::isfinite(s.value)) break;
    const Segment& piece = pieces[s.piece];
    if (norm(piece.b - piece.a) == 0.0) continue;
    auto f = [&](double u) { return cost(lerp(piece.a, piece.b, u)); };
    double a = std::max(0.0, s.u - 1.0 / res);
    double b = std::min(1.0, s.u + 1.0 / res);
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    best = std::min({best, f1, f2});
    while (b - a > opts.refine_tol) {
      if (f1 <= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - kInvPhi * (b - a);
        f1 = f(x1);
        best = std::min(best, f1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + kInvPhi * (b - a);
        f2 = f(x2);
        best = std::min(best, f2);
      }
    }
  }
  return best;
}

bool is_convex_ccw(const ConvexPolygon& poly) {
  const std::size_t n = poly.vertices.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2D a = poly.vertices[i];
    const Point2D b = poly.vertices[(i + 1) % n];
    const Point2D c = poly.vertices[(i + 2) % n];
    if (cross(b - a, c - b) <= 0.0) return false;
  }
  return true;
}

}  // namespace

bool polygon_contains(const ConvexPolygon& poly, Point2D p, double eps) {
  const std::size_t n = poly.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2D v = poly.vertices[i];
    const Point2D e = poly.vertices[(i + 1) % n] - v;
    if (cross(e, p - v) < -eps * norm(e) * std::max(1.0, norm(p - v))) return false;
  }
  return n >= 3;
}

bool free_set_contains(const PlanarFreeSet& free, Point2D p, double eps) {
  for (const Segment& s : free.segments)
    if (point_segment_distance(p, s) <= eps) return true;
  for (const ConvexPolygon& poly : free.polygons)
    if (polygon_contains(poly, p, eps)) return true;
  return false;
}

void validate_scene(const PlanarScene& scene) {
  if (!is_convex_ccw(scene.state_space))
    throw ValidationError("PlanarScene: state space must be a convex counter-clockwise polygon");
  if (scene.free.segments.empty() && scene.free.polygons.empty())
    throw ValidationError("PlanarScene: free set is empty");
  auto inside = [&](Point2D p) {
    if (!polygon_contains(scene.state_space, p, 1e-9))
      throw ValidationError("PlanarScene: free set leaves the state space");
  };
  for (const Segment& s : scene.free.segments) {
    inside(s.a);
    inside(s.b);
  }
  for (const ConvexPolygon& poly : scene.free.polygons) {
    if (!is_convex_ccw(poly))
      throw ValidationError("PlanarScene: free polygons must be convex and counter-clockwise");
    for (Point2D v : poly.vertices) inside(v);
  }
}

ExtendedReal absolute_robustness_2d(Point2D p, const PlanarScene& scene, const SearchOptions& opts) {
  constexpr double eps = 1e-12;
  if (free_set_contains(scene.free, p, eps)) return ExtendedReal::finite(0.0);
  const auto cost = [&](Point2D tau) {
    const double lambda = first_hit(p, tau, scene.free, eps);
    if (!(lambda < 1.0 - kMinContinuation)) return kInf;
    return lambda / (1.0 - lambda);
  };
  const double best = minimise_over_boundary(boundary_pieces(scene.free), opts, cost);
  return std::isfinite(best) ? ExtendedReal::finite(best) : ExtendedReal::unbounded();
}

ExtendedReal global_robustness_2d(Point2D p, const PlanarScene& scene, const SearchOptions& opts) {
  constexpr double eps = 1e-12;
  if (free_set_contains(scene.free, p, eps)) return ExtendedReal::finite(0.0);
  const auto cost = [&](Point2D sigma) {
    const Point2D d = sigma - p;
    double lo = 0.0;
    double hi = kInf;
    if (!clip_to_polygon(scene.state_space, sigma, d, lo, hi, eps)) return kInf;
    if (!(hi > kMinContinuation)) return kInf;
    return 1.0 / hi;
  };
  const double best = minimise_over_boundary(boundary_pieces(scene.free), opts, cost);
  return std::isfinite(best) ? ExtendedReal::finite(best) : ExtendedReal::unbounded();
}

// --- counterexample scenes --------------------------------------------------

PlanarScene scene_counterexample1(double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw InvalidParametersError("scene_counterexample1: delta must lie in (0,1)");
  PlanarScene s;
  s.state_space.vertices = {{-2, -1}, {2, -1}, {2, 2}, {-2, 2}};
  s.free.segments = {{{0, 0}, {0, 1}}};
  s.free.polygons = {ConvexPolygon{{{-1, 0}, {0, 0}, {0, delta}, {-1, delta}}}};
  s.free.star_center = Point2D{0, 0};
  validate_scene(s);
  return s;
}

double counterexample1_exact(double t, double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw InvalidParametersError("counterexample1_exact: delta must lie in (0,1)");
  if (!(t >= -1.0) || !std::isfinite(t))
    throw InvalidParametersError("counterexample1_exact: t must satisfy t >= -1");
  return t < 0.0 ? (1.0 - delta) / delta : t;
}

namespace {

void check_ce2(double a, double b, double angle) {
  if (!(a > 0.0 && b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw InvalidParametersError("counterexample 2: edge lengths must be positive");
  if (!(angle > 0.0 && angle < std::numbers::pi))
    throw InvalidParametersError("counterexample 2: angle must lie in (0, pi)");
}

}  // namespace

PlanarScene scene_counterexample2(double a, double b, double angle) {
  check_ce2(a, b, angle);
  const Point2D eb{std::cos(angle), std::sin(angle)};
  PlanarScene s;
  s.state_space.vertices = {{0, 0}, {a, 0}, b * eb};
  const Point2D sigma_a{a / 2, 0};
  const Point2D sigma_b = (2.0 * b / 3.0) * eb;
  s.free.segments = {{sigma_a, sigma_a}, {sigma_b, sigma_b}};
  validate_scene(s);
  return s;
}

Point2D counterexample2_point(Ce2Family which, double t, double a, double b, double angle) {
  check_ce2(a, b, angle);
  if (which == Ce2Family::kA) {
    if (!(t >= 0.0 && t <= a / 2)) throw InvalidParametersError("counterexample 2: t outside [0, a/2]");
    return {a / 2 - t, 0.0};
  }
  if (!(t >= 0.0 && t <= 2 * b / 3)) throw InvalidParametersError("counterexample 2: t outside [0, 2b/3]");
  const Point2D eb{std::cos(angle), std::sin(angle)};
  return (2.0 * b / 3.0 - t) * eb;
}

double counterexample2_exact(Ce2Family which, double t, double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw InvalidParametersError("counterexample 2: edge lengths must be positive");
  if (which == Ce2Family::kA) {
    if (!(t >= 0.0 && t <= a / 2)) throw InvalidParametersError("counterexample 2: t outside [0, a/2]");
    return 2.0 * t / a;
  }
  if (!(t >= 0.0 && t <= 2 * b / 3)) throw InvalidParametersError("counterexample 2: t outside [0, 2b/3]");
  return 3.0 * t / b;
}

}  // namespace robustlab::geometry2d
