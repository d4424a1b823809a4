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

#pragma once

#include <optional>
#include <vector>

#include "robustlab/extended_real.hpp"

namespace robustlab::geometry2d {

/// Abstract affine coordinates; no normalisation is implied.
struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

/// Closed segment; a == b encodes a single point.
struct Segment {
  Point2D a;
  Point2D b;
};

/// Convex polygon, vertices in counter-clockwise order.
struct ConvexPolygon {
  std::vector<Point2D> vertices;
};

/// Union of segments and convex polygons.
struct PlanarFreeSet {
  std::vector<Segment> segments;
  std::vector<ConvexPolygon> polygons;
  std::optional<Point2D> star_center;
};

struct PlanarScene {
  ConvexPolygon state_space;
  PlanarFreeSet free;
};

/// Throws ValidationError for an empty free set, a non-convex or clockwise
/// polygon, or a free-set vertex outside the state space.
void validate_scene(const PlanarScene& scene);

bool polygon_contains(const ConvexPolygon& poly, Point2D p, double eps = 1e-12);
bool free_set_contains(const PlanarFreeSet& free, Point2D p, double eps = 1e-12);

struct SearchOptions {
  int resolution = 256;       ///< samples per boundary segment
  double refine_tol = 1e-10; ///< width at which local refinement stops
};

/// min over sampled tau on the free-set boundary of the smallest s such that
/// (p + s tau) / (1 + s) lies in the free set. 0 on the free set itself.
ExtendedReal absolute_robustness_2d(Point2D p, const PlanarScene& scene,
                                    const SearchOptions& opts = {});

/// Same with tau ranging over the whole state space. Evaluated from the
/// free-state end: for each sampled free point sigma the best tau is the
/// exit point of the ray p -> sigma from the state space, so
/// s(sigma) = |p - sigma| / |sigma - tau|.
ExtendedReal global_robustness_2d(Point2D p, const PlanarScene& scene,
                                  const SearchOptions& opts = {});

/// Free set = segment (0,0)-(0,1) plus the strip (-1,0),(0,0),(0,delta),(-1,delta);
/// state space = box [-2,2] x [-1,2]; star center (0,0).
PlanarScene scene_counterexample1(double delta);

/// Query point rho(t) = (t, 1).
inline Point2D counterexample1_point(double t) { return {t, 1.0}; }

/// (1 - delta) / delta for t < 0, t for t >= 0.
double counterexample1_exact(double t, double delta);

/// Triangle with corner C = (0,0), edge A of length a along the x axis and
/// edge B of length b at `angle` to it. Free set: sigma_a at the midpoint of
/// edge A and sigma_b at distance 2b/3 from C on edge B.
PlanarScene scene_counterexample2(double a, double b, double angle);

enum class Ce2Family { kA, kB };

/// rho_a(t) = sigma_a - t e_A (t in [0, a/2]); rho_b(t) = sigma_b - t e_B
/// (t in [0, 2b/3]). Both families end at the corner C.
Point2D counterexample2_point(Ce2Family which, double t, double a, double b, double angle);

/// 2t/a on family a, 3t/b on family b.
double counterexample2_exact(Ce2Family which, double t, double a, double b);

}  // namespace robustlab::geometry2d
