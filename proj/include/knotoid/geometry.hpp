#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "knotoid/rational.hpp"

namespace knotoid {

enum class Surface { Plane, Annulus, Torus };

const char* surface_name(Surface s);

// First homology of the quotient surface, read off a closed polyline in
// cover coordinates as (end - start). Plane loops are always (0,0); on the
// annulus only the first coordinate is meaningful.
struct HomologyClass {
  long a = 0;
  long b = 0;

  bool operator==(const HomologyClass& o) const { return a == o.a && b == o.b; }
  bool operator!=(const HomologyClass& o) const { return !(*this == o); }
  bool is_zero() const { return a == 0 && b == 0; }
};

struct SegIntersection {
  Rational t1;
  Rational t2;
  Point point;  // on the first segment
};

// Transversal interior intersection of two segments, exact. Collinear
// overlap, tangency and endpoint contact raise DegenerateIntersection:
// those configurations mean the diagram is not in generic position.
std::optional<SegIntersection> seg_intersect(const Point& p1, const Point& p2,
                                             const Point& q1, const Point& q2);

// A polyline in cover coordinates. Closed polylines repeat their first
// point shifted by the homology vector: points.back() == points.front()+h.
struct Polyline {
  std::vector<Point> points;
  bool closed = false;

  int segment_count() const { return static_cast<int>(points.size()) - 1; }
  const Point& seg_start(int i) const { return points[i]; }
  const Point& seg_end(int i) const { return points[i + 1]; }
};

struct QuotientIntersection {
  int segA = 0;
  int segB = 0;
  Translate translate;  // applied to B's segment
  Rational t1;
  Rational t2;
  Point point;  // cover point on A's frame
};

// All transversal double points of two polylines on the quotient surface.
// Pass the same polyline twice (selfMode) to find self-intersections;
// consecutive-segment and closure adjacencies are excluded. Results are
// canonically ordered by (segA, segB, translate).
std::vector<QuotientIntersection> quotient_intersections(const Polyline& a,
                                                         const Polyline& b,
                                                         Surface surface,
                                                         bool self_mode);

HomologyClass homology_class(const Polyline& loop, Surface surface);

// Signed winding number of a null-homotopic loop around p, summed over all
// integer translates of p that can meet the loop's bounding box.
long winding_number(const Polyline& loop, const Point& p, Surface surface);

enum class Parity { Even, Odd };

struct RayOptions {
  std::uint64_t seed = 0;
  int max_retries = 8;
};

// Parity of transversal crossings between the loop (all x-translates) and
// the vertical path from `from` down to the puncture side y -> 0 of the
// annulus. Even: the loop encloses the knotoid side (outer essential).
// Odd: the loop separates `from` from the puncture (inner essential).
Parity ray_crossing_parity(const Point& from, const Polyline& loop,
                           Surface surface, const RayOptions& options = {});

// Bounding box helpers shared by the translate searches.
struct BoundingBox {
  Rational min_x, max_x, min_y, max_y;
};

BoundingBox bounding_box(const std::vector<Point>& points);

// Integer translates (a,b) such that box_b + (a,b) can meet box_a, inflated
// by one unit in each periodic direction of the surface.
std::vector<Translate> translate_range(const BoundingBox& box_a,
                                       const BoundingBox& box_b,
                                       Surface surface);

// Exact squared distance from a point to a segment.
Rational point_segment_dist_sq(const Point& p, const Point& a, const Point& b);

// True if p lies on the closed segment [a,b].
bool point_on_segment(const Point& p, const Point& a, const Point& b);

}  // namespace knotoid
