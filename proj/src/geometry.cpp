#include "knotoid/geometry.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "knotoid/errors.hpp"

namespace knotoid {

const char* surface_name(Surface s) {
  switch (s) {
    case Surface::Plane: return "plane";
    case Surface::Annulus: return "annulus";
    case Surface::Torus: return "torus";
  }
  return "?";
}

std::optional<SegIntersection> seg_intersect(const Point& p1, const Point& p2,
                                             const Point& q1, const Point& q2) {
  const Vec d1 = p2 - p1;
  const Vec d2 = q2 - q1;
  if (norm_sq(d1) == 0 || norm_sq(d2) == 0)
    fail(ErrorCode::DegenerateIntersection, "zero-length segment");

  const Rational denom = cross(d1, d2);
  const Vec between = q1 - p1;
  if (denom == 0) {
    if (cross(between, d1) != 0) return std::nullopt;  // parallel, disjoint lines
    // Collinear: project q1,q2 onto d1 and compare parameter ranges.
    const Rational len = norm_sq(d1);
    Rational u1 = dot(between, d1) / len;
    Rational u2 = dot(q2 - p1, d1) / len;
    if (u1 > u2) std::swap(u1, u2);
    if (u2 < 0 || u1 > 1) return std::nullopt;
    fail(ErrorCode::DegenerateIntersection, "collinear contact between segments");
  }

  const Rational t1 = cross(between, d2) / denom;
  const Rational t2 = cross(between, d1) / denom;
  if (t1 < 0 || t1 > 1 || t2 < 0 || t2 > 1) return std::nullopt;
  if (t1 == 0 || t1 == 1 || t2 == 0 || t2 == 1)
    fail(ErrorCode::DegenerateIntersection, "segment endpoint touches another segment");
  return SegIntersection{t1, t2, lerp(p1, p2, t1)};
}

BoundingBox bounding_box(const std::vector<Point>& points) {
  BoundingBox box{points[0].x, points[0].x, points[0].y, points[0].y};
  for (const Point& p : points) {
    box.min_x = std::min(box.min_x, p.x);
    box.max_x = std::max(box.max_x, p.x);
    box.min_y = std::min(box.min_y, p.y);
    box.max_y = std::max(box.max_y, p.y);
  }
  return box;
}

std::vector<Translate> translate_range(const BoundingBox& box_a,
                                       const BoundingBox& box_b,
                                       Surface surface) {
  long a_lo = 0, a_hi = 0, b_lo = 0, b_hi = 0;
  if (surface != Surface::Plane) {
    a_lo = floor_long(box_a.min_x - box_b.max_x) - 1;
    a_hi = ceil_long(box_a.max_x - box_b.min_x) + 1;
  }
  if (surface == Surface::Torus) {
    b_lo = floor_long(box_a.min_y - box_b.max_y) - 1;
    b_hi = ceil_long(box_a.max_y - box_b.min_y) + 1;
  }
  std::vector<Translate> out;
  for (long a = a_lo; a <= a_hi; ++a)
    for (long b = b_lo; b <= b_hi; ++b) out.push_back(Translate{a, b});
  return out;
}

namespace {

// Adjacency translates at which two segments of one polyline legitimately
// share an endpoint: consecutive segments at translate 0, and for closed
// polylines the wrap pair (0, n-1) at minus the homology vector.
std::vector<Translate> adjacency_translates(const Polyline& poly, int i, int j) {
  std::vector<Translate> out;
  if (j == i + 1) out.push_back(Translate{0, 0});
  const int n = poly.segment_count();
  if (poly.closed && i == 0 && j == n - 1) {
    const Vec h = poly.points.back() - poly.points.front();
    out.push_back(Translate{-floor_long(h.x), -floor_long(h.y)});
  }
  return out;
}

}  // namespace

std::vector<QuotientIntersection> quotient_intersections(const Polyline& a,
                                                         const Polyline& b,
                                                         Surface surface,
                                                         bool self_mode) {
  std::vector<QuotientIntersection> out;
  const int na = a.segment_count();
  const int nb = b.segment_count();
  for (int i = 0; i < na; ++i) {
    const Point& a1 = a.seg_start(i);
    const Point& a2 = a.seg_end(i);
    const BoundingBox box_a = bounding_box({a1, a2});
    const int j0 = self_mode ? i + 1 : 0;
    for (int j = j0; j < nb; ++j) {
      const Point& b1 = b.seg_start(j);
      const Point& b2 = b.seg_end(j);
      const BoundingBox box_b = bounding_box({b1, b2});
      std::vector<Translate> skip;
      if (self_mode) skip = adjacency_translates(a, i, j);
      for (const Translate& t : translate_range(box_a, box_b, surface)) {
        if (std::find(skip.begin(), skip.end(), t) != skip.end()) continue;
        auto hit = seg_intersect(a1, a2, shift(b1, t), shift(b2, t));
        if (hit) out.push_back(QuotientIntersection{i, j, t, hit->t1, hit->t2, hit->point});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const QuotientIntersection& l, const QuotientIntersection& r) {
    if (l.segA != r.segA) return l.segA < r.segA;
    if (l.segB != r.segB) return l.segB < r.segB;
    return l.translate < r.translate;
  });
  return out;
}

HomologyClass homology_class(const Polyline& loop, Surface surface) {
  if (!loop.closed) fail(ErrorCode::NotClosedOnSurface, "open polyline has no homology class");
  const Vec h = loop.points.back() - loop.points.front();
  if (!is_integer(h.x) || !is_integer(h.y))
    fail(ErrorCode::NotClosedOnSurface, "polyline endpoints differ by a non-integer vector");
  HomologyClass c{floor_long(h.x), floor_long(h.y)};
  if (surface == Surface::Plane && !c.is_zero())
    fail(ErrorCode::NotClosedOnSurface, "plane loop must close exactly");
  if (surface == Surface::Annulus && c.b != 0)
    fail(ErrorCode::NotClosedOnSurface, "annulus loop must not drift vertically");
  return c;
}

namespace {

// Exact winding number of a single cover loop around p. Half-open crossing
// rule handles vertices on the ray deterministically; a point exactly on
// the loop raises PointOnLoop.
long winding_single(const Polyline& loop, const Point& p) {
  long w = 0;
  for (int i = 0; i < loop.segment_count(); ++i) {
    const Point& a = loop.seg_start(i);
    const Point& b = loop.seg_end(i);
    if (point_on_segment(p, a, b)) fail(ErrorCode::PointOnLoop, "probe point lies on the loop");
    const Rational side = cross(b - a, p - a);
    if (a.y <= p.y && p.y < b.y && side > 0) ++w;
    else if (b.y <= p.y && p.y < a.y && side < 0) --w;
  }
  return w;
}

}  // namespace

long winding_number(const Polyline& loop, const Point& p, Surface surface) {
  const BoundingBox box = bounding_box(loop.points);
  const BoundingBox pb = bounding_box({p});
  long total = 0;
  for (const Translate& t : translate_range(box, pb, surface))
    total += winding_single(loop, shift(p, t));
  return total;
}

namespace {

// Largest max denominator over the loop coordinates, for the perturbation
// denominator rule.
Integer max_denominator(const Polyline& loop) {
  Integer d = 1;
  for (const Point& p : loop.points) {
    d = std::max(d, Integer(p.x.get_den()));
    d = std::max(d, Integer(p.y.get_den()));
  }
  return d;
}

// Nonzero gap from fx to the nearest distinct vertex abscissa (mod 1) and
// to the nearest crossing of the loop with the horizontal line y = fy.
// Any abscissa in (fx, fx + gap) yields a generic ray with the same parity.
Rational generic_gap(const Point& from, const Polyline& loop) {
  Rational gap(1);
  for (const Point& v : loop.points) {
    Rational d = v.x - from.x;
    d -= floor_long(d);  // fractional part in [0,1)
    if (d != 0) gap = std::min(gap, d);
  }
  for (int i = 0; i < loop.segment_count(); ++i) {
    const Point& a = loop.seg_start(i);
    const Point& b = loop.seg_end(i);
    if (a.y == b.y) continue;
    if ((a.y <= from.y && from.y <= b.y) || (b.y <= from.y && from.y <= a.y)) {
      const Rational t = (from.y - a.y) / (b.y - a.y);
      Rational xc = a.x + t * (b.x - a.x) - from.x;
      xc -= floor_long(xc);
      if (xc != 0) gap = std::min(gap, xc);
    }
  }
  return gap;
}

bool ray_is_generic(const Rational& fx, const Rational& fy, const Polyline& loop) {
  for (const Point& v : loop.points) {
    Rational d = v.x - fx;
    if (is_integer(d) && v.y < fy) return false;
  }
  for (int i = 0; i < loop.segment_count(); ++i) {
    const Point& a = loop.seg_start(i);
    const Point& b = loop.seg_end(i);
    if (a.x == b.x && is_integer(a.x - fx)) return false;  // vertical segment on the ray line
  }
  return true;
}

long ray_crossings(const Rational& fx, const Rational& fy, const Polyline& loop) {
  long count = 0;
  for (int i = 0; i < loop.segment_count(); ++i) {
    const Point& a = loop.seg_start(i);
    const Point& b = loop.seg_end(i);
    if (a.x == b.x) continue;
    const long lo = ceil_long(std::min(a.x, b.x) - fx);
    const long hi = floor_long(std::max(a.x, b.x) - fx);
    for (long k = lo; k <= hi; ++k) {
      const Rational x_line = fx + k;
      if (x_line <= std::min(a.x, b.x) || x_line >= std::max(a.x, b.x)) continue;
      const Rational t = (x_line - a.x) / (b.x - a.x);
      const Rational yc = a.y + t * (b.y - a.y);
      if (yc == fy) fail(ErrorCode::TopologyCorruption, "loop passes through the ray origin");
      if (yc < fy) ++count;
    }
  }
  return count;
}

}  // namespace

Parity ray_crossing_parity(const Point& from, const Polyline& loop,
                           Surface surface, const RayOptions& options) {
  if (surface != Surface::Annulus)
    fail(ErrorCode::BadArgument, "ray_crossing_parity is an annulus operation");
  Rational fx = from.x;
  std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL ^
                      static_cast<std::uint64_t>(mpz_get_ui(from.x.get_num_mpz_t())));
  for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
    if (ray_is_generic(fx, from.y, loop)) {
      const long c = ray_crossings(fx, from.y, loop);
      return (c % 2 == 0) ? Parity::Even : Parity::Odd;
    }
    // Perturb within the generic gap; denominator exceeds every coordinate
    // denominator in the loop so the new abscissa avoids all vertices.
    const Rational gap = generic_gap(from, loop);
    const Integer big = max_denominator(loop) + 1 + static_cast<long>(rng() % 64);
    Rational theta(Integer(1 + static_cast<long>(rng() % 16)), big * 32);
    theta.canonicalize();
    fx = from.x + gap * theta;
  }
  fail(ErrorCode::NonGenericRay, "no generic ray abscissa found after retries");
}

Rational point_segment_dist_sq(const Point& p, const Point& a, const Point& b) {
  const Vec d = b - a;
  const Rational len = norm_sq(d);
  if (len == 0) return norm_sq(p - a);
  Rational t = dot(p - a, d) / len;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return norm_sq(p - lerp(a, b, t));
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
  if (cross(b - a, p - a) != 0) return false;
  const Rational len = norm_sq(b - a);
  if (len == 0) return p == a;
  const Rational t = dot(p - a, b - a) / len;
  return t >= 0 && t <= 1;
}

}  // namespace knotoid
