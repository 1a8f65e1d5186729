#include <doctest.h>

#include <random>

#include "knotoid/errors.hpp"
#include "knotoid/geometry.hpp"

using namespace knotoid;

namespace {

Point pt(long xn, long xd, long yn, long yd) { return Point(rat(xn, xd), rat(yn, yd)); }

Polyline square_loop_ccw() {
  Polyline loop;
  loop.points = {pt(0, 1, 0, 1), pt(1, 1, 0, 1), pt(1, 1, 1, 1), pt(0, 1, 1, 1), pt(0, 1, 0, 1)};
  loop.closed = true;
  return loop;
}

}  // namespace

TEST_CASE("segment intersection: transversal interior point") {
  auto hit = seg_intersect(pt(0, 1, 0, 1), pt(1, 1, 1, 1), pt(0, 1, 1, 1), pt(1, 1, 0, 1));
  REQUIRE(hit.has_value());
  CHECK(hit->t1 == rat(1, 2));
  CHECK(hit->t2 == rat(1, 2));
  CHECK(hit->point == pt(1, 2, 1, 2));
}

TEST_CASE("segment intersection: parallel disjoint is empty") {
  auto hit = seg_intersect(pt(0, 1, 0, 1), pt(1, 1, 0, 1), pt(0, 1, 1, 1), pt(1, 1, 1, 1));
  CHECK_FALSE(hit.has_value());
}

TEST_CASE("segment intersection: endpoint contact is degenerate") {
  CHECK_THROWS_AS(seg_intersect(pt(0, 1, 0, 1), pt(2, 1, 2, 1), pt(1, 1, 1, 1), pt(3, 1, 0, 1)),
                  Error);
  // collinear overlap
  CHECK_THROWS_AS(seg_intersect(pt(0, 1, 0, 1), pt(2, 1, 0, 1), pt(1, 1, 0, 1), pt(3, 1, 0, 1)),
                  Error);
}

TEST_CASE("quotient intersections: torus meridian meets longitude once") {
  Polyline a{{pt(1, 2, 0, 1), pt(1, 2, 1, 1)}, true};
  Polyline b{{pt(0, 1, 1, 2), pt(1, 1, 1, 2)}, true};
  auto hits = quotient_intersections(a, b, Surface::Torus, false);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].translate == Translate{0, 0});
  CHECK(hits[0].point == pt(1, 2, 1, 2));
}

TEST_CASE("quotient intersections: plane disjoint polylines") {
  Polyline a{{pt(0, 1, 0, 1), pt(1, 1, 0, 1)}, false};
  Polyline b{{pt(0, 1, 1, 1), pt(1, 1, 1, 1)}, false};
  CHECK(quotient_intersections(a, b, Surface::Plane, false).empty());
}

TEST_CASE("quotient intersections: annulus winding strand vs small circle, brute-force oracle") {
  // A winds three times near y = 1/4; B is a small square near (1/2, 1/4).
  Polyline a{{pt(1, 16, 1, 4), pt(49, 16, 1, 4)}, true};
  Polyline b{{pt(2, 5, 1, 5), pt(3, 5, 1, 5), pt(3, 5, 3, 10), pt(2, 5, 3, 10), pt(2, 5, 1, 5)},
             true};
  auto hits = quotient_intersections(a, b, Surface::Annulus, false);

  // Oracle: enumerate translates directly.
  long expected = 0;
  for (long t = -4; t <= 4; ++t) {
    for (int i = 0; i < a.segment_count(); ++i) {
      for (int j = 0; j < b.segment_count(); ++j) {
        auto hit = seg_intersect(a.seg_start(i), a.seg_end(i),
                                 shift(b.seg_start(j), Translate{t, 0}),
                                 shift(b.seg_end(j), Translate{t, 0}));
        if (hit) ++expected;
      }
    }
  }
  CHECK(static_cast<long>(hits.size()) == expected);
  CHECK(expected == 6);  // three passes, two vertical sides each
}

TEST_CASE("quotient intersections: swapping arguments negates translates") {
  Polyline a{{pt(1, 2, 1, 16), pt(1, 2, 17, 16)}, true};
  Polyline b{{pt(1, 16, 1, 2), pt(17, 16, 1, 2)}, true};
  auto ab = quotient_intersections(a, b, Surface::Torus, false);
  auto ba = quotient_intersections(b, a, Surface::Torus, false);
  REQUIRE(ab.size() == ba.size());
  for (const auto& hit : ab) {
    bool found = false;
    for (const auto& other : ba)
      if (other.translate == hit.translate.negated() && other.segA == hit.segB &&
          other.segB == hit.segA)
        found = true;
    CHECK(found);
  }
}

TEST_CASE("winding number: unit square") {
  Polyline loop = square_loop_ccw();
  CHECK(winding_number(loop, pt(1, 2, 1, 2), Surface::Plane) == 1);
  CHECK(winding_number(loop, pt(2, 1, 2, 1), Surface::Plane) == 0);
  CHECK_THROWS_AS(winding_number(loop, pt(1, 2, 0, 1), Surface::Plane), Error);
}

TEST_CASE("winding number: torus translate search") {
  // Small square around (1/4, 1/4); probe its translate (5/4, 1/4).
  Polyline loop{{pt(1, 8, 1, 8), pt(3, 8, 1, 8), pt(3, 8, 3, 8), pt(1, 8, 3, 8), pt(1, 8, 1, 8)},
                true};
  CHECK(winding_number(loop, pt(5, 4, 1, 4), Surface::Torus) == 1);
  // exactly one translate hits: nearby outside points stay 0
  CHECK(winding_number(loop, pt(3, 4, 1, 4), Surface::Torus) == 0);
}

TEST_CASE("homology class") {
  Polyline torus_loop{{pt(1, 16, 1, 16), pt(33, 16, 49, 16)}, true};
  auto h = homology_class(torus_loop, Surface::Torus);
  CHECK(h.a == 2);
  CHECK(h.b == 3);

  Polyline plane_loop = square_loop_ccw();
  auto hp = homology_class(plane_loop, Surface::Plane);
  CHECK(hp.is_zero());

  Polyline annulus_loop{{pt(0, 1, 1, 2), pt(1, 1, 1, 2)}, true};
  auto ha = homology_class(annulus_loop, Surface::Annulus);
  CHECK(ha.a == 1);
  CHECK(ha.b == 0);

  Polyline bad{{pt(0, 1, 1, 2), pt(1, 2, 1, 2)}, true};
  CHECK_THROWS_AS(homology_class(bad, Surface::Torus), Error);
}

TEST_CASE("ray crossing parity: essential circles above and below the probe") {
  Polyline low{{pt(1, 16, 3, 10), pt(17, 16, 3, 10)}, true};
  Polyline high{{pt(1, 16, 7, 10), pt(17, 16, 7, 10)}, true};
  CHECK(ray_crossing_parity(pt(1, 2, 1, 2), low, Surface::Annulus) == Parity::Odd);
  CHECK(ray_crossing_parity(pt(1, 2, 1, 2), high, Surface::Annulus) == Parity::Even);
}

TEST_CASE("ray crossing parity: humped loop crossing three times, brute-force count") {
  // Essential loop zigzagging across the vertical below the probe.
  Polyline loop{{pt(1, 16, 2, 5), pt(17, 32, 2, 5), pt(17, 32, 3, 10), pt(15, 32, 3, 10),
                 pt(15, 32, 1, 5), pt(17, 32, 1, 5), pt(9, 16, 2, 5), pt(17, 16, 2, 5)},
                true};
  const Point from = pt(1, 2, 1, 2);
  // brute force: crossings of the exact vertical below the probe
  long count = 0;
  for (long t = -2; t <= 2; ++t) {
    for (int i = 0; i < loop.segment_count(); ++i) {
      const Point a = shift(loop.seg_start(i), Translate{t, 0});
      const Point b = shift(loop.seg_end(i), Translate{t, 0});
      if (a.x == b.x) continue;
      if ((a.x < from.x && from.x < b.x) || (b.x < from.x && from.x < a.x)) {
        const Rational yc = a.y + Rational((from.x - a.x) / (b.x - a.x)) * (b.y - a.y);
        if (yc < from.y) ++count;
      }
    }
  }
  CHECK(count == 3);
  CHECK(ray_crossing_parity(from, loop, Surface::Annulus) == Parity::Odd);
}

TEST_CASE("ray crossing parity: independent of perturbation seed") {
  // Loop with a vertex exactly below the probe abscissa forces a retry.
  Polyline loop{{pt(1, 16, 2, 5), pt(1, 2, 3, 10), pt(17, 16, 2, 5)}, true};
  const Point from = pt(1, 2, 1, 2);
  const Parity p1 = ray_crossing_parity(from, loop, Surface::Annulus, RayOptions{12345});
  const Parity p2 = ray_crossing_parity(from, loop, Surface::Annulus, RayOptions{987654321});
  CHECK(p1 == p2);
  CHECK(p1 == Parity::Odd);
}

TEST_CASE("exactness: repeated evaluation is bit-identical") {
  Polyline loop = square_loop_ccw();
  const Point p = pt(1, 3, 2, 7);
  CHECK(winding_number(loop, p, Surface::Plane) == winding_number(loop, p, Surface::Plane));
  auto a = quotient_intersections(loop, loop, Surface::Plane, true);
  auto b = quotient_intersections(loop, loop, Surface::Plane, true);
  CHECK(a.size() == b.size());
}
