#include "knotoid/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "knotoid/errors.hpp"

namespace knotoid {

const char* fixity_label(Fixity f) {
  switch (f) {
    case Fixity::Moving: return "moving";
    case Fixity::FixedO: return "O";
    case Fixity::FixedH1: return "H1";
    case Fixity::FixedH2: return "H2";
  }
  return "?";
}

Strand Strand::reversed() const {
  Strand out = *this;
  std::reverse(out.points.begin(), out.points.end());
  return out;
}

bool CrossingKey::operator<(const CrossingKey& o) const {
  if (a != o.a) return a < o.a;
  if (segA != o.segA) return segA < o.segA;
  if (b != o.b) return b < o.b;
  if (segB != o.segB) return segB < o.segB;
  return translate < o.translate;
}

std::string CrossingKey::to_string() const {
  std::ostringstream os;
  os << a << "." << segA << " " << b << "." << segB << " " << translate.a << " " << translate.b;
  return os.str();
}

const Strand* Diagram::find_strand(const std::string& id) const {
  for (const Strand& s : strands)
    if (s.id == id) return &s;
  return nullptr;
}

int Diagram::strand_index(const std::string& id) const {
  for (size_t i = 0; i < strands.size(); ++i)
    if (strands[i].id == id) return static_cast<int>(i);
  return -1;
}

const Strand& Diagram::open_strand() const {
  for (const Strand& s : strands)
    if (!s.closed && !s.fixed()) return s;
  fail(ErrorCode::ValidationFailed, "diagram has no open moving strand");
}

Point Diagram::leg() const { return open_strand().points.front(); }
Point Diagram::head() const { return open_strand().points.back(); }

bool Diagram::has_fixed() const {
  for (const Strand& s : strands)
    if (s.fixed()) return true;
  return false;
}

Diagram Diagram::mirrored() const {
  Diagram out = *this;
  for (auto& [key, over] : out.over_flags)
    over = (over == Over::First) ? Over::Second : Over::First;
  return out;
}

namespace {

Vec segment_dir(const Strand& s, int seg) {
  return s.points[seg + 1] - s.points[seg];
}

CrossingKind crossing_kind(const Strand& sa, const Strand& sb) {
  const int fixed = (sa.fixed() ? 1 : 0) + (sb.fixed() ? 1 : 0);
  if (fixed == 0) return CrossingKind::MovingMoving;
  if (fixed == 1) return CrossingKind::Mixed;
  return CrossingKind::FixedFixed;
}

}  // namespace

std::vector<Crossing> detect_crossings(const Diagram& diagram) {
  // Strands visited in id order so keys come out canonical.
  std::vector<const Strand*> order;
  for (const Strand& s : diagram.strands) order.push_back(&s);
  std::sort(order.begin(), order.end(),
            [](const Strand* a, const Strand* b) { return a->id < b->id; });

  std::vector<Crossing> out;
  for (size_t i = 0; i < order.size(); ++i) {
    for (size_t j = i; j < order.size(); ++j) {
      const Strand& sa = *order[i];
      const Strand& sb = *order[j];
      const bool self = (i == j);
      auto hits = quotient_intersections(sa.polyline(), sb.polyline(), diagram.surface, self);
      for (const auto& hit : hits) {
        Crossing c;
        c.key = CrossingKey{sa.id, hit.segA, sb.id, hit.segB, hit.translate};
        c.t1 = hit.t1;
        c.t2 = hit.t2;
        c.point = hit.point;
        c.dir1 = segment_dir(sa, hit.segA);
        c.dir2 = segment_dir(sb, hit.segB);
        c.kind = crossing_kind(sa, sb);
        auto flag = diagram.over_flags.find(c.key);
        if (flag != diagram.over_flags.end()) c.over = flag->second;
        out.push_back(std::move(c));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Crossing& l, const Crossing& r) { return l.key < r.key; });
  return out;
}

namespace {

// Quotient representative of a cover point, used for triple-point checks
// and flag transport.
Point reduce_point(const Point& p, Surface surface) {
  Point q = p;
  if (surface != Surface::Plane) q.x -= floor_long(q.x);
  if (surface == Surface::Torus) q.y -= floor_long(q.y);
  return q;
}

struct CutRecord {
  Rational coordinate;  // height for x-cuts, abscissa for y-cuts
  std::string strand;
};

// Registers wrap passes of a strand across integer x (axis=0) or y (axis=1)
// lines; vertex-on-line and integer cut coordinates are violations.
void collect_cuts(const Strand& s, int axis, std::vector<CutRecord>& cuts,
                  std::vector<Violation>& violations) {
  const auto coord = [axis](const Point& p) { return axis == 0 ? p.x : p.y; };
  const auto other = [axis](const Point& p) { return axis == 0 ? p.y : p.x; };
  for (const Point& p : s.points) {
    if (is_integer(coord(p))) {
      violations.push_back({"CutDegeneracy",
                            "strand " + s.id + " has a vertex on an integer cut line"});
      return;
    }
  }
  for (int i = 0; i < s.segment_count(); ++i) {
    const Point& a = s.points[i];
    const Point& b = s.points[i + 1];
    const Rational lo = std::min(coord(a), coord(b));
    const Rational hi = std::max(coord(a), coord(b));
    for (long k = ceil_long(lo); k <= floor_long(hi); ++k) {
      const Rational t = (Rational(k) - coord(a)) / (coord(b) - coord(a));
      Rational c = other(a) + t * (other(b) - other(a));
      if (is_integer(c)) {
        violations.push_back({"CutDegeneracy",
                              "strand " + s.id + " wraps exactly through a lattice corner"});
        continue;
      }
      c -= floor_long(c);
      cuts.push_back({c, s.id});
    }
  }
}

}  // namespace

std::vector<Violation> validate(const Diagram& diagram) {
  std::vector<Violation> violations;

  std::set<std::string> ids;
  int open_moving = 0;
  for (const Strand& s : diagram.strands) {
    if (!ids.insert(s.id).second)
      violations.push_back({"DuplicateStrand", "duplicate strand id " + s.id});
    if (s.points.size() < 2) {
      violations.push_back({"BadStrand", "strand " + s.id + " needs at least two points"});
      continue;
    }
    if (!s.closed && !s.fixed()) ++open_moving;
    if (s.fixed() && !s.closed)
      violations.push_back({"BadStrand", "fixed strand " + s.id + " must be closed"});
    if (s.fixed() && diagram.surface != Surface::Plane)
      violations.push_back({"BadStrand", "fixed strands only appear in planar mixed diagrams"});
    if (s.closed) {
      const Vec h = s.points.back() - s.points.front();
      if (!is_integer(h.x) || !is_integer(h.y)) {
        violations.push_back({"NotClosedOnSurface", "strand " + s.id + " does not close"});
      } else {
        const long ha = floor_long(h.x), hb = floor_long(h.y);
        if (diagram.surface == Surface::Plane && (ha != 0 || hb != 0))
          violations.push_back({"NotClosedOnSurface", "strand " + s.id + " drifts on the plane"});
        if (diagram.surface == Surface::Annulus && hb != 0)
          violations.push_back({"NotClosedOnSurface", "strand " + s.id + " drifts vertically"});
      }
    }
    if (diagram.surface == Surface::Annulus) {
      for (const Point& p : s.points)
        if (p.y <= 0 || p.y >= 1) {
          violations.push_back({"OutOfBand", "strand " + s.id + " leaves the open annulus band"});
          break;
        }
    }
    for (int i = 0; i < s.segment_count(); ++i) {
      if (s.points[i] == s.points[i + 1])
        violations.push_back({"DegenerateSegment", "strand " + s.id + " has a zero-length segment"});
    }
    // A hinge folding straight back on itself is not an immersion.
    const int n = s.segment_count();
    for (int i = 0; i + 1 < n + (s.closed ? 1 : 0); ++i) {
      const Vec d1 = segment_dir(s, i % n);
      const Vec d2 = segment_dir(s, (i + 1) % n);
      if (cross(d1, d2) == 0 && dot(d1, d2) < 0)
        violations.push_back({"DegenerateSegment", "strand " + s.id + " doubles back at a vertex"});
    }
  }
  if (open_moving != 1)
    violations.push_back({"BadStrand", "diagram must have exactly one open moving strand"});
  if (!violations.empty()) return violations;  // geometry below assumes structure

  std::vector<Crossing> crossings;
  try {
    crossings = detect_crossings(diagram);
  } catch (const Error& e) {
    violations.push_back({"DegenerateIntersection", e.what()});
    return violations;
  }

  // Triple points: two crossings sharing a quotient location.
  std::map<std::pair<std::string, std::string>, CrossingKey> seen;
  for (const Crossing& c : crossings) {
    const Point q = reduce_point(c.point, diagram.surface);
    auto key = std::make_pair(q.x.get_str(), q.y.get_str());
    auto [it, inserted] = seen.try_emplace(key, c.key);
    if (!inserted)
      violations.push_back({"TriplePoint", "crossings " + it->second.to_string() + " and " +
                                               c.key.to_string() + " share a point"});
  }

  // Endpoints avoid every other arc and every crossing.
  const Strand& open = diagram.open_strand();
  for (const Point* endpoint : {&open.points.front(), &open.points.back()}) {
    const BoundingBox pb = bounding_box({*endpoint});
    for (const Strand& s : diagram.strands) {
      for (int i = 0; i < s.segment_count(); ++i) {
        const bool own_first = (&s == &open) && i == 0;
        const bool own_last = (&s == &open) && i == s.segment_count() - 1;
        const Point& a = s.points[i];
        const Point& b = s.points[i + 1];
        const BoundingBox sb = bounding_box({a, b});
        for (const Translate& t : translate_range(sb, pb, diagram.surface)) {
          const Point p = shift(*endpoint, t);
          if (!point_on_segment(p, a, b)) continue;
          if (own_first && p == open.points.front()) continue;
          if (own_last && p == open.points.back()) continue;
          violations.push_back({"EndpointOnArc", "an endpoint touches strand " + s.id});
        }
      }
    }
  }
  if (reduce_point(open.points.front(), diagram.surface) ==
      reduce_point(open.points.back(), diagram.surface))
    violations.push_back({"EndpointOnArc", "leg and head coincide"});

  // Every detected crossing carries a flag; every flag names a crossing.
  std::set<CrossingKey> detected;
  for (const Crossing& c : crossings) {
    detected.insert(c.key);
    if (!c.over)
      violations.push_back({"UnassignedCrossing", "crossing " + c.key.to_string() + " has no over flag"});
  }
  for (const auto& [key, over] : diagram.over_flags)
    if (!detected.count(key))
      violations.push_back({"UnknownCrossing", "over flag names missing crossing " + key.to_string()});

  // Fixed geometry is template-exact.
  for (const Strand& s : diagram.strands) {
    if (!s.fixed()) continue;
    const Strand expected = s.fixity == Fixity::FixedO ? o_template()
                           : s.fixity == Fixity::FixedH1 ? h_template().first[0]
                                                         : h_template().first[1];
    if (s.points != expected.points)
      violations.push_back({"BadStrand", "fixed strand " + s.id + " differs from its template"});
  }

  // Wrap cut coordinates must be pairwise distinct per axis.
  if (diagram.surface != Surface::Plane) {
    std::vector<int> axes = diagram.surface == Surface::Torus ? std::vector<int>{0, 1}
                                                              : std::vector<int>{0};
    for (int axis : axes) {
      std::vector<CutRecord> cuts;
      for (const Strand& s : diagram.strands) collect_cuts(s, axis, cuts, violations);
      std::sort(cuts.begin(), cuts.end(),
                [](const CutRecord& l, const CutRecord& r) { return l.coordinate < r.coordinate; });
      for (size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i].coordinate == cuts[i + 1].coordinate)
          violations.push_back({"CutDegeneracy", "wrap passes of " + cuts[i].strand + " and " +
                                                     cuts[i + 1].strand +
                                                     " share a cut coordinate"});
    }
  }

  return violations;
}

void require_valid(const Diagram& diagram) {
  auto violations = validate(diagram);
  if (!violations.empty())
    fail(ErrorCode::ValidationFailed, violations.front().code + ": " + violations.front().detail);
}

int crossing_sign(const Crossing& crossing) {
  if (!crossing.over) fail(ErrorCode::UnassignedCrossing, crossing.key.to_string());
  const Rational s = cross(crossing.under_dir(), crossing.over_dir());
  if (s == 0) fail(ErrorCode::DegenerateIntersection, "tangential crossing");
  return s > 0 ? 1 : -1;
}

int crossing_sign(const Diagram& diagram, const CrossingKey& key) {
  for (const Crossing& c : detect_crossings(diagram))
    if (c.key == key) return crossing_sign(c);
  fail(ErrorCode::UnknownCrossing, key.to_string());
}

long writhe(const Diagram& diagram, WritheScope scope) {
  long w = 0;
  for (const Crossing& c : detect_crossings(diagram)) {
    if (c.kind != CrossingKind::MovingMoving) continue;  // mixed and fixed never count
    (void)scope;  // both scopes agree on moving-moving crossings
    w += crossing_sign(c);
  }
  return w;
}

namespace {

// Transports over flags to a transformed diagram by matching quotient
// crossing points; branches are identified by (strand id, direction).
std::map<CrossingKey, Over> transport_flags(const Diagram& before, const Diagram& after,
                                            const Vec& delta) {
  auto old_crossings = detect_crossings(before);
  auto new_crossings = detect_crossings(after);
  std::map<CrossingKey, Over> flags;
  for (const Crossing& oc : old_crossings) {
    if (!oc.over) fail(ErrorCode::UnassignedCrossing, oc.key.to_string());
    const Point target = reduce_point(oc.point + delta, after.surface);
    const std::string over_strand = oc.over == Over::First ? oc.key.a : oc.key.b;
    const Vec over_dir = oc.over_dir();
    bool found = false;
    for (const Crossing& nc : new_crossings) {
      if (reduce_point(nc.point, after.surface) != target) continue;
      // Decide which branch of the new crossing is the old over branch.
      const bool first_matches = nc.key.a == over_strand && cross(nc.dir1, over_dir) == 0 &&
                                 dot(nc.dir1, over_dir) > 0;
      const bool second_matches = nc.key.b == over_strand && cross(nc.dir2, over_dir) == 0 &&
                                  dot(nc.dir2, over_dir) > 0;
      if (!first_matches && !second_matches)
        fail(ErrorCode::TopologyCorruption, "cannot identify over branch after transform");
      flags[nc.key] = first_matches ? Over::First : Over::Second;
      found = true;
      break;
    }
    if (!found) fail(ErrorCode::TopologyCorruption, "crossing lost during transform");
  }
  if (flags.size() != old_crossings.size())
    fail(ErrorCode::TopologyCorruption, "crossing count changed during transform");
  return flags;
}

}  // namespace

Diagram translate_diagram(const Diagram& diagram, const Rational& dx, const Rational& dy) {
  if (diagram.surface == Surface::Annulus && dy != 0)
    fail(ErrorCode::BadArgument, "annulus admits only horizontal translations");
  if (diagram.has_fixed())
    fail(ErrorCode::BadArgument, "mixed diagrams keep their fixed part pointwise fixed");
  Diagram out = diagram;
  for (Strand& s : out.strands)
    for (Point& p : s.points) {
      p.x += dx;
      p.y += dy;
    }
  out.over_flags = transport_flags(diagram, out, Vec(dx, dy));
  return out;
}

namespace {

// Other diagram content intersecting an axis-aligned box, over the quotient.
bool box_occupied(const Diagram& diagram, const std::string& skip_strand, int skip_lo,
                  int skip_hi, const BoundingBox& box) {
  const std::vector<Point> corners = {{box.min_x, box.min_y},
                                      {box.max_x, box.min_y},
                                      {box.max_x, box.max_y},
                                      {box.min_x, box.max_y}};
  for (const Strand& s : diagram.strands) {
    for (int i = 0; i < s.segment_count(); ++i) {
      if (s.id == skip_strand && i >= skip_lo && i <= skip_hi) continue;
      const Point& a = s.points[i];
      const Point& b = s.points[i + 1];
      const BoundingBox sb = bounding_box({a, b});
      for (const Translate& t : translate_range(box, sb, diagram.surface)) {
        const Point ta = shift(a, t), tb = shift(b, t);
        const Rational lo_x = std::min(ta.x, tb.x), hi_x = std::max(ta.x, tb.x);
        const Rational lo_y = std::min(ta.y, tb.y), hi_y = std::max(ta.y, tb.y);
        if (hi_x < box.min_x || lo_x > box.max_x || hi_y < box.min_y || lo_y > box.max_y)
          continue;
        // Conservative: bounding boxes meet. Refine with exact segment-box test.
        for (int e = 0; e < 4; ++e) {
          const Point& c1 = corners[e];
          const Point& c2 = corners[(e + 1) % 4];
          try {
            if (seg_intersect(ta, tb, c1, c2)) return true;
          } catch (const Error&) {
            return true;  // touching the box border counts as occupied
          }
        }
        // Segment fully inside the box?
        if (ta.x >= box.min_x && ta.x <= box.max_x && ta.y >= box.min_y && ta.y <= box.max_y)
          return true;
      }
    }
  }
  return false;
}

}  // namespace

Diagram insert_r1_kink(const Diagram& diagram, const KinkLocation& where, int sign,
                       KinkSide side) {
  if (sign != 1 && sign != -1) fail(ErrorCode::BadArgument, "kink sign must be +1 or -1");
  const int sidx = diagram.strand_index(where.strand);
  if (sidx < 0) fail(ErrorCode::BadArgument, "unknown strand " + where.strand);
  const Strand& s = diagram.strands[sidx];
  if (s.fixed()) fail(ErrorCode::BadArgument, "cannot edit a fixed strand");
  if (where.segment < 0 || where.segment >= s.segment_count())
    fail(ErrorCode::BadArgument, "segment index out of range");

  // Free parameter window in the middle third around the location, clipped
  // against crossings already on this segment.
  Rational lo(0), hi(1);
  for (const Crossing& c : detect_crossings(diagram)) {
    for (int branch = 0; branch < 2; ++branch) {
      const std::string& id = branch == 0 ? c.key.a : c.key.b;
      const int seg = branch == 0 ? c.key.segA : c.key.segB;
      const Rational t = branch == 0 ? c.t1 : c.t2;
      if (id != s.id || seg != where.segment) continue;
      if (t <= where.t) lo = std::max(lo, t);
      if (t >= where.t) hi = std::min(hi, t);
    }
  }
  if (lo >= where.t || hi <= where.t) fail(ErrorCode::NoRoom, "location coincides with a crossing");
  const Rational t1 = where.t - (where.t - lo) / 3;
  const Rational t2 = where.t + (hi - where.t) / 3;

  const Point a = lerp(s.points[where.segment], s.points[where.segment + 1], t1);
  const Point b = lerp(s.points[where.segment], s.points[where.segment + 1], t2);
  const Vec u = b - a;
  Vec n(-u.y, u.x);
  if (side == KinkSide::Right) n = Vec(u.y, -u.x);

  // Curl with one self-crossing at a + u/4 between the base run and the
  // descending return.
  const Rational half(1, 2);
  const std::vector<Point> inserted = {
      a,
      a + Rational(3, 4) * u,
      a + Rational(3, 4) * u + half * n,
      a + Rational(1, 4) * u + half * n,
      a + Rational(1, 4) * u - half * n,
      b,
  };

  BoundingBox box = bounding_box(inserted);
  // Small margin so pre-existing arcs hugging the box are rejected too.
  const Rational margin = norm_sq(u) / 100;
  box.min_x -= margin;
  box.max_x += margin;
  box.min_y -= margin;
  box.max_y += margin;
  if (diagram.surface == Surface::Annulus && (box.min_y <= 0 || box.max_y >= 1))
    fail(ErrorCode::NoRoom, "kink would leave the annulus band");
  if (box_occupied(diagram, s.id, where.segment, where.segment, box))
    fail(ErrorCode::NoRoom, "kink surgery box is occupied");

  Diagram out = diagram;
  Strand& target = out.strands[sidx];
  std::vector<Point> pts;
  pts.insert(pts.end(), target.points.begin(), target.points.begin() + where.segment + 1);
  pts.insert(pts.end(), inserted.begin(), inserted.end());
  pts.insert(pts.end(), target.points.begin() + where.segment + 1, target.points.end());
  target.points = pts;

  out.over_flags = transport_flags(diagram, out, Vec(Rational(0), Rational(0)));

  // The new crossing sits where the descending segment meets the base run.
  const int base_seg = where.segment + 1;  // a -> a + 3u/4
  const int desc_seg = where.segment + 4;  // down through the base line
  const CrossingKey key{target.id, base_seg, target.id, desc_seg, Translate{0, 0}};
  // Base direction u, descending direction -n: sign(base over) = sign(cross(-n, u)).
  const int base_over_sign = cross(Rational(-1) * n, u) > 0 ? 1 : -1;
  out.over_flags[key] = (sign == base_over_sign) ? Over::First : Over::Second;

  require_valid(out);
  return out;
}

KinkLocation find_free_kink_spot(const Diagram& diagram, int sign, KinkSide side) {
  const Strand& open = diagram.open_strand();
  const std::vector<Rational> params = {rat(1, 2), rat(1, 3), rat(2, 3), rat(1, 5), rat(4, 5),
                                        rat(2, 7), rat(5, 7), rat(1, 11), rat(10, 11)};
  for (int seg = 0; seg < open.segment_count(); ++seg) {
    for (const Rational& t : params) {
      KinkLocation loc{open.id, seg, t};
      try {
        insert_r1_kink(diagram, loc, sign, side);
        return loc;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoRoom) throw;
      }
    }
  }
  fail(ErrorCode::NoRoom, "no free kink location on the open strand");
}

Strand o_template() {
  Strand s;
  s.id = "O";
  s.closed = true;
  s.fixity = Fixity::FixedO;
  s.points = {{rat(-2), rat(-1)}, {rat(-1), rat(-1)}, {rat(-1), rat(2)},
              {rat(-2), rat(2)}, {rat(-2), rat(-1)}};
  return s;
}

Point o_anchor() { return Point(rat(-3, 2), rat(1, 2)); }

std::pair<std::vector<Strand>, std::map<CrossingKey, Over>> h_template() {
  Strand h1;
  h1.id = "H1";
  h1.closed = true;
  h1.fixity = Fixity::FixedH1;
  h1.points = {{rat(2), rat(-2)}, {rat(3), rat(-2)}, {rat(3), rat(5, 2)},
               {rat(2), rat(5, 2)}, {rat(2), rat(-2)}};
  Strand h2;
  h2.id = "H2";
  h2.closed = true;
  h2.fixity = Fixity::FixedH2;
  h2.points = {{rat(-2), rat(2)}, {rat(5, 2), rat(2)}, {rat(5, 2), rat(3)},
               {rat(-2), rat(3)}, {rat(-2), rat(2)}};
  // Both crossings positive: a positive Hopf link.
  std::map<CrossingKey, Over> flags;
  flags[CrossingKey{"H1", 3, "H2", 0, Translate{0, 0}}] = Over::Second;
  flags[CrossingKey{"H1", 2, "H2", 1, Translate{0, 0}}] = Over::First;
  return {{h1, h2}, flags};
}

Rational min_feature_dist_sq(const Diagram& diagram, const std::vector<Crossing>& crossings) {
  Rational best(-1);
  const auto consider = [&best](const Rational& d) {
    if (d == 0) return;
    if (best < 0 || d < best) best = d;
  };

  std::vector<Point> quotient_crossings;
  for (const Crossing& c : crossings) quotient_crossings.push_back(c.point);

  for (size_t ci = 0; ci < crossings.size(); ++ci) {
    const Crossing& c = crossings[ci];
    const BoundingBox cb = bounding_box({c.point});
    // crossing-to-crossing
    for (size_t cj = ci + 1; cj < crossings.size(); ++cj) {
      const BoundingBox ob = bounding_box({crossings[cj].point});
      for (const Translate& t : translate_range(cb, ob, diagram.surface))
        consider(norm_sq(c.point - shift(crossings[cj].point, t)));
    }
    for (const Strand& s : diagram.strands) {
      for (int i = 0; i < s.segment_count(); ++i) {
        const Point& a = s.points[i];
        const Point& b = s.points[i + 1];
        const BoundingBox sb = bounding_box({a, b});
        const bool incident_first = s.id == c.key.a && i == c.key.segA;
        const bool incident_second = s.id == c.key.b && i == c.key.segB;
        for (const Translate& t : translate_range(sb, cb, diagram.surface)) {
          const Point ta = shift(a, t), tb = shift(b, t);
          // crossing-to-vertex, always
          consider(norm_sq(c.point - ta));
          consider(norm_sq(c.point - tb));
          if (incident_first || incident_second) continue;
          consider(point_segment_dist_sq(c.point, ta, tb));
        }
      }
      // crossing-to-endpoint
      if (!s.closed) {
        const BoundingBox eb = bounding_box({s.points.front(), s.points.back()});
        for (const Translate& t : translate_range(eb, cb, diagram.surface)) {
          consider(norm_sq(c.point - shift(s.points.front(), t)));
          consider(norm_sq(c.point - shift(s.points.back(), t)));
        }
      }
    }
  }
  return best < 0 ? Rational(1) : best;
}

}  // namespace knotoid
