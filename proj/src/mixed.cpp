#include "knotoid/mixed.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "knotoid/errors.hpp"

namespace knotoid {

std::string MixedDiagram::provenance() const {
  std::ostringstream os;
  os << "translated from " << surface_name(source_surface) << "; x-passes " << x_passes
     << ", y-passes " << y_passes << ", channel writhe " << channel_writhe;
  return os.str();
}

long linking_number(const TracedComponent& loop, Fixity fixed) {
  long sum = 0;
  for (const MixedAnnotation& note : loop.annotations)
    if (note.fixed == fixed) sum += note.sign;
  if (sum % 2 != 0) fail(ErrorCode::OddCrossingParity, "signed mixed-crossing sum must be even");
  return sum / 2;
}

namespace {

// A wrap pass of a strand across an integer line. axis 0: crossing x = k
// (direction +-1 in x); axis 1: crossing y = k.
struct Pass {
  int axis = 0;
  int direction = 1;
  Rational coordinate;  // reduced height (axis 0) or abscissa (axis 1)
  int rank = -1;
  int dive_side = 1;    // which side of the pass the dive runs on
  Rational dive;        // generic abscissa of the back-sheet dive (axis 1)
};

struct SplitPoint {
  Point p;
  bool cut = false;
  int axis = 0;
  int direction = 1;
  int slope_sign = 1;  // sign of dx*dy on the cut segment
};

// Inserts exact cut points where a segment crosses integer lines of the
// given axes, ordered along the walk.
std::vector<SplitPoint> split_at_integer_lines(const std::vector<Point>& points, bool cut_x,
                                               bool cut_y) {
  std::vector<SplitPoint> out;
  for (size_t i = 0; i < points.size(); ++i) {
    out.push_back(SplitPoint{points[i]});
    if (i + 1 == points.size()) break;
    const Point& a = points[i];
    const Point& b = points[i + 1];
    struct Cut {
      Rational t;
      Point p;
      int axis;
      int direction;
    };
    std::vector<Cut> cuts;
    if (cut_x && a.x != b.x) {
      const long lo = ceil_long(std::min(a.x, b.x));
      const long hi = floor_long(std::max(a.x, b.x));
      for (long k = lo; k <= hi; ++k) {
        const Rational t = (Rational(k) - a.x) / (b.x - a.x);
        if (t <= 0 || t >= 1) continue;  // vertex cuts rejected by validation
        cuts.push_back({t, lerp(a, b, t), 0, b.x > a.x ? 1 : -1});
      }
    }
    if (cut_y && a.y != b.y) {
      const long lo = ceil_long(std::min(a.y, b.y));
      const long hi = floor_long(std::max(a.y, b.y));
      for (long k = lo; k <= hi; ++k) {
        const Rational t = (Rational(k) - a.y) / (b.y - a.y);
        if (t <= 0 || t >= 1) continue;
        cuts.push_back({t, lerp(a, b, t), 1, b.y > a.y ? 1 : -1});
      }
    }
    std::sort(cuts.begin(), cuts.end(), [](const Cut& l, const Cut& r) { return l.t < r.t; });
    const Rational slope_product = Rational(b.x - a.x) * Rational(b.y - a.y);
    const int slope_sign = slope_product < 0 ? -1 : 1;
    for (const Cut& c : cuts)
      out.push_back(SplitPoint{c.p, true, c.axis, c.direction, slope_sign});
  }
  return out;
}

struct SegmentRange {
  std::string strand;
  int lo = 0;
  int hi = 0;
  int axis = 0;

  bool contains(const std::string& id, int seg) const {
    return strand == id && seg >= lo && seg <= hi;
  }
};

// Return-arc geometry between the exit and entry points of one pass, for a
// positive-direction crossing. Negative passes use the reversed list.
//
// x-returns circle the fixed band the way the annular returns circle O.
// y-returns thread H2 and then come back as a back-sheet dive: straight
// down through the square region at a generic abscissa, passing under
// every arc they meet. This is the flat projection of the torus with the
// meridional pass pushed to the far sheet, so the crossings it creates are
// the projection's own sheet crossings and state loops keep torus-parallel
// classes.
std::vector<Point> circuit_points(Surface source, const Pass& pass, int count_same_axis) {
  const int n = count_same_axis;
  std::vector<Point> pts;
  if (source == Surface::Annulus) {
    // Around the bottom and through the O band, entering over the far arc.
    const Rational r = Rational(1 + pass.rank, 8 * (n + 1));
    const Rational h = Rational(-1) + Rational(1 + pass.rank, 2 * (n + 1));
    const Rational& y = pass.coordinate;
    pts = {{1 + r, y},          {1 + r, Rational(-1) - r}, {Rational(-2) - r, Rational(-1) - r},
           {Rational(-2) - r, h}, {Rational(0) - r, h},     {Rational(0) - r, y}};
    return pts;
  }
  if (pass.axis == 0) {
    // Through H1 (right band), around the bottom; rank ascends with height.
    const Rational r = Rational(1 + pass.rank, 8 * (n + 1));
    const Rational& y = pass.coordinate;
    pts = {{3 + r, y},
           {3 + r, Rational(-2) - r},
           {Rational(0) - r, Rational(-2) - r},
           {Rational(0) - r, y}};
  } else {
    // Up through H2, a short jog, then the dive below the square.
    const Rational rp = Rational(1 + pass.rank, 8 * (n + 1));
    const Rational b = Rational(-1, 8) - rp / 4;  // under-square jog height
    const Rational& x = pass.coordinate;
    pts = {{x, 3 + rp}, {pass.dive, 3 + rp}, {pass.dive, b}, {x, b}};
  }
  return pts;
}

Point reduce_to_square(const Point& p) {
  return Point(p.x - floor_long(p.x), p.y - floor_long(p.y));
}

MixedDiagram translate_to_mixed(const Diagram& input, Surface source) {
  require_valid(input);
  if (input.surface != source)
    fail(ErrorCode::BadArgument, std::string("expected a ") + surface_name(source) + " diagram");
  const bool torus = source == Surface::Torus;

  // First sweep: collect every wrap pass to fix the nesting ranks.
  std::vector<std::vector<SplitPoint>> split_per_strand;
  std::vector<Pass> passes;
  for (const Strand& s : input.strands) {
    auto split = split_at_integer_lines(s.points, true, torus);
    for (const SplitPoint& sp : split) {
      if (!sp.cut) continue;
      Pass pass;
      pass.axis = sp.axis;
      pass.direction = sp.direction;
      pass.coordinate = sp.axis == 0 ? sp.p.y - floor_long(sp.p.y) : sp.p.x - floor_long(sp.p.x);
      pass.dive_side = sp.slope_sign;
      passes.push_back(pass);
    }
    split_per_strand.push_back(std::move(split));
  }
  int count_x = 0, count_y = 0;
  for (const Pass& p : passes) (p.axis == 0 ? count_x : count_y)++;
  // Rank by ascending cut coordinate within each axis; coordinates are
  // pairwise distinct by validation.
  for (int axis = 0; axis < 2; ++axis) {
    std::vector<Pass*> of_axis;
    for (Pass& p : passes)
      if (p.axis == axis) of_axis.push_back(&p);
    std::sort(of_axis.begin(), of_axis.end(),
              [](const Pass* l, const Pass* r) { return l->coordinate < r->coordinate; });
    for (size_t i = 0; i < of_axis.size(); ++i) of_axis[i]->rank = static_cast<int>(i);
  }

  // Generic dive abscissae for the y-passes: halfway from the pass to the
  // next occupied x-value, so the dive meets interior arcs transversally
  // and misses vertices, crossings and other passes.
  if (torus) {
    std::set<Rational> hot;
    for (const Strand& s : input.strands)
      for (const Point& p : s.points) {
        Rational fx = p.x - floor_long(p.x);
        hot.insert(fx);
      }
    for (const Crossing& c : detect_crossings(input)) {
      Rational fx = c.point.x - floor_long(c.point.x);
      hot.insert(fx);
    }
    for (const Pass& p : passes)
      if (p.axis == 1) hot.insert(p.coordinate);
    std::vector<Pass*> y_passes;
    for (Pass& p : passes)
      if (p.axis == 1) y_passes.push_back(&p);
    std::sort(y_passes.begin(), y_passes.end(),
              [](const Pass* l, const Pass* r) { return l->rank < r->rank; });
    for (Pass* p : y_passes) {
      // The dive runs on the side of the pass its strand flows away from,
      // so the pinched piece of a sheet-crossing resolution stays local.
      if (p->dive_side > 0) {
        Rational gap = Rational(1) - p->coordinate;
        auto it = hot.upper_bound(p->coordinate);
        if (it != hot.end()) gap = std::min(gap, Rational(*it - p->coordinate));
        p->dive = p->coordinate + gap / 2;
      } else {
        Rational gap = p->coordinate;
        auto it = hot.lower_bound(p->coordinate);
        if (it != hot.begin()) {
          --it;
          gap = std::min(gap, Rational(p->coordinate - *it));
        }
        p->dive = p->coordinate - gap / 2;
      }
      hot.insert(p->dive);
    }
  }

  // Second sweep: rebuild strands in the unit square with return arcs, and
  // remember the inserted segment ranges per channel.
  MixedDiagram out;
  out.source_surface = source;
  out.x_passes = count_x;
  out.y_passes = count_y;
  out.diagram.surface = Surface::Plane;
  std::vector<SegmentRange> channel_ranges;

  size_t pass_cursor = 0;
  for (size_t sidx = 0; sidx < input.strands.size(); ++sidx) {
    const Strand& s = input.strands[sidx];
    Strand rebuilt;
    rebuilt.id = s.id;
    rebuilt.closed = s.closed;
    rebuilt.fixity = s.fixity;
    std::vector<Point> pts;
    Vec shiftv(Rational(0), Rational(0));
    bool shift_set = false;
    for (const SplitPoint& sp : split_per_strand[sidx]) {
      if (!shift_set) {
        shiftv = Vec(Rational(-floor_long(sp.p.x)), Rational(-floor_long(sp.p.y)));
        shift_set = true;
      }
      if (!sp.cut) {
        pts.push_back(sp.p + shiftv);
        continue;
      }
      const Pass& pass = passes[pass_cursor++];
      const int count = pass.axis == 0 ? count_x : count_y;
      std::vector<Point> circuit = circuit_points(source, pass, count);
      Point exit_point, entry_point;
      if (pass.axis == 0) {
        const Rational y = pass.coordinate;
        exit_point = pass.direction > 0 ? Point(Rational(1), y) : Point(Rational(0), y);
        entry_point = pass.direction > 0 ? Point(Rational(0), y) : Point(Rational(1), y);
        shiftv.x += pass.direction > 0 ? -1 : 1;
      } else {
        const Rational x = pass.coordinate;
        exit_point = pass.direction > 0 ? Point(x, Rational(1)) : Point(x, Rational(0));
        entry_point = pass.direction > 0 ? Point(x, Rational(0)) : Point(x, Rational(1));
        shiftv.y += pass.direction > 0 ? -1 : 1;
      }
      if (pass.direction < 0) std::reverse(circuit.begin(), circuit.end());
      const int first_new_seg = static_cast<int>(pts.size()) - 1;
      pts.push_back(exit_point);
      for (const Point& cp : circuit) pts.push_back(cp);
      pts.push_back(entry_point);
      const int last_new_seg = static_cast<int>(pts.size()) - 1;
      channel_ranges.push_back(SegmentRange{s.id, first_new_seg + 1, last_new_seg - 1, pass.axis});
    }
    rebuilt.points = std::move(pts);
    out.diagram.strands.push_back(std::move(rebuilt));
  }

  // Fixed templates.
  if (source == Surface::Annulus) {
    out.diagram.strands.push_back(o_template());
  } else {
    auto [strands, flags] = h_template();
    for (Strand& s : strands) out.diagram.strands.push_back(std::move(s));
    for (const auto& [key, over] : flags) out.diagram.over_flags[key] = over;
  }

  // Assign flags: transported interior crossings, threading conventions for
  // mixed crossings, and the x-over-y channel convention.
  const auto original = detect_crossings(input);
  std::vector<bool> matched(original.size(), false);
  const auto rebuilt_crossings = detect_crossings(out.diagram);
  const auto in_range = [&channel_ranges](const std::string& id, int seg, int axis) {
    for (const SegmentRange& r : channel_ranges)
      if (r.axis == axis && r.contains(id, seg)) return true;
    return false;
  };

  for (const Crossing& c : rebuilt_crossings) {
    if (c.kind == CrossingKind::FixedFixed) continue;  // template flags already set
    if (c.kind == CrossingKind::Mixed) {
      const bool first_fixed = out.diagram.find_strand(c.key.a)->fixed();
      const std::string& fixed_id = first_fixed ? c.key.a : c.key.b;
      const int fixed_seg = first_fixed ? c.key.segA : c.key.segB;
      const Over fixed_over = first_fixed ? Over::First : Over::Second;
      const Over moving_over = first_fixed ? Over::Second : Over::First;
      bool moving_passes_over;
      if (fixed_id == "O") {
        if (fixed_seg == 3) moving_passes_over = true;        // far arc
        else if (fixed_seg == 1) moving_passes_over = false;  // near arc
        else fail(ErrorCode::RoutingCollision, "return arc touches O outside the threading edges");
      } else if (fixed_id == "H1") {
        if (fixed_seg == 1) moving_passes_over = true;
        else if (fixed_seg == 3) moving_passes_over = false;
        else fail(ErrorCode::RoutingCollision, "return arc touches H1 outside the threading edges");
      } else {  // H2
        // The rising pass threads H2 once (under the near arc, over the
        // far); the dive segment recrosses the band on its way down and
        // stays under both edges so its linking contribution is zero.
        const std::string& moving_id = first_fixed ? c.key.b : c.key.a;
        const int moving_seg = first_fixed ? c.key.segB : c.key.segA;
        const Strand& ms = *out.diagram.find_strand(moving_id);
        const bool repass = std::min(ms.points[moving_seg].y, ms.points[moving_seg + 1].y) < 1;
        if (repass) moving_passes_over = false;
        else if (fixed_seg == 2) moving_passes_over = true;
        else if (fixed_seg == 0) moving_passes_over = false;
        else fail(ErrorCode::RoutingCollision, "return arc touches H2 outside the threading edges");
      }
      out.diagram.over_flags[c.key] = moving_passes_over ? moving_over : fixed_over;
      continue;
    }
    // Moving-moving: a transported interior crossing, or a sheet crossing
    // where a dive passes under interior content.
    const bool a_x = in_range(c.key.a, c.key.segA, 0);
    const bool a_y = in_range(c.key.a, c.key.segA, 1);
    const bool b_x = in_range(c.key.b, c.key.segB, 0);
    const bool b_y = in_range(c.key.b, c.key.segB, 1);
    if (a_x || b_x)
      fail(ErrorCode::RoutingCollision, "an x-return collides with diagram content");
    if (a_y != b_y) {
      out.diagram.over_flags[c.key] = a_y ? Over::Second : Over::First;  // dive passes under
      continue;
    }
    if (a_y && b_y) fail(ErrorCode::RoutingCollision, "two y-returns collide");
    // Interior: match the original crossing with the same quotient point.
    bool found = false;
    for (size_t i = 0; i < original.size(); ++i) {
      if (matched[i]) continue;
      const Crossing& oc = original[i];
      if (reduce_to_square(oc.point) != c.point) continue;
      const std::string over_strand = oc.over == Over::First ? oc.key.a : oc.key.b;
      const Vec over_dir = oc.over_dir();
      const bool first_matches = c.key.a == over_strand && cross(c.dir1, over_dir) == 0 &&
                                 dot(c.dir1, over_dir) > 0;
      const bool second_matches = c.key.b == over_strand && cross(c.dir2, over_dir) == 0 &&
                                  dot(c.dir2, over_dir) > 0;
      if (!first_matches && !second_matches) continue;
      out.diagram.over_flags[c.key] = first_matches ? Over::First : Over::Second;
      matched[i] = true;
      found = true;
      break;
    }
    if (!found) fail(ErrorCode::RoutingCollision, "unexpected crossing in the translated diagram");
  }
  for (bool m : matched)
    if (!m) fail(ErrorCode::RoutingCollision, "an interior crossing was lost in translation");

  // Each sheet crossing a dive makes against interior content scales the
  // bracket by a curl factor; an explicit opposite-sign kink on the dive's
  // under-square jog leg cancels it, so both the bracket and the writhe of
  // the translation match the source diagram. Kinks go in at descending
  // segment positions so pending targets keep their indices.
  struct KinkPlan {
    std::string strand;
    int segment = 0;
    int sign = 0;
  };
  std::vector<KinkPlan> kinks;
  for (const Crossing& c : detect_crossings(out.diagram)) {
    if (c.kind != CrossingKind::MovingMoving) continue;
    const bool a_y = in_range(c.key.a, c.key.segA, 1);
    const bool b_y = in_range(c.key.b, c.key.segB, 1);
    if (a_y == b_y) continue;
    const int sign = crossing_sign(c);
    out.channel_writhe += sign;
    // The under-square jog is horizontal and adjacent to the dive segment.
    const std::string& y_strand = a_y ? c.key.a : c.key.b;
    const int dive_seg = a_y ? c.key.segA : c.key.segB;
    const Strand& ys = *out.diagram.find_strand(y_strand);
    int leg_seg = -1;
    for (int cand : {dive_seg + 1, dive_seg - 1}) {
      if (cand < 0 || cand >= ys.segment_count()) continue;
      if (ys.points[cand].y == ys.points[cand + 1].y && ys.points[cand].y < 0) leg_seg = cand;
    }
    if (leg_seg < 0) fail(ErrorCode::RoutingCollision, "sheet crossing off a dive segment");
    kinks.push_back(KinkPlan{y_strand, leg_seg, -sign});
  }
  std::sort(kinks.begin(), kinks.end(), [](const KinkPlan& l, const KinkPlan& r) {
    if (l.strand != r.strand) return l.strand < r.strand;
    return l.segment > r.segment;
  });
  for (const KinkPlan& plan : kinks) {
    bool placed = false;
    for (const Rational& t : {rat(1, 2), rat(1, 3), rat(2, 3), rat(1, 5), rat(4, 5), rat(2, 7),
                              rat(5, 7), rat(1, 11), rat(10, 11)}) {
      for (KinkSide side : {KinkSide::Left, KinkSide::Right}) {
        try {
          out.diagram = insert_r1_kink(out.diagram, KinkLocation{plan.strand, plan.segment, t},
                                       plan.sign, side);
          placed = true;
          break;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NoRoom) throw;
        }
      }
      if (placed) break;
    }
    if (!placed) fail(ErrorCode::RoutingCollision, "no room for a curl-compensating kink");
  }

  require_valid(out.diagram);
  return out;
}

// Swaps the two cover coordinates; crossing flags carry over (a reflection
// preserves which branch is on top), translates swap components.
Diagram transpose_diagram(const Diagram& d) {
  Diagram out = d;
  for (Strand& s : out.strands)
    for (Point& p : s.points) std::swap(p.x, p.y);
  std::map<CrossingKey, Over> flags;
  for (const auto& [key, over] : d.over_flags) {
    CrossingKey k = key;
    std::swap(k.translate.a, k.translate.b);
    flags[k] = over;
  }
  out.over_flags = std::move(flags);
  return out;
}

// Reverses a strand's traversal; keys renumber segments accordingly.
void reverse_strand(Diagram& d, const std::string& id) {
  const int idx = d.strand_index(id);
  const int n = d.strands[idx].segment_count();
  std::reverse(d.strands[idx].points.begin(), d.strands[idx].points.end());
  std::map<CrossingKey, Over> flags;
  for (const auto& entry : d.over_flags) {
    CrossingKey key = entry.first;
    if (key.a == id) key.segA = n - 1 - key.segA;
    if (key.b == id) key.segB = n - 1 - key.segB;
    flags[key] = entry.second;
  }
  d.over_flags = std::move(flags);
}

void canonicalize_keys(Diagram& d) {
  std::map<CrossingKey, Over> flags;
  for (const auto& entry : d.over_flags) {
    CrossingKey key = entry.first;
    Over over = entry.second;
    if (std::make_pair(key.b, key.segB) < std::make_pair(key.a, key.segA)) {
      std::swap(key.a, key.b);
      std::swap(key.segA, key.segB);
      key.translate = key.translate.negated();
      over = over == Over::First ? Over::Second : Over::First;
    }
    flags[key] = over;
  }
  d.over_flags = std::move(flags);
}

long count_passes(const Diagram& d, int axis) {
  long count = 0;
  for (const Strand& s : d.strands) {
    for (int i = 0; i < s.segment_count(); ++i) {
      const Rational a = axis == 0 ? s.points[i].x : s.points[i].y;
      const Rational b = axis == 0 ? s.points[i + 1].x : s.points[i + 1].y;
      if (a == b) continue;
      count += floor_long(std::max(a, b)) - ceil_long(std::min(a, b)) + 1;
      if (is_integer(a) || is_integer(b)) --count;  // vertex cuts fail validation anyway
    }
  }
  return count;
}

}  // namespace

MixedDiagram to_o_mixed(const Diagram& annular) {
  return translate_to_mixed(annular, Surface::Annulus);
}

MixedDiagram to_h_mixed(const Diagram& toroidal) {
  // Dives are safest crossing as little as possible: when the diagram winds
  // x more than y, translate the transposed diagram (whose roles swap) and
  // transpose back. The fixed templates are mutually transposed, so this
  // only renames and reorients them.
  const long count_x = count_passes(toroidal, 0);
  const long count_y = count_passes(toroidal, 1);
  if (count_x <= count_y || count_y == 0)
    return translate_to_mixed(toroidal, Surface::Torus);

  MixedDiagram inner = translate_to_mixed(transpose_diagram(toroidal), Surface::Torus);
  MixedDiagram out;
  out.source_surface = Surface::Torus;
  out.x_passes = inner.y_passes;
  out.y_passes = inner.x_passes;
  out.channel_writhe = -inner.channel_writhe;  // reflection flips signs
  Diagram d = transpose_diagram(inner.diagram);
  for (Strand& s : d.strands) {
    if (s.fixity == Fixity::FixedH1) {
      s.id = "H2*";
      s.fixity = Fixity::FixedH2;
    } else if (s.fixity == Fixity::FixedH2) {
      s.id = "H1*";
      s.fixity = Fixity::FixedH1;
    }
  }
  std::map<CrossingKey, Over> renamed;
  for (const auto& entry : d.over_flags) {
    CrossingKey key = entry.first;
    if (key.a == "H1") key.a = "H2*";
    else if (key.a == "H2") key.a = "H1*";
    if (key.b == "H1") key.b = "H2*";
    else if (key.b == "H2") key.b = "H1*";
    renamed[key] = entry.second;
  }
  d.over_flags = std::move(renamed);
  reverse_strand(d, "H1*");
  reverse_strand(d, "H2*");
  for (Strand& s : d.strands) {
    if (s.id == "H1*") s.id = "H1";
    if (s.id == "H2*") s.id = "H2";
  }
  std::map<CrossingKey, Over> unstarred;
  for (const auto& entry : d.over_flags) {
    CrossingKey key = entry.first;
    if (key.a == "H1*") key.a = "H1";
    else if (key.a == "H2*") key.a = "H2";
    if (key.b == "H1*") key.b = "H1";
    else if (key.b == "H2*") key.b = "H2";
    unstarred[key] = entry.second;
  }
  d.over_flags = std::move(unstarred);
  canonicalize_keys(d);
  out.diagram = std::move(d);
  require_valid(out.diagram);
  return out;
}

}  // namespace knotoid
