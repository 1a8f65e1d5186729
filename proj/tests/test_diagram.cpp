#include <doctest.h>

#include <map>
#include <set>

#include "knotoid/bracket.hpp"
#include "knotoid/diagram.hpp"
#include "knotoid/errors.hpp"
#include "knotoid/examples.hpp"
#include "knotoid/io.hpp"

using namespace knotoid;

namespace {

Diagram ex(const std::string& name) { return example_diagram(name); }

std::multiset<std::pair<int, int>> sign_kind_multiset(const Diagram& d) {
  std::multiset<std::pair<int, int>> out;
  for (const Crossing& c : detect_crossings(d))
    out.insert({crossing_sign(c), static_cast<int>(c.kind)});
  return out;
}

}  // namespace

TEST_CASE("validate: trivial knotoid is fine") {
  CHECK(validate(ex("trivial")).empty());
  CHECK(validate(ex("K_p")).empty());
  CHECK(validate(ex("L_t")).empty());
}

TEST_CASE("validate: crossing through a shared vertex is degenerate") {
  Diagram d = parse_diagram(
      "surface plane\n"
      "strand k open\n"
      "pt 0 0\n"
      "pt 2 0\n"
      "strand c closed\n"
      "pt 1 -1\n"
      "pt 2 -1\n"  // the vertex below
      "pt 1 0\n"   // vertex exactly on the open strand
      "pt 0 -1\n"
      "pt 1 -1\n");
  auto violations = validate(d);
  REQUIRE_FALSE(violations.empty());
  CHECK(violations.front().code == "DegenerateIntersection");
}

TEST_CASE("validate: missing over flag is reported") {
  Diagram d = ex("K_p");
  d.over_flags.clear();
  auto violations = validate(d);
  REQUIRE_FALSE(violations.empty());
  bool found = false;
  for (const auto& v : violations)
    if (v.code == "UnassignedCrossing") found = true;
  CHECK(found);
}

TEST_CASE("detect crossings: counts and determinism") {
  CHECK(detect_crossings(ex("trivial")).empty());
  CHECK(detect_crossings(ex("K_p")).size() == 2);
  // two nested circles around the arc cross nothing
  CHECK(detect_crossings(ex("nested-m(2)")).size() == 0);

  // serialize -> parse -> detect reproduces the keys
  const Diagram d = ex("L_a");
  const Diagram reparsed = parse_diagram(serialize_diagram(d));
  auto a = detect_crossings(d);
  auto b = detect_crossings(reparsed);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].key == b[i].key);
}

TEST_CASE("crossing sign convention") {
  // over heading +x, under heading +y: rotating the under branch ccw gives
  // -x, anti-parallel to the over branch, so the sign is -1.
  Crossing c;
  c.dir1 = Vec(rat(1), rat(0));
  c.dir2 = Vec(rat(0), rat(1));
  c.over = Over::First;
  CHECK(crossing_sign(c) == -1);
  c.over = Over::Second;
  CHECK(crossing_sign(c) == 1);
  c.dir2 = Vec(rat(0), rat(-1));
  c.over = Over::First;
  CHECK(crossing_sign(c) == 1);
}

TEST_CASE("crossing sign flips under strand reversal") {
  Diagram d = ex("r2-pair-5b");  // arc pokes over a circle
  auto before = detect_crossings(d);
  REQUIRE(before.size() == 2);
  std::map<std::string, int> signs_before;
  for (const Crossing& c : before) signs_before[c.key.to_string()] = crossing_sign(c);

  // reverse the closed strand c; keys keep segment indices via re-detect
  const int idx = d.strand_index("c");
  Diagram reversed = d;
  reversed.strands[idx] = d.strands[idx].reversed();
  // re-assign flags by transporting: same over branch geometrically; for this
  // fixture the arc is over at both crossings, so flags stay "second".
  reversed.over_flags.clear();
  for (const Crossing& c : detect_crossings(reversed)) reversed.over_flags[c.key] = Over::Second;
  for (const Crossing& c : detect_crossings(reversed)) {
    // same quotient points, opposite sign
    bool matched = false;
    for (const Crossing& o : before)
      if (o.point == c.point) {
        CHECK(crossing_sign(c) == -signs_before[o.key.to_string()]);
        matched = true;
      }
    CHECK(matched);
  }
}

TEST_CASE("writhe") {
  CHECK(writhe(ex("trivial")) == 0);
  CHECK(writhe(ex("K_p")) == 2);
  CHECK(writhe(ex("L_p")) == 3);
  CHECK(writhe(ex("L_a")) == 3);
  CHECK(writhe(ex("L_t")) == -2);

  // writhe is the sum of crossing signs
  long total = 0;
  for (const Crossing& c : detect_crossings(ex("K_p"))) total += crossing_sign(c);
  CHECK(total == writhe(ex("K_p")));

  // kink raises writhe by its sign
  const Diagram kinked = insert_r1_kink(ex("trivial"), find_free_kink_spot(ex("trivial"), 1), 1);
  CHECK(writhe(kinked) == 1);
}

TEST_CASE("mirror negates writhe") {
  for (const char* name : {"K_p", "L_p", "L_a", "L_t"}) {
    const Diagram d = ex(name);
    CHECK(writhe(d.mirrored()) == -writhe(d));
  }
}

TEST_CASE("translate: full period is invisible") {
  const Diagram d = ex("K_t");
  const Diagram moved = translate_diagram(d, rat(1), rat(0));
  CHECK(bracket(moved, BracketFlavor::Toroidal) == bracket(d, BracketFlavor::Toroidal));
}

TEST_CASE("translate preserves the crossing multiset") {
  const Diagram d = ex("L_t");
  const Diagram moved = translate_diagram(d, rat(1, 3), rat(1, 2));
  CHECK(sign_kind_multiset(moved) == sign_kind_multiset(d));
  CHECK(bracket(moved, BracketFlavor::Toroidal) == bracket(d, BracketFlavor::Toroidal));
}

TEST_CASE("translate: vertical moves are rejected on the annulus") {
  CHECK_THROWS_AS(translate_diagram(ex("L_a"), rat(0), rat(1, 4)), Error);
}

TEST_CASE("kink insertion: bracket factor and crossing count") {
  const Diagram d = ex("trivial");
  const Diagram plus = insert_r1_kink(d, find_free_kink_spot(d, 1), 1);
  CHECK(detect_crossings(plus).size() == 1);
  CHECK(writhe(plus) == 1);
  // hand expansion of the single kink: A*d + A^{-1} = -A^3
  CHECK(bracket(plus, BracketFlavor::Planar) == LaurentPoly::a_power(3, -1));

  const Diagram minus = insert_r1_kink(d, find_free_kink_spot(d, -1), -1);
  CHECK(bracket(minus, BracketFlavor::Planar) == LaurentPoly::a_power(-3, -1));
}

TEST_CASE("kink pair of opposite signs preserves jones") {
  const Diagram d = ex("K_p");
  const Diagram once = insert_r1_kink(d, find_free_kink_spot(d, 1), 1);
  const Diagram twice = insert_r1_kink(once, find_free_kink_spot(once, -1), -1);
  CHECK(writhe(twice) == writhe(d));
  CHECK(jones(twice, BracketFlavor::Planar) == jones(d, BracketFlavor::Planar));
}

TEST_CASE("kink insertion refuses an occupied disc") {
  // A circle hugging the middle of the trivial arc leaves no room there.
  Diagram d = parse_diagram(
      "surface plane\n"
      "strand c closed\n"
      "pt 4/10 -1/10\n"
      "pt 6/10 -1/10\n"
      "pt 6/10 11/10\n"
      "pt 4/10 11/10\n"
      "pt 4/10 -1/10\n"
      "strand k open\n"
      "pt 0 1/2\n"
      "pt 1 1/2\n");
  require_valid(d);
  CHECK_THROWS_AS(insert_r1_kink(d, KinkLocation{"k", 0, rat(1, 2)}, 1), Error);
}

TEST_CASE("templates") {
  const Strand o = o_template();
  CHECK(quotient_intersections(o.polyline(), o.polyline(), Surface::Plane, true).empty());

  auto [h_strands, h_flags] = h_template();
  CHECK(h_strands.size() == 2);
  auto hits = quotient_intersections(h_strands[0].polyline(), h_strands[1].polyline(),
                                     Surface::Plane, false);
  CHECK(hits.size() == 2);
  CHECK(h_flags.size() == 2);

  // both fixed crossings carry the same sign: a positive Hopf link
  Diagram d = ex("h-template-trivial");
  require_valid(d);
  std::vector<int> signs;
  for (const Crossing& c : detect_crossings(d))
    if (c.kind == CrossingKind::FixedFixed) signs.push_back(crossing_sign(c));
  REQUIRE(signs.size() == 2);
  CHECK(signs[0] == signs[1]);
  CHECK(signs[0] == 1);

  // fixed template plus the trivial knotoid evaluates to 1
  CHECK(bracket(d, BracketFlavor::HMixed) == LaurentPoly::one());
  CHECK(bracket(ex("o-template-trivial"), BracketFlavor::OMixed) == LaurentPoly::one());
}
