#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotoid/geometry.hpp"
#include "knotoid/rational.hpp"

namespace knotoid {

enum class Fixity { Moving, FixedO, FixedH1, FixedH2 };

const char* fixity_label(Fixity f);

struct Strand {
  std::string id;
  bool closed = false;
  Fixity fixity = Fixity::Moving;
  std::vector<Point> points;  // cover coordinates; closed strands repeat the
                              // first point shifted by the homology vector

  bool fixed() const { return fixity != Fixity::Moving; }
  int segment_count() const { return static_cast<int>(points.size()) - 1; }
  Polyline polyline() const { return Polyline{points, closed}; }
  Strand reversed() const;
};

// Canonical name of a quotient double point: segment segA of strand a meets
// segment segB of strand b translated by `translate`. The (strand, segment)
// pairs are ordered, so each double point has exactly one key.
struct CrossingKey {
  std::string a;
  int segA = 0;
  std::string b;
  int segB = 0;
  Translate translate;

  bool operator==(const CrossingKey& o) const {
    return a == o.a && segA == o.segA && b == o.b && segB == o.segB && translate == o.translate;
  }
  bool operator<(const CrossingKey& o) const;
  std::string to_string() const;
};

enum class Over { First, Second };

enum class CrossingKind { MovingMoving, Mixed, FixedFixed };

struct Crossing {
  CrossingKey key;
  Rational t1;       // parameter on the first branch's segment
  Rational t2;       // parameter on the second branch's segment (own frame)
  Point point;       // cover point in the first strand's frame
  Vec dir1;          // direction of the first branch
  Vec dir2;          // direction of the second branch
  CrossingKind kind = CrossingKind::MovingMoving;
  std::optional<Over> over;

  bool smoothable() const { return kind == CrossingKind::MovingMoving; }
  Vec over_dir() const { return over == Over::First ? dir1 : dir2; }
  Vec under_dir() const { return over == Over::First ? dir2 : dir1; }
};

struct Violation {
  std::string code;
  std::string detail;
};

struct Diagram {
  Surface surface = Surface::Plane;
  std::vector<Strand> strands;
  std::map<CrossingKey, Over> over_flags;

  const Strand* find_strand(const std::string& id) const;
  int strand_index(const std::string& id) const;
  const Strand& open_strand() const;
  Point leg() const;
  Point head() const;
  bool has_fixed() const;
  Diagram mirrored() const;  // toggles every over flag
};

// All quotient double points among all strand pairs and self-pairs, in
// canonical key order, with branch data resolved. Deterministic.
std::vector<Crossing> detect_crossings(const Diagram& diagram);

std::vector<Violation> validate(const Diagram& diagram);
void require_valid(const Diagram& diagram);

int crossing_sign(const Crossing& crossing);
int crossing_sign(const Diagram& diagram, const CrossingKey& key);

enum class WritheScope { AllMoving, ExcludeMixed };

long writhe(const Diagram& diagram, WritheScope scope = WritheScope::AllMoving);

// Surface translation; realizes the toroidal moves on the torus and the
// rotation of the annulus. Over flags are transported by matching quotient
// intersection points.
Diagram translate_diagram(const Diagram& diagram, const Rational& dx, const Rational& dy);

struct KinkLocation {
  std::string strand;
  int segment = 0;
  Rational t{1, 2};
};

enum class KinkSide { Left, Right };

// Inserts a small curl with one new self-crossing of the requested sign at
// the given location. Fails with NoRoom when the surgery box is occupied.
Diagram insert_r1_kink(const Diagram& diagram, const KinkLocation& where, int sign,
                       KinkSide side = KinkSide::Left);

// Finds a kink location on the open strand with a free surgery box.
KinkLocation find_free_kink_spot(const Diagram& diagram, int sign,
                                 KinkSide side = KinkSide::Left);

// Canonical fixed geometry for mixed diagrams. O is a convex polyline in a
// reserved band left of the unit square; H is a pair of interlocking
// rectangles in closed braid form right of and above the unit square whose
// two fixed crossings make a positive Hopf link.
Strand o_template();
std::pair<std::vector<Strand>, std::map<CrossingKey, Over>> h_template();

// Probe point inside the disc bounded by the O template.
Point o_anchor();

// Minimum squared feature distance: crossing-to-crossing, crossing-to-vertex,
// crossing-to-endpoint and crossing-to-nonincident-segment, over the quotient.
Rational min_feature_dist_sq(const Diagram& diagram, const std::vector<Crossing>& crossings);

}  // namespace knotoid
