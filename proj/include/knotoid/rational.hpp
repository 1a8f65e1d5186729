#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace knotoid {

// Arbitrary-precision exact arithmetic. All diagram geometry runs on
// rationals; no floating point touches any invariant computation.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text);
std::string rational_string(const Rational& q);

inline long floor_long(const Rational& q) {
  Integer z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return static_cast<long>(z.get_si());
}

inline long ceil_long(const Rational& q) {
  Integer z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return static_cast<long>(z.get_si());
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

struct Point {
  Rational x;
  Rational y;

  Point() : x(0), y(0) {}
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

using Vec = Point;

inline Point operator+(const Point& a, const Point& b) { return Point(a.x + b.x, a.y + b.y); }
inline Point operator-(const Point& a, const Point& b) { return Point(a.x - b.x, a.y - b.y); }
inline Point operator*(const Rational& s, const Point& a) { return Point(s * a.x, s * a.y); }

// z-component of the cross product; sign decides left/right turns.
inline Rational cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }
inline Rational norm_sq(const Vec& a) { return a.x * a.x + a.y * a.y; }

inline Point lerp(const Point& a, const Point& b, const Rational& t) {
  return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
}

// Integer translate of the covering plane.
struct Translate {
  long a = 0;
  long b = 0;

  bool operator==(const Translate& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Translate& o) const { return !(*this == o); }
  bool operator<(const Translate& o) const { return a != o.a ? a < o.a : b < o.b; }
  Translate negated() const { return Translate{-a, -b}; }
};

inline Point shift(const Point& p, const Translate& t) {
  return Point(p.x + t.a, p.y + t.b);
}

}  // namespace knotoid
