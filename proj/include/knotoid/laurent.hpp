#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knotoid/rational.hpp"

namespace knotoid {

// Loop-value symbols appearing in the bracket flavors. Finite-flavor
// symbols v, x, t carry integer exponents inside monomials; the indexed
// families carry their census index in the symbol itself. Spq/Spql indices
// are stored normalized: q > 0, or q == 0 and p > 0.
enum class SymKind : int {
  V = 0,    // nesting unknots, finite flavor
  X = 1,    // inner essential unknots, finite annular flavor
  T = 2,    // outer essential unknots, finite annular flavor
  Vm = 3,   // v_m
  Xn = 4,   // x_n
  Tl = 5,   // t_l
  Spq = 6,  // s_{p,q}
  Spql = 7, // s_{p,q,l}
  RX = 8,   // reduced toroidal X
  RY = 9,   // reduced toroidal Y
};

struct VariableSymbol {
  SymKind kind = SymKind::V;
  long i = 0;
  long j = 0;
  long k = 0;

  static VariableSymbol v() { return {SymKind::V, 0, 0, 0}; }
  static VariableSymbol x() { return {SymKind::X, 0, 0, 0}; }
  static VariableSymbol t() { return {SymKind::T, 0, 0, 0}; }
  static VariableSymbol vm(long m) { return {SymKind::Vm, m, 0, 0}; }
  static VariableSymbol xn(long n) { return {SymKind::Xn, n, 0, 0}; }
  static VariableSymbol tl(long l) { return {SymKind::Tl, l, 0, 0}; }
  static VariableSymbol spq(long p, long q);   // normalizes (p,q) ~ (-p,-q)
  static VariableSymbol spql(long p, long q, long l);
  static VariableSymbol rx() { return {SymKind::RX, 0, 0, 0}; }
  static VariableSymbol ry() { return {SymKind::RY, 0, 0, 0}; }

  bool operator==(const VariableSymbol& o) const {
    return kind == o.kind && i == o.i && j == o.j && k == o.k;
  }
  bool operator<(const VariableSymbol& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    return k < o.k;
  }
  std::string to_string() const;
};

// A power of A times a product of symbol powers. Symbol exponents are
// nonzero and the list is sorted, so equal monomials compare equal.
struct Monomial {
  long a_exp = 0;
  std::vector<std::pair<VariableSymbol, long>> symbols;

  void insert(const VariableSymbol& sym, long exp);
  bool operator==(const Monomial& o) const {
    return a_exp == o.a_exp && symbols == o.symbols;
  }
  bool operator<(const Monomial& o) const;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return constant(1); }
  static LaurentPoly constant(Integer c);
  static LaurentPoly a_power(long e, Integer coeff = 1);
  static LaurentPoly symbol(const VariableSymbol& sym, long exp = 1);
  static LaurentPoly monomial(Monomial m, Integer coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::map<Monomial, Integer>& terms() const { return terms_; }

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  // Integer power; negative exponents require a single-monomial base with
  // unit coefficient sign handled exactly (coefficient must be +-1 to stay
  // in the integer Laurent ring).
  LaurentPoly pow(long e) const;

  // Substitute A = 1 and every symbol = 1; handy for small sanity checks.
  Integer eval_trivial() const;

  void add_term(const Monomial& m, const Integer& coeff);

 private:
  std::map<Monomial, Integer> terms_;
};

// d = -A^2 - A^{-2}, the null-homotopic loop value, always expanded in A.
LaurentPoly d_poly();

// Simultaneous substitution of symbols by polynomials; unlisted symbols
// are unchanged. symbol^e maps to replacement^e (monomial needed if e<0).
using SubstitutionMap = std::map<VariableSymbol, LaurentPoly>;
LaurentPoly substitute(const LaurentPoly& p, const SubstitutionMap& rules);

// Like substitute but keyed per symbol occurrence, for the indexed-family
// maps (v_m -> d^m and friends).
LaurentPoly substitute_by(const LaurentPoly& p,
                          const std::function<LaurentPoly(const VariableSymbol&)>& rule);

std::string canonical_string(const LaurentPoly& p);
LaurentPoly parse_poly(const std::string& text);

}  // namespace knotoid
