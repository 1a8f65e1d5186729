#include "knotoid/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "knotoid/errors.hpp"

namespace knotoid {

namespace {

long gcd_abs(long a, long b) { return std::gcd(std::abs(a), std::abs(b)); }

void normalize_pq(long& p, long& q) {
  if (p == 0 && q == 0) fail(ErrorCode::BadArgument, "torus class (0,0) is not essential");
  if (gcd_abs(p, q) != 1) fail(ErrorCode::BadArgument, "torus class indices must be coprime");
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
}

}  // namespace

VariableSymbol VariableSymbol::spq(long p, long q) {
  normalize_pq(p, q);
  return {SymKind::Spq, p, q, 0};
}

VariableSymbol VariableSymbol::spql(long p, long q, long l) {
  normalize_pq(p, q);
  if (l <= 0) fail(ErrorCode::BadArgument, "s_{p,q,l} needs a positive component count");
  return {SymKind::Spql, p, q, l};
}

std::string VariableSymbol::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case SymKind::V: os << "v"; break;
    case SymKind::X: os << "x"; break;
    case SymKind::T: os << "t"; break;
    case SymKind::Vm: os << "v_" << i; break;
    case SymKind::Xn: os << "x_" << i; break;
    case SymKind::Tl: os << "t_" << i; break;
    case SymKind::Spq: os << "s_{" << i << "," << j << "}"; break;
    case SymKind::Spql: os << "s_{" << i << "," << j << "," << k << "}"; break;
    case SymKind::RX: os << "X"; break;
    case SymKind::RY: os << "Y"; break;
  }
  return os.str();
}

void Monomial::insert(const VariableSymbol& sym, long exp) {
  if (exp == 0) return;
  auto it = std::lower_bound(symbols.begin(), symbols.end(), sym,
                             [](const auto& entry, const VariableSymbol& s) { return entry.first < s; });
  if (it != symbols.end() && it->first == sym) {
    it->second += exp;
    if (it->second == 0) symbols.erase(it);
  } else {
    symbols.insert(it, {sym, exp});
  }
}

bool Monomial::operator<(const Monomial& o) const {
  if (a_exp != o.a_exp) return a_exp > o.a_exp;  // print order: high A powers first
  return symbols < o.symbols;
}

LaurentPoly LaurentPoly::constant(Integer c) {
  LaurentPoly p;
  p.add_term(Monomial{}, c);
  return p;
}

LaurentPoly LaurentPoly::a_power(long e, Integer coeff) {
  LaurentPoly p;
  Monomial m;
  m.a_exp = e;
  p.add_term(m, coeff);
  return p;
}

LaurentPoly LaurentPoly::symbol(const VariableSymbol& sym, long exp) {
  LaurentPoly p;
  Monomial m;
  m.insert(sym, exp);
  p.add_term(m, 1);
  return p;
}

LaurentPoly LaurentPoly::monomial(Monomial m, Integer coeff) {
  LaurentPoly p;
  p.add_term(m, coeff);
  return p;
}

void LaurentPoly::add_term(const Monomial& m, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  out += o;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      m.a_exp += mb.a_exp;
      for (const auto& [sym, e] : mb.symbols) m.insert(sym, e);
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::pow(long e) const {
  if (e == 0) return one();
  if (e < 0) {
    if (terms_.size() != 1) fail(ErrorCode::NonInvertible, "negative power of a multi-term polynomial");
    const auto& [m, c] = *terms_.begin();
    if (c != 1 && c != -1)
      fail(ErrorCode::NonInvertible, "negative power needs a unit coefficient");
    Monomial inv;
    inv.a_exp = m.a_exp * e;
    for (const auto& [sym, ex] : m.symbols) inv.insert(sym, ex * e);
    const Integer coeff = (c == -1 && (e % 2 != 0)) ? Integer(-1) : Integer(1);
    return monomial(inv, coeff);
  }
  LaurentPoly out = one();
  LaurentPoly base = *this;
  long n = e;
  while (n > 0) {
    if (n & 1) out = out * base;
    base = base * base;
    n >>= 1;
  }
  return out;
}

Integer LaurentPoly::eval_trivial() const {
  Integer total = 0;
  for (const auto& [m, c] : terms_) total += c;
  return total;
}

LaurentPoly d_poly() {
  return LaurentPoly::a_power(2, -1) + LaurentPoly::a_power(-2, -1);
}

LaurentPoly substitute_by(const LaurentPoly& p,
                          const std::function<LaurentPoly(const VariableSymbol&)>& rule) {
  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::a_power(m.a_exp, c);
    for (const auto& [sym, e] : m.symbols) {
      LaurentPoly repl = rule(sym);
      term = term * repl.pow(e);
    }
    out += term;
  }
  return out;
}

LaurentPoly substitute(const LaurentPoly& p, const SubstitutionMap& rules) {
  return substitute_by(p, [&rules](const VariableSymbol& sym) {
    auto it = rules.find(sym);
    return it == rules.end() ? LaurentPoly::symbol(sym) : it->second;
  });
}

std::string canonical_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Integer abs_c = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    if (abs_c != 1 || (m.a_exp == 0 && m.symbols.empty()))
      factors.push_back(abs_c.get_str());
    if (m.a_exp != 0) {
      std::string f = "A";
      if (m.a_exp != 1) f += "^" + std::to_string(m.a_exp);
      factors.push_back(f);
    }
    for (const auto& [sym, e] : m.symbols) {
      std::string f = sym.to_string();
      if (e != 1) f += "^" + std::to_string(e);
      factors.push_back(f);
    }
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) os << " ";
      os << factors[i];
    }
  }
  return os.str();
}

namespace {

struct PolyParser {
  const std::string& text;
  size_t pos = 0;

  explicit PolyParser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long parse_long() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail(ErrorCode::ParseError, "expected integer in polynomial");
    return std::stol(text.substr(start, pos - start));
  }

  long parse_exponent() { return eat('^') ? parse_long() : 1; }

  // One multiplicative factor: integer, A-power, or symbol power.
  bool parse_factor(Monomial& m, Integer& coeff) {
    skip_ws();
    if (pos >= text.size()) return false;
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      coeff *= Integer(text.substr(start, pos - start));
      return true;
    }
    if (c == 'A') {
      ++pos;
      m.a_exp += parse_exponent();
      return true;
    }
    if (c == 'X') {
      ++pos;
      m.insert(VariableSymbol::rx(), parse_exponent());
      return true;
    }
    if (c == 'Y') {
      ++pos;
      m.insert(VariableSymbol::ry(), parse_exponent());
      return true;
    }
    if (c == 'v' || c == 'x' || c == 't') {
      ++pos;
      if (pos < text.size() && text[pos] == '_') {
        ++pos;
        long idx = parse_long();
        VariableSymbol sym = c == 'v' ? VariableSymbol::vm(idx)
                           : c == 'x' ? VariableSymbol::xn(idx)
                                      : VariableSymbol::tl(idx);
        m.insert(sym, parse_exponent());
      } else {
        VariableSymbol sym = c == 'v' ? VariableSymbol::v()
                           : c == 'x' ? VariableSymbol::x()
                                      : VariableSymbol::t();
        m.insert(sym, parse_exponent());
      }
      return true;
    }
    if (c == 's') {
      ++pos;
      if (!eat('_') || !eat('{')) fail(ErrorCode::ParseError, "malformed s symbol");
      long p = parse_long();
      if (!eat(',')) fail(ErrorCode::ParseError, "malformed s symbol");
      long q = parse_long();
      if (eat(',')) {
        long l = parse_long();
        if (!eat('}')) fail(ErrorCode::ParseError, "malformed s symbol");
        m.insert(VariableSymbol::spql(p, q, l), parse_exponent());
      } else {
        if (!eat('}')) fail(ErrorCode::ParseError, "malformed s symbol");
        m.insert(VariableSymbol::spq(p, q), parse_exponent());
      }
      return true;
    }
    return false;
  }

  LaurentPoly parse() {
    LaurentPoly out;
    skip_ws();
    bool expect_term = true;
    int sign = 1;
    while (pos < text.size()) {
      skip_ws();
      if (pos >= text.size()) break;
      if (text[pos] == '+') {
        ++pos;
        sign = 1;
        expect_term = true;
        continue;
      }
      if (text[pos] == '-') {
        ++pos;
        sign = -1;
        expect_term = true;
        continue;
      }
      if (!expect_term) fail(ErrorCode::ParseError, "expected + or - between terms");
      Monomial m;
      Integer coeff = sign;
      bool any = false;
      while (parse_factor(m, coeff)) any = true;
      if (!any) fail(ErrorCode::ParseError, "empty term in polynomial");
      out.add_term(m, coeff);
      expect_term = false;
      sign = 1;
    }
    if (expect_term && !out.is_zero()) fail(ErrorCode::ParseError, "dangling sign");
    return out;
  }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text) {
  std::string trimmed = text;
  if (trimmed == "0") return LaurentPoly::zero();
  PolyParser parser(trimmed);
  return parser.parse();
}

}  // namespace knotoid
