#include "knotoid/examples.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "knotoid/errors.hpp"
#include "knotoid/io.hpp"

namespace knotoid {

namespace {

// The two-crossing knotoid of the worked golden examples, drawn inside the
// open unit square so the same geometry works on every surface.
std::string k_body() {
  return "strand k open\n"
         "pt 1/8 2/5\n"
         "pt 7/8 2/5\n"
         "pt 7/8 4/5\n"
         "pt 1/4 4/5\n"
         "pt 1/4 1/5\n"
         "pt 1/2 1/5\n"
         "pt 1/2 3/5\n"
         "over k.0 k.3 0 0 first\n"
         "over k.0 k.5 0 0 second\n";
}

const std::map<std::string, std::string>& fixture_texts() {
  static const std::map<std::string, std::string> fixtures = {
      {"trivial",
       "surface plane\n"
       "strand k open\n"
       "pt 1/5 2/5\n"
       "pt 4/5 3/5\n"},
      {"trivial-annulus",
       "surface annulus\n"
       "strand k open\n"
       "pt 1/5 2/5\n"
       "pt 4/5 3/5\n"},
      {"trivial-torus",
       "surface torus\n"
       "strand k open\n"
       "pt 1/5 2/5\n"
       "pt 4/5 3/5\n"},
      {"K_p", "surface plane\n" + k_body()},
      {"K_a", "surface annulus\n" + k_body()},
      {"K_t", "surface torus\n" + k_body()},
      // Multi-knotoid with a nesting loop census: a curl around the leg
      // threaded through a small circle.
      {"L_p",
       "surface plane\n"
       "strand c closed\n"
       "pt -7/4 -1/4\n"
       "pt -1/4 -1/4\n"
       "pt -1/4 1/4\n"
       "pt -7/4 1/4\n"
       "pt -7/4 -1/4\n"
       "strand k open\n"
       "pt 0 0\n"
       "pt 6 0\n"
       "pt 6 1\n"
       "pt -1 1\n"
       "pt -1 -1\n"
       "pt 4 -1\n"
       "pt 4 1/2\n"
       "over c.0 k.3 0 0 first\n"
       "over c.2 k.3 0 0 second\n"
       "over k.0 k.5 0 0 second\n"},
      // Annular counterpart: the curl wraps the annulus once.
      {"L_a",
       "surface annulus\n"
       "strand c closed\n"
       "pt 1/20 9/20\n"
       "pt 3/20 9/20\n"
       "pt 3/20 11/20\n"
       "pt 1/20 11/20\n"
       "pt 1/20 9/20\n"
       "strand k open\n"
       "pt 9/20 1/10\n"
       "pt 9/20 11/20\n"
       "pt 1/2 3/5\n"
       "pt 3/5 1/2\n"
       "pt 31/20 1/2\n"
       "over c.1 k.3 -1 0 first\n"
       "over c.3 k.3 -1 0 second\n"
       "over k.0 k.3 -1 0 first\n"},
      // Toroidal counterpart: a meridional curl threaded by a longitude.
      {"L_t",
       "surface torus\n"
       "strand c closed\n"
       "pt -1/8 7/10\n"
       "pt 7/8 7/10\n"
       "strand k open\n"
       "pt 3/10 3/10\n"
       "pt 3/5 3/10\n"
       "pt 3/5 7/20\n"
       "pt 1/2 11/20\n"
       "pt 1/2 7/5\n"
       "over c.0 k.3 0 0 first\n"
       "over k.0 k.3 0 -1 first\n"},
      {"essential-circle-annulus",
       "surface annulus\n"
       "strand c closed\n"
       "pt 1/16 3/10\n"
       "pt 17/16 3/10\n"
       "strand k open\n"
       "pt 2/5 1/2\n"
       "pt 3/5 1/2\n"},
      {"inner-outer-annulus",
       "surface annulus\n"
       "strand a closed\n"
       "pt 1/16 3/10\n"
       "pt 17/16 3/10\n"
       "strand b closed\n"
       "pt 1/16 7/10\n"
       "pt 17/16 7/10\n"
       "strand k open\n"
       "pt 2/5 1/2\n"
       "pt 3/5 1/2\n"},
      // A null-homotopic circle straddling the annulus cut line, nesting
      // the leg; exercises the wrap-aware m census and the O translator.
      {"nested-cut-annulus",
       "surface annulus\n"
       "strand c closed\n"
       "pt -1/10 2/5\n"
       "pt 1/10 1/3\n"
       "pt 1/10 3/5\n"
       "pt -1/10 13/20\n"
       "pt -1/10 2/5\n"
       "strand k open\n"
       "pt 1/50 1/2\n"
       "pt 1/25 21/40\n"},
      // Fake-forbidden-move pair: the head-adjacent strand is pushed across
      // the long arc by an R2 move plus isotopy.
      {"r2-pair-1a",
       "surface plane\n"
       "strand k open\n"
       "pt 0 0\n"
       "pt 6 0\n"
       "pt 6 2\n"
       "pt 3 2\n"
       "pt 3 1\n"},
      {"r2-pair-1b",
       "surface plane\n"
       "strand k open\n"
       "pt 0 0\n"
       "pt 6 0\n"
       "pt 6 2\n"
       "pt 3 2\n"
       "pt 3 -1\n"
       "pt 2 -1\n"
       "pt 2 1\n"
       "over k.0 k.3 0 0 first\n"
       "over k.0 k.5 0 0 first\n"},
      {"r2-pair-2a", "surface plane\n" + k_body()},
      {"r2-pair-2b",
       "surface plane\n"
       "strand k open\n"
       "pt 1/8 2/5\n"
       "pt 7/8 2/5\n"
       "pt 7/8 4/5\n"
       "pt 1/4 4/5\n"
       "pt 1/4 1/5\n"
       "pt 3/10 1/5\n"
       "pt 3/10 1/2\n"
       "pt 7/20 1/2\n"
       "pt 7/20 1/5\n"
       "pt 1/2 1/5\n"
       "pt 1/2 3/5\n"
       "over k.0 k.3 0 0 first\n"
       "over k.0 k.5 0 0 first\n"
       "over k.0 k.7 0 0 first\n"
       "over k.0 k.9 0 0 second\n"},
      {"r2-pair-3a",
       "surface annulus\n"
       "strand c closed\n"
       "pt 1/16 3/10\n"
       "pt 17/16 3/10\n"
       "strand k open\n"
       "pt 2/5 1/2\n"
       "pt 3/5 1/2\n"},
      {"r2-pair-3b",
       "surface annulus\n"
       "strand c closed\n"
       "pt 1/16 3/10\n"
       "pt 17/16 3/10\n"
       "strand k open\n"
       "pt 2/5 1/2\n"
       "pt 9/20 1/5\n"
       "pt 11/20 1/5\n"
       "pt 3/5 1/2\n"
       "over c.0 k.0 0 0 second\n"
       "over c.0 k.2 0 0 second\n"},
      {"r2-pair-4a",
       "surface torus\n"
       "strand c closed\n"
       "pt 1/16 7/10\n"
       "pt 17/16 7/10\n"
       "strand k open\n"
       "pt 2/5 1/2\n"
       "pt 3/5 1/2\n"},
      {"r2-pair-4b",
       "surface torus\n"
       "strand c closed\n"
       "pt 1/16 7/10\n"
       "pt 17/16 7/10\n"
       "strand k open\n"
       "pt 2/5 1/2\n"
       "pt 9/20 4/5\n"
       "pt 11/20 4/5\n"
       "pt 3/5 1/2\n"
       "over c.0 k.0 0 0 second\n"
       "over c.0 k.2 0 0 second\n"},
      {"r2-pair-5a",
       "surface plane\n"
       "strand c closed\n"
       "pt 1/4 1/4\n"
       "pt 3/4 1/4\n"
       "pt 3/4 3/4\n"
       "pt 1/4 3/4\n"
       "pt 1/4 1/4\n"
       "strand k open\n"
       "pt 2/5 1/2\n"
       "pt 3/5 1/2\n"},
      {"r2-pair-5b",
       "surface plane\n"
       "strand c closed\n"
       "pt 1/4 1/4\n"
       "pt 3/4 1/4\n"
       "pt 3/4 3/4\n"
       "pt 1/4 3/4\n"
       "pt 1/4 1/4\n"
       "strand k open\n"
       "pt 2/5 1/2\n"
       "pt 4/5 2/5\n"
       "pt 4/5 3/5\n"
       "pt 3/5 1/2\n"
       "over c.1 k.0 0 0 second\n"
       "over c.1 k.2 0 0 second\n"},
      {"o-template-trivial",
       "surface plane\n"
       "template O\n"
       "strand k open\n"
       "pt 1/5 2/5\n"
       "pt 4/5 3/5\n"},
      {"h-template-trivial",
       "surface plane\n"
       "template H\n"
       "strand k open\n"
       "pt 1/5 2/5\n"
       "pt 4/5 3/5\n"},
  };
  return fixtures;
}

// pq-curve(p,q): the straight (p,q)-diagonal through a generic basepoint,
// plus a tiny trivial arc halfway between neighbouring line copies.
std::string pq_curve_text(long p, long q) {
  if (p == 0 && q == 0) fail(ErrorCode::UnknownExample, "pq-curve(0,0)");
  if (std::gcd(std::abs(p), std::abs(q)) != 1)
    fail(ErrorCode::UnknownExample, "pq-curve needs coprime indices");
  const Point base(rat(1, 16), rat(1, 11));
  const Rational norm = Rational(p) * p + Rational(q) * q;
  const Point perp(Rational(q) / (2 * norm), Rational(-p) / (2 * norm));
  const Point mid = base + perp;
  const Point tangent(Rational(p) / (100 * norm), Rational(q) / (100 * norm));
  std::ostringstream os;
  os << "surface torus\n";
  os << "strand c closed\n";
  os << "pt " << rational_string(base.x) << " " << rational_string(base.y) << "\n";
  os << "pt " << rational_string(base.x + p) << " " << rational_string(base.y + q) << "\n";
  os << "strand k open\n";
  os << "pt " << rational_string(mid.x - tangent.x) << " " << rational_string(mid.y - tangent.y)
     << "\n";
  os << "pt " << rational_string(mid.x + tangent.x) << " " << rational_string(mid.y + tangent.y)
     << "\n";
  return os.str();
}

// nested-m(m): the trivial knotoid inside m concentric squares.
std::string nested_text(long m) {
  if (m < 0) fail(ErrorCode::UnknownExample, "nested-m needs m >= 0");
  std::ostringstream os;
  os << "surface plane\n";
  for (long i = 1; i <= m; ++i) {
    os << "strand c" << i << " closed\n";
    os << "pt -" << i << " -" << i << "\n";
    os << "pt " << i << " -" << i << "\n";
    os << "pt " << i << " " << i << "\n";
    os << "pt -" << i << " " << i << "\n";
    os << "pt -" << i << " -" << i << "\n";
  }
  os << "strand k open\n";
  os << "pt -1/3 0\n";
  os << "pt 1/3 1/5\n";
  return os.str();
}

bool parse_parametric(const std::string& name, const std::string& prefix,
                      std::vector<long>& args) {
  if (name.rfind(prefix + "(", 0) != 0 || name.back() != ')') return false;
  const std::string inner = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  std::istringstream is(inner);
  std::string piece;
  while (std::getline(is, piece, ',')) {
    try {
      args.push_back(std::stol(piece));
    } catch (...) {
      fail(ErrorCode::UnknownExample, "bad parameter in '" + name + "'");
    }
  }
  return true;
}

}  // namespace

std::string example_text(const std::string& name) {
  const auto& fixtures = fixture_texts();
  auto it = fixtures.find(name);
  if (it != fixtures.end()) return it->second;
  std::vector<long> args;
  if (parse_parametric(name, "pq-curve", args)) {
    if (args.size() != 2) fail(ErrorCode::UnknownExample, "pq-curve wants (p,q)");
    return pq_curve_text(args[0], args[1]);
  }
  args.clear();
  if (parse_parametric(name, "nested-m", args)) {
    if (args.size() != 1) fail(ErrorCode::UnknownExample, "nested-m wants (m)");
    return nested_text(args[0]);
  }
  fail(ErrorCode::UnknownExample, "no example named '" + name + "'");
}

Diagram example_diagram(const std::string& name) { return parse_diagram(example_text(name)); }

std::vector<std::string> example_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : fixture_texts()) names.push_back(name);
  names.push_back("pq-curve(p,q)");
  names.push_back("nested-m(m)");
  return names;
}

std::string load_diagram_text(const std::string& path_or_uri) {
  const std::string scheme = "examples://";
  if (path_or_uri.rfind(scheme, 0) == 0) return example_text(path_or_uri.substr(scheme.size()));
  std::ifstream in(path_or_uri);
  if (!in) fail(ErrorCode::BadArgument, "cannot open '" + path_or_uri + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace knotoid
