#include "knotoid/io.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include "knotoid/errors.hpp"
#include "knotoid/state.hpp"

namespace knotoid {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rational q{Integer(text)};
      return q;
    }
    const Integer num(text.substr(0, slash));
    const Integer den(text.substr(slash + 1));
    if (den <= 0) fail(ErrorCode::ParseError, "denominator must be positive in '" + text + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::ParseError, "bad rational '" + text + "'");
  }
}

std::string rational_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream is(line);
  std::string token;
  while (is >> token) {
    if (token[0] == '#') break;
    tokens.push_back(token);
  }
  return tokens;
}

std::pair<std::string, int> parse_branch(const std::string& token, int line_no) {
  const auto dotpos = token.rfind('.');
  if (dotpos == std::string::npos || dotpos == 0 || dotpos + 1 == token.size())
    fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected <strand>.<segment>");
  return {token.substr(0, dotpos), std::stoi(token.substr(dotpos + 1))};
}

}  // namespace

Diagram parse_diagram(const std::string& text) {
  Diagram diagram;
  bool surface_seen = false;
  Strand* current = nullptr;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& cmd = tokens[0];
    const auto want = [&](size_t n) {
      if (tokens.size() != n)
        fail(ErrorCode::ParseError,
             "line " + std::to_string(line_no) + ": '" + cmd + "' expects " + std::to_string(n - 1) +
                 " arguments");
    };
    if (cmd == "surface") {
      want(2);
      if (tokens[1] == "plane") diagram.surface = Surface::Plane;
      else if (tokens[1] == "annulus") diagram.surface = Surface::Annulus;
      else if (tokens[1] == "torus") diagram.surface = Surface::Torus;
      else fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unknown surface");
      surface_seen = true;
    } else if (cmd == "strand") {
      if (tokens.size() != 3 && tokens.size() != 5)
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad strand header");
      Strand s;
      s.id = tokens[1];
      if (tokens[2] == "open") s.closed = false;
      else if (tokens[2] == "closed") s.closed = true;
      else fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": open or closed?");
      if (tokens.size() == 5) {
        if (tokens[3] != "fixed")
          fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'fixed'");
        if (tokens[4] == "O") s.fixity = Fixity::FixedO;
        else if (tokens[4] == "H1") s.fixity = Fixity::FixedH1;
        else if (tokens[4] == "H2") s.fixity = Fixity::FixedH2;
        else fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": fixed label?");
      }
      diagram.strands.push_back(std::move(s));
      current = &diagram.strands.back();
    } else if (cmd == "pt") {
      want(3);
      if (!current)
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": pt before any strand");
      current->points.push_back(Point(parse_rational(tokens[1]), parse_rational(tokens[2])));
    } else if (cmd == "over") {
      want(6);
      auto [ida, sega] = parse_branch(tokens[1], line_no);
      auto [idb, segb] = parse_branch(tokens[2], line_no);
      CrossingKey key{ida, sega, idb, segb,
                      Translate{std::stol(tokens[3]), std::stol(tokens[4])}};
      Over over;
      if (tokens[5] == "first") over = Over::First;
      else if (tokens[5] == "second") over = Over::Second;
      else fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": first or second?");
      diagram.over_flags[key] = over;
      current = nullptr;
    } else if (cmd == "template") {
      want(2);
      if (tokens[1] == "O") {
        diagram.strands.push_back(o_template());
      } else if (tokens[1] == "H") {
        auto [strands, flags] = h_template();
        for (Strand& s : strands) diagram.strands.push_back(std::move(s));
        for (const auto& [key, over] : flags) diagram.over_flags[key] = over;
      } else {
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": template O or H");
      }
      current = nullptr;
    } else {
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unknown directive '" + cmd + "'");
    }
  }
  if (!surface_seen) fail(ErrorCode::ParseError, "missing surface line");
  return diagram;
}

std::string serialize_diagram(const Diagram& diagram) {
  std::ostringstream os;
  os << "surface " << surface_name(diagram.surface) << "\n";
  for (const Strand& s : diagram.strands) {
    os << "strand " << s.id << " " << (s.closed ? "closed" : "open");
    if (s.fixed()) os << " fixed " << fixity_label(s.fixity);
    os << "\n";
    for (const Point& p : s.points)
      os << "pt " << rational_string(p.x) << " " << rational_string(p.y) << "\n";
  }
  for (const auto& [key, over] : diagram.over_flags) {
    os << "over " << key.a << "." << key.segA << " " << key.b << "." << key.segB << " "
       << key.translate.a << " " << key.translate.b << " "
       << (over == Over::First ? "first" : "second") << "\n";
  }
  return os.str();
}

namespace {

double approx(const Rational& q) { return q.get_d(); }

struct SvgPath {
  std::vector<std::pair<double, double>> points;
  bool fixed = false;
};

// Splits a strand into drawable fundamental-domain runs (annulus/torus) or
// returns it unchanged (plane). Display only; invariants never touch this.
std::vector<std::vector<Point>> domain_runs(const Strand& s, Surface surface) {
  if (surface == Surface::Plane) return {s.points};
  std::vector<std::vector<Point>> runs;
  std::vector<Point> run;
  auto flush = [&]() {
    if (run.size() >= 2) runs.push_back(run);
    run.clear();
  };
  const bool wrap_y = surface == Surface::Torus;
  Vec shift(Rational(-floor_long(s.points[0].x)),
            wrap_y ? Rational(-floor_long(s.points[0].y)) : Rational(0));
  run.push_back(s.points[0] + shift);
  for (int i = 0; i < s.segment_count(); ++i) {
    const Point a = s.points[i];
    const Point b = s.points[i + 1];
    // Collect integer-line crossings along the segment.
    struct CutPt {
      Rational t;
      int axis;
      int dir;
    };
    std::vector<CutPt> cuts;
    if (a.x != b.x)
      for (long k = ceil_long(std::min(a.x, b.x)); k <= floor_long(std::max(a.x, b.x)); ++k) {
        const Rational t = (Rational(k) - a.x) / (b.x - a.x);
        if (t > 0 && t < 1) cuts.push_back({t, 0, b.x > a.x ? 1 : -1});
      }
    if (wrap_y && a.y != b.y)
      for (long k = ceil_long(std::min(a.y, b.y)); k <= floor_long(std::max(a.y, b.y)); ++k) {
        const Rational t = (Rational(k) - a.y) / (b.y - a.y);
        if (t > 0 && t < 1) cuts.push_back({t, 1, b.y > a.y ? 1 : -1});
      }
    std::sort(cuts.begin(), cuts.end(), [](const CutPt& l, const CutPt& r) { return l.t < r.t; });
    for (const CutPt& c : cuts) {
      const Point p = lerp(a, b, c.t);
      run.push_back(p + shift);
      flush();
      if (c.axis == 0) shift.x += c.dir > 0 ? -1 : 1;
      else shift.y += c.dir > 0 ? -1 : 1;
      run.push_back(p + shift);
    }
    run.push_back(b + shift);
  }
  flush();
  return runs;
}

}  // namespace

std::string render_svg(const Diagram& diagram, const SvgOptions& options) {
  require_valid(diagram);
  const auto crossings = detect_crossings(diagram);
  const Rational feature = min_feature_dist_sq(diagram, crossings);
  const double gap = std::min(0.035, std::sqrt(approx(feature)) / 3.0);

  // Collect drawable runs, then cut under-strand gaps around crossings.
  struct DrawRun {
    std::vector<std::pair<double, double>> pts;
    bool fixed;
    std::string id;
  };
  std::vector<DrawRun> draw_runs;
  for (const Strand& s : diagram.strands) {
    for (const auto& run : domain_runs(s, diagram.surface)) {
      DrawRun d;
      d.fixed = s.fixed();
      d.id = s.id;
      for (const Point& p : run) d.pts.push_back({approx(p.x), approx(p.y)});
      draw_runs.push_back(std::move(d));
    }
  }

  // Under-strand gap centers per strand, in quotient coordinates.
  std::map<std::string, std::vector<std::pair<double, double>>> under_points;
  for (const Crossing& c : crossings) {
    if (!c.over) continue;
    const bool first_under = c.over == Over::Second;
    const std::string& id = first_under ? c.key.a : c.key.b;
    Point p = c.point;  // first-branch frame
    if (!first_under)
      p = Point(p.x - c.key.translate.a, p.y - c.key.translate.b);
    if (diagram.surface != Surface::Plane) p.x -= floor_long(p.x);
    if (diagram.surface == Surface::Torus) p.y -= floor_long(p.y);
    under_points[id].push_back({approx(p.x), approx(p.y)});
  }

  std::vector<DrawRun> final_runs;
  for (const DrawRun& run : draw_runs) {
    const auto& unders = under_points[run.id];
    DrawRun current{{}, run.fixed, run.id};
    auto near_under = [&](double x, double y) {
      for (const auto& [ux, uy] : unders)
        if (std::hypot(x - ux, y - uy) < gap) return true;
      return false;
    };
    // Sample each segment finely and break the polyline inside gap discs.
    for (size_t i = 0; i + 1 < run.pts.size(); ++i) {
      const auto [x1, y1] = run.pts[i];
      const auto [x2, y2] = run.pts[i + 1];
      const int steps = std::max(1, static_cast<int>(std::hypot(x2 - x1, y2 - y1) / (gap / 2)));
      for (int st = 0; st <= steps; ++st) {
        const double t = static_cast<double>(st) / steps;
        const double x = x1 + t * (x2 - x1);
        const double y = y1 + t * (y2 - y1);
        if (near_under(x, y)) {
          if (current.pts.size() >= 2) final_runs.push_back(current);
          current.pts.clear();
        } else {
          current.pts.push_back({x, y});
        }
      }
    }
    if (current.pts.size() >= 2) final_runs.push_back(current);
  }

  // Viewport.
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  for (const DrawRun& run : final_runs)
    for (const auto& [x, y] : run.pts) {
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  const double S = options.scale;
  const double M = options.margin;
  const auto tx = [&](double x) { return M + (x - min_x) * S; };
  const auto ty = [&](double y) { return M + (max_y - y) * S; };  // flip y for SVG

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  const double width = 2 * M + (max_x - min_x) * S;
  const double height = 2 * M + (max_y - min_y) * S;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<style>.moving{stroke:#153;stroke-width:2.4;fill:none;stroke-linecap:round}"
     << ".fixed{stroke:#888;stroke-width:2.4;fill:none;stroke-dasharray:7 4}"
     << ".domain{stroke:#bbb;stroke-width:1;fill:none}"
     << ".arrow{fill:#bbb}.label{font:13px sans-serif;fill:#000}</style>\n";

  if (diagram.surface != Surface::Plane) {
    os << "<rect class=\"domain\" x=\"" << tx(0) << "\" y=\"" << ty(1) << "\" width=\"" << S
       << "\" height=\"" << S << "\"/>\n";
    const auto arrow = [&](double x, double y, bool horizontal, int count) {
      for (int i = 0; i < count; ++i) {
        const double off = (i - (count - 1) / 2.0) * 10.0;
        if (horizontal)
          os << "<path class=\"arrow\" d=\"M" << tx(x) - 5 + off << " " << ty(y) - 4 << " L"
             << tx(x) + 5 + off << " " << ty(y) << " L" << tx(x) - 5 + off << " " << ty(y) + 4
             << " Z\"/>\n";
        else
          os << "<path class=\"arrow\" d=\"M" << tx(x) - 4 << " " << ty(y) + 5 + off << " L"
             << tx(x) << " " << ty(y) - 5 + off << " L" << tx(x) + 4 << " " << ty(y) + 5 + off
             << " Z\"/>\n";
      }
    };
    // x-identification arrows on the vertical edges.
    arrow(0, 0.5, false, 1);
    arrow(1, 0.5, false, 1);
    if (diagram.surface == Surface::Torus) {
      arrow(0.5, 0, true, 2);
      arrow(0.5, 1, true, 2);
    }
  }

  for (const DrawRun& run : final_runs) {
    os << "<polyline class=\"" << (run.fixed ? "fixed" : "moving") << "\" points=\"";
    for (size_t i = 0; i < run.pts.size(); ++i) {
      if (i) os << " ";
      os << tx(run.pts[i].first) << "," << ty(run.pts[i].second);
    }
    os << "\"/>\n";
  }

  // Endpoints.
  const Strand& open = diagram.open_strand();
  Point leg = open.points.front();
  Point head = open.points.back();
  if (diagram.surface != Surface::Plane) {
    leg.x -= floor_long(leg.x);
    head.x -= floor_long(head.x);
  }
  if (diagram.surface == Surface::Torus) {
    leg.y -= floor_long(leg.y);
    head.y -= floor_long(head.y);
  }
  const auto dot_label = [&](const Point& p, const char* name) {
    os << "<circle cx=\"" << tx(approx(p.x)) << "\" cy=\"" << ty(approx(p.y))
       << "\" r=\"4\" fill=\"#000\"/>\n";
    os << "<text class=\"label\" x=\"" << tx(approx(p.x)) + 6 << "\" y=\"" << ty(approx(p.y)) - 6
       << "\">" << name << "</text>\n";
  };
  dot_label(leg, "leg");
  dot_label(head, "head");

  os << "</svg>\n";
  return os.str();
}

}  // namespace knotoid
