#pragma once

#include <iosfwd>
#include <string>

#include "knotoid/diagram.hpp"

namespace knotoid {

// Line-oriented diagram format. '#' starts a comment.
//   surface plane|annulus|torus
//   strand <id> open|closed [fixed O|H1|H2]
//   pt <x> <y>                      (rationals n/d, integers allowed)
//   over <idA>.<segA> <idB>.<segB> <a> <b> first|second
//   template O|H                    (expands the fixed templates in place)
Diagram parse_diagram(const std::string& text);
std::string serialize_diagram(const Diagram& diagram);

struct SvgOptions {
  double scale = 360.0;
  double margin = 40.0;
};

std::string render_svg(const Diagram& diagram, const SvgOptions& options = {});

}  // namespace knotoid
