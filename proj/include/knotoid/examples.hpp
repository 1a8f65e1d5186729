#pragma once

#include <string>
#include <vector>

#include "knotoid/diagram.hpp"

namespace knotoid {

// Built-in diagram library. Parametric names: pq-curve(p,q) for an
// essential torus circle of class (p,q), nested-m(m) for a planar knotoid
// inside m concentric circles.
Diagram example_diagram(const std::string& name);
std::string example_text(const std::string& name);
std::vector<std::string> example_names();

// Resolves either a file path or an examples://name reference to the
// diagram text.
std::string load_diagram_text(const std::string& path_or_uri);

}  // namespace knotoid
