#pragma once

#include <string>

#include "knotoid/diagram.hpp"
#include "knotoid/state.hpp"

namespace knotoid {

// Planar mixed diagram produced by the surface-to-mixed translators,
// together with bookkeeping about the translation.
struct MixedDiagram {
  Diagram diagram;
  Surface source_surface = Surface::Annulus;
  int x_passes = 0;        // wrap passes routed around O or H1
  int y_passes = 0;        // wrap passes routed through H2 (torus only)
  long channel_writhe = 0; // net sign of new x-channel/y-channel crossings
  std::string provenance() const;
};

// Cuts the annular diagram at x = 0 and routes each wrap pass around the
// fixed unknot O, threading it once (under the near arc, over the far arc).
// No new moving-moving crossings are created.
MixedDiagram to_o_mixed(const Diagram& annular);

// Cuts the toroidal diagram along both axes; x-wrap returns thread H1 and
// y-wrap returns thread H2. Where an x-channel return arc meets a y-channel
// return arc the x-channel arc passes over; those crossings are recorded
// and smoothable like any other.
MixedDiagram to_h_mixed(const Diagram& toroidal);

// Half the signed sum of the loop's retained mixed crossings with one fixed
// component. Orientation-bilinear; the sum is always even.
long linking_number(const TracedComponent& loop, Fixity fixed);

}  // namespace knotoid
