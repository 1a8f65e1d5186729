#pragma once

#include <string>

#include "knotoid/diagram.hpp"
#include "knotoid/laurent.hpp"
#include "knotoid/state.hpp"

namespace knotoid {

enum class BracketFlavor {
  Planar,
  UniversalPlanar,
  Annular,
  UniversalAnnular,
  Toroidal,
  UniversalToroidal,
  ReducedToroidal,
  OMixed,
  UniversalOMixed,
  HMixed,
  UniversalHMixed,
  ReducedHMixed,
  TuraevSpecialized,
};

const char* flavor_name(BracketFlavor flavor);
BracketFlavor flavor_from_name(const std::string& name);

// Flavors compatible with a diagram's surface and fixed sublink.
std::vector<BracketFlavor> flavors_for(const Diagram& diagram);
void require_flavor_match(const Diagram& diagram, BracketFlavor flavor);

// Census-to-monomial weighting rule of one bracket flavor.
LaurentPoly state_weight(const StateSummary& summary, BracketFlavor flavor);

LaurentPoly bracket(const Diagram& diagram, BracketFlavor flavor,
                    const EvalOptions& options = {});

// (-A^3)^{-w} times the bracket; w excludes mixed crossings for the mixed
// flavors (they are excluded for all flavors here, since pure-surface
// diagrams have none).
LaurentPoly jones(const Diagram& diagram, BracketFlavor flavor,
                  const EvalOptions& options = {});

// Substitutes every loop symbol by d: v,x,t,s_{p,q} -> d and the indexed
// families v_m -> d^m, x_n -> d^n, t_l -> d^l, s_{p,q,l} -> d^l.
LaurentPoly specialize_turaev(const LaurentPoly& p);

}  // namespace knotoid
