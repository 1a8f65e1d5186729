#include "knotoid/bracket.hpp"

#include <algorithm>
#include <thread>

#include "knotoid/errors.hpp"

namespace knotoid {

namespace {

struct FlavorName {
  BracketFlavor flavor;
  const char* name;
};

constexpr FlavorName kFlavorNames[] = {
    {BracketFlavor::Planar, "planar"},
    {BracketFlavor::UniversalPlanar, "universal-planar"},
    {BracketFlavor::Annular, "annular"},
    {BracketFlavor::UniversalAnnular, "universal-annular"},
    {BracketFlavor::Toroidal, "toroidal"},
    {BracketFlavor::UniversalToroidal, "universal-toroidal"},
    {BracketFlavor::ReducedToroidal, "reduced-toroidal"},
    {BracketFlavor::OMixed, "o-mixed"},
    {BracketFlavor::UniversalOMixed, "universal-o-mixed"},
    {BracketFlavor::HMixed, "h-mixed"},
    {BracketFlavor::UniversalHMixed, "universal-h-mixed"},
    {BracketFlavor::ReducedHMixed, "reduced-h-mixed"},
    {BracketFlavor::TuraevSpecialized, "turaev-specialized"},
};

ClassContext required_context(BracketFlavor flavor) {
  switch (flavor) {
    case BracketFlavor::Planar:
    case BracketFlavor::UniversalPlanar:
      return ClassContext::Plane;
    case BracketFlavor::Annular:
    case BracketFlavor::UniversalAnnular:
      return ClassContext::Annulus;
    case BracketFlavor::Toroidal:
    case BracketFlavor::UniversalToroidal:
    case BracketFlavor::ReducedToroidal:
      return ClassContext::Torus;
    case BracketFlavor::OMixed:
    case BracketFlavor::UniversalOMixed:
      return ClassContext::OMixed;
    case BracketFlavor::HMixed:
    case BracketFlavor::UniversalHMixed:
    case BracketFlavor::ReducedHMixed:
      return ClassContext::HMixed;
    case BracketFlavor::TuraevSpecialized:
      return ClassContext::Plane;  // any; not used
  }
  return ClassContext::Plane;
}

ClassContext diagram_context(const Diagram& diagram) {
  if (diagram.surface == Surface::Annulus) return ClassContext::Annulus;
  if (diagram.surface == Surface::Torus) return ClassContext::Torus;
  if (!diagram.has_fixed()) return ClassContext::Plane;
  for (const Strand& s : diagram.strands)
    if (s.fixity == Fixity::FixedO) return ClassContext::OMixed;
  return ClassContext::HMixed;
}

}  // namespace

const char* flavor_name(BracketFlavor flavor) {
  for (const auto& entry : kFlavorNames)
    if (entry.flavor == flavor) return entry.name;
  return "?";
}

BracketFlavor flavor_from_name(const std::string& name) {
  for (const auto& entry : kFlavorNames)
    if (name == entry.name) return entry.flavor;
  fail(ErrorCode::BadArgument, "unknown bracket flavor '" + name + "'");
}

std::vector<BracketFlavor> flavors_for(const Diagram& diagram) {
  std::vector<BracketFlavor> out;
  const ClassContext ctx = diagram_context(diagram);
  for (const auto& entry : kFlavorNames) {
    if (entry.flavor == BracketFlavor::TuraevSpecialized || required_context(entry.flavor) == ctx)
      out.push_back(entry.flavor);
  }
  return out;
}

void require_flavor_match(const Diagram& diagram, BracketFlavor flavor) {
  if (flavor == BracketFlavor::TuraevSpecialized) return;
  if (required_context(flavor) != diagram_context(diagram))
    fail(ErrorCode::FlavorMismatch, std::string(flavor_name(flavor)) + " does not apply to this " +
                                        surface_name(diagram.surface) + " diagram");
}

LaurentPoly state_weight(const StateSummary& summary, BracketFlavor flavor) {
  LaurentPoly w = LaurentPoly::a_power(summary.sigma) * d_poly().pow(summary.k);
  const auto check = [&](bool bad, const char* what) {
    if (bad) fail(ErrorCode::FlavorMismatch, std::string("state census carries ") + what +
                                                 " outside the flavor's surface");
  };
  switch (flavor) {
    case BracketFlavor::Planar:
      check(summary.n != 0 || summary.l != 0, "essential loops");
      w = w * LaurentPoly::symbol(VariableSymbol::v()).pow(summary.m);
      break;
    case BracketFlavor::UniversalPlanar:
      check(summary.n != 0 || summary.l != 0, "essential loops");
      if (summary.m > 0) w = w * LaurentPoly::symbol(VariableSymbol::vm(summary.m));
      break;
    case BracketFlavor::Annular:
    case BracketFlavor::OMixed:
      w = w * LaurentPoly::symbol(VariableSymbol::x()).pow(summary.n);
      w = w * LaurentPoly::symbol(VariableSymbol::v()).pow(summary.m);
      w = w * LaurentPoly::symbol(VariableSymbol::t()).pow(summary.l);
      break;
    case BracketFlavor::UniversalAnnular:
    case BracketFlavor::UniversalOMixed:
      if (summary.n > 0) w = w * LaurentPoly::symbol(VariableSymbol::xn(summary.n));
      if (summary.m > 0) w = w * LaurentPoly::symbol(VariableSymbol::vm(summary.m));
      if (summary.l > 0) w = w * LaurentPoly::symbol(VariableSymbol::tl(summary.l));
      break;
    case BracketFlavor::Toroidal:
    case BracketFlavor::HMixed:
      check(summary.n != 0, "inner essential loops");
      w = w * LaurentPoly::symbol(VariableSymbol::v()).pow(summary.m);
      if (summary.l > 0) {
        if (!summary.torus_class) fail(ErrorCode::TopologyCorruption, "missing torus class");
        w = w * LaurentPoly::symbol(VariableSymbol::spq(summary.torus_class->p,
                                                        summary.torus_class->q))
                    .pow(summary.l);
      }
      break;
    case BracketFlavor::UniversalToroidal:
    case BracketFlavor::UniversalHMixed:
      check(summary.n != 0, "inner essential loops");
      if (summary.m > 0) w = w * LaurentPoly::symbol(VariableSymbol::vm(summary.m));
      if (summary.l > 0) {
        if (!summary.torus_class) fail(ErrorCode::TopologyCorruption, "missing torus class");
        w = w * LaurentPoly::symbol(VariableSymbol::spql(summary.torus_class->p,
                                                         summary.torus_class->q, summary.l));
      }
      break;
    case BracketFlavor::ReducedToroidal:
    case BracketFlavor::ReducedHMixed:
      check(summary.n != 0, "inner essential loops");
      w = w * LaurentPoly::symbol(VariableSymbol::v()).pow(summary.m);
      if (summary.l > 0) {
        if (!summary.torus_class) fail(ErrorCode::TopologyCorruption, "missing torus class");
        w = w * LaurentPoly::symbol(VariableSymbol::rx()).pow(summary.torus_class->p * summary.l);
        w = w * LaurentPoly::symbol(VariableSymbol::ry()).pow(summary.torus_class->q * summary.l);
      }
      break;
    case BracketFlavor::TuraevSpecialized:
      w = LaurentPoly::a_power(summary.sigma) * d_poly().pow(summary.loop_count());
      break;
  }
  return w;
}

LaurentPoly bracket(const Diagram& diagram, BracketFlavor flavor, const EvalOptions& options) {
  require_valid(diagram);
  require_flavor_match(diagram, flavor);
  StateContext context(diagram);
  const std::uint64_t total = 1ULL << context.smoothable_count();

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || total < 64) {
    LaurentPoly sum;
    for_each_state(context, 0, total, options.seed,
                   [&](const SmoothingChoice&, const StateSummary& summary) {
                     sum += state_weight(summary, flavor);
                   });
    return sum;
  }

  // Partition the choice space; partial sums merge in partition order so the
  // result is independent of scheduling.
  std::vector<LaurentPoly> partial(jobs);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (total + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    const std::uint64_t begin = std::min<std::uint64_t>(w * chunk, total);
    const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, total);
    workers.emplace_back([&, w, begin, end]() {
      LaurentPoly sum;
      for_each_state(context, begin, end, options.seed,
                     [&](const SmoothingChoice&, const StateSummary& summary) {
                       sum += state_weight(summary, flavor);
                     });
      partial[w] = std::move(sum);
    });
  }
  for (auto& worker : workers) worker.join();
  LaurentPoly out;
  for (const LaurentPoly& p : partial) out += p;
  return out;
}

LaurentPoly jones(const Diagram& diagram, BracketFlavor flavor, const EvalOptions& options) {
  const LaurentPoly raw = bracket(diagram, flavor, options);
  const bool mixed = diagram.has_fixed();
  const long w = writhe(diagram, mixed ? WritheScope::ExcludeMixed : WritheScope::AllMoving);
  const LaurentPoly factor = LaurentPoly::a_power(3, -1).pow(-w);
  return factor * raw;
}

LaurentPoly specialize_turaev(const LaurentPoly& p) {
  return substitute_by(p, [](const VariableSymbol& sym) {
    switch (sym.kind) {
      case SymKind::V:
      case SymKind::X:
      case SymKind::T:
      case SymKind::Spq:
        return d_poly();
      case SymKind::Vm:
      case SymKind::Xn:
      case SymKind::Tl:
        return d_poly().pow(sym.i);
      case SymKind::Spql:
        return d_poly().pow(sym.k);
      case SymKind::RX:
      case SymKind::RY:
        return LaurentPoly::symbol(sym);  // reduced symbols have no d image
    }
    return LaurentPoly::symbol(sym);
  });
}

}  // namespace knotoid
