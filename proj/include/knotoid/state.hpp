#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "knotoid/diagram.hpp"

namespace knotoid {

// Normalized class of an essential torus curve; (p,q) and (-p,-q) name the
// same unoriented curve, so q > 0, or q == 0 and p > 0.
struct TorusClass {
  long p = 0;
  long q = 0;

  static TorusClass normalized(long p, long q);
  bool operator==(const TorusClass& o) const { return p == o.p && q == o.q; }
  bool operator!=(const TorusClass& o) const { return !(*this == o); }
};

// One A/B pick per smoothable crossing, in canonical crossing-key order.
struct SmoothingChoice {
  std::vector<bool> b_smoothing;  // false = A, true = B

  std::string to_string() const;
  long sigma() const;
};

struct StateSummary {
  long sigma = 0;
  long k = 0;  // free null-homotopic unknots
  long m = 0;  // null-homotopic unknots nesting the trivial knotoid
  long n = 0;  // inner essential unknots (annulus / O-mixed)
  long l = 0;  // outer essential unknots, or torus-link component count
  std::optional<TorusClass> torus_class;

  long loop_count() const { return k + m + n + l; }
};

struct MixedAnnotation {
  Fixity fixed = Fixity::FixedO;
  int sign = 0;  // crossing sign with the traced component's orientation
};

struct TracedComponent {
  bool open = false;
  std::vector<Point> points;  // consistent cover frame along the trace
  HomologyClass homology;     // loops only
  std::vector<MixedAnnotation> annotations;
};

struct StateComponents {
  TracedComponent arc;
  std::vector<TracedComponent> loops;
};

// Classification context: the surface picture the census rules live on.
enum class ClassContext { Plane, Annulus, Torus, OMixed, HMixed };

// Precomputed smoothing data for a diagram: crossings, cut points, arm
// windows and inter-cut runs. Immutable once built; states share it.
class StateContext {
 public:
  explicit StateContext(const Diagram& diagram);

  const Diagram& diagram() const { return *diagram_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<int>& smoothable() const { return smoothable_; }
  int smoothable_count() const { return static_cast<int>(smoothable_.size()); }
  ClassContext class_context() const { return class_context_; }

  StateComponents trace_state(const SmoothingChoice& choice) const;

  StateSummary classify(const StateComponents& components, std::uint64_t seed) const;

 private:
  struct Cut {
    int seg = 0;
    Rational t;
    int crossing = 0;  // index into crossings_
    int branch = 0;    // 0: first branch of the key, 1: second
    Rational delta_minus;
    Rational delta_plus;
    Point arm_minus;
    Point arm_plus;
  };

  struct Run {
    int node_u = 0;  // -1 leg, -2 head, otherwise arm node id
    int node_v = 0;
    std::vector<Point> points;
    Vec end_offset;  // points.back() == coord(node_v) + end_offset
    std::vector<MixedAnnotation> mixed;  // annotations along the run, forward order
  };

  void build_cuts();
  void build_runs();
  int arm_node(int crossing, int branch, bool plus) const;

  const Diagram* diagram_;
  std::vector<Crossing> crossings_;
  std::vector<int> smoothable_;
  std::vector<int> smooth_index_;  // crossing index -> position among smoothables, or -1
  ClassContext class_context_ = ClassContext::Plane;
  Rational feature_dist_sq_;
  std::vector<std::vector<Cut>> cuts_per_strand_;
  std::vector<Run> runs_;
  std::vector<int> run_at_node_;  // node id -> run index
  std::vector<TracedComponent> standalone_loops_;
  int leg_run_ = -1;
  Point leg_;
};

// Exactly 2^c states in lexicographic choice order (A before B).
struct StateRecord {
  SmoothingChoice choice;
  StateSummary summary;
};

struct EvalOptions {
  int jobs = 1;
  std::uint64_t seed = 0;
};

std::vector<StateRecord> enumerate_states(const Diagram& diagram,
                                          const EvalOptions& options = {});

// Streaming variant used by the bracket evaluator; the callback receives
// records in canonical order within each partition.
void for_each_state(const StateContext& context, std::uint64_t begin, std::uint64_t end,
                    std::uint64_t seed,
                    const std::function<void(const SmoothingChoice&, const StateSummary&)>& sink);

}  // namespace knotoid
