#include "knotoid/state.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "knotoid/errors.hpp"

namespace knotoid {

TorusClass TorusClass::normalized(long p, long q) {
  if (p == 0 && q == 0) fail(ErrorCode::BadArgument, "torus class (0,0)");
  if (std::gcd(std::abs(p), std::abs(q)) != 1)
    fail(ErrorCode::TopologyCorruption, "essential torus loop with non-primitive class");
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return TorusClass{p, q};
}

std::string SmoothingChoice::to_string() const {
  std::string s;
  for (bool b : b_smoothing) s += b ? 'B' : 'A';
  return s;
}

long SmoothingChoice::sigma() const {
  long sigma = 0;
  for (bool b : b_smoothing) sigma += b ? -1 : 1;
  return sigma;
}

namespace {

// Rational lower bound for sqrt(y): y itself when y <= 1, else 1.
Rational sqrt_lower_bound(const Rational& y) { return y >= 1 ? Rational(1) : y; }

struct StrandCoordinate {
  int seg;
  Rational t;
  bool operator<(const StrandCoordinate& o) const {
    if (seg != o.seg) return seg < o.seg;
    return t < o.t;
  }
};

}  // namespace

StateContext::StateContext(const Diagram& diagram) : diagram_(&diagram) {
  crossings_ = detect_crossings(diagram);
  smooth_index_.assign(crossings_.size(), -1);
  for (size_t i = 0; i < crossings_.size(); ++i) {
    if (!crossings_[i].over) fail(ErrorCode::UnassignedCrossing, crossings_[i].key.to_string());
    if (crossings_[i].smoothable()) {
      smooth_index_[i] = static_cast<int>(smoothable_.size());
      smoothable_.push_back(static_cast<int>(i));
    }
  }
  feature_dist_sq_ = min_feature_dist_sq(diagram, crossings_);
  leg_ = diagram.leg();

  if (diagram.surface == Surface::Annulus) class_context_ = ClassContext::Annulus;
  else if (diagram.surface == Surface::Torus) class_context_ = ClassContext::Torus;
  else if (!diagram.has_fixed()) class_context_ = ClassContext::Plane;
  else {
    bool has_o = false;
    for (const Strand& s : diagram.strands)
      if (s.fixity == Fixity::FixedO) has_o = true;
    class_context_ = has_o ? ClassContext::OMixed : ClassContext::HMixed;
  }

  build_cuts();
  build_runs();
}

void StateContext::build_cuts() {
  cuts_per_strand_.assign(diagram_->strands.size(), {});
  for (int smoothable_idx : smoothable_) {
    const Crossing& c = crossings_[smoothable_idx];
    for (int branch = 0; branch < 2; ++branch) {
      const std::string& id = branch == 0 ? c.key.a : c.key.b;
      const int seg = branch == 0 ? c.key.segA : c.key.segB;
      const Rational t = branch == 0 ? c.t1 : c.t2;
      const int sidx = diagram_->strand_index(id);
      Cut cut;
      cut.seg = seg;
      cut.t = t;
      cut.crossing = smoothable_idx;
      cut.branch = branch;
      cuts_per_strand_[sidx].push_back(std::move(cut));
    }
  }

  for (size_t sidx = 0; sidx < diagram_->strands.size(); ++sidx) {
    auto& cuts = cuts_per_strand_[sidx];
    const Strand& strand = diagram_->strands[sidx];
    std::sort(cuts.begin(), cuts.end(), [](const Cut& l, const Cut& r) {
      return StrandCoordinate{l.seg, l.t} < StrandCoordinate{r.seg, r.t};
    });
    for (size_t i = 0; i < cuts.size(); ++i) {
      Cut& cut = cuts[i];
      const Point& a = strand.points[cut.seg];
      const Point& b = strand.points[cut.seg + 1];
      const Rational seg_sq = norm_sq(b - a);
      // Arm points stay within a quarter feature distance of the crossing.
      const Rational reach = sqrt_lower_bound(Rational(feature_dist_sq_ / (16 * seg_sq)));
      Rational dm = std::min(Rational(cut.t / 2), reach);
      Rational dp = std::min(Rational((Rational(1) - cut.t) / 2), reach);
      if (i > 0 && cuts[i - 1].seg == cut.seg)
        dm = std::min(dm, Rational((cut.t - cuts[i - 1].t) / 3));
      if (i + 1 < cuts.size() && cuts[i + 1].seg == cut.seg)
        dp = std::min(dp, Rational((cuts[i + 1].t - cut.t) / 3));
      cut.delta_minus = dm;
      cut.delta_plus = dp;
      cut.arm_minus = lerp(a, b, cut.t - dm);
      cut.arm_plus = lerp(a, b, cut.t + dp);
    }
  }
}

int StateContext::arm_node(int crossing, int branch, bool plus) const {
  return smooth_index_[crossing] * 4 + branch * 2 + (plus ? 1 : 0);
}

void StateContext::build_runs() {
  run_at_node_.assign(smoothable_.size() * 4, -1);

  // Mixed incidences per strand, to be attached to the covering run.
  struct MixedRef {
    StrandCoordinate at;
    MixedAnnotation note;
  };
  std::vector<std::vector<MixedRef>> mixed_per_strand(diagram_->strands.size());
  for (const Crossing& c : crossings_) {
    if (c.kind != CrossingKind::Mixed) continue;
    for (int branch = 0; branch < 2; ++branch) {
      const std::string& id = branch == 0 ? c.key.a : c.key.b;
      const int sidx = diagram_->strand_index(id);
      const Strand& s = diagram_->strands[sidx];
      if (s.fixed()) continue;
      const Strand& other =
          diagram_->strands[diagram_->strand_index(branch == 0 ? c.key.b : c.key.a)];
      MixedRef ref;
      ref.at = {branch == 0 ? c.key.segA : c.key.segB, branch == 0 ? c.t1 : c.t2};
      ref.note = MixedAnnotation{other.fixity, crossing_sign(c)};
      mixed_per_strand[sidx].push_back(std::move(ref));
    }
  }
  for (auto& refs : mixed_per_strand)
    std::sort(refs.begin(), refs.end(),
              [](const MixedRef& l, const MixedRef& r) { return l.at < r.at; });

  const auto strand_piece = [](const Strand& s, StrandCoordinate from, StrandCoordinate to,
                               const Point& from_pt, const Point& to_pt) {
    std::vector<Point> pts;
    pts.push_back(from_pt);
    for (int seg = from.seg; seg <= to.seg; ++seg) {
      if (seg > from.seg) pts.push_back(s.points[seg]);
    }
    pts.push_back(to_pt);
    return pts;
  };

  for (size_t sidx = 0; sidx < diagram_->strands.size(); ++sidx) {
    const Strand& strand = diagram_->strands[sidx];
    if (strand.fixed()) continue;
    const auto& cuts = cuts_per_strand_[sidx];
    const auto& mixed = mixed_per_strand[sidx];

    const auto mixed_between = [&](std::optional<StrandCoordinate> lo,
                                   std::optional<StrandCoordinate> hi) {
      std::vector<MixedAnnotation> notes;
      for (const MixedRef& ref : mixed) {
        if (lo && !(*lo < ref.at)) continue;
        if (hi && !(ref.at < *hi)) continue;
        notes.push_back(ref.note);
      }
      return notes;
    };

    if (cuts.empty()) {
      if (strand.closed) {
        TracedComponent loop;
        loop.open = false;
        loop.points = strand.points;
        loop.homology = homology_class(strand.polyline(), diagram_->surface);
        loop.annotations = mixed_between(std::nullopt, std::nullopt);
        standalone_loops_.push_back(std::move(loop));
      } else {
        Run run;
        run.node_u = -1;
        run.node_v = -2;
        run.points = strand.points;
        run.end_offset = Vec(Rational(0), Rational(0));
        run.mixed = mixed_between(std::nullopt, std::nullopt);
        leg_run_ = static_cast<int>(runs_.size());
        runs_.push_back(std::move(run));
      }
      continue;
    }

    const int k = static_cast<int>(cuts.size());
    if (!strand.closed) {
      for (int i = -1; i < k; ++i) {
        Run run;
        std::vector<Point> pts;
        if (i == -1) {
          run.node_u = -1;
          const StrandCoordinate to{cuts[0].seg, cuts[0].t - cuts[0].delta_minus};
          pts.push_back(strand.points[0]);
          for (int seg = 0; seg <= to.seg; ++seg)
            if (seg > 0) pts.push_back(strand.points[seg]);
          pts.push_back(cuts[0].arm_minus);
          run.node_v = arm_node(cuts[0].crossing, cuts[0].branch, false);
          run.mixed = mixed_between(std::nullopt, StrandCoordinate{cuts[0].seg, cuts[0].t});
        } else if (i == k - 1) {
          run.node_u = arm_node(cuts[i].crossing, cuts[i].branch, true);
          pts.push_back(cuts[i].arm_plus);
          for (int seg = cuts[i].seg + 1; seg < static_cast<int>(strand.points.size()) - 1; ++seg)
            pts.push_back(strand.points[seg]);
          pts.push_back(strand.points.back());
          run.node_v = -2;
          run.mixed = mixed_between(StrandCoordinate{cuts[i].seg, cuts[i].t}, std::nullopt);
        } else {
          run.node_u = arm_node(cuts[i].crossing, cuts[i].branch, true);
          run.node_v = arm_node(cuts[i + 1].crossing, cuts[i + 1].branch, false);
          pts = strand_piece(strand, {cuts[i].seg, cuts[i].t + cuts[i].delta_plus},
                             {cuts[i + 1].seg, cuts[i + 1].t - cuts[i + 1].delta_minus},
                             cuts[i].arm_plus, cuts[i + 1].arm_minus);
          run.mixed = mixed_between(StrandCoordinate{cuts[i].seg, cuts[i].t},
                                    StrandCoordinate{cuts[i + 1].seg, cuts[i + 1].t});
        }
        run.points = std::move(pts);
        run.end_offset = Vec(Rational(0), Rational(0));
        if (run.node_u == -1) leg_run_ = static_cast<int>(runs_.size());
        if (run.node_u >= 0) run_at_node_[run.node_u] = static_cast<int>(runs_.size());
        if (run.node_v >= 0) run_at_node_[run.node_v] = static_cast<int>(runs_.size());
        runs_.push_back(std::move(run));
      }
      // Middle runs between cut i and i+1 for i in [0, k-2] were built above;
      // note the loop covers leg run (i=-1), middles and head run (i=k-1).
      // When k == 1 the two special cases already cover everything.
      continue;
    }

    // Closed strand: cyclic runs, the wrap run carries the homology offset.
    const Vec h = strand.points.back() - strand.points.front();
    for (int i = 0; i < k; ++i) {
      Run run;
      run.node_u = arm_node(cuts[i].crossing, cuts[i].branch, true);
      if (i + 1 < k) {
        run.node_v = arm_node(cuts[i + 1].crossing, cuts[i + 1].branch, false);
        run.points = strand_piece(strand, {cuts[i].seg, cuts[i].t + cuts[i].delta_plus},
                                  {cuts[i + 1].seg, cuts[i + 1].t - cuts[i + 1].delta_minus},
                                  cuts[i].arm_plus, cuts[i + 1].arm_minus);
        run.end_offset = Vec(Rational(0), Rational(0));
        run.mixed = mixed_between(StrandCoordinate{cuts[i].seg, cuts[i].t},
                                  StrandCoordinate{cuts[i + 1].seg, cuts[i + 1].t});
      } else {
        run.node_v = arm_node(cuts[0].crossing, cuts[0].branch, false);
        std::vector<Point> pts;
        pts.push_back(cuts[i].arm_plus);
        for (int seg = cuts[i].seg + 1; seg < strand.segment_count(); ++seg)
          pts.push_back(strand.points[seg]);
        pts.push_back(strand.points.back());  // closure point = front + h
        for (int seg = 1; seg <= cuts[0].seg; ++seg)
          pts.push_back(strand.points[seg] + h);
        pts.push_back(cuts[0].arm_minus + h);
        run.points = std::move(pts);
        run.end_offset = h;
        auto tail = mixed_between(StrandCoordinate{cuts[i].seg, cuts[i].t}, std::nullopt);
        auto head = mixed_between(std::nullopt, StrandCoordinate{cuts[0].seg, cuts[0].t});
        run.mixed = tail;
        run.mixed.insert(run.mixed.end(), head.begin(), head.end());
      }
      run_at_node_[run.node_u] = static_cast<int>(runs_.size());
      if (run.node_v >= 0) run_at_node_[run.node_v] = static_cast<int>(runs_.size());
      runs_.push_back(std::move(run));
    }
  }
}

namespace {

struct Chord {
  int node_u = 0;
  int node_v = 0;
  Point pu;        // coordinates of node_u in its strand frame
  Point pv;        // coordinates of node_v in its strand frame
  Vec end_offset;  // pv + end_offset is pu-frame position of the far end
};

}  // namespace

StateComponents StateContext::trace_state(const SmoothingChoice& choice) const {
  if (static_cast<int>(choice.b_smoothing.size()) != smoothable_count())
    fail(ErrorCode::BadArgument, "smoothing choice does not cover the crossings");

  // Arm coordinates per node.
  std::vector<const Cut*> cut_at_node(smoothable_.size() * 4, nullptr);
  for (const auto& cuts : cuts_per_strand_)
    for (const Cut& cut : cuts) {
      cut_at_node[arm_node(cut.crossing, cut.branch, false)] = &cut;
      cut_at_node[arm_node(cut.crossing, cut.branch, true)] = &cut;
    }

  // Build the two smoothing chords per crossing.
  std::vector<int> chord_at_node(smoothable_.size() * 4, -1);
  std::vector<Chord> chords;
  for (int si = 0; si < smoothable_count(); ++si) {
    const Crossing& c = crossings_[smoothable_[si]];
    const int over_branch = c.over == Over::First ? 0 : 1;
    const int under_branch = 1 - over_branch;
    const Rational orientation = cross(c.over_dir(), c.under_dir());
    // A-smoothing: out-out/in-in when cross(o,u) > 0, out-in/in-out otherwise.
    const bool is_b = choice.b_smoothing[si];
    const bool pair_out_out = (orientation > 0) != is_b;
    const auto add_chord = [&](bool over_plus, bool under_plus) {
      const int nu = arm_node(smoothable_[si], over_branch, over_plus);
      const int nv = arm_node(smoothable_[si], under_branch, under_plus);
      Chord chord;
      chord.node_u = nu;
      chord.node_v = nv;
      const Cut* cu = cut_at_node[nu];
      const Cut* cv = cut_at_node[nv];
      chord.pu = over_plus ? cu->arm_plus : cu->arm_minus;
      chord.pv = under_plus ? cv->arm_plus : cv->arm_minus;
      // Branch frames differ by the key translate: branch 2 lives at -t
      // relative to branch 1's cover frame.
      Vec offset(Rational(0), Rational(0));
      if (over_branch == 0)
        offset = Vec(Rational(c.key.translate.a), Rational(c.key.translate.b));
      else
        offset = Vec(Rational(-c.key.translate.a), Rational(-c.key.translate.b));
      chord.end_offset = offset;
      chord_at_node[nu] = static_cast<int>(chords.size());
      chord_at_node[nv] = static_cast<int>(chords.size());
      chords.push_back(chord);
    };
    if (pair_out_out) {
      add_chord(true, true);
      add_chord(false, false);
    } else {
      add_chord(true, false);
      add_chord(false, true);
    }
  }

  StateComponents out;
  std::vector<bool> run_used(runs_.size(), false);
  std::vector<bool> chord_used(chords.size(), false);

  // Walks one component starting from a run end; emits geometry with a
  // running cover offset so homology classes read off end - start.
  const auto walk = [&](int start_run, bool start_forward, TracedComponent& component) {
    int run_idx = start_run;
    bool forward = start_forward;
    Vec offset(Rational(0), Rational(0));
    const int entry_node = start_forward ? runs_[start_run].node_u : runs_[start_run].node_v;
    const auto push = [&component](const Point& p) {
      if (component.points.empty() || component.points.back() != p)
        component.points.push_back(p);
    };
    while (true) {
      const Run& run = runs_[run_idx];
      if (run_used[run_idx]) fail(ErrorCode::TopologyCorruption, "run visited twice");
      run_used[run_idx] = true;
      if (forward) {
        for (const Point& p : run.points) push(p + offset);
        for (const MixedAnnotation& note : run.mixed) component.annotations.push_back(note);
        offset = offset + run.end_offset;
      } else {
        const Vec base = offset - run.end_offset;
        for (auto it = run.points.rbegin(); it != run.points.rend(); ++it) push(*it + base);
        for (auto it = run.mixed.rbegin(); it != run.mixed.rend(); ++it)
          component.annotations.push_back(MixedAnnotation{it->fixed, -it->sign});
        offset = base;
      }
      const int node = forward ? run.node_v : run.node_u;
      if (node == -1 || node == -2) return node;  // reached an endpoint
      const int chord_idx = chord_at_node[node];
      if (chord_idx < 0) fail(ErrorCode::TopologyCorruption, "dangling arm node");
      const Chord& chord = chords[chord_idx];
      if (chord_used[chord_idx]) fail(ErrorCode::TopologyCorruption, "chord visited twice");
      chord_used[chord_idx] = true;
      int next_node;
      if (chord.node_u == node) {
        push(chord.pu + offset);
        offset = offset + chord.end_offset;
        push(chord.pv + offset);
        next_node = chord.node_v;
      } else {
        push(chord.pv + offset);
        offset = offset - chord.end_offset;
        push(chord.pu + offset);
        next_node = chord.node_u;
      }
      if (next_node == entry_node) return 0;  // loop closed
      const int next_run = run_at_node_[next_node];
      if (next_run < 0) fail(ErrorCode::TopologyCorruption, "arm without a run");
      run_idx = next_run;
      forward = runs_[next_run].node_u == next_node;
    }
  };

  // The open arc first.
  if (leg_run_ < 0) fail(ErrorCode::TopologyCorruption, "no leg run");
  out.arc.open = true;
  const int terminal = walk(leg_run_, true, out.arc);
  if (terminal != -2) fail(ErrorCode::TopologyCorruption, "arc trace did not reach the head");

  // Remaining runs form closed loops.
  for (size_t r = 0; r < runs_.size(); ++r) {
    if (run_used[r]) continue;
    TracedComponent loop;
    loop.open = false;
    walk(static_cast<int>(r), true, loop);
    const Vec h = loop.points.back() - loop.points.front();
    if (!is_integer(h.x) || !is_integer(h.y))
      fail(ErrorCode::TopologyCorruption, "traced loop does not close on the quotient");
    loop.homology = HomologyClass{floor_long(h.x), floor_long(h.y)};
    out.loops.push_back(std::move(loop));
  }
  for (const TracedComponent& loop : standalone_loops_) out.loops.push_back(loop);
  for (bool used : chord_used)
    if (!used) fail(ErrorCode::TopologyCorruption, "smoothing chord left untraced");
  return out;
}

namespace {

long half_linking_sum(const TracedComponent& loop, Fixity fixed) {
  long sum = 0;
  for (const MixedAnnotation& note : loop.annotations)
    if (note.fixed == fixed) sum += note.sign;
  if (sum % 2 != 0)
    fail(ErrorCode::OddCrossingParity, "mixed crossing signs must sum to an even number");
  return sum / 2;
}

}  // namespace

StateSummary StateContext::classify(const StateComponents& components, std::uint64_t seed) const {
  StateSummary summary;
  std::optional<TorusClass> common;
  const Surface surface = diagram_->surface;

  for (const TracedComponent& loop : components.loops) {
    Polyline poly{loop.points, true};
    switch (class_context_) {
      case ClassContext::Plane: {
        if (winding_number(poly, leg_, surface) != 0) ++summary.m;
        else ++summary.k;
        break;
      }
      case ClassContext::Annulus: {
        if (loop.homology.a == 0) {
          if (winding_number(poly, leg_, surface) != 0) ++summary.m;
          else ++summary.k;
        } else if (std::abs(loop.homology.a) == 1) {
          const Parity parity = ray_crossing_parity(leg_, poly, surface, RayOptions{seed});
          if (parity == Parity::Odd) ++summary.n;
          else ++summary.l;
        } else {
          fail(ErrorCode::TopologyCorruption, "annulus loop winds more than once");
        }
        break;
      }
      case ClassContext::Torus: {
        if (loop.homology.is_zero()) {
          if (winding_number(poly, leg_, surface) != 0) ++summary.m;
          else ++summary.k;
        } else {
          const TorusClass cls = TorusClass::normalized(loop.homology.a, loop.homology.b);
          if (common && *common != cls)
            fail(ErrorCode::ExtendedStateEncountered,
                 "state mixes non-parallel essential torus classes");
          common = cls;
          ++summary.l;
        }
        break;
      }
      case ClassContext::OMixed: {
        const long lk = half_linking_sum(loop, Fixity::FixedO);
        if (lk == 0) {
          if (winding_number(poly, leg_, surface) != 0) ++summary.m;
          else ++summary.k;
        } else if (std::abs(lk) == 1) {
          if (winding_number(poly, leg_, surface) == 0) ++summary.n;
          else ++summary.l;
        } else {
          fail(ErrorCode::ExtendedStateEncountered,
               "loop links the fixed unknot more than once");
        }
        break;
      }
      case ClassContext::HMixed: {
        const long p = half_linking_sum(loop, Fixity::FixedH1);
        const long q = half_linking_sum(loop, Fixity::FixedH2);
        if (p == 0 && q == 0) {
          if (winding_number(poly, leg_, surface) != 0) ++summary.m;
          else ++summary.k;
        } else {
          if (std::gcd(std::abs(p), std::abs(q)) != 1)
            fail(ErrorCode::ExtendedStateEncountered,
                 "loop links the fixed Hopf link non-primitively");
          const TorusClass cls = TorusClass::normalized(p, q);
          if (common && *common != cls)
            fail(ErrorCode::ExtendedStateEncountered,
                 "state mixes non-parallel essential classes");
          common = cls;
          ++summary.l;
        }
        break;
      }
    }
  }
  if (summary.l > 0 &&
      (class_context_ == ClassContext::Torus || class_context_ == ClassContext::HMixed))
    summary.torus_class = common;
  return summary;
}

void for_each_state(const StateContext& context, std::uint64_t begin, std::uint64_t end,
                    std::uint64_t seed,
                    const std::function<void(const SmoothingChoice&, const StateSummary&)>& sink) {
  const int c = context.smoothable_count();
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    SmoothingChoice choice;
    choice.b_smoothing.resize(c);
    for (int i = 0; i < c; ++i)
      choice.b_smoothing[i] = (mask >> (c - 1 - i)) & 1;  // lexicographic, A before B
    StateSummary summary = context.classify(context.trace_state(choice), seed);
    summary.sigma = choice.sigma();
    sink(choice, summary);
  }
}

std::vector<StateRecord> enumerate_states(const Diagram& diagram, const EvalOptions& options) {
  require_valid(diagram);
  StateContext context(diagram);
  const std::uint64_t total = 1ULL << context.smoothable_count();
  std::vector<StateRecord> out;
  out.reserve(total);
  for_each_state(context, 0, total, options.seed,
                 [&out](const SmoothingChoice& choice, const StateSummary& summary) {
                   out.push_back(StateRecord{choice, summary});
                 });
  return out;
}

}  // namespace knotoid
