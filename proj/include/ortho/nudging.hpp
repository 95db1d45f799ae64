#pragma once

#include <optional>
#include <vector>

#include "ortho/drawing.hpp"
#include "ortho/lp.hpp"

namespace ortho {

enum class NudgeMode { Constrained, Full };
enum class PassAxis { Horizontal, Vertical };  // Horizontal nudges x coordinates

// One object of the order chi: a path segment perpendicular to the pass axis,
// a box side, or one of the two dummy bars. The Kind enum doubles as the
// tie-break rank for objects with equal coordinates (right box borders come
// before segments, left box borders after, dummies always first/last).
struct NudgeObject {
  enum class Kind : int { DummyLo = 0, BoxSideHi = 1, Segment = 2, BoxSideLo = 3, DummyHi = 4 };
  Kind kind = Kind::Segment;
  int vertex = -1;  // box sides
  int path = -1;    // segments
  int seg = -1;     // segment index within the path
  double coord = 0.0;
  Interval extent;  // perpendicular span
  bool port_incident = false;

  bool is_dummy() const { return kind == Kind::DummyLo || kind == Kind::DummyHi; }
  bool is_box_side() const { return kind == Kind::BoxSideHi || kind == Kind::BoxSideLo; }
  // Objects that do not move in constrained mode (and act as barriers for
  // distance-variable sharing in both modes).
  bool immovable_class() const {
    return is_box_side() || (kind == Kind::Segment && port_incident);
  }
};

struct OrderChi {
  PassAxis axis = PassAxis::Horizontal;
  std::vector<NudgeObject> objects;  // sorted: dummies first/last
  Rect bounds;
};

struct ConstraintArc {
  int u = -1;
  int v = -1;
  bool removed_transitive = false;
  bool pink = false;      // both endpoints immovable-class: no distance variable
  bool same_path = false; // both endpoints segments of one path
  int component = -1;     // distance-variable component, -1 if none
};

struct ConstraintProblem {
  OrderChi chi;
  std::vector<ConstraintArc> arcs;
  int num_components = 0;
};

// The total order of all pass-perpendicular objects by coordinate; equal
// coordinates resolved by kind rank, bundle order (overlapping co-located
// segments), then owner ids. `order` may be null (externally supplied
// routings), in which case co-located segments fall back to id order.
OrderChi build_order_chi(const Drawing& drawing, PassAxis axis, const BundleOrder* order,
                         double delta_min);

// Constraint-graph arcs: u -> v iff the extents overlap, u precedes v in chi,
// and no object between them intersects their common extent. For the overlap
// test only, extents are inflated by overlap_margin/2 on each side (full
// nudging uses delta_min so that diagonal near-misses are also separated).
ConstraintProblem build_constraint_graph(const OrderChi& chi, double overlap_margin);

// Removes transitive arcs, marks pink arcs (immovable-class pairs), and
// splits the rest into components that share one distance variable each;
// barriers (immovable-class objects and dummies) separate components. With
// bend_collapse, arcs between segments of the same path get distance zero.
void simplify_constraints(ConstraintProblem* problem, NudgeMode mode, bool bend_collapse);

struct NudgeResult {
  std::vector<double> coords;        // solved coordinate per chi object
  std::vector<double> delta;         // per component (includes delta_min in full mode)
  double objective = 0.0;
  int lp_iterations = 0;
  // Witness data: the solved LP with variable/component maps.
  LinearProgram lp;
  LpSolution solution;
  std::vector<int> object_var;       // chi object -> LP var (-1 when fixed)
  std::vector<int> delta_var;        // component -> LP var
  std::vector<int> var_component;    // LP var -> component (-1 for positions of barriers etc.)
};

// Builds and solves the pass LP. Constrained mode keeps immovable-class
// coordinates fixed and minimizes |W|(omega - alpha) - sum(delta). Full mode
// makes everything movable, enforces delta_min on every surviving arc and
// original sizes on boxes, and minimizes
//   2(|W|+|S|)(omega + sum box sizes) + 2 sum perpendicular segment lengths
//   - sum(delta).
NudgeResult nudge(const ConstraintProblem& problem, NudgeMode mode, double delta_min,
                  const Drawing& drawing, bool bend_collapse);

struct NudgePassAudit {
  PassAxis axis = PassAxis::Horizontal;
  int objects = 0;
  int arcs = 0;
  int components = 0;
  double max_violation = 0.0;  // worst separation residual at the optimum
  NudgeResult result;
  ConstraintProblem problem;
};

struct NudgeOptions {
  NudgeMode mode = NudgeMode::Full;
  double delta_min = 12.0;
  std::vector<PassAxis> schedule = {PassAxis::Horizontal, PassAxis::Vertical,
                                    PassAxis::Horizontal};
  bool bend_collapse = false;
  bool collect_audit = false;
};

// Runs the pass schedule over the drawing, writing solved coordinates back
// into paths and boxes and re-joining collinear runs after each pass.
std::vector<NudgePassAudit> run_nudging_passes(Drawing* drawing, const BundleOrder* order,
                                               const NudgeOptions& options);

// Feasibility witness: no component's distance variable can be raised by
// gamma while everything outside the component stays at the optimum. Returns
// the index of a component whose delta could still be increased, or -1.
int find_improvable_component(const NudgeResult& result, double gamma);

}  // namespace ortho
