#pragma once

#include <vector>

#include "zcol/braid.hpp"

namespace zcol {

// Arc ids refer to the arcs of the braid closure: maximal strand segments
// between consecutive under-passes. One crossing per letter, in letter order.
struct Crossing {
  int over = -1;      // arc passing over (unbroken through the crossing)
  int under_in = -1;  // arc ending at this crossing
  int under_out = -1; // arc starting at this crossing
  int sign = 1;
};

// One step of a component walk: `arc` ends by passing under `crossing`.
struct TraceStep {
  int arc = -1;
  int crossing = -1;
  int sign = 1;
};

struct Diagram {
  BraidWord word;
  int n_arcs = 0;
  std::vector<Crossing> crossings;
  std::vector<int> left_ends;   // arc at each left-edge position (index 0 = top)
  std::vector<int> right_ends;  // arc at each right-edge position
  // Closure components as cycles of left-edge positions, each starting at its
  // smallest position; listed in increasing order of that position.
  std::vector<std::vector<int>> components;
  std::vector<int> arc_component;                // arc id -> component index
  std::vector<std::vector<TraceStep>> traces;    // per component, cyclic
  std::vector<std::vector<int>> pos_arc;         // [t][position], t = 0..letters

  // True when the crossing graph links all components into one piece.
  bool connected() const;
};

// Builds the closure diagram. Every component must pass under at least once
// (otherwise the arc model has no arc for it): CrossingFreeComponent.
Diagram close_braid(const BraidWord& w);

// Left-edge position of each strand of the permutation cycle containing
// position `pos` (the component through that position).
int component_of_position(const Diagram& d, int pos);

}  // namespace zcol
