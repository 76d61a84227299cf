#include "zcol/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace zcol {

namespace {

// Position the strand entering `pos` leaves letter l at, or `pos` untouched.
int step_position(int l, int pos) {
  int k = l > 0 ? l : -l;  // acts on positions (k-1, k)
  if (pos == k - 1 || pos == k) return pos == k - 1 ? k : k - 1;
  return pos;
}

// True when the strand entering `pos` passes under at letter l.
bool is_under(int l, int pos) {
  int k = l > 0 ? l : -l;
  if (l > 0) return pos == k;
  return pos == k - 1;
}

}  // namespace

Diagram close_braid(const BraidWord& w) {
  if (w.strands <= 0) fail(errc::NonPositiveStrands, "diagram needs at least one strand");
  for (int l : w.letters) {
    if (l == 0) fail(errc::MalformedWord, "generator 0 is not a letter");
    int a = l > 0 ? l : -l;
    if (a >= w.strands) fail(errc::GeneratorOutOfRange, "generator exceeds strand count");
  }

  const int b = w.strands;
  const int L = (int)w.letters.size();

  Diagram d;
  d.word = w;
  d.crossings.resize(L);
  for (int t = 0; t < L; ++t) d.crossings[t].sign = w.letters[t] > 0 ? 1 : -1;
  d.pos_arc.assign(L + 1, std::vector<int>(b, -1));

  // Closure permutation: left position -> right position of the same strand.
  std::vector<int> perm(b);
  for (int p = 0; p < b; ++p) {
    int pos = p;
    for (int t = 0; t < L; ++t) pos = step_position(w.letters[t], pos);
    perm[p] = pos;
  }

  // Components = cycles; ordered by smallest member.
  std::vector<int> comp_of(b, -1);
  for (int p = 0; p < b; ++p) {
    if (comp_of[p] != -1) continue;
    std::vector<int> cycle;
    int q = p;
    do {
      comp_of[q] = (int)d.components.size();
      cycle.push_back(q);
      q = perm[q];
    } while (q != p);
    d.components.push_back(std::move(cycle));
  }

  // Walk each component once, assigning arcs. The arc containing the walk
  // start keeps the first id; each under-pass exit starts the next arc, and
  // the final segment wraps around to the first id.
  int next_arc = 0;
  for (const std::vector<int>& cycle : d.components) {
    const int start = cycle.front();
    const int first_arc = next_arc;
    int arc = first_arc;
    std::vector<TraceStep> trace;
    std::vector<std::pair<int, int>> pending;  // (t, pos) cells awaiting arc ids
    int pos = start;
    do {
      for (int t = 0; t < L; ++t) {
        d.pos_arc[t][pos] = arc;
        int l = w.letters[t];
        if (is_under(l, pos)) {
          trace.push_back({arc, t, l > 0 ? 1 : -1});
          d.crossings[t].under_in = arc;
          arc = ++next_arc;  // provisional; the last one wraps to first_arc
          d.crossings[t].under_out = arc;
        }
        pos = step_position(l, pos);
      }
      d.pos_arc[L][pos] = arc;
      // closure: right edge position pos joins left edge position pos
    } while (pos != start);
    if (trace.empty())
      fail(errc::CrossingFreeComponent,
           "a closure component never passes under a crossing");
    // The arc after the last under-pass is the arc the walk started in.
    next_arc--;  // the wrap arc id was provisional
    for (auto& row : d.pos_arc)
      for (int& a : row)
        if (a == next_arc + 1) a = first_arc;
    for (int t = 0; t < L; ++t) {
      if (d.crossings[t].under_in == next_arc + 1) d.crossings[t].under_in = first_arc;
      if (d.crossings[t].under_out == next_arc + 1) d.crossings[t].under_out = first_arc;
    }
    for (TraceStep& s : trace)
      if (s.arc == next_arc + 1) s.arc = first_arc;
    d.traces.push_back(std::move(trace));
    next_arc++;
    (void)pending;
  }
  d.n_arcs = next_arc;

  d.left_ends = d.pos_arc.front();
  d.right_ends = d.pos_arc.back();

  // Over arcs: the strand entering the crossing's over slot.
  for (int t = 0; t < L; ++t) {
    int l = w.letters[t];
    int k = l > 0 ? l : -l;
    int over_pos = l > 0 ? k - 1 : k;
    d.crossings[t].over = d.pos_arc[t][over_pos];
  }

  d.arc_component.assign(d.n_arcs, -1);
  for (int c = 0; c < (int)d.components.size(); ++c)
    for (const TraceStep& s : d.traces[c]) d.arc_component[s.arc] = c;

  return d;
}

bool Diagram::connected() const {
  if (components.empty()) return true;
  std::vector<int> parent(components.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Crossing& c : crossings) {
    int a = find(arc_component[c.over]);
    int b = find(arc_component[c.under_in]);
    if (a != b) parent[a] = b;
  }
  int root = find(0);
  for (size_t i = 1; i < components.size(); ++i)
    if (find((int)i) != root) return false;
  return true;
}

int component_of_position(const Diagram& d, int pos) {
  for (int c = 0; c < (int)d.components.size(); ++c)
    for (int p : d.components[c])
      if (p == pos) return c;
  fail(errc::InvalidParams, "position outside the braid");
}

}  // namespace zcol
