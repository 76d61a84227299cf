#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "zcol/diagram.hpp"
#include "zcol/intmatrix.hpp"

namespace zcol {

// One row per crossing (letter order): 2*over - under_in - under_out,
// coefficients folded when slots share an arc. Columns follow arc ids.
IntMatrix coloring_matrix(const Diagram& d);

// |det| of the matrix with the first row and column removed. Shared by all
// first minors; 1 for the one-arc diagram (empty minor).
BigInt link_determinant(const Diagram& d);

// Saturated basis of the integer kernel: all arc colorings.
std::vector<BigVec> coloring_lattice(const Diagram& d);

// True iff a nontrivial (non-constant) coloring exists: kernel rank >= 2.
bool is_Z_colorable(const Diagram& d);

template <class Int>
struct Propagation {
  std::vector<Int> final_colors;
  bool closes = false;
  std::vector<Int> palette;  // sorted distinct: seed colors + every under-pass output
};

// Left-to-right sweep of left-edge colors through the braid word.
template <class Int>
Propagation<Int> propagate(const BraidWord& w, const std::vector<Int>& seed) {
  if ((int)seed.size() != w.strands)
    fail(errc::LengthMismatch, "seed length must equal strand count");
  Propagation<Int> out;
  std::vector<Int> c = seed;
  std::vector<Int> seen = seed;
  for (int l : w.letters) {
    int k = l > 0 ? l : -l;
    Int fresh;
    if (l > 0) {
      fresh = 2 * c[k - 1] - c[k];
      c[k] = c[k - 1];
      c[k - 1] = fresh;
    } else {
      fresh = 2 * c[k] - c[k - 1];
      c[k - 1] = c[k];
      c[k] = fresh;
    }
    seen.push_back(fresh);
  }
  out.closes = (c == seed);
  out.final_colors = std::move(c);
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  out.palette = std::move(seen);
  return out;
}

// Full arc coloring determined by left-edge colors. ClosureMismatch when the
// sweep disagrees with the seed at the right edge.
BigVec coloring_from_seed(const Diagram& d, const BigVec& seed);

// Shift to min 0 and divide by the gcd of the gaps. Constant input maps to 0s.
BigVec normalize_coloring(const BigVec& colors);

bool is_valid_coloring(const Diagram& d, const BigVec& colors);
bool is_trivial_coloring(const BigVec& colors);

// At every crossing whose over arc carries the palette min (resp. max), both
// under arcs must agree. Holds for every valid coloring; InvalidColoring when
// the input fails crossing-relation validation.
bool check_minmax_lemma(const Diagram& d, const BigVec& colors);

// All closing left-edge seeds with every propagated color inside [lo, hi].
// Pruned depth-first scan; seeds listed lexicographically.
struct SeedScan {
  std::vector<std::vector<long long>> seeds;
  long long nodes = 0;
  bool stopped_early = false;
};
SeedScan enumerate_box_seeds(const BraidWord& w, long long lo, long long hi,
                             bool nontrivial_only = false, bool first_only = false,
                             long long node_budget = -1);

// Least palette size over nontrivial colorings found scanning m = 2..m_max
// with box {0..m-1}. Sound lower bounds up to 4 (palette normalization);
// m >= 5 levels only exhibit witnesses.
struct MincolResult {
  int mincol = 0;  // 0 when nothing was found up to m_max
  std::vector<long long> witness_seed;
  BigVec witness_coloring;                 // full arc coloring
  std::vector<long long> witness_palette;  // sorted distinct colors
  bool lower_bound_proved = false;
  std::vector<long long> scan_counts;  // closing nontrivial seeds per m = 2,3,...
};
std::optional<BigVec> mincol_bounded(const Diagram& d, int m);
MincolResult mincol_search(const Diagram& d, int m_max);

}  // namespace zcol
