#pragma once

#include <string>
#include <vector>

#include "zcol/error.hpp"

namespace zcol {

// Letters are nonzero integers; letter k (1-based, |k| < strands) acts on the
// pair of positions (k-1, k). Positive k: the strand entering at position k-1
// passes over and exits at position k.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

// Grammar: "<strands> ':' item*" where item is an integer letter or a group
// "( item* )^<exp>". A negative exponent inverts the group (reverse + negate).
BraidWord parse_braid(const std::string& text);

// Canonical flat form, "b: l1 l2 ...". parse_braid(format_braid(w)) == w.
std::string format_braid(const BraidWord& w);

// (sigma_1 ... sigma_{q-1})^p on q strands; negative p uses the inverse twist.
BraidWord torus_braid(long long p, int q);

// Replaces every strand by a band of n parallel copies. Each source letter
// expands to n*n crossings arranged so one band crosses the other whole.
struct CablePlan {
  int n = 1;
  BraidWord source;
  BraidWord cabled;
};
CablePlan cable(const BraidWord& w, int n);

// Writhe = sum of crossing signs.
long long writhe(const BraidWord& w);

}  // namespace zcol
