#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zcol/braid.hpp"
#include "zcol/coloring.hpp"
#include "zcol/diagram.hpp"
#include "zcol/intmatrix.hpp"
#include "zcol/rack.hpp"

namespace zcol {

// ---- standard torus closures -------------------------------------------------

// Requirements: gcd(p,q) = 1, |p| >= q >= 1, r >= 2.
struct TorusParams {
  long long p = 0;
  long long q = 0;
  long long r = 0;
};
TorusParams torus_params(long long p, long long q, long long r);  // validates
void validate_torus_params(const TorusParams& t);

// Closure of the (p*r)-twist braid on q*r strands.
Diagram standard_diagram(const TorusParams& t);

// ---- the tuple calculus of the classification --------------------------------

// Alternating sum from the front: a_1 - a_2 + a_3 - ...
long long family_delta(const Tuple& a);
// Reflection tau(a)_i = -a_i + 2*family_delta(a). Involution for odd length.
Tuple family_tau(const Tuple& a);
// Left-end effect of one full twist: (a_1..a_b) -> (2a_1-a_2, ..., 2a_1-a_b, a_1).
Tuple one_twist(const Tuple& a);

// ---- classification of colorings (kernel description) ------------------------

// Which of the four parity regimes (p,q,r) falls into.
enum class FamilyCase { REven, ROddPEven, ROddQEven, AllOdd };
const char* family_case_name(FamilyCase c);

// The lattice of closing left-end tuples, described per parity case:
//   REven:     q equal blocks (a,...,a) with family_delta(a) = 0   (rank r-1)
//   ROddPEven: q equal blocks, a free                              (rank r)
//   ROddQEven: alternating blocks (a, tau(a), a, ..., tau(a))      (rank r)
//   AllOdd:    constant tuples only                                (rank 1)
struct ClassificationSet {
  TorusParams params;
  FamilyCase tag = FamilyCase::REven;
  std::vector<BigVec> generators;  // basis in seed space Z^{q*r}
  long long rank() const { return (long long)generators.size(); }
  bool contains(const BigVec& seed) const;  // exact membership in the case shape
  // All members whose free parameters lie in [lo, hi]; throws BudgetExceeded
  // past `cap` members.
  std::vector<BigVec> enumerate_box(long long lo, long long hi, long long cap = 1000000) const;
};
ClassificationSet classification_A(const TorusParams& t);

// The finite four-color seed catalogue for even r: tuples over {0..3} whose
// closure uses exactly the palette {0,1,2,3}. Lexicographically sorted;
// cardinality 2^{r/2+1} - 4 (empty at r = 2).
struct FourColorSet {
  long long r = 0;
  std::vector<Tuple> tuples;
  bool contains(const Tuple& a) const;
};
FourColorSet classification_A4(long long r);  // OddR for odd r

// ---- constructive seeds -------------------------------------------------------

// The concrete minimal-palette seeds, by parity case:
//   r even:            every block (1,0,...,0,1)        -> palette {0,1,2,3}
//   r odd, p even:     every block (1,0,...,0,1)        -> palette {0,...,4}
//   r odd, q even:     blocks alternate (2,1,...,1,0) / (0,1,...,1,2)
//   all odd:           UnsupportedParity
struct SeedColoring {
  TorusParams params;
  std::vector<Tuple> blocks;
  BigVec flat;  // concatenated, length q*r
  std::vector<long long> expected_palette;
  bool degenerate_r2 = false;  // r = 2 collapses the seed to a constant
};
SeedColoring seed_coloring(const TorusParams& t);

// ---- parallel-copy predictions ------------------------------------------------

// Predicted image of the left-end restriction on colorings of the n-parallel
// of a knot diagram: the fixed points of tau^w acting on Z^n (w = writhe).
struct ParallelPrediction {
  int n = 0;
  long long writhe = 0;
  std::vector<BigVec> basis;  // saturated basis of the predicted lattice
  long long rank() const { return (long long)basis.size(); }
};
ParallelPrediction predicted_parallel_image(const Diagram& d, int n);  // knot only

// Tuple transport past under-passages, odd length only: parity 0 keeps the
// tuple, parity 1 applies the reflection. UnsupportedParity for even length
// (use transport_power, which needs the full count).
Tuple transport(const Tuple& a, int parity);
// Tuple after m under-passages: tau^m for any length.
Tuple transport_power(const Tuple& a, long long m);

// ---- verification reports -------------------------------------------------------

enum class Status { Confirmed, Refuted, Vacuous };
const char* status_name(Status s);

struct ReportRow {
  long long p = 0, q = 0, r = 0;  // 0 when the row is not torus-parameterized
  std::string instance;
  std::string claimed;
  std::string computed;
  std::string witness;
  Status status = Status::Confirmed;
  std::string notes;
};

struct VerificationReport {
  std::string title;
  std::vector<ReportRow> rows;
  bool hypothesis_consistent = true;  // false when a stated hypothesis fails
  bool all_confirmed() const;
};

// Minimal palette size vs the claimed 4 (r even) / 5 (r odd): runs the pruned
// scans up to 5 colors. r = 2 is routed to a vacuous row (rank 1 kernel).
VerificationReport verify_minimal_palette(const TorusParams& t);

// Two-sided equality of kernel lattice and classification lattice: every
// generator closes, every kernel basis vector matches the case shape.
VerificationReport verify_classification(const TorusParams& t);

// Exhaustive {0..3}^{q*r} scan: box-palette nontrivial closing seeds must be
// exactly the q-fold repetitions of classification_A4(r).
VerificationReport verify_four_color_scan(const TorusParams& t);

// Kernel rank of the n-parallel closure vs prediction, injectivity and image
// equality of the left-end restriction, and the under-pass transport rule
// checked against full propagation for every kernel basis vector.
VerificationReport verify_parallel(const BraidWord& w, int n);

// Colorability-equivalence and classification grid over |p| <= pmax,
// 1 <= q <= qmax, gcd(p,q) = 1, |p| >= q, rmin <= r <= rmax, crossing count
// <= max_crossings. Instances run on a worker pool (ZCOL_WORKERS overrides
// the size); rows are merged in (p,q,r) order.
struct GridSpec {
  long long pmax = 5;
  long long qmax = 3;
  long long rmin = 2;
  long long rmax = 6;
  long long max_crossings = 150;
};
VerificationReport verify_grid(const GridSpec& g);

}  // namespace zcol
