#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zcol/braid.hpp"
#include "zcol/diagram.hpp"
#include "zcol/intmatrix.hpp"

namespace zcol {

// ---- finite racks ----------------------------------------------------------

// Mini-grammar: "cyclic:k" | "dihedral:m" | "znr:n[:mod]". Without a modulus
// the n-fold carrier is infinite; only the closed-form tuple ops below apply.
struct RackSpec {
  enum Kind { Cyclic, Dihedral, ZnMod, ZnFree } kind = Cyclic;
  long long k = 0;  // cyclic order / dihedral modulus / tuple modulus
  int n = 0;        // tuple length for Zn kinds
};
RackSpec parse_rack(const std::string& text);
std::string format_rack(const RackSpec& spec);

inline constexpr long long kCarrierCap = 4096;

// Carrier = {0..size-1}. Right translations are bijections; op/inv_op are
// mutually inverse in the second-argument sense.
class FiniteRack {
 public:
  static FiniteRack cyclic(long long k);
  static FiniteRack dihedral(long long m);
  static FiniteRack zn_mod(int n, long long mod);
  static FiniteRack from_spec(const RackSpec& spec);  // CarrierTooLarge for ZnFree

  long long size() const { return size_; }
  int op(int x, int y) const { return op_(x, y); }
  int inv_op(int x, int y) const { return inv_(x, y); }
  int kink(int x) const { return op_(x, x); }          // tau
  int kink_inv(int x) const { return inv_(x, x); }     // tau^{-1}
  int quandle_op(int x, int y) const { return op_(inv_(x, x), y); }
  int quandle_inv_op(int x, int y) const { return kink(inv_(x, y)); }

  // Same carrier, operation x *_Q y.
  FiniteRack associated_quandle() const;

  const std::string& label() const { return label_; }
  std::string element_name(int x) const { return namer_(x); }

 private:
  FiniteRack() = default;
  long long size_ = 0;
  std::function<int(int, int)> op_, inv_;
  std::function<std::string(int)> namer_;
  std::string label_;
};

// Self-distributivity and translation bijectivity. Exhaustive when
// size^3 <= triple_budget, otherwise a deterministic sample of that many
// triples (translation bijectivity stays exhaustive).
bool verify_rack_axioms(const FiniteRack& r, long long triple_budget = 20000000);

// ---- orbit structure -------------------------------------------------------

// Largest connected subrack containing x: computed as the limit of
// "orbit of x under translations by the current set", starting from the
// whole-carrier inner orbit. The limit is a connected subrack containing
// every connected subrack through x.
std::vector<int> maximal_connected_subrack(const FiniteRack& r, int x);

// Orbit of x under translations by all carrier elements.
std::vector<int> inner_orbit(const FiniteRack& r, int x);

struct OrbitDecomposition {
  std::vector<std::vector<int>> components;  // maximal connected subracks
  std::vector<int> component_of;
  std::vector<bool> cyclic;  // component isomorphic to a cyclic rack
};
OrbitDecomposition op_orbits(const FiniteRack& r);

// Every maximal connected subrack is a cyclic rack: the induced operation is
// independent of the right argument and its successor is one full cycle.
bool verify_maxlem(const FiniteRack& r);

// For every x: the maximal connected subrack of x equals the union over m of
// tau^m applied to the maximal connected subquandle of x.
bool verify_tau_lemma(const FiniteRack& r);

// ---- rack coloring of closures ---------------------------------------------

struct RackPropagation {
  std::vector<int> final_colors;
  bool closes = false;
};
// Positive letter: under color -> under * over; negative: under \bar* over.
RackPropagation rack_propagate(const FiniteRack& r, const BraidWord& w,
                               const std::vector<int>& seed);

// All fixed seeds of the closure; carrier^strands capped by seed_budget.
std::vector<std::vector<int>> rack_colorings_of_closure(const FiniteRack& r, const BraidWord& w,
                                                        long long seed_budget = 4000000);

// ---- n-fold tuple rack over the integers ------------------------------------

using Tuple = std::vector<long long>;

// S(x) = x_n - x_{n-1} + ... + (-1)^{n-1} x_1.
long long alt_sum(const Tuple& x);

// Iterated mirror fold ((x ∘ y_1) ∘ y_2) ... ∘ y_n with a ∘ b = 2b - a.
Tuple zn_fold(const Tuple& x, const Tuple& y);
Tuple zn_fold_inv(const Tuple& z, const Tuple& y);

// Closed forms: the fold collapses to (-1)^n x + 2 S(y) on every coordinate.
Tuple zn_op(const Tuple& x, const Tuple& y);
Tuple zn_inv_op(const Tuple& z, const Tuple& y);
Tuple zn_quandle_op(const Tuple& x, const Tuple& y);  // x + 2(S(y) - S(x))
Tuple zn_tau(const Tuple& x);                         // (-1)^n x + 2 S(x)
Tuple zn_tau_power(const Tuple& x, long long m);

// Deterministic random-triple check of the tuple rack axioms.
bool verify_zn_axioms_sampled(int n, int trials, unsigned seed);

// Tuple-valued propagation through a braid word (one tuple per strand).
struct ZnPropagation {
  std::vector<Tuple> final_colors;
  bool closes = false;
};
ZnPropagation zn_propagate(const BraidWord& w, const std::vector<Tuple>& seed);

// ---- parallel copies <-> tuple colorings ------------------------------------

// Tuple index j (1-based) of source position p lives at cable position
// n*p + (n - j): index 1 is the bottom copy of the band.
struct ParallelBijection {
  CablePlan plan;
  Diagram source;
  Diagram cabled;
};
ParallelBijection make_parallel_bijection(const BraidWord& w, int n);

// Flatten tuple seed -> cable left-edge seed, and back.
BigVec flatten_tuple_seed(const ParallelBijection& pb, const std::vector<Tuple>& seed);
std::vector<Tuple> unflatten_seed(const ParallelBijection& pb, const BigVec& cable_seed);

// Closing tuple seed -> Z-coloring of the cabled closure (ClosureMismatch if
// the flattened seed fails to close), and the inverse on left ends.
BigVec bijection_to_z(const ParallelBijection& pb, const std::vector<Tuple>& seed);
std::vector<Tuple> bijection_to_tuples(const ParallelBijection& pb, const BigVec& cable_coloring);

}  // namespace zcol
