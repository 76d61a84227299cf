#include "zcol/rack.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "zcol/coloring.hpp"

namespace zcol {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

long long parse_positive(const std::string& field, const std::string& what) {
  if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos)
    fail(errc::InvalidParams, what + " must be a positive integer, got '" + field + "'");
  long long v = 0;
  try {
    v = std::stoll(field);
  } catch (const std::exception&) {
    fail(errc::InvalidParams, what + " out of range: '" + field + "'");
  }
  if (v <= 0) fail(errc::InvalidParams, what + " must be positive, got '" + field + "'");
  return v;
}

long long checked_carrier(long long size, const std::string& label) {
  if (size > kCarrierCap)
    fail(errc::CarrierTooLarge,
         label + " has carrier size " + std::to_string(size) + " > cap " +
             std::to_string(kCarrierCap));
  return size;
}

long long mod_norm(long long v, long long m) { return ((v % m) + m) % m; }

}  // namespace

RackSpec parse_rack(const std::string& text) {
  std::vector<std::string> parts = split(text, ':');
  RackSpec spec;
  const std::string& head = parts[0];
  if (head == "cyclic" || head == "dihedral") {
    if (parts.size() != 2)
      fail(errc::InvalidParams, "expected '" + head + ":k', got '" + text + "'");
    spec.kind = head == "cyclic" ? RackSpec::Cyclic : RackSpec::Dihedral;
    spec.k = parse_positive(parts[1], head + " parameter");
  } else if (head == "znr") {
    if (parts.size() != 2 && parts.size() != 3)
      fail(errc::InvalidParams, "expected 'znr:n' or 'znr:n:mod', got '" + text + "'");
    spec.n = (int)parse_positive(parts[1], "tuple length");
    if (parts.size() == 3) {
      spec.kind = RackSpec::ZnMod;
      spec.k = parse_positive(parts[2], "tuple modulus");
    } else {
      spec.kind = RackSpec::ZnFree;
    }
  } else {
    fail(errc::InvalidParams, "unknown rack kind '" + head + "'");
  }
  return spec;
}

std::string format_rack(const RackSpec& spec) {
  switch (spec.kind) {
    case RackSpec::Cyclic:
      return "cyclic:" + std::to_string(spec.k);
    case RackSpec::Dihedral:
      return "dihedral:" + std::to_string(spec.k);
    case RackSpec::ZnMod:
      return "znr:" + std::to_string(spec.n) + ":" + std::to_string(spec.k);
    case RackSpec::ZnFree:
      return "znr:" + std::to_string(spec.n);
  }
  fail(errc::InvalidParams, "corrupt rack spec");
}

FiniteRack FiniteRack::cyclic(long long k) {
  if (k <= 0) fail(errc::InvalidParams, "cyclic rack order must be positive");
  FiniteRack r;
  r.size_ = checked_carrier(k, "cyclic:" + std::to_string(k));
  r.op_ = [k](int x, int) { return (int)((x + 1) % k); };
  r.inv_ = [k](int x, int) { return (int)((x - 1 + k) % k); };
  r.namer_ = [](int x) { return std::to_string(x); };
  r.label_ = "cyclic:" + std::to_string(k);
  return r;
}

FiniteRack FiniteRack::dihedral(long long m) {
  if (m <= 0) fail(errc::InvalidParams, "dihedral rack modulus must be positive");
  FiniteRack r;
  r.size_ = checked_carrier(m, "dihedral:" + std::to_string(m));
  r.op_ = [m](int x, int y) { return (int)mod_norm(2LL * y - x, m); };
  r.inv_ = r.op_;  // reflections are involutions
  r.namer_ = [](int x) { return std::to_string(x); };
  r.label_ = "dihedral:" + std::to_string(m);
  return r;
}

FiniteRack FiniteRack::zn_mod(int n, long long mod) {
  if (n <= 0 || mod <= 0) fail(errc::InvalidParams, "tuple rack needs n >= 1 and mod >= 1");
  std::string label = "znr:" + std::to_string(n) + ":" + std::to_string(mod);
  long long size = 1;
  for (int i = 0; i < n; ++i) {
    if (size > kCarrierCap / mod + 1) fail(errc::CarrierTooLarge, label + " carrier overflows cap");
    size *= mod;
  }
  checked_carrier(size, label);
  auto decode = [n, mod](int idx) {
    Tuple x((size_t)n);
    long long v = idx;
    for (int i = n - 1; i >= 0; --i) {
      x[(size_t)i] = v % mod;
      v /= mod;
    }
    return x;
  };
  auto encode = [n, mod](const Tuple& x) {
    long long idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * mod + mod_norm(x[(size_t)i], mod);
    return (int)idx;
  };
  FiniteRack r;
  r.size_ = size;
  r.op_ = [decode, encode](int x, int y) { return encode(zn_op(decode(x), decode(y))); };
  r.inv_ = [decode, encode](int x, int y) { return encode(zn_inv_op(decode(x), decode(y))); };
  r.namer_ = [decode, n](int x) {
    Tuple t = decode(x);
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < n; ++i) os << (i ? "," : "") << t[(size_t)i];
    os << ')';
    return os.str();
  };
  r.label_ = label;
  return r;
}

FiniteRack FiniteRack::from_spec(const RackSpec& spec) {
  switch (spec.kind) {
    case RackSpec::Cyclic:
      return cyclic(spec.k);
    case RackSpec::Dihedral:
      return dihedral(spec.k);
    case RackSpec::ZnMod:
      return zn_mod(spec.n, spec.k);
    case RackSpec::ZnFree:
      fail(errc::CarrierTooLarge, "znr:" + std::to_string(spec.n) +
                                      " has an infinite carrier; supply a modulus for "
                                      "table-based operations");
  }
  fail(errc::InvalidParams, "corrupt rack spec");
}

FiniteRack FiniteRack::associated_quandle() const {
  FiniteRack q = *this;
  auto op = op_;
  auto inv = inv_;
  q.op_ = [op, inv](int x, int y) { return op(inv(x, x), y); };
  q.inv_ = [op, inv](int z, int y) {
    int w = inv(z, y);
    return op(w, w);
  };
  q.label_ = label_ + ":quandle";
  return q;
}

bool verify_rack_axioms(const FiniteRack& r, long long triple_budget) {
  const int n = (int)r.size();
  // Right translations are bijections with the declared inverse.
  for (int y = 0; y < n; ++y) {
    std::vector<char> seen((size_t)n, 0);
    for (int x = 0; x < n; ++x) {
      int t = r.op(x, y);
      if (t < 0 || t >= n || seen[(size_t)t]) return false;
      seen[(size_t)t] = 1;
      if (r.inv_op(t, y) != x) return false;
    }
  }
  // Self-distributivity: exhaustive when affordable, sampled otherwise.
  auto sd = [&](int x, int y, int z) {
    return r.op(r.op(x, y), z) == r.op(r.op(x, z), r.op(y, z));
  };
  long long cube = (long long)n * n * n;
  if (cube <= triple_budget) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (!sd(x, y, z)) return false;
  } else {
    std::mt19937 rng(0x5eedu);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (long long t = 0; t < triple_budget; ++t)
      if (!sd(pick(rng), pick(rng), pick(rng))) return false;
  }
  return true;
}

std::vector<int> inner_orbit(const FiniteRack& r, int x) {
  const int n = (int)r.size();
  std::vector<char> in((size_t)n, 0);
  std::vector<int> queue = {x};
  in[(size_t)x] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    int a = queue[head];
    for (int y = 0; y < n; ++y)
      for (int b : {r.op(a, y), r.inv_op(a, y)})
        if (!in[(size_t)b]) {
          in[(size_t)b] = 1;
          queue.push_back(b);
        }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

namespace {

// Orbit of x under translations by members of `gens` only.
std::vector<int> orbit_under(const FiniteRack& r, int x, const std::vector<int>& gens) {
  std::vector<char> in((size_t)r.size(), 0);
  std::vector<int> queue = {x};
  in[(size_t)x] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    int a = queue[head];
    for (int y : gens)
      for (int b : {r.op(a, y), r.inv_op(a, y)})
        if (!in[(size_t)b]) {
          in[(size_t)b] = 1;
          queue.push_back(b);
        }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace

std::vector<int> maximal_connected_subrack(const FiniteRack& r, int x) {
  // Shrinking fixpoint: start from the full inner orbit, then repeatedly keep
  // only what translations by current members reach from x. Every connected
  // subrack through x survives each step, and the limit is itself a connected
  // subrack, hence the unique maximal one.
  std::vector<int> cur = inner_orbit(r, x);
  for (;;) {
    std::vector<int> next = orbit_under(r, x, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

OrbitDecomposition op_orbits(const FiniteRack& r) {
  const int n = (int)r.size();
  OrbitDecomposition od;
  od.component_of.assign((size_t)n, -1);
  for (int x = 0; x < n; ++x) {
    if (od.component_of[(size_t)x] != -1) continue;
    std::vector<int> comp = maximal_connected_subrack(r, x);
    int id = (int)od.components.size();
    for (int m : comp) od.component_of[(size_t)m] = id;
    od.components.push_back(std::move(comp));
  }
  od.cyclic.resize(od.components.size());
  for (size_t c = 0; c < od.components.size(); ++c) {
    const std::vector<int>& mem = od.components[c];
    // Induced op must ignore the right argument...
    bool ok = true;
    std::vector<int> succ;
    for (int a : mem) {
      int s = r.op(a, mem[0]);
      for (int b : mem)
        if (r.op(a, b) != s) ok = false;
      succ.push_back(s);
    }
    // ...and its successor must trace one full cycle.
    if (ok) {
      int steps = 0, at = 0;
      std::vector<char> seen(mem.size(), 0);
      do {
        if (seen[(size_t)at]) {
          ok = false;
          break;
        }
        seen[(size_t)at] = 1;
        int target = succ[(size_t)at];
        at = (int)(std::lower_bound(mem.begin(), mem.end(), target) - mem.begin());
        ++steps;
      } while (at != 0 && steps <= (int)mem.size());
      if (steps != (int)mem.size()) ok = false;
    }
    od.cyclic[c] = ok;
  }
  return od;
}

bool verify_maxlem(const FiniteRack& r) {
  OrbitDecomposition od = op_orbits(r);
  for (bool c : od.cyclic)
    if (!c) return false;
  return true;
}

bool verify_tau_lemma(const FiniteRack& r) {
  FiniteRack q = r.associated_quandle();
  const int n = (int)r.size();
  for (int x = 0; x < n; ++x) {
    std::vector<int> mx = maximal_connected_subrack(r, x);
    std::vector<int> mqx = maximal_connected_subrack(q, x);
    // Union over all powers of the kink map = closure under kink and its
    // inverse (the kink map is a bijection).
    std::vector<char> in((size_t)n, 0);
    std::vector<int> queue = mqx;
    for (int m : mqx) in[(size_t)m] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int a = queue[head];
      for (int b : {r.kink(a), r.kink_inv(a)})
        if (!in[(size_t)b]) {
          in[(size_t)b] = 1;
          queue.push_back(b);
        }
    }
    std::sort(queue.begin(), queue.end());
    if (queue != mx) return false;
  }
  return true;
}

RackPropagation rack_propagate(const FiniteRack& r, const BraidWord& w,
                               const std::vector<int>& seed) {
  if ((int)seed.size() != w.strands)
    fail(errc::LengthMismatch, "seed length must equal strand count");
  for (int c : seed)
    if (c < 0 || c >= r.size())
      fail(errc::InvalidColoring, "seed color " + std::to_string(c) + " outside carrier of " +
                                      r.label());
  RackPropagation out;
  std::vector<int> c = seed;
  for (int l : w.letters) {
    int k = l > 0 ? l : -l;
    if (l > 0) {
      int fresh = r.op(c[(size_t)k], c[(size_t)k - 1]);  // under * over
      c[(size_t)k] = c[(size_t)k - 1];
      c[(size_t)k - 1] = fresh;
    } else {
      int fresh = r.inv_op(c[(size_t)k - 1], c[(size_t)k]);
      c[(size_t)k - 1] = c[(size_t)k];
      c[(size_t)k] = fresh;
    }
  }
  out.closes = (c == seed);
  out.final_colors = std::move(c);
  return out;
}

std::vector<std::vector<int>> rack_colorings_of_closure(const FiniteRack& r, const BraidWord& w,
                                                        long long seed_budget) {
  long long total = 1;
  for (int i = 0; i < w.strands; ++i) {
    if (total > seed_budget / r.size() + 1)
      fail(errc::BudgetExceeded, "seed space " + r.label() + "^" + std::to_string(w.strands) +
                                     " exceeds budget " + std::to_string(seed_budget));
    total *= r.size();
  }
  if (total > seed_budget)
    fail(errc::BudgetExceeded, "seed space size " + std::to_string(total) + " exceeds budget " +
                                   std::to_string(seed_budget));
  std::vector<std::vector<int>> out;
  std::vector<int> seed((size_t)w.strands, 0);
  for (;;) {
    if (rack_propagate(r, w, seed).closes) out.push_back(seed);
    int i = w.strands - 1;
    while (i >= 0 && seed[(size_t)i] == r.size() - 1) seed[(size_t)i--] = 0;
    if (i < 0) break;
    seed[(size_t)i]++;
  }
  return out;
}

// ---- n-fold tuple rack -------------------------------------------------------

long long alt_sum(const Tuple& x) {
  long long s = 0, sign = 1;
  for (size_t i = x.size(); i-- > 0;) {
    s += sign * x[i];
    sign = -sign;
  }
  return s;
}

Tuple zn_fold(const Tuple& x, const Tuple& y) {
  if (x.size() != y.size() || x.empty())
    fail(errc::LengthMismatch, "tuple operands must share a positive length");
  Tuple cur = x;
  for (long long b : y)
    for (long long& a : cur) a = 2 * b - a;
  return cur;
}

Tuple zn_fold_inv(const Tuple& z, const Tuple& y) {
  if (z.size() != y.size() || z.empty())
    fail(errc::LengthMismatch, "tuple operands must share a positive length");
  Tuple cur = z;
  for (size_t i = y.size(); i-- > 0;)
    for (long long& a : cur) a = 2 * y[i] - a;
  return cur;
}

Tuple zn_op(const Tuple& x, const Tuple& y) {
  if (x.size() != y.size() || x.empty())
    fail(errc::LengthMismatch, "tuple operands must share a positive length");
  long long sign = x.size() % 2 == 0 ? 1 : -1;
  long long shift = 2 * alt_sum(y);
  Tuple out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = sign * x[i] + shift;
  return out;
}

Tuple zn_inv_op(const Tuple& z, const Tuple& y) {
  if (z.size() != y.size() || z.empty())
    fail(errc::LengthMismatch, "tuple operands must share a positive length");
  long long shift = 2 * alt_sum(y);
  Tuple out(z.size());
  if (z.size() % 2 == 0) {
    for (size_t i = 0; i < z.size(); ++i) out[i] = z[i] - shift;
  } else {
    for (size_t i = 0; i < z.size(); ++i) out[i] = -z[i] + shift;
  }
  return out;
}

Tuple zn_quandle_op(const Tuple& x, const Tuple& y) {
  if (x.size() != y.size() || x.empty())
    fail(errc::LengthMismatch, "tuple operands must share a positive length");
  long long shift = 2 * (alt_sum(y) - alt_sum(x));
  Tuple out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + shift;
  return out;
}

Tuple zn_tau(const Tuple& x) { return zn_op(x, x); }

Tuple zn_tau_power(const Tuple& x, long long m) {
  if (x.empty()) fail(errc::LengthMismatch, "tuple must have positive length");
  if (x.size() % 2 == 0) {
    long long shift = 2 * m * alt_sum(x);
    Tuple out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + shift;
    return out;
  }
  return mod_norm(m, 2) == 1 ? zn_tau(x) : x;
}

bool verify_zn_axioms_sampled(int n, int trials, unsigned seed) {
  if (n <= 0) fail(errc::InvalidParams, "tuple length must be positive");
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long long> val(-50, 50);
  auto draw = [&] {
    Tuple t((size_t)n);
    for (auto& e : t) e = val(rng);
    return t;
  };
  for (int t = 0; t < trials; ++t) {
    Tuple x = draw(), y = draw(), z = draw();
    if (zn_fold(x, y) != zn_op(x, y)) return false;
    if (zn_op(zn_op(x, y), z) != zn_op(zn_op(x, z), zn_op(y, z))) return false;
    if (zn_inv_op(zn_op(x, y), y) != x) return false;
    if (zn_op(zn_inv_op(x, y), y) != x) return false;
    if (zn_quandle_op(x, y) != zn_op(zn_inv_op(x, x), y)) return false;
  }
  return true;
}

ZnPropagation zn_propagate(const BraidWord& w, const std::vector<Tuple>& seed) {
  if ((int)seed.size() != w.strands)
    fail(errc::LengthMismatch, "seed needs one tuple per strand");
  if (seed.empty() || seed[0].empty()) fail(errc::LengthMismatch, "tuples must be non-empty");
  for (const Tuple& t : seed)
    if (t.size() != seed[0].size())
      fail(errc::LengthMismatch, "all strand tuples must share one length");
  ZnPropagation out;
  std::vector<Tuple> c = seed;
  for (int l : w.letters) {
    int k = l > 0 ? l : -l;
    if (l > 0) {
      Tuple fresh = zn_op(c[(size_t)k], c[(size_t)k - 1]);
      c[(size_t)k] = c[(size_t)k - 1];
      c[(size_t)k - 1] = std::move(fresh);
    } else {
      Tuple fresh = zn_inv_op(c[(size_t)k - 1], c[(size_t)k]);
      c[(size_t)k - 1] = c[(size_t)k];
      c[(size_t)k] = std::move(fresh);
    }
  }
  out.closes = (c == seed);
  out.final_colors = std::move(c);
  return out;
}

// ---- parallel copies ---------------------------------------------------------

ParallelBijection make_parallel_bijection(const BraidWord& w, int n) {
  if (n <= 0) fail(errc::InvalidParams, "copy count must be positive");
  ParallelBijection pb;
  pb.plan = cable(w, n);
  pb.source = close_braid(w);
  pb.cabled = close_braid(pb.plan.cabled);
  return pb;
}

BigVec flatten_tuple_seed(const ParallelBijection& pb, const std::vector<Tuple>& seed) {
  const int n = pb.plan.n;
  const int strands = pb.plan.source.strands;
  if ((int)seed.size() != strands) fail(errc::LengthMismatch, "need one tuple per source strand");
  BigVec flat((size_t)(n * strands));
  for (int b = 0; b < strands; ++b) {
    if ((int)seed[(size_t)b].size() != n)
      fail(errc::LengthMismatch, "tuple length must match the copy count");
    for (int j = 1; j <= n; ++j) flat[(size_t)(b * n + n - j)] = seed[(size_t)b][(size_t)(j - 1)];
  }
  return flat;
}

std::vector<Tuple> unflatten_seed(const ParallelBijection& pb, const BigVec& cable_seed) {
  const int n = pb.plan.n;
  const int strands = pb.plan.source.strands;
  if ((int)cable_seed.size() != n * strands)
    fail(errc::LengthMismatch, "cable seed length must be copies * source strands");
  std::vector<Tuple> seed((size_t)strands, Tuple((size_t)n));
  for (int b = 0; b < strands; ++b)
    for (int j = 1; j <= n; ++j)
      seed[(size_t)b][(size_t)(j - 1)] =
          cable_seed[(size_t)(b * n + n - j)].convert_to<long long>();
  return seed;
}

BigVec bijection_to_z(const ParallelBijection& pb, const std::vector<Tuple>& seed) {
  return coloring_from_seed(pb.cabled, flatten_tuple_seed(pb, seed));
}

std::vector<Tuple> bijection_to_tuples(const ParallelBijection& pb, const BigVec& cable_coloring) {
  if ((int)cable_coloring.size() != pb.cabled.n_arcs)
    fail(errc::LengthMismatch, "coloring length must match the cabled arc count");
  BigVec left((size_t)pb.cabled.word.strands);
  for (int p = 0; p < pb.cabled.word.strands; ++p)
    left[(size_t)p] = cable_coloring[(size_t)pb.cabled.left_ends[(size_t)p]];
  return unflatten_seed(pb, left);
}

}  // namespace zcol
