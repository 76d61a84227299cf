#include "zcol/coloring.hpp"

#include <cstdint>
#include <numeric>

namespace zcol {

IntMatrix coloring_matrix(const Diagram& d) {
  IntMatrix m((int)d.crossings.size(), d.n_arcs);
  for (int i = 0; i < (int)d.crossings.size(); ++i) {
    const Crossing& c = d.crossings[i];
    m.at(i, c.over) += 2;
    m.at(i, c.under_in) -= 1;
    m.at(i, c.under_out) -= 1;
  }
  return m;
}

BigInt link_determinant(const Diagram& d) {
  IntMatrix m = coloring_matrix(d);
  if (m.rows == 0 || m.cols == 0) return 1;
  return minor_abs_det(m, 0, 0);
}

std::vector<BigVec> coloring_lattice(const Diagram& d) {
  return kernel_basis(coloring_matrix(d));
}

bool is_Z_colorable(const Diagram& d) {
  return (int)coloring_lattice(d).size() >= 2;
}

BigVec coloring_from_seed(const Diagram& d, const BigVec& seed) {
  Propagation<BigInt> p = propagate<BigInt>(d.word, seed);
  if (!p.closes) fail(errc::ClosureMismatch, "seed does not close up around the braid");
  BigVec colors((size_t)d.n_arcs);
  std::vector<BigInt> c = seed;
  const auto& letters = d.word.letters;
  for (int t = 0; t <= (int)letters.size(); ++t) {
    for (int pos = 0; pos < d.word.strands; ++pos) colors[d.pos_arc[t][pos]] = c[pos];
    if (t == (int)letters.size()) break;
    int l = letters[t];
    int k = l > 0 ? l : -l;
    if (l > 0) {
      BigInt fresh = 2 * c[k - 1] - c[k];
      c[k] = c[k - 1];
      c[k - 1] = fresh;
    } else {
      BigInt fresh = 2 * c[k] - c[k - 1];
      c[k - 1] = c[k];
      c[k] = fresh;
    }
  }
  return colors;
}

BigVec normalize_coloring(const BigVec& colors) {
  if (colors.empty()) return colors;
  BigInt lo = colors[0];
  for (const BigInt& c : colors) lo = std::min(lo, c);
  BigInt g = 0;
  for (const BigInt& c : colors) g = boost::multiprecision::gcd(g, c - lo);
  BigVec out(colors.size());
  if (g == 0) return out;
  for (size_t i = 0; i < colors.size(); ++i) out[i] = (colors[i] - lo) / g;
  return out;
}

bool is_valid_coloring(const Diagram& d, const BigVec& colors) {
  if ((int)colors.size() != d.n_arcs) return false;
  for (const Crossing& c : d.crossings)
    if (2 * colors[c.over] - colors[c.under_in] - colors[c.under_out] != 0) return false;
  return true;
}

bool is_trivial_coloring(const BigVec& colors) {
  for (const BigInt& c : colors)
    if (c != colors[0]) return false;
  return true;
}

bool check_minmax_lemma(const Diagram& d, const BigVec& colors) {
  if (!is_valid_coloring(d, colors))
    fail(errc::InvalidColoring, "crossing relation violated before lemma check");
  BigInt lo = colors[0], hi = colors[0];
  for (const BigInt& c : colors) {
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  for (const Crossing& c : d.crossings) {
    if (colors[c.over] == lo || colors[c.over] == hi)
      if (colors[c.under_in] != colors[c.under_out]) return false;
  }
  return true;
}

namespace {

constexpr long long kUnknown = INT64_MIN;

struct BoxScanner {
  const BraidWord& w;
  long long lo, hi;
  bool nontrivial_only, first_only;
  long long node_budget;
  SeedScan out;
  std::vector<long long> seed;

  BoxScanner(const BraidWord& w_, long long lo_, long long hi_, bool nt, bool fo, long long nb)
      : w(w_), lo(lo_), hi(hi_), nontrivial_only(nt), first_only(fo), node_budget(nb),
        seed((size_t)w_.strands, kUnknown) {}

  // Sweep with unknowns; false = some known value escapes the box or a known
  // final color contradicts the seed.
  bool feasible(bool* closes_out) {
    std::vector<long long> c = seed;
    for (int l : w.letters) {
      int k = l > 0 ? l : -l;
      long long over = l > 0 ? c[k - 1] : c[k];
      long long under = l > 0 ? c[k] : c[k - 1];
      long long fresh = (over == kUnknown || under == kUnknown) ? kUnknown : 2 * over - under;
      if (fresh != kUnknown && (fresh < lo || fresh > hi)) return false;
      if (l > 0) {
        c[k] = c[k - 1];
        c[k - 1] = fresh;
      } else {
        c[k - 1] = c[k];
        c[k] = fresh;
      }
    }
    bool closes = true;
    for (int p = 0; p < w.strands; ++p) {
      if (c[p] == kUnknown || seed[p] == kUnknown) {
        closes = false;
        continue;
      }
      if (c[p] != seed[p]) return false;
    }
    if (closes_out) *closes_out = closes;
    return true;
  }

  bool trivial_seed() const {
    for (long long v : seed)
      if (v != seed[0]) return false;
    return true;
  }

  // Returns true to stop the whole scan.
  bool rec(int depth) {
    if (node_budget >= 0 && ++out.nodes > node_budget)
      fail(errc::BudgetExceeded, "seed scan exceeded its node budget");
    if (node_budget < 0) ++out.nodes;
    bool closes = false;
    if (!feasible(&closes)) return false;
    if (depth == w.strands) {
      if (!closes) return false;
      if (nontrivial_only && trivial_seed()) return false;
      out.seeds.push_back(seed);
      return first_only;
    }
    for (long long v = lo; v <= hi; ++v) {
      seed[depth] = v;
      if (rec(depth + 1)) {
        seed[depth] = kUnknown;
        return true;
      }
    }
    seed[depth] = kUnknown;
    return false;
  }
};

}  // namespace

SeedScan enumerate_box_seeds(const BraidWord& w, long long lo, long long hi, bool nontrivial_only,
                             bool first_only, long long node_budget) {
  if (lo > hi) fail(errc::InvalidParams, "empty color box");
  BoxScanner scanner(w, lo, hi, nontrivial_only, first_only, node_budget);
  scanner.out.stopped_early = scanner.rec(0);
  return scanner.out;
}

std::optional<BigVec> mincol_bounded(const Diagram& d, int m) {
  if (m < 2) fail(errc::InvalidParams, "palette bound must be at least 2");
  SeedScan scan =
      enumerate_box_seeds(d.word, 0, m - 1, /*nontrivial_only=*/true, /*first_only=*/true);
  if (scan.seeds.empty()) return std::nullopt;
  BigVec seed(scan.seeds[0].begin(), scan.seeds[0].end());
  return coloring_from_seed(d, seed);
}

MincolResult mincol_search(const Diagram& d, int m_max) {
  if (!is_Z_colorable(d))
    fail(errc::NotColorable, "no nontrivial coloring exists at any palette size");
  MincolResult r;
  for (int m = 2; m <= m_max; ++m) {
    SeedScan scan = enumerate_box_seeds(d.word, 0, m - 1, /*nontrivial_only=*/true,
                                        /*first_only=*/true);
    if (scan.seeds.empty()) {
      r.scan_counts.push_back(0);
      continue;
    }
    r.scan_counts.push_back((long long)scan.seeds.size());
    r.witness_seed = scan.seeds[0];
    BigVec seed(scan.seeds[0].begin(), scan.seeds[0].end());
    r.witness_coloring = coloring_from_seed(d, seed);
    BigVec sorted = r.witness_coloring;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const BigInt& c : sorted) r.witness_palette.push_back(c.convert_to<long long>());
    r.mincol = (int)r.witness_palette.size();
    // Scans below the hit level were exhaustive; they bound from below only
    // while palette normalization applies (sizes up to 4).
    r.lower_bound_proved = r.mincol <= 5;
    return r;
  }
  return r;
}

}  // namespace zcol
