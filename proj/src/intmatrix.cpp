#include "zcol/intmatrix.hpp"

#include <algorithm>

namespace zcol {

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) fail(errc::InvalidParams, "matmul shape mismatch");
  IntMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const BigInt& f = x.at(i, k);
      if (f == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += f * y.at(k, j);
    }
  return r;
}

BigVec matvec(const IntMatrix& m, const BigVec& v) {
  if ((int)v.size() != m.cols) fail(errc::LengthMismatch, "matvec length mismatch");
  BigVec r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

namespace {

void row_sub(IntMatrix& m, int dst, int src, const BigInt& q) {
  if (q == 0) return;
  for (int j = 0; j < m.cols; ++j) m.at(dst, j) -= q * m.at(src, j);
}
void col_sub(IntMatrix& m, int dst, int src, const BigInt& q) {
  if (q == 0) return;
  for (int i = 0; i < m.rows; ++i) m.at(i, dst) -= q * m.at(i, src);
}
void row_swap(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}
void col_swap(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  SnfResult f{identity_matrix(m.rows), m, identity_matrix(m.cols), 0};
  IntMatrix& s = f.s;
  const int d = std::min(m.rows, m.cols);

  for (int t = 0; t < d; ++t) {
    for (;;) {
      // Smallest nonzero entry of the working submatrix becomes the pivot.
      int pi = -1, pj = -1;
      for (int i = t; i < s.rows; ++i)
        for (int j = t; j < s.cols; ++j) {
          if (s.at(i, j) == 0) continue;
          if (pi < 0 || abs(s.at(i, j)) < abs(s.at(pi, pj))) { pi = i; pj = j; }
        }
      if (pi < 0) { t = d; break; }  // submatrix is zero: done
      row_swap(s, t, pi); row_swap(f.u, t, pi);
      col_swap(s, t, pj); col_swap(f.v, t, pj);

      bool clean = true;
      for (int i = t + 1; i < s.rows; ++i) {
        BigInt q = s.at(i, t) / s.at(t, t);
        row_sub(s, i, t, q); row_sub(f.u, i, t, q);
        if (s.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < s.cols; ++j) {
        BigInt q = s.at(t, j) / s.at(t, t);
        col_sub(s, j, t, q); col_sub(f.v, j, t, q);
        if (s.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // smaller remainders exist: re-pivot

      // Enforce the divisibility chain before moving on.
      bool fixed = false;
      for (int i = t + 1; i < s.rows && !fixed; ++i)
        for (int j = t + 1; j < s.cols && !fixed; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            row_sub(s, t, i, BigInt(-1)); row_sub(f.u, t, i, BigInt(-1));
            fixed = true;
          }
      if (!fixed) break;
    }
    if (t == d) break;
  }

  for (int i = 0; i < d; ++i) {
    if (s.at(i, i) < 0) {
      for (int j = 0; j < s.cols; ++j) s.at(i, j) = -s.at(i, j);
      for (int j = 0; j < f.u.cols; ++j) f.u.at(i, j) = -f.u.at(i, j);
    }
    if (s.at(i, i) != 0) f.rank = i + 1;
  }
  return f;
}

std::vector<BigVec> kernel_basis(const IntMatrix& m) {
  SnfResult f = smith_normal_form(m);
  std::vector<BigVec> basis;
  for (int j = f.rank; j < m.cols; ++j) {
    BigVec v(m.cols);
    for (int i = 0; i < m.cols; ++i) v[i] = f.v.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

BigInt abs_det(const IntMatrix& m) {
  if (m.rows != m.cols) fail(errc::NotSquare, "determinant of a non-square matrix");
  const int n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  BigInt prev = 1;
  for (int p = 0; p < n - 1; ++p) {
    if (w.at(p, p) == 0) {
      int swap_row = -1;
      for (int i = p + 1; i < n; ++i)
        if (w.at(i, p) != 0) { swap_row = i; break; }
      if (swap_row < 0) return 0;
      row_swap(w, p, swap_row);  // sign irrelevant for |det|
    }
    for (int i = p + 1; i < n; ++i)
      for (int j = p + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(p, p) - w.at(i, p) * w.at(p, j)) / prev;
    prev = w.at(p, p);
  }
  return abs(w.at(n - 1, n - 1));
}

BigInt minor_abs_det(const IntMatrix& m, int drop_row, int drop_col) {
  if (drop_row < 0 || drop_row >= m.rows || drop_col < 0 || drop_col >= m.cols)
    fail(errc::InvalidParams, "minor index out of range");
  IntMatrix w(m.rows - 1, m.cols - 1);
  for (int i = 0, wi = 0; i < m.rows; ++i) {
    if (i == drop_row) continue;
    for (int j = 0, wj = 0; j < m.cols; ++j) {
      if (j == drop_col) continue;
      w.at(wi, wj) = m.at(i, j);
      ++wj;
    }
    ++wi;
  }
  return abs_det(w);
}

namespace {

IntMatrix columns_matrix(const std::vector<BigVec>& gens, int len) {
  IntMatrix b(len, (int)gens.size());
  for (int j = 0; j < (int)gens.size(); ++j) {
    if ((int)gens[j].size() != len) fail(errc::LengthMismatch, "generator length mismatch");
    for (int i = 0; i < len; ++i) b.at(i, j) = gens[j][i];
  }
  return b;
}

}  // namespace

int lattice_rank(const std::vector<BigVec>& gens) {
  if (gens.empty()) return 0;
  return smith_normal_form(columns_matrix(gens, (int)gens[0].size())).rank;
}

bool lattice_contains(const std::vector<BigVec>& gens, const BigVec& v) {
  const int len = (int)v.size();
  for (const BigInt& e : v)
    if (e != 0 && gens.empty()) return false;
  IntMatrix b = columns_matrix(gens, len);
  SnfResult f = smith_normal_form(b);
  BigVec y = matvec(f.u, v);
  const int d = std::min(b.rows, b.cols);
  for (int i = 0; i < len; ++i) {
    BigInt di = i < d ? f.s.at(i, i) : BigInt(0);
    if (di == 0) {
      if (y[i] != 0) return false;
    } else if (y[i] % di != 0) {
      return false;
    }
  }
  return true;
}

bool lattice_equal(const std::vector<BigVec>& x, const std::vector<BigVec>& y) {
  for (const BigVec& g : x)
    if (!lattice_contains(y, g)) return false;
  for (const BigVec& g : y)
    if (!lattice_contains(x, g)) return false;
  return true;
}

}  // namespace zcol
