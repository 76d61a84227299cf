#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "zcol/error.hpp"

namespace zcol {

using BigInt = boost::multiprecision::cpp_int;
using BigVec = std::vector<BigInt>;

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

  BigInt& at(int r, int c) { return a[(size_t)r * cols + c]; }
  const BigInt& at(int r, int c) const { return a[(size_t)r * cols + c]; }

  bool operator==(const IntMatrix&) const = default;
};

IntMatrix identity_matrix(int n);
IntMatrix matmul(const IntMatrix& x, const IntMatrix& y);
BigVec matvec(const IntMatrix& m, const BigVec& v);

// u * m * v = s with u, v unimodular; s diagonal, entries non-negative with
// s[i][i] dividing s[i+1][i+1]; rank = number of nonzero diagonal entries.
struct SnfResult {
  IntMatrix u, s, v;
  int rank = 0;
};
SnfResult smith_normal_form(const IntMatrix& m);

// Basis of the full integer kernel {x : m x = 0} (saturated: every integer
// kernel vector is an integer combination of the basis).
std::vector<BigVec> kernel_basis(const IntMatrix& m);

// |det|, exact (Bareiss). NotSquare on non-square input.
BigInt abs_det(const IntMatrix& m);

// |det| of the matrix with one row and one column removed; a 0x0 minor has
// determinant 1 by convention.
BigInt minor_abs_det(const IntMatrix& m, int drop_row, int drop_col);

// Lattice spanned by the given generator vectors (all the same length).
int lattice_rank(const std::vector<BigVec>& gens);
bool lattice_contains(const std::vector<BigVec>& gens, const BigVec& v);
bool lattice_equal(const std::vector<BigVec>& x, const std::vector<BigVec>& y);

}  // namespace zcol
