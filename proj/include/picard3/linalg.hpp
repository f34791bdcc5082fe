#pragma once

// Exact integer linear algebra on small dense matrices. Everything here is
// arbitrary precision; no floating point is used anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace picard3 {

using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;  // row major

Mat identity(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& x);
Mat transpose(const Mat& a);

// Quotient/remainder with 0 <= r < p (Euclidean division, p > 0).
Int floor_div(const Int& a, const Int& p);
Int pos_mod(const Int& a, const Int& p);

// Division known to be exact; throws std::logic_error on a nonzero remainder.
Int exact_div(const Int& a, const Int& b);

// Determinant by fraction-free (Bareiss) elimination.
Int det(Mat a);

// Rank over Q by fraction-free elimination; works on rectangular matrices.
int rank(Mat a);

// Inverse of an integer matrix with det = +-1; throws std::invalid_argument
// otherwise.
Mat inverse_unimodular(const Mat& a);

// Smith normal form of an m x n integer matrix K: D = U_inv * K * V with
// U_inv, U = U_inv^{-1} (m x m) and V (n x n) unimodular, D diagonal with
// diag[0] | diag[1] | ... Only nonzero diagonal entries are listed in diag.
struct Smith {
  Mat D;
  Mat U;      // m x m, K = U * D * V^{-1}
  Mat U_inv;  // m x m
  Mat V;      // n x n
  std::vector<Int> diag;
  int rank = 0;
};
Smith smith_normal_form(Mat k);

}  // namespace picard3
