#include "picard3/linalg.hpp"

#include <utility>

namespace picard3 {

Mat identity(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty()) return {};
  const size_t rows = a.size(), inner = b.size(), cols = b[0].size();
  if (a[0].size() != inner) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat c(rows, Vec(cols, 0));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Vec mat_vec(const Mat& a, const Vec& x) {
  if (a.empty()) return {};
  if (a[0].size() != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
  Vec y(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat t(a[0].size(), Vec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Int floor_div(const Int& a, const Int& p) {
  if (p <= 0) throw std::invalid_argument("floor_div: modulus must be positive");
  Int q = a / p;  // truncates toward zero
  if (a % p != 0 && a < 0) --q;
  return q;
}

Int pos_mod(const Int& a, const Int& p) { return a - floor_div(a, p) * p; }

Int exact_div(const Int& a, const Int& b) {
  if (b == 0 || a % b != 0) throw std::logic_error("exact_div: inexact division");
  return a / b;
}

Int det(Mat a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("det: matrix not square");
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

int rank(Mat a) {
  const size_t rows = a.size();
  if (rows == 0) return 0;
  const size_t cols = a[0].size();
  size_t r = 0;
  Int prev = 1;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j)
        a[i][j] = exact_div(a[i][j] * a[r][c] - a[i][c] * a[r][j], prev);
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

Mat inverse_unimodular(const Mat& a) {
  const int n = static_cast<int>(a.size());
  Int d = det(a);
  if (d != 1 && d != -1) throw std::invalid_argument("inverse_unimodular: |det| != 1");
  // Adjugate via cofactors; matrices here are tiny (n <= dimension + 1).
  Mat inv(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat minor;
      minor.reserve(n - 1);
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        Vec row;
        row.reserve(n - 1);
        for (int c = 0; c < n; ++c)
          if (c != j) row.push_back(a[r][c]);
        minor.push_back(std::move(row));
      }
      Int cof = det(std::move(minor));
      if ((i + j) % 2 != 0) cof = -cof;
      inv[j][i] = cof * d;  // adj^T / det, det = +-1
    }
  return inv;
}

namespace {

struct SmithOps {
  Mat& k;
  Mat& u;
  Mat& u_inv;
  Mat& v;

  void row_swap(int i, int j) {
    std::swap(k[i], k[j]);
    std::swap(u_inv[i], u_inv[j]);
    for (auto& row : u) std::swap(row[i], row[j]);
  }
  void row_negate(int i) {
    for (auto& x : k[i]) x = -x;
    for (auto& x : u_inv[i]) x = -x;
    for (auto& row : u) row[i] = -row[i];
  }
  // row_i += c * row_j  (so U gets col_j -= c * col_i)
  void row_add(int i, int j, const Int& c) {
    for (size_t t = 0; t < k[i].size(); ++t) k[i][t] += c * k[j][t];
    for (size_t t = 0; t < u_inv[i].size(); ++t) u_inv[i][t] += c * u_inv[j][t];
    for (auto& row : u) row[j] -= c * row[i];
  }
  void col_swap(int i, int j) {
    for (auto& row : k) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  }
  void col_negate(int i) {
    for (auto& row : k) row[i] = -row[i];
    for (auto& row : v) row[i] = -row[i];
  }
  void col_add(int i, int j, const Int& c) {
    for (auto& row : k) row[i] += c * row[j];
    for (auto& row : v) row[i] += c * row[j];
  }
};

}  // namespace

Smith smith_normal_form(Mat k) {
  const int rows = static_cast<int>(k.size());
  const int cols = rows ? static_cast<int>(k[0].size()) : 0;
  Smith s;
  s.U = identity(rows);
  s.U_inv = identity(rows);
  s.V = identity(cols);
  SmithOps ops{k, s.U, s.U_inv, s.V};

  int t = 0;
  while (t < rows && t < cols) {
    // find a nonzero pivot in the lower-right submatrix
    int pi = -1, pj = -1;
    for (int i = t; i < rows && pi < 0; ++i)
      for (int j = t; j < cols; ++j)
        if (k[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    ops.row_swap(t, pi);
    ops.col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (k[i][t] == 0) continue;
        Int q = floor_div(k[i][t], abs(k[t][t])) * (k[t][t] > 0 ? 1 : -1);
        ops.row_add(i, t, -q);
        if (k[i][t] != 0) {  // remainder smaller than pivot: swap up and redo
          ops.row_swap(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (k[t][j] == 0) continue;
        Int q = floor_div(k[t][j], abs(k[t][t])) * (k[t][t] > 0 ? 1 : -1);
        ops.col_add(j, t, -q);
        if (k[t][j] != 0) {
          ops.col_swap(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: pivot must divide every remaining entry
      bool fixed = true;
      for (int i = t + 1; i < rows && fixed; ++i)
        for (int j = t + 1; j < cols && fixed; ++j)
          if (k[i][j] % k[t][t] != 0) {
            ops.row_add(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (k[t][t] < 0) ops.col_negate(t);
    ++t;
  }
  s.rank = t;
  for (int i = 0; i < t; ++i) s.diag.push_back(k[i][i]);
  s.D = std::move(k);
  return s;
}

}  // namespace picard3
