#pragma once

#include <vector>

#include "weylfilt/errors.hpp"

namespace weylfilt::intmat {

using Int = long long;
using Matrix = std::vector<std::vector<Int>>;

inline Matrix identity(int n) {
  Matrix m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Matrix mul(const Matrix& a, const Matrix& b) {
  int n = static_cast<int>(a.size());
  Matrix c(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Int aik = a[i][k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

inline std::vector<Int> apply(const Matrix& m, const std::vector<Int>& v) {
  int n = static_cast<int>(m.size());
  std::vector<Int> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline Matrix transpose(const Matrix& m) {
  int n = static_cast<int>(m.size());
  Matrix t(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[j][i] = m[i][j];
  return t;
}

// Cofactor recursion; fine for the rank <= 8 matrices used here.
inline Int det(const Matrix& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int d = 0;
  Int sign = 1;
  for (int col = 0; col < n; ++col) {
    if (m[0][col] != 0) {
      Matrix minor(n - 1, std::vector<Int>(n - 1));
      for (int i = 1; i < n; ++i) {
        int jj = 0;
        for (int j = 0; j < n; ++j) {
          if (j == col) continue;
          minor[i - 1][jj++] = m[i][j];
        }
      }
      d += sign * m[0][col] * det(minor);
    }
    sign = -sign;
  }
  return d;
}

// adj(m) * m = det(m) * I.
inline Matrix adjugate(const Matrix& m) {
  int n = static_cast<int>(m.size());
  Matrix adj(n, std::vector<Int>(n, 0));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix minor(n - 1, std::vector<Int>(n - 1));
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor[rr][cc++] = m[r][c];
        }
        ++rr;
      }
      Int cof = det(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      adj[j][i] = cof;
    }
  return adj;
}

}  // namespace weylfilt::intmat
