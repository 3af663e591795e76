#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

#include "gdh/rational.hpp"

namespace gdh {

using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

inline RatVec rat_vec(std::initializer_list<Rat> xs) {
  RatVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v[i++] = x;
  return v;
}

/// G = L D L^T with L unit lower triangular, for symmetric positive
/// definite G. Throws if a pivot is not positive.
struct Ldlt {
  RatMat lower;  // unit lower triangular
  RatVec diag;   // positive pivots
};

inline Ldlt ldlt_decompose(const RatMat& g) {
  const Eigen::Index n = g.rows();
  if (g.cols() != n) throw std::invalid_argument("ldlt: matrix not square");
  Ldlt f;
  f.lower = RatMat::Zero(n, n);
  f.diag = RatVec::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Rat d = g(i, i);
    for (Eigen::Index k = 0; k < i; ++k) d -= f.lower(i, k) * f.lower(i, k) * f.diag[k];
    if (d <= 0) throw std::domain_error("ldlt: matrix not positive definite");
    f.diag[i] = d;
    f.lower(i, i) = 1;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Rat s = g(j, i);
      for (Eigen::Index k = 0; k < i; ++k) s -= f.lower(j, k) * f.lower(i, k) * f.diag[k];
      f.lower(j, i) = s / d;
    }
  }
  return f;
}

/// Solves G x = b through an LDL^T factorisation of G.
inline RatVec ldlt_solve(const Ldlt& f, RatVec b) {
  const Eigen::Index n = f.diag.size();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < i; ++k) b[i] -= f.lower(i, k) * b[k];
  for (Eigen::Index i = 0; i < n; ++i) b[i] /= f.diag[i];
  for (Eigen::Index i = n; i-- > 0;)
    for (Eigen::Index k = i + 1; k < n; ++k) b[i] -= f.lower(k, i) * b[k];
  return b;
}

inline Rat spd_determinant(const RatMat& g) {
  Ldlt f = ldlt_decompose(g);
  Rat d = 1;
  for (Eigen::Index i = 0; i < f.diag.size(); ++i) d *= f.diag[i];
  return d;
}

/// Determinant by fraction-free elimination; works for any square matrix.
inline Rat determinant(RatMat m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant: not square");
  Rat det = 1;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (m(i, c) != 0) { p = i; break; }
    if (p < 0) return Rat(0);
    if (p != c) { m.row(p).swap(m.row(c)); det = -det; }
    det *= m(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) / m(c, c);
      for (Eigen::Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Basis of the kernel of m (columns are kernel vectors).
inline RatMat kernel(RatMat m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    Rat inv = m(r, c);
    for (Eigen::Index j = 0; j < cols; ++j) m(r, j) /= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  RatMat ker(cols, cols - static_cast<Eigen::Index>(pivot_col.size()));
  Eigen::Index k = 0;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v = RatVec::Zero(cols);
    v[c] = 1;
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(pivot_col.size()); ++i)
      v[pivot_col[i]] = -m(i, c);
    ker.col(k++) = v;
  }
  return ker;
}

/// Exact lexicographic comparison of equally sized vectors.
inline bool lex_less(const RatVec& a, const RatVec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace gdh
