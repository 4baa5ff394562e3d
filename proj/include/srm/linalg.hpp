#pragma once

#include <cstdint>
#include <vector>

#include "srm/errors.hpp"
#include "srm/field.hpp"

namespace srm {

// Dense row-major matrix over F_q, entries stored as labels.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<uint8_t> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  const uint8_t* row(int r) const { return &a[static_cast<size_t>(r) * cols]; }
  uint8_t* row(int r) { return &a[static_cast<size_t>(r) * cols]; }

  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

namespace detail {
inline void require_small_field(const Field& F) {
  if (!F.has_small_tables()) throw Unsupported("matrix arithmetic needs q <= 256");
}
}  // namespace detail

// In-place reduced row echelon form with the natural column order (or the
// order given in `col_order`).  Returns the rank; pivot columns go to
// *pivots when requested.  Zero rows are moved to the bottom but not erased.
inline int rref(Matrix& M, const Field& F, std::vector<int>* pivots = nullptr,
                const std::vector<int>* col_order = nullptr) {
  detail::require_small_field(F);
  const int64_t q = F.q();
  std::vector<int> order;
  if (col_order) {
    order = *col_order;
  } else {
    order.resize(M.cols);
    for (int c = 0; c < M.cols; ++c) order[c] = c;
  }
  if (pivots) pivots->clear();
  int rank = 0;
  for (int oc : order) {
    if (rank == M.rows) break;
    int pivot = -1;
    for (int r = rank; r < M.rows; ++r)
      if (M.at(r, oc)) { pivot = r; break; }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < M.cols; ++c) std::swap(M.at(pivot, c), M.at(rank, c));
    const int pinv = F.q_inv(M.at(rank, oc));
    if (pinv != 1)
      for (int c = 0; c < M.cols; ++c)
        M.at(rank, c) = static_cast<uint8_t>(F.q_mul(M.at(rank, c), pinv));
    for (int r = 0; r < M.rows; ++r) {
      if (r == rank) continue;
      const int f = M.at(r, oc);
      if (!f) continue;
      const int nf = F.q_neg(f);
      const uint8_t* src = M.row(rank);
      uint8_t* dst = M.row(r);
      for (int c = 0; c < M.cols; ++c)
        dst[c] = static_cast<uint8_t>(F.q_add(dst[c], F.q_mul(nf, src[c])));
    }
    if (pivots) pivots->push_back(oc);
    ++rank;
  }
  (void)q;
  return rank;
}

inline int rank_of(Matrix M, const Field& F) { return rref(M, F); }

// Canonical (RREF) basis of the right kernel of M: rows x span {x : Mx = 0}.
inline Matrix kernel_basis(const Matrix& M, const Field& F) {
  Matrix R = M;
  std::vector<int> pivots;
  const int rank = rref(R, F, &pivots);
  std::vector<char> is_pivot(M.cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  Matrix K(M.cols - rank, M.cols);
  int kr = 0;
  for (int fc = 0; fc < M.cols; ++fc) {
    if (is_pivot[fc]) continue;
    K.at(kr, fc) = 1;
    for (int i = 0; i < rank; ++i)
      K.at(kr, pivots[i]) = static_cast<uint8_t>(F.q_neg(R.at(i, fc)));
    ++kr;
  }
  rref(K, F);
  return K;
}

inline Matrix matmul(const Matrix& A, const Matrix& B, const Field& F) {
  detail::require_small_field(F);
  if (A.cols != B.rows) throw LengthMismatch("matrix product shape mismatch");
  Matrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int k = 0; k < A.cols; ++k) {
      const int v = A.at(i, k);
      if (!v) continue;
      const uint8_t* brow = B.row(k);
      uint8_t* crow = C.row(i);
      for (int j = 0; j < B.cols; ++j)
        if (brow[j]) crow[j] = static_cast<uint8_t>(F.q_add(crow[j], F.q_mul(v, brow[j])));
    }
  }
  return C;
}

inline bool all_zero(const Matrix& M) {
  for (uint8_t v : M.a)
    if (v) return false;
  return true;
}

inline Matrix transpose(const Matrix& M) {
  Matrix T(M.cols, M.rows);
  for (int r = 0; r < M.rows; ++r)
    for (int c = 0; c < M.cols; ++c) T.at(c, r) = M.at(r, c);
  return T;
}

}  // namespace srm
