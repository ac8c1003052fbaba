#include "symgeo/snf.hpp"

#include <algorithm>
#include <utility>

namespace symgeo {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

BigInt determinant(const IntMatrix& a) {
  IntMatrix m = a;
  int n = m.rows;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return n == 0 ? BigInt(1) : sign * m.at(n - 1, n - 1);
}

namespace {

struct Worker {
  IntMatrix a, u, v;

  explicit Worker(const IntMatrix& m)
      : a(m),
        u(IntMatrix::identity(m.rows)),
        v(IntMatrix::identity(m.cols)) {}

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  // row i -= q * row j
  void add_row(int i, int j, const BigInt& q) {
    for (int c = 0; c < a.cols; ++c) a.at(i, c) -= q * a.at(j, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(j, c);
  }
  // col i -= q * col j
  void add_col(int i, int j, const BigInt& q) {
    for (int r = 0; r < a.rows; ++r) a.at(r, i) -= q * a.at(r, j);
    for (int r = 0; r < v.rows; ++r) v.at(r, i) -= q * v.at(r, j);
  }
  void negate_row(int i) {
    for (int c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }

  // Moves the smallest non-zero entry of the trailing submatrix to (k, k).
  // Returns false when the submatrix is zero.
  bool place_pivot(int k) {
    int br = -1, bc = -1;
    BigInt best;
    for (int i = k; i < a.rows; ++i)
      for (int j = k; j < a.cols; ++j) {
        if (a.at(i, j) == 0) continue;
        BigInt mag = abs(a.at(i, j));
        if (br < 0 || mag < best) {
          best = mag;
          br = i;
          bc = j;
        }
      }
    if (br < 0) return false;
    swap_rows(k, br);
    swap_cols(k, bc);
    return true;
  }

  void run() {
    int n = std::min(a.rows, a.cols);
    for (int k = 0; k < n; ++k) {
      for (;;) {
        if (!place_pivot(k)) break;
        // Clear the pivot row and column; a residue re-enters the pivot
        // search until the pivot divides everything it touches.
        bool dirty = false;
        for (int i = k + 1; i < a.rows; ++i) {
          if (a.at(i, k) == 0) continue;
          BigInt q = a.at(i, k) / a.at(k, k);
          add_row(i, k, q);
          if (a.at(i, k) != 0) dirty = true;
        }
        for (int j = k + 1; j < a.cols; ++j) {
          if (a.at(k, j) == 0) continue;
          BigInt q = a.at(k, j) / a.at(k, k);
          add_col(j, k, q);
          if (a.at(k, j) != 0) dirty = true;
        }
        if (dirty) continue;
        // Enforce that the pivot divides the whole trailing submatrix.
        bool divides = true;
        for (int i = k + 1; i < a.rows && divides; ++i)
          for (int j = k + 1; j < a.cols && divides; ++j)
            if (a.at(i, j) % a.at(k, k) != 0) {
              add_row(k, i, -1);  // row k += row i, reintroducing the entry
              divides = false;
            }
        if (divides) break;
      }
      if (a.at(k, k) < 0) negate_row(k);
    }
  }
};

}  // namespace

std::vector<BigInt> SnfResult::diagonal() const {
  std::vector<BigInt> out;
  int n = std::min(d.rows, d.cols);
  for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
  return out;
}

SnfResult smith_normal_form(const IntMatrix& a) {
  Worker w(a);
  w.run();
  return SnfResult{std::move(w.u), std::move(w.a), std::move(w.v)};
}

}  // namespace symgeo
