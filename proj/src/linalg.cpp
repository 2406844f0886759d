#include "sph/linalg.hpp"

#include <stdexcept>

namespace sph {

ZMatrix clear_denominators(const QMatrix& m) {
  ZMatrix z(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i) {
    BigInt l(1);
    for (int j = 0; j < m.cols; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    for (int j = 0; j < m.cols; ++j) {
      Rational s = m.at(i, j) * Rational(l);
      z.at(i, j) = s.get_num();
    }
  }
  return z;
}

// Bareiss elimination; returns the rank, optionally the determinant of a
// square input (product sign bookkeeping included).
static int bareiss(ZMatrix m, BigInt* det_out) {
  int r = 0;
  BigInt prev(1);
  int sign = 1;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
      sign = -sign;
    }
    for (int i = r + 1; i < m.rows; ++i) {
      for (int j = col + 1; j < m.cols; ++j)
        m.at(i, j) = (m.at(r, col) * m.at(i, j) - m.at(i, col) * m.at(r, j)) / prev;
      m.at(i, col) = 0;
    }
    prev = m.at(r, col);
    ++r;
  }
  if (det_out) {
    if (r < m.rows)
      *det_out = 0;
    else
      *det_out = sign * prev;
  }
  return r;
}

int rank(const ZMatrix& m) { return bareiss(m, nullptr); }

int rank(const QMatrix& m) { return rank(clear_denominators(m)); }

BigInt determinant(const ZMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows == 0) return BigInt(1);
  BigInt d;
  bareiss(m, &d);
  return d;
}

std::optional<QVec> solve(const QMatrix& A, const QVec& b) {
  int n = A.rows, m = A.cols;
  QMatrix aug(n, m + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, m) = b[i];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < m && r < n; ++col) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (aug.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j <= m; ++j) std::swap(aug.at(piv, j), aug.at(r, j));
    Rational inv = 1 / aug.at(r, col);
    for (int j = col; j <= m; ++j) aug.at(r, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || aug.at(i, col) == 0) continue;
      Rational f = aug.at(i, col);
      for (int j = col; j <= m; ++j) aug.at(i, j) -= f * aug.at(r, j);
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (int i = r; i < n; ++i)
    if (aug.at(i, m) != 0) return std::nullopt;
  QVec x(m, Rational(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = aug.at(i, m);
  return x;
}

// Smith normal form with an optional record of the left transform U
// (D = U A V, U and V unimodular).
static std::vector<BigInt> smith(ZMatrix m, ZMatrix* left) {
  int n = m.rows, c = m.cols;
  if (left) {
    *left = ZMatrix(n, n);
    for (int i = 0; i < n; ++i) left->at(i, i) = 1;
  }
  auto row_op = [&](int dst, int src, const BigInt& f) {
    for (int j = 0; j < c; ++j) m.at(dst, j) -= f * m.at(src, j);
    if (left)
      for (int j = 0; j < n; ++j) left->at(dst, j) -= f * left->at(src, j);
  };
  auto row_swap = [&](int i1, int i2) {
    for (int j = 0; j < c; ++j) std::swap(m.at(i1, j), m.at(i2, j));
    if (left)
      for (int j = 0; j < n; ++j) std::swap(left->at(i1, j), left->at(i2, j));
  };
  auto col_op = [&](int dst, int src, const BigInt& f) {
    for (int i = 0; i < n; ++i) m.at(i, dst) -= f * m.at(i, src);
  };
  auto col_swap = [&](int j1, int j2) {
    for (int i = 0; i < n; ++i) std::swap(m.at(i, j1), m.at(i, j2));
  };

  std::vector<BigInt> d;
  int t = 0;
  while (t < n && t < c) {
    // locate a nonzero entry of least absolute value in the trailing block
    int pi = -1, pj = -1;
    BigInt best;
    for (int i = t; i < n; ++i)
      for (int j = t; j < c; ++j)
        if (m.at(i, j) != 0) {
          BigInt v = abs(m.at(i, j));
          if (pi < 0 || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    bool dirty = false;
    for (int i = t + 1; i < n; ++i) {
      if (m.at(i, t) == 0) continue;
      BigInt q = m.at(i, t) / m.at(t, t);
      if (q != 0) row_op(i, t, q);
      if (m.at(i, t) != 0) dirty = true;
    }
    for (int j = t + 1; j < c; ++j) {
      if (m.at(t, j) == 0) continue;
      BigInt q = m.at(t, j) / m.at(t, t);
      if (q != 0) col_op(j, t, q);
      if (m.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue;  // remainders left; repeat with a smaller pivot
    // divisibility condition: pivot must divide the rest of the block
    bool divides = true;
    for (int i = t + 1; i < n && divides; ++i)
      for (int j = t + 1; j < c && divides; ++j)
        if (m.at(i, j) % m.at(t, t) != 0) {
          row_op(t, i, BigInt(-1));  // fold row i into row t, then redo
          divides = false;
        }
    if (!divides) continue;
    if (m.at(t, t) < 0) {
      for (int j = 0; j < c; ++j) m.at(t, j) = -m.at(t, j);
      if (left)
        for (int j = 0; j < n; ++j) left->at(t, j) = -left->at(t, j);
    }
    d.push_back(m.at(t, t));
    ++t;
  }
  return d;
}

std::vector<BigInt> smith_normal_form(const ZMatrix& m) { return smith(m, nullptr); }

IntegerSolver::IntegerSolver(const ZMatrix& A) : n_(A.rows) {
  d_ = smith(A, &U_);
}

bool IntegerSolver::solvable(const ZVec& b) const {
  ZVec ub(n_, BigInt(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) ub[i] += U_.at(i, j) * b[j];
  int r = static_cast<int>(d_.size());
  for (int i = 0; i < r; ++i)
    if (ub[i] % d_[i] != 0) return false;
  for (int i = r; i < n_; ++i)
    if (ub[i] != 0) return false;
  return true;
}

bool integer_solvable(const ZMatrix& A, const ZVec& b) {
  return IntegerSolver(A).solvable(b);
}

Rational dot(const QVec& u, const QVec& v) {
  Rational s(0);
  for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

}  // namespace sph
