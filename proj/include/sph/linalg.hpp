#pragma once

// Small exact linear-algebra kernel over Q and Z: fraction-free rank,
// linear solves, determinants, Smith normal form.  Everything here is
// deterministic and exact; matrix sizes stay in the single digits.

#include <optional>
#include <vector>

#include "sph/scalars.hpp"

namespace sph {

using QVec = std::vector<Rational>;
using ZVec = std::vector<BigInt>;

struct QMatrix {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(r * c, Rational(0)) {}
  Rational& at(int i, int j) { return a[i * cols + j]; }
  const Rational& at(int i, int j) const { return a[i * cols + j]; }
};

struct ZMatrix {
  int rows = 0, cols = 0;
  std::vector<BigInt> a;

  ZMatrix() = default;
  ZMatrix(int r, int c) : rows(r), cols(c), a(r * c, BigInt(0)) {}
  BigInt& at(int i, int j) { return a[i * cols + j]; }
  const BigInt& at(int i, int j) const { return a[i * cols + j]; }
};

ZMatrix clear_denominators(const QMatrix& m);  // row-wise lcm scaling

int rank(const ZMatrix& m);  // fraction-free (Bareiss)
int rank(const QMatrix& m);

BigInt determinant(const ZMatrix& m);  // square, Bareiss

/// Solve A x = b exactly.  Requires the columns of A to be linearly
/// independent; returns nullopt when the system is inconsistent.
std::optional<QVec> solve(const QMatrix& A, const QVec& b);

/// Invariant factors d_1 | d_2 | ... of an integer matrix (nonzero ones only,
/// all positive); their count is the rank.
std::vector<BigInt> smith_normal_form(const ZMatrix& m);

/// Does A x = b admit an integer solution x?
bool integer_solvable(const ZMatrix& A, const ZVec& b);

/// Factors A once (Smith form with left transform) and answers many
/// integer-solvability queries against it.
class IntegerSolver {
 public:
  explicit IntegerSolver(const ZMatrix& A);
  bool solvable(const ZVec& b) const;
  int rank() const { return static_cast<int>(d_.size()); }

 private:
  ZMatrix U_;
  std::vector<BigInt> d_;
  int n_;
};

Rational dot(const QVec& u, const QVec& v);

}  // namespace sph
