#pragma once

// Explicit matrix realizations of SL(m), GL(m), Sp(2n) and SO(2n) with their
// Chevalley generators, over Q or a prime field.
//
// Form conventions: Sp and SO use anti-diagonal forms, so that the upper
// triangular members form a Borel subgroup and the lower triangular ones the
// opposite Borel, and rank-array Bruhat reading in the ambient GL is valid.
// The quadratic form for SO(2n) is Q(x) = sum_{i<=n} x_i x_{2n+1-i}, good in
// every characteristic; membership asks for Q-preservation plus Dickson
// invariant 0.  Printed block-convention matrices (blocks A, tA^-1) are
// converted by the fixed coordinate permutation block_to_anti_index.

#include <vector>

#include "sph/classes.hpp"
#include "sph/scalars.hpp"

namespace sph {

struct GroupTag {
  GroupKind kind;
  int size;  // matrix dimension
  long p;    // 0 = rationals

  int rank() const;
  TypeLetter letter() const;
  const RootSystem& system() const;
  std::string str() const;
  bool operator==(const GroupTag&) const = default;
};

class Mat {
 public:
  Mat(GroupTag tag) : tag_(tag), n_(tag.size), a_(n_ * n_, FieldValue::of_int(0, tag.p)) {}
  static Mat identity(GroupTag tag);

  const GroupTag& tag() const { return tag_; }
  int size() const { return n_; }
  FieldValue& at(int i, int j) { return a_[i * n_ + j]; }
  const FieldValue& at(int i, int j) const { return a_[i * n_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat inverse() const;
  Mat transpose() const;
  bool operator==(const Mat& o) const { return a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_lower_triangular() const;
  bool is_upper_triangular() const;
  bool is_diagonal() const;
  FieldValue det() const;
  std::string str() const;

 private:
  GroupTag tag_;
  int n_;
  std::vector<FieldValue> a_;
};

/// Root-subgroup element x_alpha(t); alpha is a root index of tag.system().
Mat gen_x(const GroupTag& tag, int alpha, const FieldValue& t);
/// n_alpha = x_alpha(1) x_{-alpha}(-1) x_alpha(1).
Mat gen_n(const GroupTag& tag, int alpha);
/// h_alpha(z), built from the defining product (z != 0).
Mat gen_h(const GroupTag& tag, int alpha, const FieldValue& z);

/// Torus element with diagonal exponent pattern lambda^{m_i} in the
/// e-coordinates (second half of Sp/SO determined by the form).
Mat torus_diag(const GroupTag& tag, const std::vector<long>& m, const FieldValue& lambda);

/// Group membership: determinant / form preservation / Dickson invariant.
bool in_group(const Mat& M);

int rank_of(const Mat& M);
/// Exact characteristic polynomial det(XI - M), ascending coefficients,
/// computed division-free (Berkowitz).
std::vector<FieldValue> char_poly(const Mat& M);
int eigenspace_dim(const Mat& M, const FieldValue& value);

/// Index translation from printed block coordinates (v_1..v_n, w_1..w_n) to
/// the anti-diagonal convention (0-based).
int block_to_anti_index(int i, int n);
Mat from_block_convention(const GroupTag& tag, const std::vector<std::vector<FieldValue>>& rows);
std::vector<std::vector<FieldValue>> to_block_convention(const Mat& M);

/// Table representative as a matrix.  params: {a, b} for the diag(aI_k, b I)
/// families, {lambda} for the torus-word families.
Mat representative(const ClassFamily& f, int n, int k, long p,
                   const std::vector<FieldValue>& params);
/// The printed conjugating element: product of n_beta factors then x_beta(1).
Mat conjugator(const ClassFamily& f, int n, int k, long p);

struct AppendixGL3 {
  Mat x;         // the printed matrix
  Mat w_factor;  // its Bruhat factors as printed
  Mat diag_factor;
  Mat unip_factor;
};
AppendixGL3 appendix_gl3(long p, const FieldValue& m, const FieldValue& a,
                         const FieldValue& b, const FieldValue& c);

struct AppendixSp4 {
  Mat x;  // converted to the anti-diagonal convention
};
AppendixSp4 appendix_sp4(long p, const FieldValue& m, const FieldValue& a);

}  // namespace sph
