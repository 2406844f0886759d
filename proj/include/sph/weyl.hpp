#pragma once

// Weyl group elements as exact orthogonal transformations of the root span.
// An element is stored by its action on the root set (a permutation of root
// indices); words in simple reflections are optional attachments.

#include <optional>
#include <set>
#include <vector>

#include "sph/rootsystem.hpp"

namespace sph {

class WeylElem {
 public:
  static WeylElem identity(const RootSystem& rs);
  static WeylElem reflection(const RootSystem& rs, int root);
  static WeylElem reflection_at(const RootSystem& rs, const QVec& v);  // throws on non-roots

  const RootSystem& system() const { return *rs_; }

  /// Image of a root (by index).
  int apply(int root) const { return perm_[root]; }
  /// Linear action on a vector of the root span.
  QVec apply(const QVec& v) const;

  WeylElem operator*(const WeylElem& o) const;  // (a*b)(v) = a(b(v))
  WeylElem inverse() const;
  bool operator==(const WeylElem& o) const { return perm_ == o.perm_; }
  bool operator!=(const WeylElem& o) const { return !(*this == o); }
  bool operator<(const WeylElem& o) const { return perm_ < o.perm_; }
  bool is_identity() const;
  bool is_involution() const;

  long length() const;  // #{alpha > 0 : w(alpha) < 0}
  /// Rank of (1 - w) on the span of the simple roots, fraction-free.
  int rank_one_minus() const;

  std::vector<QVec> simple_images() const;
  /// Matrix of w in the simple-root basis (integer entries, column = image).
  ZMatrix delta_matrix() const;

  /// Reduced word by greedy descent, lowest simple index first.
  std::vector<int> reduced_word() const;

  const std::optional<std::vector<int>>& word() const { return word_; }
  void attach_word(std::vector<int> w) { word_ = std::move(w); }

 private:
  WeylElem(const RootSystem* rs, std::vector<int> perm)
      : rs_(rs), perm_(std::move(perm)) {}
  const RootSystem* rs_;
  std::vector<int> perm_;
  std::optional<std::vector<int>> word_;
};

WeylElem longest_element(const RootSystem& rs);
/// Longest element of the parabolic W_J, J a set of simple indices (1-based).
WeylElem longest_in_subset(const RootSystem& rs, const std::set<int>& J);

/// The symmetry of the simple indices induced by -w0.
int theta_of(const RootSystem& rs, int i);
bool theta_invariant(const RootSystem& rs, const std::set<int>& J);

struct WOfClass {
  WeylElem w;
  bool theta_invariant;
  bool w0_matches_wJ_on_J;  // w0(alpha) = w_J(alpha) for alpha in Delta_J
};
/// w0 * w_J plus the table side conditions (reported, never thrown).
WOfClass w_of_class(const RootSystem& rs, const std::set<int>& J);

/// Composition s_{r1} s_{r2} ... s_{rk} (rightmost factor applied first).
WeylElem product_of_reflections(const RootSystem& rs, const std::vector<int>& roots);

/// Whole group by BFS over right multiplication; small ranks only.
std::vector<WeylElem> enumerate_weyl(const RootSystem& rs);

}  // namespace sph
