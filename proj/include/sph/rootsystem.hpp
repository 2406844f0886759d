#pragma once

// Root systems of the simple types in Bourbaki coordinates: the full root
// list (closed under simple reflections), Cartan data, highest root and the
// extended simple set.  Coordinates are exact rationals; E and F types keep
// their half-integer entries as such.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sph/linalg.hpp"

namespace sph {

enum class TypeLetter { A, B, C, D, E, F, G };

std::string type_name(TypeLetter t, int rank);
std::optional<std::pair<TypeLetter, int>> parse_type(const std::string& s);
bool valid_type(TypeLetter t, int rank);

class RootSystem {
 public:
  static RootSystem build(TypeLetter t, int rank);

  TypeLetter letter() const { return letter_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_; }
  std::string name() const { return type_name(letter_, rank_); }

  int size() const { return static_cast<int>(roots_.size()); }
  int positive_count() const { return size() / 2; }
  const QVec& root(int i) const { return roots_[i]; }
  bool positive(int i) const { return positive_[i]; }
  int negate(int i) const { return negative_of_[i]; }

  /// Index of a root given its coordinates; nullopt for non-roots.
  std::optional<int> index_of(const QVec& v) const;
  int checked_index(const QVec& v) const;  // throws on non-roots

  int simple(int i) const { return simple_[i - 1]; }  // Bourbaki numbering, 1-based
  int highest() const { return highest_; }

  /// Expansion of a root in the simple basis (always integral).
  const ZVec& delta_coords(int i) const { return delta_[i]; }
  int root_from_delta(const ZVec& c) const;

  Rational inner(const QVec& u, const QVec& v) const { return dot(u, v); }
  /// <beta, alpha> = 2(beta,alpha)/(alpha,alpha); exact integer for root pairs.
  long pairing(int beta, int alpha) const;
  long pairing(const QVec& beta, int alpha) const;

  long cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }  // pairing(alpha_i, alpha_j)
  long d_weight(int i) const { return d_[i - 1]; }

  int reflect(int root, int mirror) const;  // s_mirror(root), both indices

  /// alpha∨ in the simple-coroot basis (integral for every root).
  ZVec coroot_coords(int root) const;

  /// Extended simple set [alpha_0, alpha_1, ..., alpha_n], alpha_0 = -highest.
  std::vector<int> extended_simple() const;
  long mark(int i) const;  // highest-root coefficient of alpha_i; mark(0) = 1

  bool root_is_long(int i) const;
  bool root_is_short(int i) const { return !root_is_long(i); }
  bool two_lengths() const { return two_lengths_; }

  struct PaperRoots {
    std::vector<int> beta, gamma, delta;
  };
  /// The per-type named root lists (each entry verified to be a root).
  PaperRoots paper_beta_roots() const;

 private:
  RootSystem() = default;

  TypeLetter letter_;
  int rank_ = 0, ambient_ = 0;
  std::vector<QVec> roots_;  // canonical (lexicographic) order
  std::vector<ZVec> delta_;
  std::vector<bool> positive_;
  std::vector<int> negative_of_;
  std::vector<int> simple_;
  std::vector<std::vector<long>> cartan_;
  std::vector<long> d_;
  int highest_ = -1;
  bool two_lengths_ = false;
  Rational max_norm_, min_norm_;
  std::map<QVec, int> index_;
};

/// Shared immutable instance per type (built once).
const RootSystem& root_system(TypeLetter t, int rank);

}  // namespace sph
