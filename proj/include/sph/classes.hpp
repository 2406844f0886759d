#pragma once

// The machine-readable catalog of classification-table rows (one entry per
// printed row, including the explicit "none" rows) and the verification
// driver that checks each row's dimension three ways: length-plus-rank of
// w0*wJ, codimension of the centralizer root subsystem, and the printed
// polynomial.

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "sph/pseudolevi.hpp"
#include "sph/rootsystem.hpp"
#include "sph/torus.hpp"
#include "sph/weyl.hpp"

namespace sph {

enum class GroupKind { SL, GL, Sp, SOplus };

struct ConjRecipe {
  std::vector<int> n_roots;  // the n_beta factors, in order
  std::vector<int> x_roots;  // the x_beta(1) factors, in order
  bool standard;             // x-list equals n-list (commuting-reflection pattern)
};

struct ClassFamily {
  std::string id;
  std::string display;  // representative as printed
  TypeLetter type;
  int fixed_rank = 0;  // 0: rank is a parameter
  int min_rank = 1;
  std::vector<long> table_chars;  // empty: any characteristic
  bool has_k = false;             // block-size parameter (type A)
  bool even_rank_only = false;
  bool mixed = false;
  bool none_row = false;
  bool sl2_row = false;

  // scalar parameter on the representative
  std::string symbol_name;
  ScalarSymbol::Kind symbol_kind = ScalarSymbol::Kind::Generic;
  long symbol_order = 0;
  std::vector<long> symbol_forbidden;       // printed table condition
  std::vector<long> cell_forbidden;         // condition for the conjugation claims

  std::function<QVec(const RootSystem&, int n, int k)> coroot_vector;
  std::function<std::set<int>(int n, int k)> J_table;
  std::function<std::vector<int>(const RootSystem&, int n, int k)> w_roots;
  bool w_is_w0 = false;
  std::function<long(int n, int k)> dim_poly;
  std::function<std::vector<Component>(int n, int k)> centralizer;
  int centralizer_torus_rank = 0;

  // classical matrix realization
  bool has_matrix = false;
  GroupKind matrix_group = GroupKind::SL;
  bool matrix_diag_ab = false;  // diag(a I_k, b I_{n+1-k})
  std::function<std::vector<long>(int n, int k)> e_exponents;  // diagonal exponent pattern
  std::function<ConjRecipe(const RootSystem&, int n, int k)> conjugator;

  ScalarSymbol symbol() const;
  std::vector<int> ranks(int max_rank) const;
  std::vector<int> ks(int n) const;
  std::vector<long> chars_to_check() const;  // "any" expands to {0,2,3,5}
  std::string group_name(int n) const;
};

const std::vector<ClassFamily>& catalog();
const ClassFamily& family_by_id(const std::string& id);
/// Families that carry a dimension-table row (no none rows, no SL(2) row).
int substantive_family_count();

struct CheckItem {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass;
};

struct VerificationReport {
  std::string family_id;
  std::string group;
  int n = 0;
  int k = 0;
  long p = 0;
  std::string field;
  std::vector<CheckItem> checks;
  std::vector<std::string> notes;
  bool pass() const;
};

/// The three-way dimension check plus centralizer recognition for one row.
VerificationReport verify_family(const ClassFamily& f, int n, int k, long p);

/// Hypotheses of the commuting-reflection conjugation lemma for the row's
/// recipe: pairwise orthogonality, no root among the pairwise sums and
/// differences (or reliance on the characteristic-2 clause), and the
/// representative evaluating away from 1 on every listed root.
VerificationReport verify_scambio_hypotheses(const ClassFamily& f, int n, int k, long p);

}  // namespace sph
