#pragma once

// Subsystems Phi_J for J inside the extended simple set, Dynkin-type
// recognition of closed root subsets, and reduced centers in characteristic
// p via the Smith normal form of Delta_J written in the fundamental-weight
// basis.

#include <set>
#include <string>
#include <vector>

#include "sph/rootsystem.hpp"

namespace sph {

/// One irreducible component of a subsystem.  `tilde` marks components made
/// of short roots of a two-length ambient system (the tables' A~ notation).
struct Component {
  char letter;
  int rank;
  bool tilde = false;

  auto operator<=>(const Component&) const = default;
};

std::vector<Component> canon_components(std::vector<Component> cs);
std::string components_str(const std::vector<Component>& cs, int torus_rank);
bool components_equal(const std::vector<Component>& a, const std::vector<Component>& b);

/// Base and recognized type of a closed symmetric subset of Phi (positivity
/// taken lexicographically on simple-root coordinates).
struct RecognizedSubsystem {
  std::vector<int> base;
  std::vector<Component> components;
};
RecognizedSubsystem recognize_subsystem(const RootSystem& rs, const std::vector<int>& roots);

struct SubsystemReport {
  std::set<int> J;            // indices into the extended simple set, 0 = affine node
  std::vector<int> roots;     // Phi_J as root indices
  std::vector<int> base;
  std::vector<Component> components;
  long dim;                   // rank(G) + |roots|
};
SubsystemReport subsystem(const RootSystem& rs, const std::set<int>& J);

struct CenterReport {
  int torus_rank;
  std::vector<BigInt> factors;  // invariant factors, ascending divisibility
  BigInt order_char0;           // product of the factors
  BigInt reduced_order;         // p-power torsion removed (p = 0: unchanged)
};
CenterReport reduced_center(const RootSystem& rs, const std::set<int>& J, long p);

/// All J whose recognized component multiset matches the target.
std::vector<std::set<int>> find_pseudolevi_of_type(const RootSystem& rs,
                                                   const std::vector<Component>& target);

}  // namespace sph
