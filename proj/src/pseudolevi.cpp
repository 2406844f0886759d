#include "sph/pseudolevi.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sph {

std::vector<Component> canon_components(std::vector<Component> cs) {
  std::vector<Component> out;
  for (Component c : cs) {
    if (c.rank == 0) continue;  // A0 is empty
    if (c.rank == 1) c.letter = 'A';
    if (c.letter == 'B' && c.rank == 2) c.letter = 'C';
    if (c.letter == 'D' && c.rank == 3) c.letter = 'A';
    if (c.letter == 'D' && c.rank == 2) {
      out.push_back({'A', 1, c.tilde});
      out.push_back({'A', 1, c.tilde});
      continue;
    }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool components_equal(const std::vector<Component>& a, const std::vector<Component>& b) {
  return canon_components(a) == canon_components(b);
}

std::string components_str(const std::vector<Component>& cs, int torus_rank) {
  std::string s;
  for (const Component& c : canon_components(cs)) {
    if (!s.empty()) s += ' ';
    s += c.letter;
    if (c.tilde) s += '~';
    s += std::to_string(c.rank);
  }
  if (torus_rank > 0) {
    if (!s.empty()) s += ' ';
    s += "T" + std::to_string(torus_rank);
  }
  if (s.empty()) s = "1";
  return s;
}

namespace {

bool lex_positive(const ZVec& c) {
  for (const BigInt& x : c) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

Component recognize_one(const RootSystem& rs, const std::vector<int>& comp) {
  const int r = static_cast<int>(comp.size());
  bool tilde = false;
  if (rs.two_lengths()) {
    tilde = true;
    for (int b : comp)
      if (rs.root_is_long(b)) tilde = false;
  }
  if (r == 1) return {'A', 1, tilde};

  std::vector<std::vector<int>> adj(r);
  int max_bond = 1, edges = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      long bond = rs.pairing(comp[i], comp[j]) * rs.pairing(comp[j], comp[i]);
      if (bond != 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        max_bond = std::max<long>(max_bond, bond);
        ++edges;
      }
    }
  if (edges != r - 1) throw std::logic_error("subsystem base is not a tree");

  if (max_bond == 3) {
    if (r != 2) throw std::logic_error("triple bond outside G2");
    return {'G', 2, tilde};
  }
  if (max_bond == 2) {
    // chain with one double bond: B, C or F4
    int shorts = 0;
    Rational mx = rs.inner(rs.root(comp[0]), rs.root(comp[0]));
    for (int b : comp) mx = std::max(mx, rs.inner(rs.root(b), rs.root(b)));
    for (int b : comp)
      if (rs.inner(rs.root(b), rs.root(b)) < mx) ++shorts;
    for (int i = 0; i < r; ++i)
      if (adj[i].size() > 2) throw std::logic_error("branch node with a double bond");
    if (r == 2) return {'C', 2, tilde};  // B2 and C2 coincide
    if (shorts == 1) return {'B', r, tilde};
    if (shorts == r - 1) return {'C', r, tilde};
    if (r == 4 && shorts == 2) return {'F', 4, tilde};
    throw std::logic_error("unrecognized doubly-laced diagram");
  }
  // simply laced
  int center = -1;
  for (int i = 0; i < r; ++i) {
    if (adj[i].size() > 3) throw std::logic_error("vertex of degree > 3");
    if (adj[i].size() == 3) {
      if (center >= 0) throw std::logic_error("two branch nodes");
      center = i;
    }
  }
  if (center < 0) return {'A', r, tilde};
  std::vector<int> branch;
  for (int s : adj[center]) {
    int len = 1, prev = center, cur = s;
    for (;;) {
      int next = -1;
      for (int t : adj[cur])
        if (t != prev) next = t;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    branch.push_back(len);
  }
  std::sort(branch.begin(), branch.end());
  if (branch[0] == 1 && branch[1] == 1) return {'D', r, tilde};
  if (branch[0] == 1 && branch[1] == 2 && branch[2] == 2) return {'E', 6, tilde};
  if (branch[0] == 1 && branch[1] == 2 && branch[2] == 3) return {'E', 7, tilde};
  if (branch[0] == 1 && branch[1] == 2 && branch[2] == 4) return {'E', 8, tilde};
  throw std::logic_error("unrecognized simply-laced diagram");
}

}  // namespace

RecognizedSubsystem recognize_subsystem(const RootSystem& rs, const std::vector<int>& roots) {
  std::set<int> inside(roots.begin(), roots.end());
  std::vector<int> pos;
  for (int r : roots)
    if (lex_positive(rs.delta_coords(r))) pos.push_back(r);

  RecognizedSubsystem out;
  for (int cand : pos) {
    bool decomposable = false;
    for (int a : pos) {
      if (a == cand) continue;
      // cand = a + b with both positive in the subset?
      QVec diff = rs.root(cand);
      const QVec& av = rs.root(a);
      for (size_t i = 0; i < diff.size(); ++i) diff[i] -= av[i];
      auto b = rs.index_of(diff);
      if (b && inside.count(*b) && lex_positive(rs.delta_coords(*b))) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.base.push_back(cand);
  }
  std::sort(out.base.begin(), out.base.end());

  // split the base into connected components of the Cartan graph
  const int r = static_cast<int>(out.base.size());
  std::vector<int> group(r, -1);
  int ngroups = 0;
  for (int i = 0; i < r; ++i) {
    if (group[i] >= 0) continue;
    group[i] = ngroups;
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int j = 0; j < r; ++j)
        if (group[j] < 0 && rs.pairing(out.base[v], out.base[j]) != 0) {
          group[j] = ngroups;
          stack.push_back(j);
        }
    }
    ++ngroups;
  }
  for (int g = 0; g < ngroups; ++g) {
    std::vector<int> comp;
    for (int i = 0; i < r; ++i)
      if (group[i] == g) comp.push_back(out.base[i]);
    out.components.push_back(recognize_one(rs, comp));
  }
  out.components = canon_components(out.components);
  return out;
}

SubsystemReport subsystem(const RootSystem& rs, const std::set<int>& J) {
  const int n = rs.rank();
  std::vector<int> ext = rs.extended_simple();
  ZMatrix A(n, static_cast<int>(J.size()));
  {
    int col = 0;
    for (int j : J) {
      if (j < 0 || j > n) throw std::invalid_argument("J index out of range");
      const ZVec& c = rs.delta_coords(ext[j]);
      for (int i = 0; i < n; ++i) A.at(i, col) = c[i];
      ++col;
    }
  }
  IntegerSolver solver(A);

  SubsystemReport rep;
  rep.J = J;
  for (int r = 0; r < rs.size(); ++r) {
    ZVec b = rs.delta_coords(r);
    if (solver.solvable(b)) rep.roots.push_back(r);
  }
  auto rec = recognize_subsystem(rs, rep.roots);
  rep.base = std::move(rec.base);
  rep.components = std::move(rec.components);
  rep.dim = n + static_cast<long>(rep.roots.size());

  if (solver.rank() == static_cast<int>(J.size())) {
    long total = 0;
    for (const Component& c : rep.components) total += c.rank;
    if (total != static_cast<long>(J.size()))
      throw std::logic_error("component ranks do not add up to |J|");
  }
  return rep;
}

CenterReport reduced_center(const RootSystem& rs, const std::set<int>& J, long p) {
  const int n = rs.rank();
  std::vector<int> ext = rs.extended_simple();
  ZMatrix M(static_cast<int>(J.size()), n);
  {
    int row = 0;
    for (int j : J) {
      for (int i = 0; i < n; ++i)
        M.at(row, i) = rs.pairing(ext[j], rs.simple(i + 1));
      ++row;
    }
  }
  CenterReport rep;
  rep.factors = smith_normal_form(M);
  rep.torus_rank = n - static_cast<int>(rep.factors.size());
  rep.order_char0 = 1;
  for (const BigInt& d : rep.factors) rep.order_char0 *= d;
  rep.reduced_order = rep.order_char0;
  if (p > 0)
    while (rep.reduced_order % p == 0) rep.reduced_order /= p;
  return rep;
}

std::vector<std::set<int>> find_pseudolevi_of_type(const RootSystem& rs,
                                                   const std::vector<Component>& target) {
  std::vector<Component> want = canon_components(target);
  std::vector<std::set<int>> hits;
  const int m = rs.rank() + 1;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::set<int> J;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) J.insert(i);
    SubsystemReport rep = subsystem(rs, J);
    if (rep.components == want) hits.push_back(J);
  }
  return hits;
}

}  // namespace sph
