#pragma once

// Arithmetic in the maximal torus of the simply-connected group.  Elements
// are formal products of cocharacter-valued scalars: each term is a vector
// in the simple-coroot basis together with a scalar symbol.  Symbols are
// either concrete field values, named roots of unity with an exact
// multiplicative order, or generic parameters carrying a list of forbidden
// orders (the tables' conditions "lambda != 1", "z^3 != 1" are exactly such
// lists).  In characteristic p the declared orders lose their p-part.

#include <string>
#include <vector>

#include "sph/rootsystem.hpp"

namespace sph {

struct ScalarSymbol {
  enum class Kind { Concrete, FiniteOrder, Generic };

  std::string name;
  Kind kind = Kind::Generic;
  FieldValue value;                // Concrete only
  long order = 0;                  // FiniteOrder: exact multiplicative order
  std::vector<long> forbidden;     // Generic: orders the parameter cannot have

  static ScalarSymbol concrete(std::string name, FieldValue v);
  static ScalarSymbol of_order(std::string name, long order);
  static ScalarSymbol generic(std::string name, std::vector<long> forbidden);
  static ScalarSymbol minus_one() { return of_order("-1", 2); }

  long effective_order(long p) const;          // FiniteOrder, p-part removed
  bool order_possible(long d, long p) const;   // Generic: could ord = d?
};

enum class Tri { Yes, No, Conditional };

class TorusElem {
 public:
  static TorusElem identity(const RootSystem& rs);
  static TorusElem h(const RootSystem& rs, int root, const ScalarSymbol& z);
  /// h_alpha(z^k), kept as the exponent k on the coroot.
  static TorusElem h_power(const RootSystem& rs, int root, const ScalarSymbol& z, long k);
  /// Element with a given coroot-basis coordinate vector.  Fractional
  /// coordinates are allowed as long as every root evaluates integrally
  /// (such elements live in the adjoint torus; identity testing refuses them).
  static TorusElem from_coroot_vector(const RootSystem& rs, const QVec& y,
                                      const ScalarSymbol& z);

  const RootSystem& system() const { return *rs_; }

  TorusElem multiply(const TorusElem& o) const;
  TorusElem inverse() const;
  TorusElem square() const { return multiply(*this); }

  /// Monomial value of a root on this element: symbol -> exponent.
  std::vector<std::pair<ScalarSymbol, BigInt>> eval_root(int root) const;

  Tri root_value_is_one(int root, long p) const;

  /// Identity test in the simply-connected torus (fundamental-weight
  /// exponents divisible by each symbol's order).  Throws on generic
  /// symbols and on adjoint-only elements.
  bool is_identity(long p) const;
  bool equals(const TorusElem& o, long p) const;

  struct Centralizer {
    std::vector<int> roots;        // definite
    std::vector<int> conditional;  // value depends on the parameter's order
  };
  Centralizer centralizer_roots(long p) const;

 private:
  explicit TorusElem(const RootSystem* rs) : rs_(rs) {}
  void push_term(const ScalarSymbol& z, const QVec& y);

  const RootSystem* rs_;
  std::vector<std::pair<ScalarSymbol, QVec>> terms_;  // merged by symbol name
};

}  // namespace sph
