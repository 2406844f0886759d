#include "sph/torus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sph {

ScalarSymbol ScalarSymbol::concrete(std::string name, FieldValue v) {
  ScalarSymbol s;
  s.name = std::move(name);
  s.kind = Kind::Concrete;
  s.value = v;
  return s;
}

ScalarSymbol ScalarSymbol::of_order(std::string name, long order) {
  ScalarSymbol s;
  s.name = std::move(name);
  s.kind = Kind::FiniteOrder;
  s.order = order;
  return s;
}

ScalarSymbol ScalarSymbol::generic(std::string name, std::vector<long> forbidden) {
  ScalarSymbol s;
  s.name = std::move(name);
  s.kind = Kind::Generic;
  s.forbidden = std::move(forbidden);
  return s;
}

long ScalarSymbol::effective_order(long p) const {
  long m = order;
  if (p > 0)
    while (m % p == 0) m /= p;
  return m;
}

bool ScalarSymbol::order_possible(long d, long p) const {
  if (p > 0 && d % p == 0) return false;  // k* has no p-torsion
  return std::find(forbidden.begin(), forbidden.end(), d) == forbidden.end();
}

TorusElem TorusElem::identity(const RootSystem& rs) { return TorusElem(&rs); }

void TorusElem::push_term(const ScalarSymbol& z, const QVec& y) {
  // every root must evaluate with an integer exponent; checking the simple
  // roots suffices (the rest are integer combinations of those rows)
  for (int j = 1; j <= rs_->rank(); ++j) {
    Rational e(0);
    for (int i = 0; i < rs_->rank(); ++i)
      e += y[i] * Rational(rs_->cartan(j, i));
    if (e.get_den() != 1)
      throw std::invalid_argument("coroot vector does not pair integrally with the roots");
  }
  for (auto& [sym, vec] : terms_) {
    if (sym.name == z.name) {
      for (int i = 0; i < rs_->rank(); ++i) vec[i] += y[i];
      return;
    }
  }
  terms_.emplace_back(z, y);
}

TorusElem TorusElem::h(const RootSystem& rs, int root, const ScalarSymbol& z) {
  return h_power(rs, root, z, 1);
}

TorusElem TorusElem::h_power(const RootSystem& rs, int root, const ScalarSymbol& z, long k) {
  ZVec c = rs.coroot_coords(root);
  QVec y(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) y[i] = Rational(c[i]) * k;
  TorusElem t(&rs);
  t.push_term(z, y);
  return t;
}

TorusElem TorusElem::from_coroot_vector(const RootSystem& rs, const QVec& y,
                                        const ScalarSymbol& z) {
  TorusElem t(&rs);
  t.push_term(z, y);
  return t;
}

TorusElem TorusElem::multiply(const TorusElem& o) const {
  if (rs_ != o.rs_) throw std::invalid_argument("torus elements of different systems");
  TorusElem t = *this;
  for (const auto& [sym, vec] : o.terms_) t.push_term(sym, vec);
  return t;
}

TorusElem TorusElem::inverse() const {
  TorusElem t(rs_);
  for (const auto& [sym, vec] : terms_) {
    QVec neg = vec;
    for (auto& x : neg) x = -x;
    t.push_term(sym, neg);
  }
  return t;
}

std::vector<std::pair<ScalarSymbol, BigInt>> TorusElem::eval_root(int root) const {
  std::vector<std::pair<ScalarSymbol, BigInt>> out;
  for (const auto& [sym, vec] : terms_) {
    Rational e(0);
    for (int i = 0; i < rs_->rank(); ++i)
      e += vec[i] * Rational(rs_->pairing(root, rs_->simple(i + 1)));
    if (e.get_den() != 1) throw std::logic_error("non-integral root exponent");
    out.emplace_back(sym, BigInt(e.get_num()));
  }
  return out;
}

namespace {

// definite non-identity factor with its order when known (0 = infinite)
struct Factor {
  long order;
};

std::vector<long> divisors(const BigInt& e) {
  BigInt a = abs(e);
  std::vector<long> d;
  if (!a.fits_slong_p()) throw std::logic_error("exponent unexpectedly large");
  long n = a.get_si();
  for (long k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      d.push_back(k);
      if (k != n / k) d.push_back(n / k);
    }
  return d;
}

}  // namespace

Tri TorusElem::root_value_is_one(int root, long p) const {
  std::vector<Factor> nontrivial;
  FieldValue concrete = FieldValue::rational(1);
  bool has_concrete = false;
  long concrete_p = 0;
  for (const auto& [sym, e] : eval_root(root)) {
    if (e == 0) continue;
    switch (sym.kind) {
      case ScalarSymbol::Kind::Concrete: {
        if (has_concrete && concrete_p != sym.value.characteristic())
          throw std::invalid_argument("mixed concrete fields in one element");
        if (!has_concrete) {
          concrete = sym.value.pow(e);
          concrete_p = sym.value.characteristic();
          has_concrete = true;
        } else {
          concrete = concrete * sym.value.pow(e);
        }
        break;
      }
      case ScalarSymbol::Kind::FiniteOrder: {
        long m = sym.effective_order(p);
        long g = std::gcd(m, static_cast<long>(mpz_fdiv_ui(e.get_mpz_t(), m)));
        long o = (g == 0) ? 1 : m / g;
        if (o > 1) nontrivial.push_back({o});
        break;
      }
      case ScalarSymbol::Kind::Generic: {
        bool all_dead = true;
        for (long d : divisors(e))
          if (sym.order_possible(d, p)) {
            all_dead = false;
            break;
          }
        if (all_dead)
          nontrivial.push_back({0});  // provably != 1; order unconstrained
        else
          return Tri::Conditional;
        break;
      }
    }
  }
  if (has_concrete && !concrete.is_one()) {
    auto ord = multiplicative_order(concrete, 64);
    nontrivial.push_back({ord ? *ord : 0});
  }
  if (nontrivial.empty()) return Tri::Yes;
  if (nontrivial.size() == 1) return Tri::No;
  // a product of non-identity elements of pairwise coprime (or infinite
  // against finite) orders cannot collapse to the identity
  for (size_t i = 0; i < nontrivial.size(); ++i)
    for (size_t j = i + 1; j < nontrivial.size(); ++j) {
      long a = nontrivial[i].order, b = nontrivial[j].order;
      if (a == 0 && b == 0) return Tri::Conditional;
      if (a != 0 && b != 0 && std::gcd(a, b) != 1) return Tri::Conditional;
    }
  return Tri::No;
}

bool TorusElem::is_identity(long p) const {
  for (const auto& [sym, vec] : terms_) {
    for (int i = 0; i < rs_->rank(); ++i) {
      const Rational& c = vec[i];
      if (c.get_den() != 1)
        throw std::invalid_argument(
            "element is not in the simply-connected torus (fractional coweight)");
      BigInt e(c.get_num());
      switch (sym.kind) {
        case ScalarSymbol::Kind::Concrete:
          if (!sym.value.pow(e).is_one()) return false;
          break;
        case ScalarSymbol::Kind::FiniteOrder: {
          long m = sym.effective_order(p);
          if (mpz_fdiv_ui(e.get_mpz_t(), m) != 0) return false;
          break;
        }
        case ScalarSymbol::Kind::Generic:
          if (e != 0)
            throw std::invalid_argument(
                "identity test undecidable for generic symbol " + sym.name);
          break;
      }
    }
  }
  return true;
}

bool TorusElem::equals(const TorusElem& o, long p) const {
  return multiply(o.inverse()).is_identity(p);
}

TorusElem::Centralizer TorusElem::centralizer_roots(long p) const {
  Centralizer c;
  for (int r = 0; r < rs_->size(); ++r) {
    switch (root_value_is_one(r, p)) {
      case Tri::Yes: c.roots.push_back(r); break;
      case Tri::Conditional: c.conditional.push_back(r); break;
      case Tri::No: break;
    }
  }
  return c;
}

}  // namespace sph
