#include "sph/rootsystem.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sph {

std::string type_name(TypeLetter t, int rank) {
  static const char* L = "ABCDEFG";
  return std::string(1, L[static_cast<int>(t)]) + std::to_string(rank);
}

std::optional<std::pair<TypeLetter, int>> parse_type(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char c = std::toupper(s[0]);
  const std::string letters = "ABCDEFG";
  auto pos = letters.find(c);
  if (pos == std::string::npos) return std::nullopt;
  TypeLetter t = static_cast<TypeLetter>(pos);
  if (s.size() == 1) return std::make_pair(t, 0);  // rank supplied separately
  try {
    int r = std::stoi(s.substr(1));
    return std::make_pair(t, r);
  } catch (...) {
    return std::nullopt;
  }
}

bool valid_type(TypeLetter t, int rank) {
  switch (t) {
    case TypeLetter::A: return rank >= 1;
    case TypeLetter::B: return rank >= 2;
    case TypeLetter::C: return rank >= 2;
    case TypeLetter::D: return rank >= 4;
    case TypeLetter::E: return rank >= 6 && rank <= 8;
    case TypeLetter::F: return rank == 4;
    case TypeLetter::G: return rank == 2;
  }
  return false;
}

static long expected_count(TypeLetter t, int n) {
  switch (t) {
    case TypeLetter::A: return static_cast<long>(n) * (n + 1);
    case TypeLetter::B:
    case TypeLetter::C: return 2L * n * n;
    case TypeLetter::D: return 2L * n * (n - 1);
    case TypeLetter::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case TypeLetter::F: return 48;
    case TypeLetter::G: return 12;
  }
  return 0;
}

static QVec evec(int dim, int i, long c = 1) {
  QVec v(dim, Rational(0));
  v[i] = Rational(c);
  return v;
}

static std::vector<QVec> simple_roots_of(TypeLetter t, int n, int& ambient) {
  std::vector<QVec> s;
  switch (t) {
    case TypeLetter::A: {
      ambient = n + 1;
      for (int i = 0; i < n; ++i) {
        QVec v(ambient, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      break;
    }
    case TypeLetter::B:
    case TypeLetter::C:
    case TypeLetter::D: {
      ambient = n;
      for (int i = 0; i + 1 < n; ++i) {
        QVec v(ambient, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      if (t == TypeLetter::B) {
        s.push_back(evec(ambient, n - 1));
      } else if (t == TypeLetter::C) {
        s.push_back(evec(ambient, n - 1, 2));
      } else {
        QVec v(ambient, Rational(0));
        v[n - 2] = 1;
        v[n - 1] = 1;
        s.push_back(v);
      }
      break;
    }
    case TypeLetter::E: {
      ambient = 8;
      QVec a1(8, Rational(1, 2));
      for (int i = 1; i <= 6; ++i) a1[i] = Rational(-1, 2);
      s.push_back(a1);
      QVec a2(8, Rational(0));
      a2[0] = 1;
      a2[1] = 1;
      s.push_back(a2);
      for (int i = 0; i + 1 < 7; ++i) {
        if (static_cast<int>(s.size()) >= n) break;
        QVec v(8, Rational(0));
        v[i] = -1;
        v[i + 1] = 1;
        s.push_back(v);
      }
      s.resize(n);
      break;
    }
    case TypeLetter::F: {
      ambient = 4;
      QVec a1(4, Rational(0)), a2(4, Rational(0)), a4(4, Rational(1, 2));
      a1[1] = 1;
      a1[2] = -1;
      a2[2] = 1;
      a2[3] = -1;
      a4[0] = Rational(1, 2);
      a4[1] = Rational(-1, 2);
      a4[2] = Rational(-1, 2);
      a4[3] = Rational(-1, 2);
      s = {a1, a2, evec(4, 3), a4};
      break;
    }
    case TypeLetter::G: {
      ambient = 3;
      QVec a1(3, Rational(0)), a2(3, Rational(0));
      a1[0] = 1;
      a1[1] = -1;
      a2[0] = -2;
      a2[1] = 1;
      a2[2] = 1;
      s = {a1, a2};
      break;
    }
  }
  return s;
}

RootSystem RootSystem::build(TypeLetter t, int n) {
  if (!valid_type(t, n))
    throw std::invalid_argument("invalid simple type " + type_name(t, n));
  RootSystem rs;
  rs.letter_ = t;
  rs.rank_ = n;
  std::vector<QVec> simple = simple_roots_of(t, n, rs.ambient_);

  auto pair_q = [&](const QVec& b, const QVec& a) -> Rational {
    return 2 * dot(b, a) / dot(a, a);
  };

  // closure of the simple set under all simple reflections
  std::set<QVec> seen(simple.begin(), simple.end());
  std::vector<QVec> queue(simple.begin(), simple.end());
  while (!queue.empty()) {
    QVec b = queue.back();
    queue.pop_back();
    for (const QVec& a : simple) {
      Rational c = pair_q(b, a);
      QVec img = b;
      for (int i = 0; i < rs.ambient_; ++i) img[i] -= c * a[i];
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  rs.roots_.assign(seen.begin(), seen.end());  // set order = lexicographic
  if (static_cast<long>(rs.roots_.size()) != expected_count(t, n))
    throw std::logic_error("root count mismatch for " + rs.name());

  for (int i = 0; i < rs.size(); ++i) rs.index_[rs.roots_[i]] = i;

  rs.simple_.resize(n);
  for (int i = 0; i < n; ++i) rs.simple_[i] = rs.index_.at(simple[i]);

  // expansions in the simple basis, via the Gram matrix
  QMatrix gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram.at(i, j) = dot(simple[i], simple[j]);
  rs.delta_.resize(rs.size());
  rs.positive_.resize(rs.size());
  for (int r = 0; r < rs.size(); ++r) {
    QVec rhs(n);
    for (int j = 0; j < n; ++j) rhs[j] = dot(rs.roots_[r], simple[j]);
    auto sol = solve(gram, rhs);
    if (!sol) throw std::logic_error("root outside simple span");
    ZVec c(n);
    bool pos = true;
    for (int j = 0; j < n; ++j) {
      if ((*sol)[j].get_den() != 1)
        throw std::logic_error("non-integral simple expansion");
      c[j] = (*sol)[j].get_num();
      if (c[j] < 0) pos = false;
    }
    rs.delta_[r] = c;
    rs.positive_[r] = pos;
  }

  rs.negative_of_.resize(rs.size());
  for (int r = 0; r < rs.size(); ++r) {
    QVec neg = rs.roots_[r];
    for (auto& x : neg) x = -x;
    rs.negative_of_[r] = rs.index_.at(neg);
  }

  // highest root: maximal height; check dominance over every positive root
  long best_h = -1;
  for (int r = 0; r < rs.size(); ++r) {
    if (!rs.positive_[r]) continue;
    long h = 0;
    for (const auto& c : rs.delta_[r]) h += c.get_si();
    if (h > best_h) {
      best_h = h;
      rs.highest_ = r;
    }
  }
  for (int r = 0; r < rs.size(); ++r) {
    if (!rs.positive_[r]) continue;
    for (int j = 0; j < n; ++j)
      if (rs.delta_[rs.highest_][j] < rs.delta_[r][j])
        throw std::logic_error("highest root fails dominance");
  }

  // Cartan matrix and the d-weights making D*A symmetric
  rs.cartan_.assign(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational c = pair_q(simple[i], simple[j]);
      if (c.get_den() != 1) throw std::logic_error("non-crystallographic pairing");
      rs.cartan_[i][j] = c.get_num().get_si();
    }
  {
    std::vector<Rational> half(n);
    BigInt l(1);
    for (int i = 0; i < n; ++i) {
      half[i] = dot(simple[i], simple[i]) / 2;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), half[i].get_den_mpz_t());
    }
    BigInt g(0);
    std::vector<BigInt> scaled(n);
    for (int i = 0; i < n; ++i) {
      Rational s = half[i] * Rational(l);
      scaled[i] = s.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled[i].get_mpz_t());
    }
    rs.d_.resize(n);
    for (int i = 0; i < n; ++i) rs.d_[i] = BigInt(scaled[i] / g).get_si();
  }

  Rational mx = dot(rs.roots_[0], rs.roots_[0]), mn = mx;
  for (const auto& r : rs.roots_) {
    Rational nm = dot(r, r);
    mx = std::max(mx, nm);
    mn = std::min(mn, nm);
  }
  rs.max_norm_ = mx;
  rs.min_norm_ = mn;
  rs.two_lengths_ = (mx != mn);
  return rs;
}

std::optional<int> RootSystem::index_of(const QVec& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::checked_index(const QVec& v) const {
  auto i = index_of(v);
  if (!i) throw std::invalid_argument("vector is not a root of " + name());
  return *i;
}

int RootSystem::root_from_delta(const ZVec& c) const {
  QVec v(ambient_, Rational(0));
  for (int j = 0; j < rank_; ++j)
    for (int i = 0; i < ambient_; ++i) v[i] += Rational(c[j]) * roots_[simple_[j]][i];
  return checked_index(v);
}

long RootSystem::pairing(const QVec& beta, int alpha) const {
  const QVec& a = roots_[alpha];
  Rational c = 2 * dot(beta, a) / dot(a, a);
  if (c.get_den() != 1) throw std::logic_error("non-integral pairing");
  return c.get_num().get_si();
}

long RootSystem::pairing(int beta, int alpha) const {
  return pairing(roots_[beta], alpha);
}

int RootSystem::reflect(int root, int mirror) const {
  long c = pairing(root, mirror);
  QVec img = roots_[root];
  const QVec& a = roots_[mirror];
  for (int i = 0; i < ambient_; ++i) img[i] -= Rational(c) * a[i];
  return index_.at(img);
}

ZVec RootSystem::coroot_coords(int root) const {
  // alpha∨ = sum m_i (alpha_i,alpha_i)/(alpha,alpha) alpha_i∨
  const ZVec& m = delta_[root];
  Rational nm = dot(roots_[root], roots_[root]);
  ZVec c(rank_);
  for (int i = 0; i < rank_; ++i) {
    Rational x = Rational(m[i]) * dot(roots_[simple_[i]], roots_[simple_[i]]) / nm;
    if (x.get_den() != 1) throw std::logic_error("coroot not in coroot lattice");
    c[i] = x.get_num();
  }
  return c;
}

std::vector<int> RootSystem::extended_simple() const {
  std::vector<int> out;
  out.push_back(negative_of_[highest_]);
  for (int i = 1; i <= rank_; ++i) out.push_back(simple(i));
  return out;
}

long RootSystem::mark(int i) const {
  if (i == 0) return 1;
  return delta_[highest_][i - 1].get_si();
}

bool RootSystem::root_is_long(int i) const {
  return dot(roots_[i], roots_[i]) == max_norm_;
}

RootSystem::PaperRoots RootSystem::paper_beta_roots() const {
  PaperRoots out;
  const int n = rank_;
  auto from_delta = [&](std::initializer_list<long> c) {
    ZVec z;
    for (long x : c) z.push_back(BigInt(x));
    return root_from_delta(z);
  };
  switch (letter_) {
    case TypeLetter::A: {
      for (int i = 1; i <= (n + 1) / 2; ++i) {
        QVec v(ambient_, Rational(0));
        v[i - 1] = 1;
        v[n + 1 - i] = -1;  // e_i - e_{n+2-i}
        out.beta.push_back(checked_index(v));
      }
      break;
    }
    case TypeLetter::C: {
      for (int i = 1; i <= n; ++i) out.beta.push_back(checked_index(evec(n, i - 1, 2)));
      for (int i = 1; 2 * i <= n; ++i) {
        QVec v(n, Rational(0));
        v[2 * i - 2] = 1;
        v[2 * i - 1] = 1;
        out.gamma.push_back(checked_index(v));
      }
      break;
    }
    case TypeLetter::D: {
      for (int l = 1; 2 * l <= n; ++l) {
        QVec b(n, Rational(0)), d(n, Rational(0));
        b[2 * l - 2] = 1;
        b[2 * l - 1] = 1;
        d[2 * l - 2] = 1;
        d[2 * l - 1] = -1;
        out.beta.push_back(checked_index(b));
        out.delta.push_back(checked_index(d));
      }
      break;
    }
    case TypeLetter::E: {
      if (n == 6) {
        out.beta = {from_delta({1, 2, 2, 3, 2, 1}), from_delta({1, 0, 1, 1, 1, 1}),
                    from_delta({0, 0, 1, 1, 1, 0}), from_delta({0, 0, 0, 1, 0, 0})};
      } else if (n == 7) {
        out.beta = {from_delta({2, 2, 3, 4, 3, 2, 1}), from_delta({0, 1, 1, 2, 2, 2, 1}),
                    from_delta({0, 1, 1, 2, 1, 0, 0}), simple(7), simple(5),
                    simple(3),  simple(2)};
      } else {
        out.beta = {from_delta({2, 3, 4, 6, 5, 4, 3, 2}),
                    from_delta({2, 2, 3, 4, 3, 2, 1, 0}),
                    from_delta({0, 1, 1, 2, 2, 2, 1, 0}),
                    from_delta({0, 1, 1, 2, 1, 0, 0, 0}),
                    simple(7),
                    simple(5),
                    simple(3),
                    simple(2)};
      }
      break;
    }
    case TypeLetter::F: {
      out.beta = {from_delta({2, 3, 4, 2}), from_delta({0, 1, 2, 2}),
                  from_delta({0, 1, 2, 0}), from_delta({0, 1, 0, 0})};
      out.gamma = {from_delta({1, 2, 3, 2})};  // highest short root
      break;
    }
    case TypeLetter::G: {
      out.beta = {from_delta({3, 2}), simple(1)};
      out.gamma = {from_delta({2, 1})};  // highest short root
      break;
    }
    case TypeLetter::B:
      break;  // the classification works through C_n when p = 2
  }
  return out;
}

const RootSystem& root_system(TypeLetter t, int rank) {
  static std::map<std::pair<int, int>, RootSystem> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(t), rank);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, RootSystem::build(t, rank)).first;
  return it->second;
}

}  // namespace sph
