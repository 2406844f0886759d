#include "sph/matrixgroups.hpp"

#include <sstream>
#include <stdexcept>

namespace sph {

int GroupTag::rank() const {
  switch (kind) {
    case GroupKind::SL:
    case GroupKind::GL: return size - 1;
    case GroupKind::Sp:
    case GroupKind::SOplus: return size / 2;
  }
  return 0;
}

TypeLetter GroupTag::letter() const {
  switch (kind) {
    case GroupKind::SL:
    case GroupKind::GL: return TypeLetter::A;
    case GroupKind::Sp: return TypeLetter::C;
    case GroupKind::SOplus: return TypeLetter::D;
  }
  return TypeLetter::A;
}

const RootSystem& GroupTag::system() const { return root_system(letter(), rank()); }

std::string GroupTag::str() const {
  std::string k;
  switch (kind) {
    case GroupKind::SL: k = "SL"; break;
    case GroupKind::GL: k = "GL"; break;
    case GroupKind::Sp: k = "Sp"; break;
    case GroupKind::SOplus: k = "SO+"; break;
  }
  return k + "(" + std::to_string(size) + (p ? ", F" + std::to_string(p) : ", Q") + ")";
}

Mat Mat::identity(GroupTag tag) {
  Mat m(tag);
  for (int i = 0; i < tag.size; ++i) m.at(i, i) = FieldValue::of_int(1, tag.p);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  Mat r(tag_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const FieldValue& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + x * o.at(k, j);
      }
    }
  return r;
}

Mat Mat::transpose() const {
  Mat r(tag_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
  return r;
}

Mat Mat::inverse() const {
  Mat aug = *this;
  Mat inv = identity(tag_);
  for (int col = 0; col < n_; ++col) {
    int piv = -1;
    for (int i = col; i < n_; ++i)
      if (!aug.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::invalid_argument("singular matrix");
    if (piv != col)
      for (int j = 0; j < n_; ++j) {
        std::swap(aug.at(piv, j), aug.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    FieldValue d = aug.at(col, col).inverse();
    for (int j = 0; j < n_; ++j) {
      aug.at(col, j) = aug.at(col, j) * d;
      inv.at(col, j) = inv.at(col, j) * d;
    }
    for (int i = 0; i < n_; ++i) {
      if (i == col || aug.at(i, col).is_zero()) continue;
      FieldValue f = aug.at(i, col);
      for (int j = 0; j < n_; ++j) {
        aug.at(i, j) = aug.at(i, j) - f * aug.at(col, j);
        inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool Mat::is_lower_triangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

bool Mat::is_upper_triangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

bool Mat::is_diagonal() const { return is_lower_triangular() && is_upper_triangular(); }

FieldValue Mat::det() const {
  Mat m = *this;
  FieldValue d = FieldValue::of_int(1, tag_.p);
  for (int col = 0; col < n_; ++col) {
    int piv = -1;
    for (int i = col; i < n_; ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return FieldValue::of_int(0, tag_.p);
    if (piv != col) {
      for (int j = 0; j < n_; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = -d;
    }
    d = d * m.at(col, col);
    FieldValue inv = m.at(col, col).inverse();
    for (int i = col + 1; i < n_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      FieldValue f = m.at(i, col) * inv;
      for (int j = col; j < n_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
    }
  }
  return d;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    os << (i ? "; " : "[");
    for (int j = 0; j < n_; ++j) os << (j ? " " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

namespace {

// supports of a classical root in the e-coordinates
struct RootShape {
  int i = -1, j = -1;  // e_i - e_j
  int plus_i = -1, plus_j = -1;  // e_i + e_j (i < j)
  int double_i = -1;  // 2 e_i
  int sign = 1;       // overall sign of the listed pattern
};

RootShape classify(const QVec& r) {
  RootShape s;
  std::vector<std::pair<int, long>> nz;
  for (size_t t = 0; t < r.size(); ++t)
    if (r[t] != 0) nz.emplace_back(static_cast<int>(t), Rational(r[t]).get_num().get_si());
  if (nz.size() == 1) {
    if (nz[0].second == 2) {
      s.double_i = nz[0].first;
      s.sign = 1;
    } else if (nz[0].second == -2) {
      s.double_i = nz[0].first;
      s.sign = -1;
    } else {
      throw std::logic_error("unsupported single-entry root");
    }
    return s;
  }
  if (nz.size() != 2) throw std::logic_error("root is not classical-shaped");
  auto [t1, c1] = nz[0];
  auto [t2, c2] = nz[1];
  if (c1 == 1 && c2 == -1) {
    s.i = t1;
    s.j = t2;
  } else if (c1 == -1 && c2 == 1) {
    s.i = t2;
    s.j = t1;
  } else if (c1 == 1 && c2 == 1) {
    s.plus_i = t1;
    s.plus_j = t2;
    s.sign = 1;
  } else if (c1 == -1 && c2 == -1) {
    s.plus_i = t1;
    s.plus_j = t2;
    s.sign = -1;
  } else {
    throw std::logic_error("root is not classical-shaped");
  }
  return s;
}

int dual(int i, int N) { return N - 1 - i; }  // 0-based anti-diagonal partner

}  // namespace

Mat gen_x(const GroupTag& tag, int alpha, const FieldValue& t) {
  const RootSystem& rs = tag.system();
  const int N = tag.size;
  Mat m = Mat::identity(tag);
  RootShape s = classify(rs.root(alpha));
  switch (tag.kind) {
    case GroupKind::SL:
    case GroupKind::GL: {
      if (s.i < 0) throw std::logic_error("non-A root in a linear group");
      m.at(s.i, s.j) = m.at(s.i, s.j) + t;
      break;
    }
    case GroupKind::Sp: {
      if (s.double_i >= 0) {
        int i = s.double_i, di = dual(i, N);
        if (s.sign > 0)
          m.at(i, di) = t;
        else
          m.at(di, i) = t;
      } else if (s.i >= 0) {
        m.at(s.i, s.j) = m.at(s.i, s.j) + t;
        m.at(dual(s.j, N), dual(s.i, N)) = m.at(dual(s.j, N), dual(s.i, N)) - t;
      } else {
        int i = s.plus_i, j = s.plus_j;
        if (s.sign > 0) {
          m.at(i, dual(j, N)) = t;
          m.at(j, dual(i, N)) = t;
        } else {
          m.at(dual(j, N), i) = t;
          m.at(dual(i, N), j) = t;
        }
      }
      break;
    }
    case GroupKind::SOplus: {
      if (s.i >= 0) {
        m.at(s.i, s.j) = m.at(s.i, s.j) + t;
        m.at(dual(s.j, N), dual(s.i, N)) = m.at(dual(s.j, N), dual(s.i, N)) - t;
      } else if (s.plus_i >= 0) {
        int i = s.plus_i, j = s.plus_j;
        if (s.sign > 0) {
          m.at(i, dual(j, N)) = t;
          m.at(j, dual(i, N)) = -t;
        } else {
          m.at(dual(j, N), i) = t;
          m.at(dual(i, N), j) = -t;
        }
      } else {
        throw std::logic_error("non-D root in an orthogonal group");
      }
      break;
    }
  }
  return m;
}

Mat gen_n(const GroupTag& tag, int alpha) {
  const RootSystem& rs = tag.system();
  FieldValue one = FieldValue::of_int(1, tag.p);
  return gen_x(tag, alpha, one) * gen_x(tag, rs.negate(alpha), -one) * gen_x(tag, alpha, one);
}

Mat gen_h(const GroupTag& tag, int alpha, const FieldValue& z) {
  if (z.is_zero()) throw std::invalid_argument("torus parameter must be nonzero");
  const RootSystem& rs = tag.system();
  Mat prod = gen_x(tag, alpha, z) * gen_x(tag, rs.negate(alpha), -z.inverse()) *
             gen_x(tag, alpha, z);
  return prod * gen_n(tag, alpha).inverse();
}

Mat torus_diag(const GroupTag& tag, const std::vector<long>& m, const FieldValue& lambda) {
  const int N = tag.size;
  Mat t = Mat::identity(tag);
  if (tag.kind == GroupKind::SL || tag.kind == GroupKind::GL) {
    if (static_cast<int>(m.size()) != N) throw std::invalid_argument("exponent length");
    for (int i = 0; i < N; ++i) t.at(i, i) = lambda.pow(BigInt(m[i]));
  } else {
    int n = N / 2;
    if (static_cast<int>(m.size()) != n) throw std::invalid_argument("exponent length");
    for (int i = 0; i < n; ++i) {
      t.at(i, i) = lambda.pow(BigInt(m[i]));
      t.at(dual(i, N), dual(i, N)) = lambda.pow(BigInt(-m[i]));
    }
  }
  return t;
}

namespace {

bool sp_form_preserved(const Mat& M) {
  const int N = M.size();
  int n = N / 2;
  // K[i][N-1-i] = 1 for i < n, -1 for i >= n
  auto K = [&](int i, int j) -> long {
    if (j != N - 1 - i) return 0;
    return i < n ? 1 : -1;
  };
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      FieldValue s = FieldValue::of_int(0, M.tag().p);
      for (int i = 0; i < N; ++i) {
        long k = K(i, N - 1 - i);
        // sum_i M[i][a] * K[i][i'] * M[i'][b]
        s = s + M.at(i, a) * FieldValue::of_int(k, M.tag().p) * M.at(N - 1 - i, b);
      }
      FieldValue want = FieldValue::of_int(K(a, b), M.tag().p);
      if (s != want) return false;
    }
  return true;
}

bool so_form_preserved(const Mat& M) {
  const int N = M.size();
  int n = N / 2;
  long p = M.tag().p;
  // bilinear part: M^t K M = K with K the anti-identity
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      FieldValue s = FieldValue::of_int(0, p);
      for (int i = 0; i < N; ++i) s = s + M.at(i, a) * M.at(N - 1 - i, b);
      FieldValue want = FieldValue::of_int(b == N - 1 - a ? 1 : 0, p);
      if (s != want) return false;
    }
  // quadratic form on basis vectors: Q(M e_j) = 0
  for (int j = 0; j < N; ++j) {
    FieldValue q = FieldValue::of_int(0, p);
    for (int i = 0; i < n; ++i) q = q + M.at(i, j) * M.at(N - 1 - i, j);
    if (!q.is_zero()) return false;
  }
  return true;
}

}  // namespace

int rank_of(const Mat& M) {
  const int N = M.size();
  Mat m = M;
  int r = 0;
  for (int col = 0; col < N && r < N; ++col) {
    int piv = -1;
    for (int i = r; i < N; ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < N; ++j) std::swap(m.at(piv, j), m.at(r, j));
    FieldValue inv = m.at(r, col).inverse();
    for (int i = r + 1; i < N; ++i) {
      if (m.at(i, col).is_zero()) continue;
      FieldValue f = m.at(i, col) * inv;
      for (int j = col; j < N; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

bool in_group(const Mat& M) {
  switch (M.tag().kind) {
    case GroupKind::GL: return !M.det().is_zero();
    case GroupKind::SL: return M.det().is_one();
    case GroupKind::Sp: return sp_form_preserved(M);
    case GroupKind::SOplus: {
      if (!so_form_preserved(M)) return false;
      // Dickson invariant 0
      if (M.tag().p == 2) {
        Mat d = M;
        for (int i = 0; i < M.size(); ++i)
          d.at(i, i) = d.at(i, i) - FieldValue::of_int(1, 2);
        return rank_of(d) % 2 == 0;
      }
      return M.det().is_one();
    }
  }
  return false;
}

std::vector<FieldValue> char_poly(const Mat& M) {
  // Berkowitz: division-free, valid over any field including char p
  const int N = M.size();
  long p = M.tag().p;
  auto zero = [&] { return FieldValue::of_int(0, p); };
  std::vector<FieldValue> V = {FieldValue::of_int(1, p), -M.at(0, 0)};
  for (int r = 1; r < N; ++r) {
    // principal (r+1)x(r+1) block; c_k coefficients
    std::vector<FieldValue> c = {FieldValue::of_int(1, p), -M.at(r, r)};
    std::vector<FieldValue> Mv(r);  // M_r^k . S, starts with S
    for (int i = 0; i < r; ++i) Mv[i] = M.at(i, r);
    for (int k = 2; k <= r + 1; ++k) {
      FieldValue rms = zero();
      for (int i = 0; i < r; ++i) rms = rms + M.at(r, i) * Mv[i];
      c.push_back(-rms);
      if (k <= r) {
        std::vector<FieldValue> next(r, zero());
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) next[i] = next[i] + M.at(i, j) * Mv[j];
        Mv = std::move(next);
      }
    }
    std::vector<FieldValue> W(r + 2, zero());
    for (int i = 0; i <= r + 1; ++i)
      for (size_t j = 0; j < V.size() && j <= static_cast<size_t>(i); ++j)
        if (i - static_cast<int>(j) < static_cast<int>(c.size()))
          W[i] = W[i] + c[i - j] * V[j];
    V = std::move(W);
  }
  // V holds descending-power coefficients; return ascending
  std::vector<FieldValue> asc(V.rbegin(), V.rend());
  return asc;
}

int eigenspace_dim(const Mat& M, const FieldValue& value) {
  Mat d = M;
  for (int i = 0; i < M.size(); ++i) d.at(i, i) = d.at(i, i) - value;
  return M.size() - rank_of(d);
}

int block_to_anti_index(int i, int n) {
  // 0-based: block position i < n stays; block position n + t maps to 2n-1-t
  return i < n ? i : 2 * n - 1 - (i - n);
}

Mat from_block_convention(const GroupTag& tag, const std::vector<std::vector<FieldValue>>& rows) {
  const int N = tag.size;
  int n = N / 2;
  Mat m(tag);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      m.at(block_to_anti_index(i, n), block_to_anti_index(j, n)) = rows[i][j];
  return m;
}

std::vector<std::vector<FieldValue>> to_block_convention(const Mat& M) {
  const int N = M.size();
  int n = N / 2;
  std::vector<std::vector<FieldValue>> rows(N, std::vector<FieldValue>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      rows[i][j] = M.at(block_to_anti_index(i, n), block_to_anti_index(j, n));
  return rows;
}

Mat representative(const ClassFamily& f, int n, int k, long p,
                   const std::vector<FieldValue>& params) {
  if (!f.has_matrix)
    throw std::invalid_argument("family " + f.id + " has no classical matrix realization");
  if (f.matrix_diag_ab) {
    GroupTag tag{GroupKind::SL, n + 1, p};
    const FieldValue &a = params.at(0), &b = params.at(1);
    if (a == b) throw std::invalid_argument("parameters must satisfy a != b");
    Mat m = Mat::identity(tag);
    for (int i = 0; i < k; ++i) m.at(i, i) = a;
    for (int i = k; i <= n; ++i) m.at(i, i) = b;
    if (!m.det().is_one()) throw std::invalid_argument("a^k b^{n+1-k} must be 1");
    return m;
  }
  const FieldValue& lambda = params.at(0);
  for (long d : f.cell_forbidden)
    if (lambda.pow(BigInt(d)).is_one())
      throw std::invalid_argument("parameter violates the family's exclusions");
  GroupTag tag{f.matrix_group, 2 * n, p};
  return torus_diag(tag, f.e_exponents(n, k), lambda);
}

Mat conjugator(const ClassFamily& f, int n, int k, long p) {
  if (!f.conjugator) throw std::invalid_argument("family has no conjugation recipe");
  if (!f.has_matrix)
    throw std::invalid_argument("family " + f.id + " has no classical matrix realization");
  GroupTag tag{f.matrix_group, f.matrix_group == GroupKind::SL ? n + 1 : 2 * n, p};
  const RootSystem& rs = tag.system();
  ConjRecipe recipe = f.conjugator(rs, n, k);
  Mat g = Mat::identity(tag);
  for (int r : recipe.n_roots) g = g * gen_n(tag, r);
  FieldValue one = FieldValue::of_int(1, p);
  for (int r : recipe.x_roots) g = g * gen_x(tag, r, one);
  return g;
}

AppendixGL3 appendix_gl3(long p, const FieldValue& m, const FieldValue& a,
                         const FieldValue& b, const FieldValue& c) {
  for (const FieldValue* v : {&m, &a, &b, &c})
    if (v->is_zero()) throw std::invalid_argument("appendix parameters must be nonzero");
  GroupTag tag{GroupKind::GL, 3, p};
  auto fv = [&](long x) { return FieldValue::of_int(x, p); };
  Mat x(tag), w(tag), d(tag), u(tag);
  FieldValue abc_m = a * b * c / m;
  FieldValue prod = (a + m) * (b + m) * (c + m);

  x.at(0, 2) = abc_m;
  x.at(1, 1) = -m;
  x.at(1, 2) = -(prod / m);
  x.at(2, 0) = fv(1);
  x.at(2, 1) = fv(1);
  x.at(2, 2) = a + b + c + m;

  w.at(0, 2) = fv(1);
  w.at(1, 1) = fv(-1);
  w.at(2, 0) = fv(1);

  d.at(0, 0) = fv(1);
  d.at(1, 1) = m;
  d.at(2, 2) = abc_m;

  u = Mat::identity(tag);
  u.at(0, 1) = fv(1);
  u.at(0, 2) = a + b + c + m;
  u.at(1, 2) = prod / (m * m);

  return AppendixGL3{x, w, d, u};
}

AppendixSp4 appendix_sp4(long p, const FieldValue& m, const FieldValue& a) {
  if (m.is_zero()) throw std::invalid_argument("m must be nonzero");
  if (a.is_zero() || a.is_one() || (-a).is_one())
    throw std::invalid_argument("a must avoid 0, 1 and -1");
  GroupTag tag{GroupKind::Sp, 4, p};
  auto fv = [&](long x) { return FieldValue::of_int(x, p); };
  FieldValue one = fv(1), two = fv(2);
  std::vector<std::vector<FieldValue>> rows(4, std::vector<FieldValue>(4, fv(0)));
  rows[0][2] = -(one / m);
  rows[1][2] = -one;
  rows[1][3] = one;
  rows[2][0] = m;
  rows[2][1] = m;
  rows[2][2] = (a * a + m + one) / a;
  rows[2][3] = m * (m + one - two * a) / a;
  rows[3][1] = -one;
  rows[3][2] = -(one / a);
  rows[3][3] = two - m / a;
  return AppendixSp4{from_block_convention(tag, rows)};
}

}  // namespace sph
