#include "sph/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sph {

WeylElem WeylElem::identity(const RootSystem& rs) {
  std::vector<int> p(rs.size());
  for (int i = 0; i < rs.size(); ++i) p[i] = i;
  WeylElem w(&rs, std::move(p));
  w.word_ = std::vector<int>{};
  return w;
}

WeylElem WeylElem::reflection(const RootSystem& rs, int root) {
  std::vector<int> p(rs.size());
  for (int i = 0; i < rs.size(); ++i) p[i] = rs.reflect(i, root);
  return WeylElem(&rs, std::move(p));
}

WeylElem WeylElem::reflection_at(const RootSystem& rs, const QVec& v) {
  return reflection(rs, rs.checked_index(v));
}

QVec WeylElem::apply(const QVec& v) const {
  // expand in the simple basis, push through the images
  const int n = rs_->rank();
  QMatrix A(rs_->ambient_dim(), n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < rs_->ambient_dim(); ++i)
      A.at(i, j) = rs_->root(rs_->simple(j + 1))[i];
  auto c = solve(A, v);
  if (!c) throw std::invalid_argument("vector outside the root span");
  QVec out(rs_->ambient_dim(), Rational(0));
  for (int j = 0; j < n; ++j) {
    const QVec& img = rs_->root(perm_[rs_->simple(j + 1)]);
    for (int i = 0; i < rs_->ambient_dim(); ++i) out[i] += (*c)[j] * img[i];
  }
  return out;
}

WeylElem WeylElem::operator*(const WeylElem& o) const {
  std::vector<int> p(perm_.size());
  for (size_t i = 0; i < perm_.size(); ++i) p[i] = perm_[o.perm_[i]];
  WeylElem w(rs_, std::move(p));
  if (word_ && o.word_) {
    std::vector<int> ww = *word_;
    ww.insert(ww.end(), o.word_->begin(), o.word_->end());
    w.word_ = std::move(ww);
  }
  return w;
}

WeylElem WeylElem::inverse() const {
  std::vector<int> p(perm_.size());
  for (size_t i = 0; i < perm_.size(); ++i) p[perm_[i]] = static_cast<int>(i);
  return WeylElem(rs_, std::move(p));
}

bool WeylElem::is_identity() const {
  for (size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != static_cast<int>(i)) return false;
  return true;
}

bool WeylElem::is_involution() const { return (*this * *this).is_identity(); }

long WeylElem::length() const {
  long l = 0;
  for (int i = 0; i < rs_->size(); ++i)
    if (rs_->positive(i) && !rs_->positive(perm_[i])) ++l;
  return l;
}

ZMatrix WeylElem::delta_matrix() const {
  const int n = rs_->rank();
  ZMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    const ZVec& c = rs_->delta_coords(perm_[rs_->simple(j + 1)]);
    for (int i = 0; i < n; ++i) m.at(i, j) = c[i];
  }
  return m;
}

int WeylElem::rank_one_minus() const {
  const int n = rs_->rank();
  ZMatrix m = delta_matrix();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = (i == j ? BigInt(1) : BigInt(0)) - m.at(i, j);
  return rank(m);
}

std::vector<QVec> WeylElem::simple_images() const {
  std::vector<QVec> out;
  for (int i = 1; i <= rs_->rank(); ++i) out.push_back(rs_->root(perm_[rs_->simple(i)]));
  return out;
}

std::vector<int> WeylElem::reduced_word() const {
  std::vector<int> rev;
  WeylElem u = *this;
  while (!u.is_identity()) {
    int pick = -1;
    for (int i = 1; i <= rs_->rank(); ++i)
      if (!rs_->positive(u.apply(rs_->simple(i)))) {
        pick = i;
        break;
      }
    if (pick < 0) throw std::logic_error("descent not found");
    u = u * reflection(*rs_, rs_->simple(pick));
    rev.push_back(pick);
  }
  return std::vector<int>(rev.rbegin(), rev.rend());
}

WeylElem longest_element(const RootSystem& rs) {
  std::set<int> all;
  for (int i = 1; i <= rs.rank(); ++i) all.insert(i);
  return longest_in_subset(rs, all);
}

WeylElem longest_in_subset(const RootSystem& rs, const std::set<int>& J) {
  // greedy ascent: post-compose with a simple reflection still sent positive
  WeylElem w = WeylElem::identity(rs);
  std::vector<int> word;
  for (;;) {
    int pick = -1;
    for (int i : J)
      if (rs.positive(w.apply(rs.simple(i)))) {
        pick = i;
        break;
      }
    if (pick < 0) break;
    w = w * WeylElem::reflection(rs, rs.simple(pick));
    word.push_back(pick);
  }
  w.attach_word(word);
  return w;
}

int theta_of(const RootSystem& rs, int i) {
  WeylElem w0 = longest_element(rs);
  int img = rs.negate(w0.apply(rs.simple(i)));
  for (int j = 1; j <= rs.rank(); ++j)
    if (rs.simple(j) == img) return j;
  throw std::logic_error("-w0 does not permute the simple roots");
}

bool theta_invariant(const RootSystem& rs, const std::set<int>& J) {
  for (int i : J)
    if (!J.count(theta_of(rs, i))) return false;
  return true;
}

WOfClass w_of_class(const RootSystem& rs, const std::set<int>& J) {
  WeylElem w0 = longest_element(rs);
  WeylElem wj = longest_in_subset(rs, J);
  bool match = true;
  for (int i : J)
    if (w0.apply(rs.simple(i)) != wj.apply(rs.simple(i))) match = false;
  return WOfClass{w0 * wj, theta_invariant(rs, J), match};
}

WeylElem product_of_reflections(const RootSystem& rs, const std::vector<int>& roots) {
  WeylElem w = WeylElem::identity(rs);
  for (int r : roots) w = w * WeylElem::reflection(rs, r);
  return w;
}

std::vector<WeylElem> enumerate_weyl(const RootSystem& rs) {
  std::set<WeylElem> seen;
  std::vector<WeylElem> out, frontier;
  WeylElem id = WeylElem::identity(rs);
  seen.insert(id);
  out.push_back(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<WeylElem> next;
    for (const WeylElem& w : frontier)
      for (int i = 1; i <= rs.rank(); ++i) {
        WeylElem v = w * WeylElem::reflection(rs, rs.simple(i));
        if (seen.insert(v).second) {
          out.push_back(v);
          next.push_back(v);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace sph
