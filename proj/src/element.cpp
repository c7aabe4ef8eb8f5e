#include "coxkit/element.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "coxkit/classify.hpp"
#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

// One Gram matrix per system object, rebuilt when a different system shows
// up; elements of the same system dominate any hot path here.
const Mat& gram_of(const CoxeterSystem& sys) {
  thread_local const CoxeterSystem* key = nullptr;
  thread_local CoxeterSystem snapshot(1);
  thread_local Mat cached(1, 2);
  if (key != &sys || !(snapshot == sys)) {
    cached = gram(sys);
    key = &sys;
    snapshot = sys;
  }
  return cached;
}

bool column_negative(const Mat& m, int col) {
  Vec v;
  for (int i = 0; i < m.n; ++i) v.push_back(m.at(i, col));
  return sign_pattern(v) == SignPattern::Negative;
}

void check_letter(const CoxeterSystem& sys, int s) {
  if (s < 0 || s >= sys.rank())
    throw DomainError("generator index out of range");
}

}  // namespace

GroupElement::GroupElement(const CoxeterSystem* sys, Mat mat, Mat inv)
    : sys_(sys), mat_(std::move(mat)), inv_(std::move(inv)) {
  recompute_word();
}

void GroupElement::recompute_word() {
  word_.clear();
  const Mat& g = gram_of(*sys_);
  Mat m = mat_, mi = inv_;
  int n = sys_->rank();
  // guard: length of any element is finite, but a corrupted matrix pair
  // would loop; the bound n * 2^20 is far beyond any test scale
  long guard = static_cast<long>(n) << 20;
  while (!m.is_identity()) {
    int pick = -1;
    for (int s = 0; s < n; ++s) {
      if (column_negative(mi, s)) {  // w^-1 alpha_s negative: left descent
        pick = s;
        break;
      }
    }
    if (pick < 0)
      throw InternalCheckError("non-identity element with no left descent");
    word_.push_back(pick);
    mul_simple_left(g, pick, m);   // m <- S_pick m
    mul_simple_right(g, pick, mi); // mi <- mi S_pick
    if (--guard < 0) throw InternalCheckError("reduction did not terminate");
  }
}

GroupElement GroupElement::identity(const CoxeterSystem& sys) {
  Mat id = Mat::identity(sys.rank(), sys.modulus());
  return GroupElement(&sys, id, id);
}

GroupElement GroupElement::from_word(const CoxeterSystem& sys,
                                     const std::vector<int>& word) {
  const Mat& g = gram_of(sys);
  Mat m = Mat::identity(sys.rank(), sys.modulus());
  Mat mi = m;
  for (int s : word) {
    check_letter(sys, s);
    mul_simple_right(g, s, m);  // m <- m S_s
    mul_simple_left(g, s, mi);  // mi <- S_s mi
  }
  return GroupElement(&sys, std::move(m), std::move(mi));
}

GroupElement GroupElement::from_parts(const CoxeterSystem& sys, Mat mat,
                                      Mat inv) {
  return GroupElement(&sys, std::move(mat), std::move(inv));
}

std::vector<int> GroupElement::support() const {
  std::set<int> s(word_.begin(), word_.end());
  return std::vector<int>(s.begin(), s.end());
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (sys_ != o.sys_ && !(*sys_ == *o.sys_))
    throw DomainError("elements of different systems");
  return GroupElement(sys_, mat_ * o.mat_, o.inv_ * inv_);
}

GroupElement GroupElement::inverse() const {
  return GroupElement(sys_, inv_, mat_);
}

GroupElement GroupElement::times_gen(int s) const {
  check_letter(*sys_, s);
  const Mat& g = gram_of(*sys_);
  Mat m = mat_, mi = inv_;
  mul_simple_right(g, s, m);
  mul_simple_left(g, s, mi);
  return GroupElement(sys_, std::move(m), std::move(mi));
}

GroupElement GroupElement::gen_times(int s) const {
  check_letter(*sys_, s);
  const Mat& g = gram_of(*sys_);
  Mat m = mat_, mi = inv_;
  mul_simple_left(g, s, m);
  mul_simple_right(g, s, mi);
  return GroupElement(sys_, std::move(m), std::move(mi));
}

bool GroupElement::left_descent(int s) const {
  check_letter(*sys_, s);
  return column_negative(inv_, s);
}

bool GroupElement::right_descent(int s) const {
  check_letter(*sys_, s);
  return column_negative(mat_, s);
}

std::vector<int> reduce_word(const CoxeterSystem& sys,
                             const std::vector<int>& word) {
  return GroupElement::from_word(sys, word).canonical_word();
}

std::vector<Vec> inversion_set(const GroupElement& w) {
  const CoxeterSystem& sys = w.system();
  const Mat& g = gram_of(sys);
  const std::vector<int>& word = w.canonical_word();
  std::vector<Vec> out;
  std::set<Vec, VecLess> seen;
  for (size_t j = 0; j < word.size(); ++j) {
    Vec v = vec_unit(static_cast<size_t>(sys.rank()),
                     static_cast<size_t>(word[j]), sys.modulus());
    for (size_t t = j; t-- > 0;) v = simple_reflect(g, word[t], v);
    if (sign_pattern(v) != SignPattern::Positive)
      throw InternalCheckError("inversion set: non-positive root");
    if (!seen.insert(v).second)
      throw InternalCheckError("inversion set: duplicate root");
    out.push_back(std::move(v));
  }
  return out;
}

GroupElement longest_element(const CoxeterSystem& sys,
                             const std::vector<int>& I) {
  GroupElement w = GroupElement::identity(sys);
  if (I.empty()) return w;
  for (int s : I) check_letter(sys, s);
  std::vector<int> idx = I;
  std::sort(idx.begin(), idx.end());
  if (!is_positive_definite(parabolic_restrict(gram_of(sys), idx)))
    throw NonFiniteTypeError("longest_element: subsystem is not finite type");

  long guard = 1 << 14;  // far above |Phi+| of any finite type up to E8
  for (;;) {
    int pick = -1;
    for (int s : idx) {
      if (!w.right_descent(s)) {
        pick = s;
        break;
      }
    }
    if (pick < 0) break;
    w = w.times_gen(pick);
    if (--guard < 0)
      throw InternalCheckError("longest_element: ascent did not terminate");
  }

  // postconditions: involution, maps Pi_I onto -Pi_I
  if (!(w * w).is_identity())
    throw InternalCheckError("longest_element: not an involution");
  std::set<int> image;
  for (int s : idx) {
    int neg_unit = -1;
    for (int r = 0; r < sys.rank(); ++r) {
      const TrigScalar& e = w.matrix().at(r, s);
      if (e.is_zero()) continue;
      if (neg_unit >= 0 || !(e == TrigScalar::integer(-1, e.modulus()))) {
        neg_unit = -2;
        break;
      }
      neg_unit = r;
    }
    if (neg_unit < 0 ||
        !std::binary_search(idx.begin(), idx.end(), neg_unit) ||
        !image.insert(neg_unit).second)
      throw InternalCheckError("longest_element: Pi_I is not mapped to -Pi_I");
  }
  return w;
}

OrderResult order_of(const GroupElement& w, long cap) {
  if (cap < 1) throw DomainError("order_of: cap must be at least 1");
  OrderResult res;
  if (w.is_identity()) {
    res.kind = OrderResult::Kind::Finite;
    res.order = 1;
    return res;
  }
  Mat p = w.matrix();
  for (long k = 2; k <= cap; ++k) {
    p = p * w.matrix();
    if (p.is_identity()) {
      res.kind = OrderResult::Kind::Finite;
      res.order = k;
      return res;
    }
  }

  const CoxeterSystem& sys = w.system();
  std::vector<int> supp = w.support();
  bool infinite_component = false;
  std::string comp_name;
  for (const auto& [part, tag] : classify_all(subsystem(sys, supp))) {
    if (tag.kind != ComponentKind::Finite) {
      infinite_component = true;
      comp_name = tag.str();
      break;
    }
  }
  if (!infinite_component) return res;  // Undecided

  for (int s = 0; s < sys.rank(); ++s) {
    Vec v = vec_unit(static_cast<size_t>(sys.rank()), static_cast<size_t>(s),
                     sys.modulus());
    TrigScalar prev = coord_sum(v);
    bool grows = true;
    for (long k = 1; k <= cap; ++k) {
      v = w.act(v);
      TrigScalar cur = coord_sum(v);
      if ((cur - prev).sign() != Sign::Positive) {
        grows = false;
        break;
      }
      prev = cur;
    }
    if (grows) {
      res.kind = OrderResult::Kind::InfiniteCertified;
      res.certificate = "support component " + comp_name +
                        " is infinite type and the coordinate sum of powers "
                        "applied to generator " +
                        std::to_string(s + 1) + " increases strictly";
      return res;
    }
  }
  return res;  // Undecided
}

ParabolicDecomposition parabolic_decompose(const GroupElement& w,
                                           const std::vector<int>& I) {
  const CoxeterSystem& sys = w.system();
  for (int s : I) check_letter(sys, s);
  std::vector<int> idx = I;
  std::sort(idx.begin(), idx.end());

  GroupElement x = w;
  GroupElement wi = GroupElement::identity(sys);
  for (;;) {
    int pick = -1;
    for (int s : idx) {
      if (x.right_descent(s)) {
        pick = s;
        break;
      }
    }
    if (pick < 0) break;
    x = x.times_gen(pick);
    wi = wi.gen_times(pick);
  }

  if (!(x * wi == w))
    throw InternalCheckError("parabolic_decompose: product mismatch");
  if (x.length() + wi.length() != w.length())
    throw InternalCheckError("parabolic_decompose: lengths do not add");
  for (int s : wi.support())
    if (!std::binary_search(idx.begin(), idx.end(), s))
      throw InternalCheckError("parabolic_decompose: factor escapes W_I");
  return ParabolicDecomposition{std::move(x), std::move(wi)};
}

GroupElement reflection_element(const CoxeterSystem& sys, const Vec& root) {
  const Mat& g = gram_of(sys);
  long n = sys.modulus();
  if (static_cast<int>(root.size()) != sys.rank())
    throw DomainError("reflection_element: dimension mismatch");
  if (!(bilinear(g, root, root) == TrigScalar::integer(1, n)))
    throw DomainError("reflection_element: root must have unit norm");
  int r = sys.rank();
  Mat m = Mat::identity(r, n);
  // column j changes by -2 <alpha_j, root> root
  for (int j = 0; j < r; ++j) {
    TrigScalar c = TrigScalar::zero(n);
    for (int k = 0; k < r; ++k) {
      if (g.at(j, k).is_zero() || root[static_cast<size_t>(k)].is_zero())
        continue;
      c += g.at(j, k) * root[static_cast<size_t>(k)];
    }
    if (c.is_zero()) continue;
    c += c;
    for (int i = 0; i < r; ++i) {
      if (root[static_cast<size_t>(i)].is_zero()) continue;
      m.at(i, j) -= c * root[static_cast<size_t>(i)];
    }
  }
  Mat mi = m;  // involution
  return GroupElement::from_parts(sys, std::move(m), std::move(mi));
}

GroupElement apply_automorphism(const GraphAutomorphism& tau,
                                const GroupElement& w) {
  const CoxeterSystem& sys = w.system();
  int r = sys.rank();
  Mat m(r, sys.modulus()), mi(r, sys.modulus());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      m.at(tau(i), tau(j)) = w.matrix().at(i, j);
      mi.at(tau(i), tau(j)) = w.inverse_matrix().at(i, j);
    }
  return GroupElement::from_parts(sys, std::move(m), std::move(mi));
}

CoxeterSystem nondegenerate_extension(const CoxeterSystem& sys) {
  int n = sys.rank();
  CoxeterSystem ext = sys;
  // Walk the original generators in order; after considering generator k,
  // the partial system on {0..k} plus the partners added so far must be
  // nondegenerate, else a partner for generator k is appended.
  std::vector<int> active;
  std::vector<int> partners;  // indices (into ext) of added partners
  for (int k = 0; k < n; ++k) {
    active.push_back(k);
    std::vector<int> idx = active;
    idx.insert(idx.end(), partners.begin(), partners.end());
    std::sort(idx.begin(), idx.end());
    Mat g = parabolic_restrict(gram(ext), idx);
    if (det(g).is_zero()) {
      // append partner: infinite bond with generator k, commutes with rest
      CoxeterSystem bigger(ext.rank() + 1);
      for (int i = 0; i < ext.rank(); ++i)
        for (int j = i + 1; j < ext.rank(); ++j)
          bigger.set_label(i, j, ext.label(i, j));
      bigger.set_label(k, ext.rank(), BondLabel::infinite());
      partners.push_back(ext.rank());
      ext = bigger;
    }
  }
  if (det(gram(ext)).is_zero())
    throw InternalCheckError("nondegenerate_extension: form still degenerate");
  return ext;
}

}  // namespace coxkit
