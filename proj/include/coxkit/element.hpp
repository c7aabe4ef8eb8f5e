#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxkit/geom.hpp"
#include "coxkit/linalg.hpp"
#include "coxkit/system.hpp"

namespace coxkit {

// Group element in the geometric representation.  Equality is exact matrix
// equality (the representation is faithful).  The element keeps a pointer
// to its system; callers keep the system alive.
//
// The canonical reduced word is the lexicographically smallest one,
// produced by repeatedly splitting off the smallest left descent.  It is
// computed at construction and never mutated afterwards.
class GroupElement {
 public:
  static GroupElement identity(const CoxeterSystem& sys);
  static GroupElement from_word(const CoxeterSystem& sys,
                                const std::vector<int>& word);
  // Internal constructor from precomputed matrices; inv must equal the
  // exact inverse of mat.
  static GroupElement from_parts(const CoxeterSystem& sys, Mat mat, Mat inv);

  const CoxeterSystem& system() const { return *sys_; }
  const Mat& matrix() const { return mat_; }
  const Mat& inverse_matrix() const { return inv_; }

  int length() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& canonical_word() const { return word_; }
  bool is_identity() const { return word_.empty(); }
  std::vector<int> support() const;

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  GroupElement times_gen(int s) const;  // w s, cheap one-sided update
  GroupElement gen_times(int s) const;  // s w
  bool operator==(const GroupElement& o) const { return mat_ == o.mat_; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }

  bool left_descent(int s) const;   // l(sw) < l(w)
  bool right_descent(int s) const;  // l(ws) < l(w)

  Vec act(const Vec& v) const { return mat_.apply(v); }

  static int cmp(const GroupElement& a, const GroupElement& b) {
    return struct_cmp(a.mat_, b.mat_);
  }

 private:
  GroupElement(const CoxeterSystem* sys, Mat mat, Mat inv);
  void recompute_word();

  const CoxeterSystem* sys_;
  Mat mat_, inv_;
  std::vector<int> word_;
};

struct ElementLess {
  bool operator()(const GroupElement& a, const GroupElement& b) const {
    return GroupElement::cmp(a, b) < 0;
  }
};

// Reduce an arbitrary word to the canonical reduced word of its element.
std::vector<int> reduce_word(const CoxeterSystem& sys,
                             const std::vector<int>& word);

// Positive roots sent negative by w^-1, read off the canonical word as
// gamma_j = s_{i_1} ... s_{i_{j-1}} alpha_{i_j}; checked distinct and
// positive, |result| = length(w).
std::vector<Vec> inversion_set(const GroupElement& w);

// Longest element of the standard parabolic on I (ascending 0-based
// indices); NonFiniteTypeError if the sub-form is not positive definite.
// Involution / -Pi_I / all-descent postconditions are asserted.
GroupElement longest_element(const CoxeterSystem& sys,
                             const std::vector<int>& I);

struct OrderResult {
  enum class Kind { Finite, InfiniteCertified, Undecided } kind =
      Kind::Undecided;
  long order = 0;          // set when kind == Finite
  std::string certificate; // set when kind == InfiniteCertified
};

// Power loop up to cap; if that fails, certify infinite order when the
// support spans an infinite-type component and some simple root has
// strictly increasing coordinate sums under cap consecutive powers.
OrderResult order_of(const GroupElement& w, long cap = 200);

struct ParabolicDecomposition {
  GroupElement coset_rep;  // w^I, shortest in w W_I: w^I alpha_s > 0 on I
  GroupElement parabolic;  // w_I, letters inside I
};
ParabolicDecomposition parabolic_decompose(const GroupElement& w,
                                           const std::vector<int>& I);

// Reflection along a unit root (DomainError otherwise); involution.
GroupElement reflection_element(const CoxeterSystem& sys, const Vec& root);

// Image of w under a graph automorphism: permutes matrix rows and columns.
GroupElement apply_automorphism(const GraphAutomorphism& tau,
                                const GroupElement& w);

// Supersystem with a nondegenerate form containing sys as the standard
// parabolic on {0..rank-1}: walk the generators in order and, whenever the
// partial form turns degenerate, append a partner generator joined by an
// infinite bond to the current generator and commuting with the rest.
CoxeterSystem nondegenerate_extension(const CoxeterSystem& sys);

}  // namespace coxkit
