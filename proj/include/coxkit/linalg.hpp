#pragma once

#include <vector>

#include "coxkit/trigscalar.hpp"

namespace coxkit {

using Vec = std::vector<TrigScalar>;

Vec vec_zero(int n, long mod);
Vec vec_unit(int n, int i, long mod);
bool vec_eq(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const TrigScalar& s, const Vec& v);
bool vec_is_zero(const Vec& v);
// coordinatewise sum; used by growth certificates
TrigScalar coord_sum(const Vec& v);

// Square matrix over the exact scalar field, row-major.
struct Mat {
  int n = 0;
  std::vector<TrigScalar> a;

  Mat() = default;
  Mat(int n_, long mod) : n(n_), a(static_cast<size_t>(n_) * n_, TrigScalar::zero(mod)) {}
  static Mat identity(int n, long mod);

  TrigScalar& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const TrigScalar& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  Mat operator*(const Mat& o) const;
  Vec apply(const Vec& v) const;  // matrix times column vector
  Mat transpose() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_identity() const;
};

TrigScalar det(Mat m);                 // exact, Gaussian elimination
int rank_of(std::vector<Vec> rows);    // exact row rank
Mat inverse(Mat m);                    // DomainError if singular

// structural orderings for use as container comparators
int struct_cmp(const Vec& a, const Vec& b);
int struct_cmp(const Mat& a, const Mat& b);
struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return struct_cmp(a, b) < 0; }
};
struct MatLess {
  bool operator()(const Mat& a, const Mat& b) const { return struct_cmp(a, b) < 0; }
};

}  // namespace coxkit
