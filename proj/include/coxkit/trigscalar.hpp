#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coxkit/errors.hpp"

namespace coxkit {

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

// Exact element of the ring Z[cos(pi/N), cos(2pi/N), ...] with rational
// coefficients, i.e. Q(cos(pi/N)).  Canonical form: a polynomial in
// zeta = e^{i pi/N} reduced modulo the 2N-th cyclotomic polynomial, with
// rational coefficients.  Only real values are ever constructed (sums and
// products of cos(k pi/N) terms), and for a real value
//   sum_j c_j zeta^j == c_0 + sum_{j>=1} c_j cos(j pi/N),
// so the reduced coefficient vector doubles as a cosine-basis expansion.
//
// Equality of values is equality of coefficient vectors.  The ring is in
// fact a field; inverse() implements exact division via the extended
// Euclidean algorithm modulo the cyclotomic polynomial.
//
// All operations require equal moduli (DomainError otherwise); use
// change_modulus to move into a larger compatible ring (N | M).
class TrigScalar {
 public:
  TrigScalar() : mod_(2) {}  // zero at the minimal modulus

  static TrigScalar zero(long n);
  static TrigScalar rational(const mpq_class& q, long n);
  static TrigScalar integer(long v, long n) { return rational(mpq_class(v), n); }
  // cos(k pi / N), 0 <= k <= N.
  static TrigScalar cospi(long k, long n);
  // sum of q * cos(k pi / N) terms.
  static TrigScalar make(long n, const std::vector<std::pair<long, mpq_class>>& terms);

  long modulus() const { return mod_; }
  bool is_zero() const { return coeff_.empty(); }
  bool is_rational() const { return coeff_.size() <= 1; }
  mpq_class rational_value() const;  // DomainError if not rational

  TrigScalar operator+(const TrigScalar& o) const;
  TrigScalar operator-(const TrigScalar& o) const;
  TrigScalar operator*(const TrigScalar& o) const;
  TrigScalar operator-() const;
  TrigScalar& operator+=(const TrigScalar& o) { return *this = *this + o; }
  TrigScalar& operator-=(const TrigScalar& o) { return *this = *this - o; }
  TrigScalar& operator*=(const TrigScalar& o) { return *this = *this * o; }

  bool operator==(const TrigScalar& o) const;
  bool operator!=(const TrigScalar& o) const { return !(*this == o); }

  // Exact multiplicative inverse (DomainError on zero).
  TrigScalar inverse() const;
  TrigScalar operator/(const TrigScalar& o) const { return *this * o.inverse(); }

  // Exact sign: zero by canonical form, otherwise certified by interval
  // evaluation with directed rounding at escalating precision.
  Sign sign() const;
  bool is_positive() const { return sign() == Sign::Positive; }
  bool is_negative() const { return sign() == Sign::Negative; }

  // Reinterpret in Q(cos(pi/M)); requires N | M.
  TrigScalar change_modulus(long m) const;

  // 12-significant-digit decimal hint; never used in any decision.
  double approx() const;

  // Deterministic exact rendering, e.g. "-1/2 - 1/2*cos(pi/4)".
  std::string str() const;

  // Structural total order for use in ordered containers (NOT value order:
  // scalars of different moduli compare by modulus first).
  static int struct_cmp(const TrigScalar& a, const TrigScalar& b);

 private:
  long mod_;                     // N
  std::vector<mpq_class> coeff_; // dense, trailing zeros stripped; empty = 0

  void normalize();
  static const struct CycloContext& context(long n);
  friend struct CycloContext;
};

inline bool trig_less(const TrigScalar& a, const TrigScalar& b) {
  return TrigScalar::struct_cmp(a, b) < 0;
}

// a + b*sqrt(d) with a, b, d in Q(cos(pi/N)) and d > 0 fixed per value.
// Arithmetic is formal: whether sqrt(d) lies in the base field is never
// tested.  Operands must share the same radicand d.
class QuadScalar {
 public:
  QuadScalar(TrigScalar a, TrigScalar b, TrigScalar d)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}
  static QuadScalar from_base(const TrigScalar& a, const TrigScalar& d) {
    return QuadScalar(a, TrigScalar::zero(a.modulus()), d);
  }

  const TrigScalar& base() const { return a_; }
  const TrigScalar& coef() const { return b_; }
  const TrigScalar& radicand() const { return d_; }

  QuadScalar operator+(const QuadScalar& o) const;
  QuadScalar operator-(const QuadScalar& o) const;
  QuadScalar operator*(const QuadScalar& o) const;
  QuadScalar operator-() const;
  bool operator==(const QuadScalar& o) const;
  bool operator!=(const QuadScalar& o) const { return !(*this == o); }

  QuadScalar conj() const { return QuadScalar(a_, -b_, d_); }
  // a^2 - b^2 d, an element of the base field.
  TrigScalar norm() const { return a_ * a_ - b_ * b_ * d_; }

  std::string str() const;

 private:
  void check_compatible(const QuadScalar& o) const;
  TrigScalar a_, b_, d_;
};

}  // namespace coxkit
