#include "coxkit/trigscalar.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace coxkit {
namespace {

using ZPoly = std::vector<mpz_class>;  // dense, little-endian
using QPoly = std::vector<mpq_class>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division; the quotient of (x^d - 1) by a product of cyclotomic
// factors has no remainder.
ZPoly zdiv_exact(ZPoly a, const ZPoly& b) {
  ztrim(a);
  ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    mpz_class c = a.back() / b.back();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    ztrim(a);
  }
  if (!a.empty()) throw InternalCheckError("cyclotomic division left a remainder");
  return q;
}

// Phi_n(x) = (x^n - 1) / prod_{d | n, d < n} Phi_d(x), memoized.
const ZPoly& cyclotomic(long n) {
  static std::map<long, ZPoly> memo;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0 || memo.count(d)) continue;
    ZPoly num(static_cast<size_t>(d) + 1, 0);
    num[0] = -1;
    num[static_cast<size_t>(d)] = 1;
    ZPoly den{1};
    for (long e = 1; e < d; ++e)
      if (d % e == 0) den = zmul(den, memo.at(e));
    memo[d] = zdiv_exact(std::move(num), den);
  }
  return memo.at(n);
}

std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  qtrim(a);
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !b.empty()) {
    size_t shift = a.size() - b.size();
    mpq_class c = a.back() / b.back();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    qtrim(a);
  }
  return {std::move(q), std::move(a)};
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

struct CycloContext {
  long n = 0;       // N: scalars live in Q(cos(pi/N))
  size_t deg = 0;   // phi(2N) = deg Phi_{2N}
  ZPoly phi;        // Phi_{2N}, monic
  // x^k mod phi for k in [deg, 2N); covers construction exponents (< 2N)
  // and product degrees (<= 2*deg - 2 <= 2N - 2).
  std::vector<ZPoly> powred;

  explicit CycloContext(long n_) : n(n_) {
    phi = cyclotomic(2 * n);
    deg = phi.size() - 1;
    powred.reserve(static_cast<size_t>(2 * n) - deg);
    ZPoly cur(phi.begin(), phi.end() - 1);  // x^deg = -(low part), phi monic
    for (auto& c : cur) c = -c;
    for (long k = static_cast<long>(deg); k < 2 * n; ++k) {
      powred.push_back(cur);
      // multiply by x, reduce the single overflow term
      ZPoly next(deg, 0);
      for (size_t i = 0; i + 1 < deg; ++i) next[i + 1] = cur[i];
      if (!cur.empty() && cur[deg - 1] != 0) {
        const ZPoly& top = powred.front();  // x^deg row
        for (size_t i = 0; i < deg; ++i) next[i] += cur[deg - 1] * top[i];
      }
      cur = std::move(next);
    }
  }

  // Reduce an arbitrary polynomial in zeta modulo phi.
  QPoly reduce(QPoly p) const {
    qtrim(p);
    if (p.size() <= deg) return p;
    if (p.size() <= powred.size() + deg) {
      for (size_t k = p.size(); k-- > deg;) {
        if (p[k] == 0) continue;
        const ZPoly& row = powred[k - deg];
        for (size_t i = 0; i < deg; ++i)
          if (row[i] != 0) p[i] += p[k] * row[i];
        p[k] = 0;
      }
      p.resize(deg);
      qtrim(p);
      return p;
    }
    QPoly qphi(phi.begin(), phi.end());
    auto [q, r] = qdivmod(std::move(p), qphi);
    (void)q;
    return r;
  }
};

const CycloContext& TrigScalar::context(long n) {
  static std::map<long, CycloContext> memo;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = memo.find(n);
  if (it == memo.end()) it = memo.emplace(n, CycloContext(n)).first;
  return it->second;
}

void TrigScalar::normalize() {
  while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
  for (auto& c : coeff_) c.canonicalize();
}

TrigScalar TrigScalar::zero(long n) {
  if (n < 2) throw DomainError("TrigScalar modulus must be >= 2");
  TrigScalar t;
  t.mod_ = n;
  return t;
}

TrigScalar TrigScalar::rational(const mpq_class& q, long n) {
  TrigScalar t = zero(n);
  if (q != 0) {
    t.coeff_.assign(1, q);
    t.coeff_[0].canonicalize();
  }
  return t;
}

TrigScalar TrigScalar::cospi(long k, long n) {
  return make(n, {{k, mpq_class(1)}});
}

TrigScalar TrigScalar::make(long n, const std::vector<std::pair<long, mpq_class>>& terms) {
  TrigScalar t = zero(n);
  const CycloContext& ctx = context(n);
  QPoly p(static_cast<size_t>(2 * n), 0);
  for (const auto& [k, q] : terms) {
    if (k < 0 || k > n)
      throw DomainError("cos(k*pi/N) term requires 0 <= k <= N, got k=" + std::to_string(k));
    if (k == 0) {
      p[0] += q;
    } else {
      // cos(k pi/N) = (zeta^k + zeta^(2N-k)) / 2
      mpq_class h = q / 2;
      p[static_cast<size_t>(k)] += h;
      p[static_cast<size_t>(2 * n - k)] += h;
    }
  }
  t.coeff_ = ctx.reduce(std::move(p));
  t.normalize();
  return t;
}

mpq_class TrigScalar::rational_value() const {
  if (coeff_.empty()) return mpq_class(0);
  if (coeff_.size() == 1) return coeff_[0];
  throw DomainError("value is not rational: " + str());
}

TrigScalar TrigScalar::operator+(const TrigScalar& o) const {
  if (mod_ != o.mod_) {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    throw DomainError("modulus mismatch in +: " + std::to_string(mod_) + " vs " +
                      std::to_string(o.mod_));
  }
  TrigScalar r = zero(mod_);
  r.coeff_.resize(std::max(coeff_.size(), o.coeff_.size()), 0);
  for (size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] = coeff_[i];
  for (size_t i = 0; i < o.coeff_.size(); ++i) r.coeff_[i] += o.coeff_[i];
  r.normalize();
  return r;
}

TrigScalar TrigScalar::operator-() const {
  TrigScalar r = *this;
  for (auto& c : r.coeff_) c = -c;
  return r;
}

TrigScalar TrigScalar::operator-(const TrigScalar& o) const { return *this + (-o); }

TrigScalar TrigScalar::operator*(const TrigScalar& o) const {
  if (mod_ != o.mod_) {
    if (is_zero()) return zero(o.mod_);
    if (o.is_zero()) return zero(mod_);
    throw DomainError("modulus mismatch in *: " + std::to_string(mod_) + " vs " +
                      std::to_string(o.mod_));
  }
  TrigScalar r = zero(mod_);
  if (is_zero() || o.is_zero()) return r;
  // rational factors scale coefficientwise; this is the hot path
  if (coeff_.size() == 1) {
    r.coeff_ = o.coeff_;
    for (auto& c : r.coeff_) c *= coeff_[0];
    r.normalize();
    return r;
  }
  if (o.coeff_.size() == 1) {
    r.coeff_ = coeff_;
    for (auto& c : r.coeff_) c *= o.coeff_[0];
    r.normalize();
    return r;
  }
  r.coeff_ = context(mod_).reduce(qmul(coeff_, o.coeff_));
  r.normalize();
  return r;
}

bool TrigScalar::operator==(const TrigScalar& o) const {
  if (mod_ != o.mod_) {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    throw DomainError("modulus mismatch in ==");
  }
  return coeff_ == o.coeff_;
}

TrigScalar TrigScalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (coeff_.size() == 1) return rational(1 / coeff_[0], mod_);
  const CycloContext& ctx = context(mod_);
  // extended Euclid: r0 = this, r1 = phi; phi irreducible so gcd is a constant
  QPoly r0(coeff_), r1(ctx.phi.begin(), ctx.phi.end());
  QPoly s0{mpq_class(1)}, s1;
  while (!r1.empty()) {
    auto [q, r] = qdivmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0;
    QPoly t = qmul(q, s1);
    if (s2.size() < t.size()) s2.resize(t.size(), 0);
    for (size_t i = 0; i < t.size(); ++i) s2[i] -= t[i];
    qtrim(s2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1)
    throw InternalCheckError("gcd with cyclotomic polynomial is not constant");
  TrigScalar inv = zero(mod_);
  for (auto& c : s0) c /= r0[0];
  inv.coeff_ = ctx.reduce(std::move(s0));
  inv.normalize();
  return inv;
}

TrigScalar TrigScalar::change_modulus(long m) const {
  if (m < 2 || m % mod_ != 0)
    throw DomainError("change_modulus: " + std::to_string(m) + " is not a multiple of " +
                      std::to_string(mod_));
  if (m == mod_) return *this;
  const long k = m / mod_;
  QPoly p(coeff_.empty() ? 0 : (coeff_.size() - 1) * static_cast<size_t>(k) + 1, 0);
  for (size_t j = 0; j < coeff_.size(); ++j)
    if (coeff_[j] != 0) p[j * static_cast<size_t>(k)] = coeff_[j];
  TrigScalar r = zero(m);
  r.coeff_ = context(m).reduce(std::move(p));
  r.normalize();
  return r;
}

// ---------- sign via directed-rounding interval evaluation ----------

namespace {

// Interval endpoints for cos(j pi / N), j = 0..count-1, at a given precision.
// mpfr_t is an array type, so the table stores the underlying structs.
struct CosTable {
  mpfr_prec_t prec = 0;
  std::vector<__mpfr_struct> lo, hi;

  void clear() {
    for (auto& x : lo) mpfr_clear(&x);
    for (auto& x : hi) mpfr_clear(&x);
    lo.clear();
    hi.clear();
  }
  ~CosTable() { clear(); }

  void build(long n, size_t count, mpfr_prec_t p) {
    clear();
    prec = p;
    lo.resize(count);
    hi.resize(count);
    mpfr_t pi_lo, pi_hi, th_lo, th_hi, a, b;
    mpfr_inits2(p, pi_lo, pi_hi, th_lo, th_hi, a, b, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    for (size_t j = 0; j < count; ++j) {
      mpfr_init2(&lo[j], p);
      mpfr_init2(&hi[j], p);
      if (j == 0) {
        mpfr_set_ui(&lo[j], 1, MPFR_RNDD);
        mpfr_set_ui(&hi[j], 1, MPFR_RNDU);
        continue;
      }
      mpfr_mul_ui(th_lo, pi_lo, static_cast<unsigned long>(j), MPFR_RNDD);
      mpfr_div_ui(th_lo, th_lo, static_cast<unsigned long>(n), MPFR_RNDD);
      mpfr_mul_ui(th_hi, pi_hi, static_cast<unsigned long>(j), MPFR_RNDU);
      mpfr_div_ui(th_hi, th_hi, static_cast<unsigned long>(n), MPFR_RNDU);
      // 0 < theta < pi and cos is decreasing there, so the endpoint values
      // bound cos over the whole theta interval; min/max guards rounding.
      mpfr_cos(a, th_hi, MPFR_RNDD);
      mpfr_cos(b, th_lo, MPFR_RNDD);
      mpfr_min(&lo[j], a, b, MPFR_RNDD);
      mpfr_cos(a, th_hi, MPFR_RNDU);
      mpfr_cos(b, th_lo, MPFR_RNDU);
      mpfr_max(&hi[j], a, b, MPFR_RNDU);
    }
    mpfr_clears(pi_lo, pi_hi, th_lo, th_hi, a, b, static_cast<mpfr_ptr>(nullptr));
  }
};

CosTable& cos_table(long n, size_t count, mpfr_prec_t prec) {
  thread_local std::map<long, CosTable> cache;
  CosTable& t = cache[n];
  if (t.prec < prec || t.lo.size() < count) t.build(n, count, prec);
  return t;
}

}  // namespace

Sign TrigScalar::sign() const {
  if (coeff_.empty()) return Sign::Zero;
  if (coeff_.size() == 1) return static_cast<Sign>(sgn(coeff_[0]));
  for (mpfr_prec_t prec = 64;; prec *= 2) {
    const CosTable& tab = cos_table(mod_, coeff_.size(), prec);
    mpfr_t acc_lo, acc_hi, t;
    mpfr_inits2(prec, acc_lo, acc_hi, t, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(acc_lo, 0);
    mpfr_set_zero(acc_hi, 0);
    for (size_t j = 0; j < coeff_.size(); ++j) {
      if (coeff_[j] == 0) continue;
      const bool pos = sgn(coeff_[j]) > 0;
      // c * [lo, hi]: pick endpoints by the sign of c
      mpfr_mul_q(t, pos ? &tab.lo[j] : &tab.hi[j], coeff_[j].get_mpq_t(), MPFR_RNDD);
      mpfr_add(acc_lo, acc_lo, t, MPFR_RNDD);
      mpfr_mul_q(t, pos ? &tab.hi[j] : &tab.lo[j], coeff_[j].get_mpq_t(), MPFR_RNDU);
      mpfr_add(acc_hi, acc_hi, t, MPFR_RNDU);
    }
    const bool neg = mpfr_sgn(acc_hi) < 0;
    const bool pos = mpfr_sgn(acc_lo) > 0;
    mpfr_clears(acc_lo, acc_hi, t, static_cast<mpfr_ptr>(nullptr));
    if (pos) return Sign::Positive;
    if (neg) return Sign::Negative;
    if (prec > (1 << 20))
      throw InternalCheckError("sign undecided at 2^20 bits for nonzero value " + str());
  }
}

double TrigScalar::approx() const {
  if (coeff_.empty()) return 0.0;
  const mpfr_prec_t prec = 192;
  const CosTable& tab = cos_table(mod_, coeff_.size(), prec);
  mpfr_t acc, t;
  mpfr_inits2(prec, acc, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(acc, 0);
  for (size_t j = 0; j < coeff_.size(); ++j) {
    if (coeff_[j] == 0) continue;
    mpfr_mul_q(t, &tab.lo[j], coeff_[j].get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc, acc, t, MPFR_RNDN);
  }
  double d = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clears(acc, t, static_cast<mpfr_ptr>(nullptr));
  return d;
}

namespace {

// Express a real element (given by its reduced zeta-coefficient vector) in
// the Q-basis {cos(j pi/N) : 0 <= j < phi(2N)/2} of the real subfield.
// Exact Gaussian elimination on [B | v] where column j of B is the reduced
// vector of cos(j pi/N).
std::vector<mpq_class> cosine_basis_coords(const QPoly& v, size_t full_deg,
                                           size_t basis_dim,
                                           const std::vector<QPoly>& basis_cols) {
  const size_t rows = full_deg, cols = basis_dim;
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols + 1, 0));
  for (size_t j = 0; j < cols; ++j)
    for (size_t i = 0; i < basis_cols[j].size(); ++i) m[i][j] = basis_cols[j][i];
  for (size_t i = 0; i < v.size(); ++i) m[i][cols] = v[i];

  std::vector<long> pivot_of_col(cols, -1);
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t p = row;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    mpq_class inv = 1 / m[row][col];
    for (size_t k = col; k <= cols; ++k) m[row][k] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      mpq_class f = m[r][col];
      for (size_t k = col; k <= cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_of_col[col] = static_cast<long>(row);
    ++row;
  }
  for (size_t r = row; r < rows; ++r)
    if (m[r][cols] != 0)
      throw InternalCheckError("value is not in the real cosine span (non-real element?)");
  std::vector<mpq_class> x(cols, 0);
  for (size_t col = 0; col < cols; ++col)
    if (pivot_of_col[col] >= 0) x[col] = m[static_cast<size_t>(pivot_of_col[col])][cols];
  return x;
}

}  // namespace

std::string TrigScalar::str() const {
  if (coeff_.empty()) return "0";
  const CycloContext& ctx = context(mod_);
  const size_t dim = ctx.deg == 1 ? 1 : ctx.deg / 2;  // [Q(cos pi/N) : Q]
  std::vector<QPoly> basis_cols(dim);
  for (size_t j = 0; j < dim; ++j)
    basis_cols[j] = cospi(static_cast<long>(j), mod_).coeff_;
  std::vector<mpq_class> x = cosine_basis_coords(coeff_, ctx.deg, dim, basis_cols);

  std::ostringstream out;
  bool first = true;
  for (size_t j = 0; j < x.size(); ++j) {
    if (x[j] == 0) continue;
    mpq_class c = x[j];
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    mpq_class mag = abs(c);
    if (j == 0) {
      out << mag.get_str();
      continue;
    }
    long g = static_cast<long>(mpz_class(gcd(mpz_class(static_cast<long>(j)),
                                             mpz_class(mod_))).get_si());
    long num = static_cast<long>(j) / g, den = mod_ / g;
    if (mag != 1) out << mag.get_str() << "*";
    out << "cos(";
    if (num != 1) out << num << "*";
    out << "pi/" << den << ")";
  }
  return out.str();
}

int TrigScalar::struct_cmp(const TrigScalar& a, const TrigScalar& b) {
  if (a.mod_ != b.mod_) return a.mod_ < b.mod_ ? -1 : 1;
  if (a.coeff_.size() != b.coeff_.size()) return a.coeff_.size() < b.coeff_.size() ? -1 : 1;
  for (size_t i = 0; i < a.coeff_.size(); ++i) {
    int c = cmp(a.coeff_[i], b.coeff_[i]);
    if (c != 0) return c;
  }
  return 0;
}

// ---------- QuadScalar ----------

void QuadScalar::check_compatible(const QuadScalar& o) const {
  if (!(d_ == o.d_)) throw DomainError("QuadScalar radicand mismatch");
}

QuadScalar QuadScalar::operator+(const QuadScalar& o) const {
  check_compatible(o);
  return QuadScalar(a_ + o.a_, b_ + o.b_, d_);
}

QuadScalar QuadScalar::operator-(const QuadScalar& o) const {
  check_compatible(o);
  return QuadScalar(a_ - o.a_, b_ - o.b_, d_);
}

QuadScalar QuadScalar::operator*(const QuadScalar& o) const {
  check_compatible(o);
  return QuadScalar(a_ * o.a_ + b_ * o.b_ * d_, a_ * o.b_ + b_ * o.a_, d_);
}

QuadScalar QuadScalar::operator-() const { return QuadScalar(-a_, -b_, d_); }

bool QuadScalar::operator==(const QuadScalar& o) const {
  check_compatible(o);
  return a_ == o.a_ && b_ == o.b_;
}

std::string QuadScalar::str() const {
  return "(" + a_.str() + ") + (" + b_.str() + ")*sqrt(" + d_.str() + ")";
}

}  // namespace coxkit
