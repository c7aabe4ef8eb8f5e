#include "coxkit/linalg.hpp"

namespace coxkit {

Vec vec_zero(int n, long mod) { return Vec(static_cast<size_t>(n), TrigScalar::zero(mod)); }

Vec vec_unit(int n, int i, long mod) {
  Vec v = vec_zero(n, mod);
  v[static_cast<size_t>(i)] = TrigScalar::integer(1, mod);
  return v;
}

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_neg(const Vec& a) {
  Vec r = a;
  for (auto& x : r) x = -x;
  return r;
}

Vec vec_scale(const TrigScalar& s, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x = s * x;
  return r;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

TrigScalar coord_sum(const Vec& v) {
  if (v.empty()) return TrigScalar::zero(2);
  TrigScalar s = TrigScalar::zero(v[0].modulus());
  for (const auto& x : v) s += x;
  return s;
}

Mat Mat::identity(int n, long mod) {
  Mat m(n, mod);
  for (int i = 0; i < n; ++i) m.at(i, i) = TrigScalar::integer(1, mod);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  Mat r(n, a.empty() ? 2 : a[0].modulus());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const TrigScalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const TrigScalar& y = o.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

Vec Mat::apply(const Vec& v) const {
  Vec r = vec_zero(n, a.empty() ? 2 : a[0].modulus());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const TrigScalar& x = at(i, j);
      if (!x.is_zero() && !v[static_cast<size_t>(j)].is_zero())
        r[static_cast<size_t>(i)] += x * v[static_cast<size_t>(j)];
    }
  return r;
}

Mat Mat::transpose() const {
  Mat r = *this;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = at(j, i);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  if (n != o.n) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != o.a[i]) return false;
  return true;
}

bool Mat::is_identity() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const TrigScalar& x = at(i, j);
      if (i == j ? x != TrigScalar::integer(1, x.modulus()) : !x.is_zero()) return false;
    }
  return true;
}

TrigScalar det(Mat m) {
  if (m.n == 0) return TrigScalar::integer(1, 2);
  long mod = m.a[0].modulus();
  TrigScalar d = TrigScalar::integer(1, mod);
  for (int col = 0; col < m.n; ++col) {
    int piv = -1;
    for (int r = col; r < m.n; ++r)
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return TrigScalar::zero(mod);
    if (piv != col) {
      for (int j = 0; j < m.n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    TrigScalar inv = m.at(col, col).inverse();
    for (int r = col + 1; r < m.n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      TrigScalar f = m.at(r, col) * inv;
      for (int j = col; j < m.n; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return d;
}

int rank_of(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  int rk = 0;
  size_t lead = 0;
  for (size_t col = 0; col < cols && static_cast<size_t>(rk) < rows.size(); ++col) {
    size_t piv = static_cast<size_t>(rk);
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<size_t>(rk)]);
    TrigScalar inv = rows[static_cast<size_t>(rk)][col].inverse();
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<size_t>(rk) || rows[r][col].is_zero()) continue;
      TrigScalar f = rows[r][col] * inv;
      for (size_t j = col; j < cols; ++j) rows[r][j] -= f * rows[static_cast<size_t>(rk)][j];
    }
    ++rk;
    lead = col + 1;
  }
  (void)lead;
  return rk;
}

Mat inverse(Mat m) {
  const int n = m.n;
  long mod = m.a.empty() ? 2 : m.a[0].modulus();
  Mat inv = Mat::identity(n, mod);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw DomainError("matrix is singular");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    TrigScalar pinv = m.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      m.at(col, j) *= pinv;
      inv.at(col, j) *= pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m.at(r, col).is_zero()) continue;
      TrigScalar f = m.at(r, col);
      for (int j = 0; j < n; ++j) {
        m.at(r, j) -= f * m.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

int struct_cmp(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = TrigScalar::struct_cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

int struct_cmp(const Mat& a, const Mat& b) {
  if (a.n != b.n) return a.n < b.n ? -1 : 1;
  for (size_t i = 0; i < a.a.size(); ++i) {
    int c = TrigScalar::struct_cmp(a.a[i], b.a[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace coxkit
