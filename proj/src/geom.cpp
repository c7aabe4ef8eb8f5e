#include "coxkit/geom.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "coxkit/errors.hpp"

namespace coxkit {

TrigScalar bond_form(const CoxeterSystem& sys, int i, int j) {
  long n = sys.modulus();
  if (i == j) return TrigScalar::integer(1, n);
  BondLabel b = sys.label(i, j);
  if (!b.is_finite()) return TrigScalar::integer(-1, n);
  long m = b.value();
  if (m == 2) return TrigScalar::zero(n);
  return -TrigScalar::cospi(n / m, n);  // cos(pi/m) = cos((n/m) pi / n)
}

Mat gram(const CoxeterSystem& sys) {
  int r = sys.rank();
  Mat g(r, sys.modulus());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g.at(i, j) = bond_form(sys, i, j);
  return g;
}

TrigScalar bilinear(const Mat& g, const Vec& u, const Vec& v) {
  TrigScalar acc = TrigScalar::zero(g.at(0, 0).modulus());
  for (int i = 0; i < g.n; ++i) {
    if (u[static_cast<size_t>(i)].is_zero()) continue;
    TrigScalar row = TrigScalar::zero(acc.modulus());
    for (int j = 0; j < g.n; ++j) {
      if (v[static_cast<size_t>(j)].is_zero() || g.at(i, j).is_zero()) continue;
      row += g.at(i, j) * v[static_cast<size_t>(j)];
    }
    acc += u[static_cast<size_t>(i)] * row;
  }
  return acc;
}

Vec reflect(const Mat& g, const Vec& root, const Vec& v) {
  TrigScalar two = TrigScalar::integer(2, g.at(0, 0).modulus());
  TrigScalar c = two * bilinear(g, root, v);
  Vec out = v;
  for (size_t i = 0; i < out.size(); ++i) {
    if (root[i].is_zero()) continue;
    out[i] -= c * root[i];
  }
  return out;
}

Vec simple_reflect(const Mat& g, int i, const Vec& v) {
  TrigScalar ip = TrigScalar::zero(g.at(0, 0).modulus());
  for (int j = 0; j < g.n; ++j) {
    if (v[static_cast<size_t>(j)].is_zero() || g.at(i, j).is_zero()) continue;
    ip += g.at(i, j) * v[static_cast<size_t>(j)];
  }
  Vec out = v;
  out[static_cast<size_t>(i)] -= (ip + ip);
  return out;
}

Mat simple_reflection(const CoxeterSystem& sys, int i) {
  int r = sys.rank();
  Mat m = Mat::identity(r, sys.modulus());
  for (int j = 0; j < r; ++j) {
    TrigScalar e = bond_form(sys, i, j);
    m.at(i, j) -= e + e;
  }
  return m;
}

void mul_simple_left(const Mat& g, int i, Mat& m) {
  // (S_i m): only row i changes, m[i][c] -= 2 sum_k g[i][k] m[k][c].
  int n = m.n;
  Vec row(static_cast<size_t>(n), TrigScalar::zero(g.at(0, 0).modulus()));
  for (int k = 0; k < n; ++k) {
    const TrigScalar& gik = g.at(i, k);
    if (gik.is_zero()) continue;
    for (int c = 0; c < n; ++c) {
      if (m.at(k, c).is_zero()) continue;
      row[static_cast<size_t>(c)] += gik * m.at(k, c);
    }
  }
  for (int c = 0; c < n; ++c) {
    const TrigScalar& d = row[static_cast<size_t>(c)];
    if (d.is_zero()) continue;
    m.at(i, c) -= d + d;
  }
}

void mul_simple_right(const Mat& g, int i, Mat& m) {
  // (m S_i): column c gets -2 m[r][i] g[i][c] for each c with g[i][c] != 0.
  int n = m.n;
  Vec coli(static_cast<size_t>(n), TrigScalar::zero(g.at(0, 0).modulus()));
  for (int r = 0; r < n; ++r) coli[static_cast<size_t>(r)] = m.at(r, i);
  for (int c = 0; c < n; ++c) {
    const TrigScalar& gic = g.at(i, c);
    if (gic.is_zero()) continue;
    for (int r = 0; r < n; ++r) {
      const TrigScalar& mi = coli[static_cast<size_t>(r)];
      if (mi.is_zero()) continue;
      TrigScalar d = mi * gic;
      m.at(r, c) -= d + d;
    }
  }
}

SignPattern sign_pattern(const Vec& v) {
  bool pos = false, neg = false;
  for (const TrigScalar& x : v) {
    switch (x.sign()) {
      case Sign::Positive: pos = true; break;
      case Sign::Negative: neg = true; break;
      case Sign::Zero: break;
    }
    if (pos && neg) return SignPattern::Mixed;
  }
  if (pos) return SignPattern::Positive;
  if (neg) return SignPattern::Negative;
  return SignPattern::Zero;
}

RootEnumeration enumerate_roots(const CoxeterSystem& sys, int depth_cap,
                                std::size_t max_roots) {
  int r = sys.rank();
  long n = sys.modulus();
  Mat g = gram(sys);

  RootEnumeration out;
  std::map<Vec, size_t, VecLess> seen;
  std::vector<size_t> frontier;
  for (int i = 0; i < r; ++i) {
    RootEntry e;
    e.coords = vec_unit(static_cast<size_t>(r), static_cast<size_t>(i), n);
    e.base = i;
    seen.emplace(e.coords, out.roots.size());
    frontier.push_back(out.roots.size());
    out.roots.push_back(std::move(e));
    if (out.roots.size() >= max_roots) return out;  // closed stays false
  }

  int depth = 0;
  while (!frontier.empty()) {
    if (depth >= depth_cap) return out;  // frontier pending: not closed
    ++depth;
    std::vector<size_t> next;
    for (size_t idx : frontier) {
      for (int i = 0; i < r; ++i) {
        Vec img = simple_reflect(g, i, out.roots[idx].coords);
        // A positive root maps to a positive root unless it is alpha_i
        // itself, so one coordinate sign decides the branch cheaply.
        if (img[static_cast<size_t>(i)].sign() == Sign::Negative) continue;
        if (seen.count(img)) continue;
        RootEntry e;
        e.coords = std::move(img);
        e.depth = depth;
        e.word.reserve(out.roots[idx].word.size() + 1);
        e.word.push_back(i);
        e.word.insert(e.word.end(), out.roots[idx].word.begin(),
                      out.roots[idx].word.end());
        e.base = out.roots[idx].base;
        seen.emplace(e.coords, out.roots.size());
        next.push_back(out.roots.size());
        out.roots.push_back(std::move(e));
        if (out.roots.size() >= max_roots) return out;
      }
    }
    frontier = std::move(next);
  }
  out.closed = true;
  return out;
}

OrbitGrowth root_orbit_growth(const CoxeterSystem& sys, const Vec& start,
                              std::size_t target, int depth_cap) {
  int r = sys.rank();
  Mat g = gram(sys);
  OrbitGrowth out;
  std::map<Vec, char, VecLess> seen;
  std::vector<Vec> frontier{start};
  seen.emplace(start, 1);
  out.count = 1;
  if (out.count >= target) {
    out.reached_target = true;
    return out;
  }
  for (int depth = 0; depth < depth_cap && !frontier.empty(); ++depth) {
    std::vector<Vec> next;
    for (const Vec& v : frontier) {
      for (int i = 0; i < r; ++i) {
        Vec img = simple_reflect(g, i, v);
        if (seen.count(img)) continue;
        seen.emplace(img, 1);
        ++out.count;
        if (out.count >= target) {
          out.reached_target = true;
          return out;
        }
        next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }
  out.closed = frontier.empty();
  return out;
}

Mat parabolic_restrict(const Mat& g, const std::vector<int>& subset) {
  int k = static_cast<int>(subset.size());
  if (k == 0) throw DomainError("parabolic_restrict: empty subset");
  Mat out(k, g.at(0, 0).modulus());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      out.at(i, j) = g.at(subset[static_cast<size_t>(i)],
                          subset[static_cast<size_t>(j)]);
  return out;
}

RootCertificate certify_root(const CoxeterSystem& sys, const Vec& gamma,
                             int step_cap) {
  int r = sys.rank();
  long n = sys.modulus();
  if (static_cast<int>(gamma.size()) != r)
    throw DomainError("certify_root: dimension mismatch");
  Mat g = gram(sys);
  TrigScalar one = TrigScalar::integer(1, n);
  if (bilinear(g, gamma, gamma) != one)
    throw DomainError("certify_root: vector does not have unit norm");
  if (sign_pattern(gamma) != SignPattern::Positive)
    throw DomainError("certify_root: vector is not positive");

  RootCertificate cert;
  Vec cur = gamma;
  for (int step = 0; step <= step_cap; ++step) {
    int support = -1, nonzero = 0;
    for (int i = 0; i < r; ++i) {
      if (!cur[static_cast<size_t>(i)].is_zero()) {
        ++nonzero;
        support = i;
      }
    }
    if (nonzero == 1 && cur[static_cast<size_t>(support)] == one) {
      cert.base = support;
      // Replay as a self-check: the walk applied letters front to back.
      Vec v = vec_unit(static_cast<size_t>(r), static_cast<size_t>(support), n);
      for (auto it = cert.word.rbegin(); it != cert.word.rend(); ++it)
        v = simple_reflect(g, *it, v);
      if (!vec_eq(v, gamma))
        throw InternalCheckError("certify_root: certificate replay mismatch");
      return cert;
    }
    // <gamma, gamma> = 1 > 0 forces some simple root with positive pairing;
    // reflecting there strictly lowers the depth of a genuine root.
    int pick = -1;
    for (int i = 0; i < r; ++i) {
      if (bilinear(g, vec_unit(static_cast<size_t>(r), static_cast<size_t>(i), n),
                   cur).is_positive()) {
        pick = i;
        break;
      }
    }
    if (pick < 0)
      throw DomainError("certify_root: no descent direction (not a root)");
    cur = simple_reflect(g, pick, cur);
    if (sign_pattern(cur) != SignPattern::Positive)
      throw DomainError("certify_root: descent left the positive cone (not a root)");
    cert.word.push_back(pick);
  }
  throw DomainError("certify_root: step cap exceeded");
}

Vec highest_root(const CoxeterSystem& sys, std::size_t max_roots) {
  RootEnumeration e = enumerate_roots(sys, 1 << 20, max_roots);
  if (!e.closed)
    throw DomainError("highest_root: positive system did not close");
  auto dominates = [](const Vec& a, const Vec& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if ((a[i] - b[i]).sign() == Sign::Negative) return false;
    return true;
  };
  const Vec* best = nullptr;
  for (const RootEntry& re : e.roots) {
    bool top = true;
    for (const RootEntry& other : e.roots) {
      if (!dominates(re.coords, other.coords)) {
        top = false;
        break;
      }
    }
    if (top) {
      if (best) throw DomainError("highest_root: maximum not unique");
      best = &re.coords;
    }
  }
  if (!best)
    throw DomainError("highest_root: no coordinatewise maximum exists");
  return *best;
}

}  // namespace coxkit
