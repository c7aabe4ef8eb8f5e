#include "coxkit/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "coxkit/errors.hpp"
#include "coxkit/geom.hpp"

namespace coxkit {

std::string kind_str(ComponentKind k) {
  switch (k) {
    case ComponentKind::Finite: return "Finite";
    case ComponentKind::Affine: return "Affine";
    case ComponentKind::CompactHyperbolic: return "CompactHyperbolic";
    case ComponentKind::OtherInfinite: return "OtherInfinite";
  }
  return "?";
}

std::string ComponentTag::str() const {
  if (name.empty()) return kind_str(kind);
  return kind_str(kind) + "(" + name + ")";
}

// ---------- exact form tests ----------

namespace {

Mat principal_submatrix(const Mat& g, const std::vector<int>& idx) {
  Mat s(static_cast<int>(idx.size()), g.at(0, 0).modulus());
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j)
      s.at(static_cast<int>(i), static_cast<int>(j)) =
          g.at(idx[i], idx[j]);
  return s;
}

}  // namespace

bool is_positive_definite(const Mat& g) {
  for (int k = 1; k <= g.n; ++k) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    if (det(principal_submatrix(g, idx)).sign() != Sign::Positive) return false;
  }
  return true;
}

bool is_positive_semidefinite(const Mat& g) {
  int n = g.n;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    if (det(principal_submatrix(g, idx)).sign() == Sign::Negative) return false;
  }
  return true;
}

int radical_dimension(const Mat& g) {
  std::vector<Vec> rows;
  for (int i = 0; i < g.n; ++i) {
    Vec r;
    for (int j = 0; j < g.n; ++j) r.push_back(g.at(i, j));
    rows.push_back(std::move(r));
  }
  return g.n - rank_of(rows);
}

bool proper_subforms_positive_definite(const Mat& g) {
  int n = g.n;
  if (n == 1) return true;
  for (int drop = 0; drop < n; ++drop) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (i != drop) idx.push_back(i);
    if (!is_positive_definite(principal_submatrix(g, idx))) return false;
  }
  return true;
}

// ---------- catalog ----------

namespace {

using Edge = std::pair<std::pair<int, int>, long>;  // 0-based, label (0 = inf)

CoxeterSystem build(int rank, const std::vector<Edge>& edges) {
  CoxeterSystem sys(rank);
  for (const Edge& e : edges)
    sys.set_label(e.first.first, e.first.second,
                  e.second == 0 ? BondLabel::infinite()
                                : BondLabel::finite(e.second));
  return sys;
}

CoxeterSystem path_of(const std::vector<long>& labels) {
  std::vector<Edge> edges;
  for (size_t i = 0; i < labels.size(); ++i)
    edges.push_back({{static_cast<int>(i), static_cast<int>(i) + 1}, labels[i]});
  return build(static_cast<int>(labels.size()) + 1, edges);
}

CoxeterSystem type_a(int n) { return path_of(std::vector<long>(static_cast<size_t>(n - 1), 3)); }

CoxeterSystem type_b(int n) {
  std::vector<long> l(static_cast<size_t>(n - 1), 3);
  l.back() = 4;
  return path_of(l);
}

CoxeterSystem type_d(int n) {
  // 1,2 -> 3, then a path 3..n
  std::vector<Edge> e{{{0, 2}, 3}, {{1, 2}, 3}};
  for (int i = 2; i + 1 < n; ++i) e.push_back({{i, i + 1}, 3});
  return build(n, e);
}

CoxeterSystem type_e(int n) {
  // path 1..n-1 with n attached to node 3
  std::vector<Edge> e;
  for (int i = 0; i + 2 < n; ++i) e.push_back({{i, i + 1}, 3});
  e.push_back({{2, n - 1}, 3});
  return build(n, e);
}

CoxeterSystem affine_a(int n) {
  // (n+1)-cycle, all 3
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({{i, i + 1}, 3});
  e.push_back({{0, n}, 3});
  return build(n + 1, e);
}

CoxeterSystem affine_b(int n) {
  // 1,2 -> 3; path 3..n; edge (n, n+1) labeled 4
  std::vector<Edge> e{{{0, 2}, 3}, {{1, 2}, 3}};
  for (int i = 2; i < n - 1; ++i) e.push_back({{i, i + 1}, 3});
  e.push_back({{n - 1, n}, 4});
  return build(n + 1, e);
}

CoxeterSystem affine_c(int n) {
  std::vector<long> l(static_cast<size_t>(n), 3);
  l.front() = 4;
  l.back() = 4;
  return path_of(l);
}

CoxeterSystem affine_d(int n) {
  // 1,2 -> 3; path 3..n-1; n, n+1 -> n-1
  std::vector<Edge> e{{{0, 2}, 3}, {{1, 2}, 3}};
  for (int i = 2; i < n - 2; ++i) e.push_back({{i, i + 1}, 3});
  e.push_back({{n - 2, n - 1}, 3});
  e.push_back({{n - 2, n}, 3});
  return build(n + 1, e);
}

CoxeterSystem affine_e6() {
  return build(7, {{{0, 1}, 3}, {{1, 2}, 3}, {{2, 3}, 3}, {{3, 4}, 3},
                   {{2, 5}, 3}, {{5, 6}, 3}});
}

CoxeterSystem affine_e7() {
  std::vector<Edge> e;
  for (int i = 0; i < 6; ++i) e.push_back({{i, i + 1}, 3});
  e.push_back({{3, 7}, 3});
  return build(8, e);
}

CoxeterSystem affine_e8() {
  std::vector<Edge> e;
  for (int i = 0; i < 7; ++i) e.push_back({{i, i + 1}, 3});
  e.push_back({{2, 8}, 3});
  return build(9, e);
}

CoxeterSystem affine_f4() { return path_of({3, 4, 3, 3}); }
CoxeterSystem affine_g2() { return path_of({6, 3}); }

CoxeterSystem hyper_x1() {
  return build(5, {{{0, 1}, 3}, {{1, 2}, 3}, {{2, 3}, 3}, {{3, 4}, 3},
                   {{0, 4}, 4}});
}

CoxeterSystem hyper_x2(long m1, long m2) {
  return build(4, {{{0, 1}, 3}, {{1, 2}, m2}, {{2, 3}, 3}, {{0, 3}, m1}});
}

CoxeterSystem hyper_x3(long m1, long m2, long m3) {
  return build(3, {{{0, 1}, m1}, {{1, 2}, m2}, {{0, 2}, m3}});
}

CoxeterSystem hyper_y1() {
  return build(4, {{{0, 1}, 5}, {{1, 2}, 3}, {{1, 3}, 3}});
}

CoxeterSystem hyper_y2() {
  return build(5, {{{0, 1}, 5}, {{1, 2}, 3}, {{2, 3}, 3}, {{2, 4}, 3}});
}

CoxeterSystem hyper_y3(long m) { return path_of({5, 3, 3, m}); }
CoxeterSystem hyper_y4(long m) { return path_of({5, 3, m}); }
CoxeterSystem hyper_y5() { return path_of({3, 5, 3}); }
CoxeterSystem hyper_y6(long m1, long m2) { return path_of({m1, m2}); }

std::vector<long> sorted_labels(const CoxeterSystem& sys) {
  // finite labels ascending, infinite bonds encoded as 0 up front
  std::vector<long> out;
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = i + 1; j < sys.rank(); ++j) {
      BondLabel b = sys.label(i, j);
      if (!sys.adjacent(i, j)) continue;
      out.push_back(b.is_finite() ? b.value() : 0);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool graphs_isomorphic(const CoxeterSystem& a, const CoxeterSystem& b) {
  int n = a.rank();
  if (n != b.rank()) return false;
  if (sorted_labels(a) != sorted_labels(b)) return false;

  auto degrees = [](const CoxeterSystem& s) {
    std::vector<int> d(static_cast<size_t>(s.rank()));
    for (int i = 0; i < s.rank(); ++i)
      d[static_cast<size_t>(i)] = static_cast<int>(s.neighbors(i).size());
    return d;
  };
  std::vector<int> da = degrees(a), db = degrees(b);
  {
    std::vector<int> sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  std::vector<int> map(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);
  std::function<bool(int)> place = [&](int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<size_t>(w)]) continue;
      if (da[static_cast<size_t>(v)] != db[static_cast<size_t>(w)]) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u) {
        if (!(a.label(v, u) == b.label(w, map[static_cast<size_t>(u)]))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[static_cast<size_t>(v)] = w;
      used[static_cast<size_t>(w)] = true;
      if (place(v + 1)) return true;
      used[static_cast<size_t>(w)] = false;
      map[static_cast<size_t>(v)] = -1;
    }
    return false;
  };
  return place(0);
}

namespace {

std::optional<std::string> match_finite(const CoxeterSystem& c) {
  int r = c.rank();
  if (r == 1) return "A1";
  if (r == 2) {
    BondLabel b = c.label(0, 1);
    if (!b.is_finite()) return std::nullopt;
    long m = b.value();
    if (m == 2) return std::nullopt;  // not connected; caller guarantees
    if (m == 3) return "A2";
    if (m == 4) return "B2";
    if (m == 6) return "G2";
    return "I2(" + std::to_string(m) + ")";
  }
  if (graphs_isomorphic(c, type_a(r))) return "A" + std::to_string(r);
  if (graphs_isomorphic(c, type_b(r))) return "B" + std::to_string(r);
  if (r >= 4 && graphs_isomorphic(c, type_d(r))) return "D" + std::to_string(r);
  if (r >= 6 && r <= 8 && graphs_isomorphic(c, type_e(r)))
    return "E" + std::to_string(r);
  if (r == 4 && graphs_isomorphic(c, path_of({3, 4, 3}))) return "F4";
  if (r == 3 && graphs_isomorphic(c, path_of({5, 3}))) return "H3";
  if (r == 4 && graphs_isomorphic(c, path_of({5, 3, 3}))) return "H4";
  return std::nullopt;
}

std::optional<std::string> match_affine(const CoxeterSystem& c) {
  int r = c.rank();
  if (r == 2) {
    if (!c.label(0, 1).is_finite()) return "A~1";
    return std::nullopt;
  }
  if (r >= 3 && graphs_isomorphic(c, affine_a(r - 1)))
    return "A~" + std::to_string(r - 1);
  if (r >= 4 && graphs_isomorphic(c, affine_b(r - 1)))
    return "B~" + std::to_string(r - 1);
  if (r >= 3 && graphs_isomorphic(c, affine_c(r - 1)))
    return "C~" + std::to_string(r - 1);
  if (r >= 5 && graphs_isomorphic(c, affine_d(r - 1)))
    return "D~" + std::to_string(r - 1);
  if (r == 7 && graphs_isomorphic(c, affine_e6())) return "E~6";
  if (r == 8 && graphs_isomorphic(c, affine_e7())) return "E~7";
  if (r == 9 && graphs_isomorphic(c, affine_e8())) return "E~8";
  if (r == 5 && graphs_isomorphic(c, affine_f4())) return "F~4";
  if (r == 3 && graphs_isomorphic(c, affine_g2())) return "G~2";
  return std::nullopt;
}

std::optional<std::string> match_hyperbolic(const CoxeterSystem& c) {
  int r = c.rank();
  std::vector<long> labels = sorted_labels(c);
  if (!labels.empty() && labels.front() == 0) return std::nullopt;  // has inf

  if (r == 3) {
    if (labels.size() == 3) {  // triangle
      long m1 = labels[2], m2 = labels[1], m3 = labels[0];
      if (m3 >= 3 && !(m1 == 3 && m2 == 3 && m3 == 3) &&
          graphs_isomorphic(c, hyper_x3(m1, m2, m3)))
        return "X3(" + std::to_string(m1) + "," + std::to_string(m2) + "," +
               std::to_string(m3) + ")";
      return std::nullopt;
    }
    if (labels.size() == 2) {  // path
      long m1 = labels[1], m2 = labels[0];
      if (m1 >= 5 && m2 >= 3 && !(m1 == 5 && m2 == 3) &&
          !(m1 == 6 && m2 == 3) && graphs_isomorphic(c, hyper_y6(m1, m2)))
        return "Y6(" + std::to_string(m1) + "," + std::to_string(m2) + ")";
      return std::nullopt;
    }
    return std::nullopt;
  }
  if (r == 4) {
    if (labels.size() == 4) {  // 4-cycle, parameters are the two non-3 slots
      std::vector<long> rest = labels;
      for (int k = 0; k < 2; ++k) {
        auto it = std::find(rest.begin(), rest.end(), 3);
        if (it == rest.end()) return std::nullopt;
        rest.erase(it);
      }
      long m1 = rest[1], m2 = rest[0];
      if (m1 >= 3 && m1 <= 5 && m2 >= 3 && m2 <= 5 && !(m1 == 3 && m2 == 3) &&
          graphs_isomorphic(c, hyper_x2(m1, m2)))
        return "X2(" + std::to_string(m1) + "," + std::to_string(m2) + ")";
      return std::nullopt;
    }
    if (graphs_isomorphic(c, hyper_y1())) return "Y1";
    for (long m : {4L, 5L})
      if (graphs_isomorphic(c, hyper_y4(m)))
        return "Y4(" + std::to_string(m) + ")";
    if (graphs_isomorphic(c, hyper_y5())) return "Y5";
    return std::nullopt;
  }
  if (r == 5) {
    if (graphs_isomorphic(c, hyper_x1())) return "X1";
    if (graphs_isomorphic(c, hyper_y2())) return "Y2";
    for (long m : {3L, 4L, 5L})
      if (graphs_isomorphic(c, hyper_y3(m)))
        return "Y3(" + std::to_string(m) + ")";
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

ComponentTag classify_system(const CoxeterSystem& sys) {
  if (!graph_connected(sys))
    throw DomainError("classify_system: graph is not connected");

  Mat g = gram(sys);
  bool posdef = is_positive_definite(g);
  std::optional<std::string> fin = match_finite(sys);

  if (posdef != fin.has_value())
    throw InternalCheckError(
        "classification mismatch: definiteness test and finite catalog "
        "disagree");
  if (posdef) return ComponentTag{ComponentKind::Finite, *fin};

  bool semidef = is_positive_semidefinite(g);
  std::optional<std::string> aff = match_affine(sys);
  if (semidef != aff.has_value())
    throw InternalCheckError(
        "classification mismatch: semidefiniteness test and affine catalog "
        "disagree");
  if (semidef) {
    if (radical_dimension(g) != 1)
      throw InternalCheckError(
          "classification mismatch: affine form with radical dimension != 1");
    return ComponentTag{ComponentKind::Affine, *aff};
  }

  bool hyp_form = radical_dimension(g) == 0 && proper_subforms_positive_definite(g);
  std::optional<std::string> hyp = match_hyperbolic(sys);
  if (hyp_form != hyp.has_value())
    throw InternalCheckError(
        "classification mismatch: sub-form test and compact hyperbolic "
        "catalog disagree");
  if (hyp_form) return ComponentTag{ComponentKind::CompactHyperbolic, *hyp};

  return ComponentTag{ComponentKind::OtherInfinite, ""};
}

ComponentTag classify_component(const CoxeterSystem& sys,
                                const std::vector<int>& part) {
  // part must be one whole connected component
  std::vector<std::vector<int>> parts = components(sys).parts;
  if (std::find(parts.begin(), parts.end(), part) == parts.end()) {
    std::vector<int> sorted_part = part;
    std::sort(sorted_part.begin(), sorted_part.end());
    if (std::find(parts.begin(), parts.end(), sorted_part) == parts.end())
      throw DomainError("classify_component: not a connected component");
  }
  return classify_system(subsystem(sys, part));
}

std::vector<std::pair<std::vector<int>, ComponentTag>> classify_all(
    const CoxeterSystem& sys) {
  std::vector<std::pair<std::vector<int>, ComponentTag>> out;
  for (const std::vector<int>& part : components(sys).parts)
    out.emplace_back(part, classify_system(subsystem(sys, part)));
  return out;
}

bool is_minimal_nonfinite(const CoxeterSystem& sys,
                          const std::vector<int>& part) {
  CoxeterSystem sub = subsystem(sys, part);
  if (!graph_connected(sub))
    throw DomainError("is_minimal_nonfinite: part is not connected");
  Mat g = gram(sub);
  if (is_positive_definite(g)) return false;
  return proper_subforms_positive_definite(g);
}

}  // namespace coxkit
