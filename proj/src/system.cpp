#include "coxkit/system.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace coxkit {

CoxeterSystem::CoxeterSystem(int rank) : rank_(rank) {
  if (rank < 1) throw DomainError("rank must be >= 1");
  m_.assign(static_cast<size_t>(rank) * (rank - 1) / 2, BondLabel());
}

void CoxeterSystem::check_index(int i, int j) const {
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_)
    throw DomainError("generator index out of range");
  if (i == j) throw DomainError("label(i,i) is not stored; diagonal is 1");
}

BondLabel CoxeterSystem::label(int i, int j) const {
  check_index(i, j);
  if (i > j) std::swap(i, j);
  return m_[static_cast<size_t>(j) * (j - 1) / 2 + i];
}

void CoxeterSystem::set_label(int i, int j, BondLabel m) {
  check_index(i, j);
  if (i > j) std::swap(i, j);
  m_[static_cast<size_t>(j) * (j - 1) / 2 + i] = m;
}

bool CoxeterSystem::adjacent(int i, int j) const {
  BondLabel m = label(i, j);
  return !m.is_finite() || m.value() >= 3;
}

std::vector<int> CoxeterSystem::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < rank_; ++j)
    if (j != i && adjacent(i, j)) out.push_back(j);
  return out;
}

long CoxeterSystem::modulus() const {
  long n = 1;
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j) {
      BondLabel m = label(i, j);
      if (m.is_finite() && m.value() >= 3) n = std::lcm(n, static_cast<long>(m.value()));
    }
  return std::max(n, 2L);
}

// ---------- parsing ----------

namespace {
std::string strip_comment(const std::string& line) {
  size_t pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}
}  // namespace

CoxeterSystem parse_system(std::istream& in) {
  std::string line;
  int lineno = 0;
  int rank = -1;
  std::vector<std::pair<int, int>> seen;
  CoxeterSystem sys(1);
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(strip_comment(line));
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "rank") {
      if (rank >= 0) throw ParseError(lineno, "duplicate rank directive");
      if (!(ls >> rank) || rank < 1) throw ParseError(lineno, "rank expects a positive integer");
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing tokens after rank");
      sys = CoxeterSystem(rank);
    } else if (tok == "edge") {
      if (rank < 0) throw ParseError(lineno, "edge before rank directive");
      int i, j;
      std::string mtok;
      if (!(ls >> i >> j >> mtok)) throw ParseError(lineno, "edge expects: edge <i> <j> <m|inf>");
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing tokens after edge");
      if (i < 1 || j < 1 || i > rank || j > rank)
        throw ParseError(lineno, "generator index out of range 1.." + std::to_string(rank));
      if (i == j) throw ParseError(lineno, "edge endpoints must differ");
      int a = std::min(i, j) - 1, b = std::max(i, j) - 1;
      for (auto& p : seen)
        if (p.first == a && p.second == b) throw ParseError(lineno, "duplicate edge");
      seen.push_back({a, b});
      if (mtok == "inf") {
        sys.set_label(a, b, BondLabel::infinite());
      } else {
        int m;
        try {
          size_t used = 0;
          m = std::stoi(mtok, &used);
          if (used != mtok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          throw ParseError(lineno, "edge label must be an integer >= 3 or inf");
        }
        if (m < 3)
          throw ParseError(lineno, "edge label must be >= 3 (m = 2 pairs are simply omitted)");
        sys.set_label(a, b, BondLabel::finite(m));
      }
    } else {
      throw ParseError(lineno, "unknown directive '" + tok + "'");
    }
  }
  if (rank < 0) throw ParseError(0, "missing rank directive");
  return sys;
}

CoxeterSystem parse_system_text(const std::string& text) {
  std::istringstream in(text);
  return parse_system(in);
}

CoxeterSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open system file: " + path);
  try {
    return parse_system(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line, path + ": " + e.what());
  }
}

std::string format_system(const CoxeterSystem& sys) {
  std::ostringstream out;
  out << "rank " << sys.rank() << "\n";
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = i + 1; j < sys.rank(); ++j) {
      BondLabel m = sys.label(i, j);
      if (!m.is_finite() || m.value() >= 3)
        out << "edge " << (i + 1) << " " << (j + 1) << " " << m.str() << "\n";
    }
  return out.str();
}

// ---------- automorphisms ----------

GraphAutomorphism GraphAutomorphism::identity(int rank) {
  std::vector<int> p(static_cast<size_t>(rank));
  std::iota(p.begin(), p.end(), 0);
  return GraphAutomorphism(std::move(p));
}

GraphAutomorphism::GraphAutomorphism(const CoxeterSystem& sys, std::vector<int> perm)
    : perm_(std::move(perm)) {
  const int n = sys.rank();
  if (static_cast<int>(perm_.size()) != n)
    throw DomainError("permutation size does not match rank");
  std::vector<bool> hit(static_cast<size_t>(n), false);
  for (int v : perm_) {
    if (v < 0 || v >= n || hit[static_cast<size_t>(v)])
      throw DomainError("not a permutation of the generators");
    hit[static_cast<size_t>(v)] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(sys.label(perm_[static_cast<size_t>(i)], perm_[static_cast<size_t>(j)]) ==
            sys.label(i, j)))
        throw DomainError("permutation does not preserve labels: m(" + std::to_string(i + 1) +
                          "," + std::to_string(j + 1) + ") != m(image pair)");
}

GraphAutomorphism GraphAutomorphism::compose(const GraphAutomorphism& o) const {
  if (perm_.size() != o.perm_.size()) throw DomainError("rank mismatch in compose");
  std::vector<int> p(perm_.size());
  for (size_t i = 0; i < perm_.size(); ++i)
    p[i] = perm_[static_cast<size_t>(o.perm_[i])];
  return GraphAutomorphism(std::move(p));
}

GraphAutomorphism GraphAutomorphism::inverse() const {
  std::vector<int> p(perm_.size());
  for (size_t i = 0; i < perm_.size(); ++i) p[static_cast<size_t>(perm_[i])] = static_cast<int>(i);
  return GraphAutomorphism(std::move(p));
}

bool GraphAutomorphism::is_identity() const {
  for (size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != static_cast<int>(i)) return false;
  return true;
}

int GraphAutomorphism::order() const {
  GraphAutomorphism g = *this;
  int k = 1;
  while (!g.is_identity()) {
    g = g.compose(*this);
    ++k;
    if (k > 1000000) throw InternalCheckError("automorphism order runaway");
  }
  return k;
}

std::string GraphAutomorphism::cycles_str() const {
  std::ostringstream out;
  std::vector<bool> done(perm_.size(), false);
  bool any = false;
  for (size_t i = 0; i < perm_.size(); ++i) {
    if (done[i] || perm_[i] == static_cast<int>(i)) continue;
    out << "(";
    size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      out << (first ? "" : " ") << (j + 1);
      first = false;
      j = static_cast<size_t>(perm_[j]);
    }
    out << ")";
    any = true;
  }
  return any ? out.str() : "id";
}

GraphAutomorphism parse_cycles(const CoxeterSystem& sys, const std::string& text) {
  std::vector<int> perm(static_cast<size_t>(sys.rank()));
  std::iota(perm.begin(), perm.end(), 0);
  size_t pos = 0;
  auto skip_ws = [&](const std::string& s) {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip_ws(text);
  if (pos == text.size() || text.compare(pos, 2, "id") == 0)
    return GraphAutomorphism(sys, std::move(perm));

  std::vector<bool> used(static_cast<size_t>(sys.rank()), false);
  bool saw_cycle = false;
  while (true) {
    skip_ws(text);
    if (pos == text.size()) break;
    if (text[pos] != '(') throw DomainError("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws(text);
      if (pos == text.size()) throw DomainError("unbalanced cycle notation: " + text);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      size_t q = pos;
      while (q < text.size() && isdigit(static_cast<unsigned char>(text[q]))) ++q;
      if (q == pos) throw DomainError("expected generator index in cycle notation: " + text);
      int v = std::stoi(text.substr(pos, q - pos));
      pos = q;
      if (v < 1 || v > sys.rank())
        throw DomainError("cycle entry out of range 1.." + std::to_string(sys.rank()));
      if (used[static_cast<size_t>(v - 1)])
        throw DomainError("cycles are not disjoint at " + std::to_string(v));
      used[static_cast<size_t>(v - 1)] = true;
      cyc.push_back(v - 1);
    }
    if (!cyc.empty()) {
      if (cyc.size() < 2) throw DomainError("cycles must have length >= 2");
      for (size_t i = 0; i < cyc.size(); ++i)
        perm[static_cast<size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
    }
    saw_cycle = true;
  }
  if (!saw_cycle) throw DomainError("empty cycle notation: " + text);
  return GraphAutomorphism(sys, std::move(perm));
}

std::vector<GraphAutomorphism> all_automorphisms(const CoxeterSystem& sys) {
  std::vector<int> p(static_cast<size_t>(sys.rank()));
  std::iota(p.begin(), p.end(), 0);
  std::vector<GraphAutomorphism> out;
  do {
    bool ok = true;
    for (int i = 0; ok && i < sys.rank(); ++i)
      for (int j = i + 1; ok && j < sys.rank(); ++j)
        if (!(sys.label(p[static_cast<size_t>(i)], p[static_cast<size_t>(j)]) == sys.label(i, j)))
          ok = false;
    if (ok) out.push_back(GraphAutomorphism(sys, p));
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end(),
            [](const GraphAutomorphism& a, const GraphAutomorphism& b) { return a < b; });
  return out;
}

// ---------- components, orbits, quotient ----------

ComponentDecomposition components(const CoxeterSystem& sys) {
  ComponentDecomposition dec;
  dec.part_of.assign(static_cast<size_t>(sys.rank()), -1);
  for (int start = 0; start < sys.rank(); ++start) {
    if (dec.part_of[static_cast<size_t>(start)] >= 0) continue;
    int id = static_cast<int>(dec.parts.size());
    std::vector<int> stack{start}, part;
    dec.part_of[static_cast<size_t>(start)] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      part.push_back(v);
      for (int w : sys.neighbors(v))
        if (dec.part_of[static_cast<size_t>(w)] < 0) {
          dec.part_of[static_cast<size_t>(w)] = id;
          stack.push_back(w);
        }
    }
    std::sort(part.begin(), part.end());
    dec.parts.push_back(std::move(part));
  }
  return dec;
}

std::vector<std::vector<int>> orbits_on_generators(const CoxeterSystem& sys,
                                                   const GraphAutomorphism& tau) {
  if (tau.rank() != sys.rank()) throw DomainError("automorphism rank mismatch");
  std::vector<std::vector<int>> orbits;
  std::vector<bool> done(static_cast<size_t>(sys.rank()), false);
  for (int i = 0; i < sys.rank(); ++i) {
    if (done[static_cast<size_t>(i)]) continue;
    std::vector<int> orb;
    int j = i;
    while (!done[static_cast<size_t>(j)]) {
      done[static_cast<size_t>(j)] = true;
      orb.push_back(j);
      j = tau(j);
    }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

bool QuotientGraph::connected() const {
  if (orbits.empty()) return true;
  std::vector<bool> seen(orbits.size(), false);
  std::vector<size_t> stack{0};
  seen[0] = true;
  size_t count = 1;
  while (!stack.empty()) {
    size_t v = stack.back();
    stack.pop_back();
    for (size_t w = 0; w < orbits.size(); ++w)
      if (adj[v][w] && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == orbits.size();
}

QuotientGraph quotient_graph(const CoxeterSystem& sys, const GraphAutomorphism& tau) {
  QuotientGraph q;
  q.orbits = orbits_on_generators(sys, tau);
  q.adj.assign(q.orbits.size(), std::vector<bool>(q.orbits.size(), false));
  for (size_t a = 0; a < q.orbits.size(); ++a)
    for (size_t b = a + 1; b < q.orbits.size(); ++b) {
      bool adj = false;
      for (int i : q.orbits[a])
        for (int j : q.orbits[b])
          if (sys.adjacent(i, j)) adj = true;
      q.adj[a][b] = q.adj[b][a] = adj;
    }
  return q;
}

bool graph_connected(const CoxeterSystem& sys) { return components(sys).parts.size() == 1; }

CoxeterSystem subsystem(const CoxeterSystem& sys, const std::vector<int>& subset) {
  CoxeterSystem sub(static_cast<int>(subset.size()));
  for (size_t i = 0; i < subset.size(); ++i)
    for (size_t j = i + 1; j < subset.size(); ++j)
      sub.set_label(static_cast<int>(i), static_cast<int>(j),
                    sys.label(subset[i], subset[j]));
  return sub;
}

std::vector<int> parse_word(const CoxeterSystem& sys, const std::string& text) {
  std::istringstream in(text);
  std::vector<int> word;
  std::string tok;
  while (in >> tok) {
    if (tok == "e" && word.empty()) continue;  // explicit identity
    int v;
    try {
      size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw DomainError("bad word letter '" + tok + "'");
    }
    if (v < 1 || v > sys.rank())
      throw DomainError("word letter out of range 1.." + std::to_string(sys.rank()));
    word.push_back(v - 1);
  }
  return word;
}

std::string format_word(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::ostringstream out;
  for (size_t i = 0; i < word.size(); ++i) out << (i ? " " : "") << (word[i] + 1);
  return out.str();
}

std::string format_subset(const std::vector<int>& subset) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < subset.size(); ++i) out << (i ? "," : "") << (subset[i] + 1);
  out << "}";
  return out.str();
}

}  // namespace coxkit
