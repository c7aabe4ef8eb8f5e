#include "coxkit/actiongroup.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "coxkit/errors.hpp"

namespace coxkit {

FiniteActionGroup FiniteActionGroup::closure(
    const CoxeterSystem& sys, const std::vector<GraphAutomorphism>& gens,
    int cap) {
  for (const GraphAutomorphism& g : gens)
    if (g.rank() != sys.rank())
      throw DomainError("generator rank does not match the system");

  FiniteActionGroup G;
  std::map<std::vector<int>, int> index;
  GraphAutomorphism id = GraphAutomorphism::identity(sys.rank());
  G.elems_.push_back(id);
  index[id.perm()] = 0;
  size_t head = 0;
  for (const GraphAutomorphism& g : gens)
    if (!index.count(g.perm())) {
      index[g.perm()] = static_cast<int>(G.elems_.size());
      G.elems_.push_back(g);
    }
  while (head < G.elems_.size()) {
    GraphAutomorphism a = G.elems_[head++];
    for (const GraphAutomorphism& g : gens) {
      GraphAutomorphism p = a.compose(g);
      if (index.count(p.perm())) continue;
      if (static_cast<int>(G.elems_.size()) >= cap)
        throw DomainError("action group closure exceeds the cap");
      index[p.perm()] = static_cast<int>(G.elems_.size());
      G.elems_.push_back(p);
    }
  }

  int n = G.size();
  G.table_.assign(static_cast<size_t>(n), std::vector<int>(n, -1));
  G.inv_.assign(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      GraphAutomorphism p = G.at(a).compose(G.at(b));
      auto it = index.find(p.perm());
      if (it == index.end())
        throw InternalCheckError("closure is not closed under composition");
      G.table_[static_cast<size_t>(a)][static_cast<size_t>(b)] = it->second;
      if (p.is_identity()) G.inv_[static_cast<size_t>(a)] = b;
    }
  for (int a = 0; a < n; ++a)
    if (G.inv_[static_cast<size_t>(a)] < 0)
      throw InternalCheckError("element without inverse in closure");
  G.id_ = 0;
  return G;
}

int FiniteActionGroup::index_of(const GraphAutomorphism& g) const {
  for (int i = 0; i < size(); ++i)
    if (elems_[static_cast<size_t>(i)] == g) return i;
  return -1;
}

int FiniteActionGroup::element_order(int a) const {
  int x = a, ord = 1;
  while (x != id_) {
    x = mul(x, a);
    ++ord;
    if (ord > size()) throw InternalCheckError("order exceeds group size");
  }
  return ord;
}

bool is_subgroup(const FiniteActionGroup& G, const std::vector<int>& H) {
  if (!std::binary_search(H.begin(), H.end(), G.identity_index()))
    return false;
  for (int a : H) {
    if (a < 0 || a >= G.size()) return false;
    for (int b : H)
      if (!std::binary_search(H.begin(), H.end(), G.mul(a, b))) return false;
  }
  return true;
}

namespace {

void require_subgroup(const FiniteActionGroup& G, const std::vector<int>& H) {
  if (!std::is_sorted(H.begin(), H.end()) || !is_subgroup(G, H))
    throw DomainError("not a subgroup");
}

}  // namespace

std::vector<int> centralizer(const FiniteActionGroup& G, int g) {
  std::vector<int> out;
  for (int h = 0; h < G.size(); ++h)
    if (G.mul(h, g) == G.mul(g, h)) out.push_back(h);
  return out;
}

std::vector<int> centralizer_of_set(const FiniteActionGroup& G,
                                    const std::vector<int>& X) {
  std::vector<int> out;
  for (int h = 0; h < G.size(); ++h) {
    bool ok = true;
    for (int x : X) ok = ok && G.mul(h, x) == G.mul(x, h);
    if (ok) out.push_back(h);
  }
  return out;
}

std::vector<int> subgroup_closure(const FiniteActionGroup& G,
                                  const std::vector<int>& gens) {
  std::vector<char> seen(static_cast<size_t>(G.size()), 0);
  std::vector<int> work{G.identity_index()};
  seen[static_cast<size_t>(G.identity_index())] = 1;
  for (size_t head = 0; head < work.size(); ++head)
    for (int g : gens) {
      int p = G.mul(work[head], g);
      if (!seen[static_cast<size_t>(p)]) {
        seen[static_cast<size_t>(p)] = 1;
        work.push_back(p);
      }
    }
  std::sort(work.begin(), work.end());
  return work;
}

std::vector<int> normal_closure(const FiniteActionGroup& G,
                                const std::vector<int>& X) {
  std::vector<int> conj;
  for (int g = 0; g < G.size(); ++g)
    for (int x : X) conj.push_back(G.mul(G.mul(g, x), G.inv(g)));
  std::sort(conj.begin(), conj.end());
  conj.erase(std::unique(conj.begin(), conj.end()), conj.end());
  return subgroup_closure(G, conj);
}

std::vector<int> core(const FiniteActionGroup& G, const std::vector<int>& H) {
  require_subgroup(G, H);
  std::vector<int> out;
  for (int h : H) {
    bool in_all = true;
    for (int g = 0; g < G.size() && in_all; ++g)
      in_all = std::binary_search(H.begin(), H.end(),
                                  G.mul(G.mul(G.inv(g), h), g));
    if (in_all) out.push_back(h);
  }
  return out;
}

long subgroup_index(const FiniteActionGroup& G, const std::vector<int>& H) {
  require_subgroup(G, H);
  if (static_cast<size_t>(G.size()) % H.size() != 0)
    throw InternalCheckError("subgroup size does not divide group size");
  return static_cast<long>(static_cast<size_t>(G.size()) / H.size());
}

FiniteActionGroup parse_action_group(const CoxeterSystem& sys,
                                     const std::string& text, int cap) {
  std::vector<GraphAutomorphism> gens;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key != "gen") throw ParseError(lineno, "expected `gen`, got " + key);
    std::string rest;
    std::getline(ls, rest);
    try {
      gens.push_back(parse_cycles(sys, rest));
    } catch (const DomainError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return FiniteActionGroup::closure(sys, gens, cap);
}

FiniteActionGroup load_action_group(const CoxeterSystem& sys,
                                    const std::string& path, int cap) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open action file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_action_group(sys, buf.str(), cap);
}

}  // namespace coxkit
