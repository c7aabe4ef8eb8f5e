#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coxkit/errors.hpp"

namespace coxkit {

// Bond label m(s,t) of a Coxeter system: an integer >= 2, or infinity.
// Infinity is a distinct state, not an integer sentinel at the API level.
class BondLabel {
 public:
  BondLabel() = default;  // m = 2 (no bond)
  static BondLabel finite(int m) {
    if (m < 2) throw DomainError("bond label must be >= 2");
    BondLabel b;
    b.m_ = m;
    return b;
  }
  static BondLabel infinite() {
    BondLabel b;
    b.m_ = 0;
    return b;
  }
  bool is_finite() const { return m_ != 0; }
  int value() const {
    if (m_ == 0) throw DomainError("infinite bond label has no integer value");
    return m_;
  }
  bool operator==(const BondLabel& o) const = default;
  std::string str() const { return m_ == 0 ? "inf" : std::to_string(m_); }

 private:
  int m_ = 2;
};

// Coxeter system (W, S) given by rank and the symmetric label matrix.
// Generators are 0-based in the API; file formats and rendered output are
// 1-based.
class CoxeterSystem {
 public:
  explicit CoxeterSystem(int rank);
  int rank() const { return rank_; }
  BondLabel label(int i, int j) const;
  void set_label(int i, int j, BondLabel m);
  bool adjacent(int i, int j) const;  // edge of Gamma: m >= 3 or infinite
  std::vector<int> neighbors(int i) const;
  // lcm of all finite labels (minimum 2): every Gram entry lives in
  // Q(cos(pi/modulus)).
  long modulus() const;
  bool operator==(const CoxeterSystem& o) const = default;

 private:
  void check_index(int i, int j) const;
  int rank_;
  std::vector<BondLabel> m_;  // strict upper triangle, row-major
};

// .cox file format:
//   # comment
//   rank <n>
//   edge <i> <j> <m|inf>     (1-based; m >= 3; omitted pairs have m = 2)
CoxeterSystem parse_system(std::istream& in);
CoxeterSystem parse_system_text(const std::string& text);
CoxeterSystem load_system(const std::string& path);
std::string format_system(const CoxeterSystem& sys);

// Label-preserving permutation of the generator set.
class GraphAutomorphism {
 public:
  static GraphAutomorphism identity(int rank);
  // validates that perm is a bijection preserving all labels
  GraphAutomorphism(const CoxeterSystem& sys, std::vector<int> perm);
  int rank() const { return static_cast<int>(perm_.size()); }
  int operator()(int i) const { return perm_[static_cast<size_t>(i)]; }
  const std::vector<int>& perm() const { return perm_; }
  GraphAutomorphism compose(const GraphAutomorphism& o) const;  // this ∘ o
  GraphAutomorphism inverse() const;
  bool is_identity() const;
  bool operator==(const GraphAutomorphism& o) const { return perm_ == o.perm_; }
  bool operator<(const GraphAutomorphism& o) const { return perm_ < o.perm_; }
  int order() const;
  std::string cycles_str() const;  // "(1 3)(2 4)" (1-based) or "id"

 private:
  explicit GraphAutomorphism(std::vector<int> perm) : perm_(std::move(perm)) {}
  std::vector<int> perm_;
};

// Cycle notation, 1-based, fixed points omitted: "(1 3)(2 4)"; "id" or "()"
// for the identity.  Validates against the system's labels.
GraphAutomorphism parse_cycles(const CoxeterSystem& sys, const std::string& text);

// All label-preserving permutations, brute force; intended for small ranks.
std::vector<GraphAutomorphism> all_automorphisms(const CoxeterSystem& sys);

struct ComponentDecomposition {
  std::vector<std::vector<int>> parts;  // each sorted; parts ordered by minimum
  std::vector<int> part_of;             // generator -> part index
};
ComponentDecomposition components(const CoxeterSystem& sys);

// Orbits of tau on S, each sorted, ordered by minimum.
std::vector<std::vector<int>> orbits_on_generators(const CoxeterSystem& sys,
                                                   const GraphAutomorphism& tau);

// tau\Gamma: vertices are orbits; two orbits are adjacent iff some pair of
// representatives is adjacent in Gamma.
struct QuotientGraph {
  std::vector<std::vector<int>> orbits;
  std::vector<std::vector<bool>> adj;
  bool connected() const;
};
QuotientGraph quotient_graph(const CoxeterSystem& sys, const GraphAutomorphism& tau);

bool graph_connected(const CoxeterSystem& sys);

// restriction of the system to a generator subset (sorted order preserved)
CoxeterSystem subsystem(const CoxeterSystem& sys, const std::vector<int>& subset);

// word/subset rendering helpers (1-based in text)
std::vector<int> parse_word(const CoxeterSystem& sys, const std::string& text);
std::string format_word(const std::vector<int>& word);      // "1 2 1", "e" if empty
std::string format_subset(const std::vector<int>& subset);  // "{1,3}"

}  // namespace coxkit
