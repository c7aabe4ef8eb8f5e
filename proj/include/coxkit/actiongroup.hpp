#pragma once

#include <vector>

#include "coxkit/system.hpp"

namespace coxkit {

// A finite group of diagram automorphisms, materialized by closing a
// generating set under composition. All later group arithmetic happens on
// the multiplication table.
class FiniteActionGroup {
 public:
  static FiniteActionGroup closure(const CoxeterSystem& sys,
                                   const std::vector<GraphAutomorphism>& gens,
                                   int cap = 5000);

  int size() const { return static_cast<int>(elems_.size()); }
  const GraphAutomorphism& at(int i) const {
    return elems_[static_cast<size_t>(i)];
  }
  int identity_index() const { return id_; }
  int mul(int a, int b) const {  // at(a) followed by... compose: a after b
    return table_[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }
  int inv(int a) const { return inv_[static_cast<size_t>(a)]; }
  int index_of(const GraphAutomorphism& g) const;  // -1 if absent
  int element_order(int a) const;

 private:
  FiniteActionGroup() = default;
  std::vector<GraphAutomorphism> elems_;
  std::vector<std::vector<int>> table_;  // table[a][b] = a ∘ b
  std::vector<int> inv_;
  int id_ = 0;
};

// Subgroups and subsets are sorted index lists. Subgroup arguments are
// validated: they must contain the identity and be closed under the table.
bool is_subgroup(const FiniteActionGroup& G, const std::vector<int>& H);

std::vector<int> centralizer(const FiniteActionGroup& G, int g);
std::vector<int> centralizer_of_set(const FiniteActionGroup& G,
                                    const std::vector<int>& X);
std::vector<int> subgroup_closure(const FiniteActionGroup& G,
                                  const std::vector<int>& gens);
std::vector<int> normal_closure(const FiniteActionGroup& G,
                                const std::vector<int>& X);
// largest normal subgroup of G contained in H
std::vector<int> core(const FiniteActionGroup& G, const std::vector<int>& H);
long subgroup_index(const FiniteActionGroup& G, const std::vector<int>& H);

// Action file: one `gen (cycle notation)` line per generator, `#` comments,
// blank lines ignored. An empty file yields the trivial group.
FiniteActionGroup parse_action_group(const CoxeterSystem& sys,
                                     const std::string& text, int cap = 5000);
FiniteActionGroup load_action_group(const CoxeterSystem& sys,
                                    const std::string& path, int cap = 5000);

}  // namespace coxkit
