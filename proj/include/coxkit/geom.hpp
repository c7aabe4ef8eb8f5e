#pragma once

#include <cstddef>
#include <vector>

#include "coxkit/linalg.hpp"
#include "coxkit/system.hpp"

namespace coxkit {

// Entry <alpha_i, alpha_j> of the standard bilinear form, at the system
// modulus: 1 on the diagonal, -cos(pi/m) for a finite bond, -1 for an
// infinite bond.
TrigScalar bond_form(const CoxeterSystem& sys, int i, int j);

// Full Gram matrix of the geometric representation.
Mat gram(const CoxeterSystem& sys);

TrigScalar bilinear(const Mat& g, const Vec& u, const Vec& v);

// Reflection in an arbitrary vector: v - 2<root, v> root.  The caller is
// responsible for <root, root> = 1 when a genuine reflection is intended.
Vec reflect(const Mat& g, const Vec& root, const Vec& v);

// s_i v; only coordinate i changes.
Vec simple_reflect(const Mat& g, int i, const Vec& v);

// Matrix of s_i acting on column vectors of simple-root coordinates.
Mat simple_reflection(const CoxeterSystem& sys, int i);

// In-place m <- S_i * m and m <- m * S_i.  Each costs O(n * deg(i)) exact
// operations instead of a full n^3 product.
void mul_simple_left(const Mat& g, int i, Mat& m);
void mul_simple_right(const Mat& g, int i, Mat& m);

enum class SignPattern { Zero, Positive, Negative, Mixed };
SignPattern sign_pattern(const Vec& v);

// One positive root together with its discovery data: depth is the BFS
// level (number of simple reflections from a simple root), and
// word applied letter by letter to alpha_base reproduces coords:
//   s_{word[0]} s_{word[1]} ... s_{word[k-1]} alpha_base == coords.
struct RootEntry {
  Vec coords;
  int depth = 0;
  std::vector<int> word;
  int base = 0;
};

struct RootEnumeration {
  std::vector<RootEntry> roots;  // BFS order, no duplicates
  bool closed = false;           // true iff the whole positive system was reached
};

// Breadth-first closure of the simple roots under simple reflections,
// keeping positive vectors only.  Stops after depth_cap levels or once
// max_roots entries exist; closed reports whether the frontier emptied
// before either cap was hit.
RootEnumeration enumerate_roots(const CoxeterSystem& sys, int depth_cap,
                                std::size_t max_roots = 1000000);

struct OrbitGrowth {
  std::size_t count = 0;
  bool closed = false;
  bool reached_target = false;
};

// Size of the orbit of start under simple reflections (both signs kept),
// explored breadth-first.  Stops early once target vectors are seen.
OrbitGrowth root_orbit_growth(const CoxeterSystem& sys, const Vec& start,
                              std::size_t target, int depth_cap);

// Gram form restricted to a subset of the generators (ascending indices).
Mat parabolic_restrict(const Mat& g, const std::vector<int>& subset);

// Certificate that gamma is a positive root: a word and a simple index with
// s_{word[0]} ... s_{word[k-1]} alpha_base == gamma, found by walking down
// the depth (pick a simple root pairing positively, reflect, repeat).
// DomainError if gamma is not certified within step_cap steps.
struct RootCertificate {
  std::vector<int> word;
  int base = 0;
};
RootCertificate certify_root(const CoxeterSystem& sys, const Vec& gamma,
                             int step_cap = 4096);

// The unique coordinatewise-maximal positive root.  Requires the positive
// system to close within max_roots; DomainError if enumeration does not
// close or no single maximum dominates every root (e.g. B_n in the
// unit-root normalization).
Vec highest_root(const CoxeterSystem& sys, std::size_t max_roots = 100000);

}  // namespace coxkit
