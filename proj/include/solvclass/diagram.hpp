#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "solvclass/linalg.hpp"

namespace solvclass {

/// Unordered arrow class {i,j} -> k of a nice diagram, stored with i < j.
/// It stands for the two labeled arrows i --j--> k and j --i--> k.
struct Arrow {
  int i = 0;
  int j = 0;
  int k = 0;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

struct ValidationIssue {
  std::string axiom;
  std::string detail;
};

using Permutation = std::vector<int>;  // sigma(i) = perm[i-1], nodes 1-based

/// Labeled DAG underlying a nice basis. Nodes are 1..n; arrow classes are kept
/// sorted by (k, i, j), which fixes the row order of the root matrix.
class NiceDiagram {
 public:
  /// Builds from unordered classes (each listed once, i < j applied here).
  static std::variant<NiceDiagram, ValidationIssue> create(int n, std::vector<Arrow> classes);

  /// Builds from directed arrows (i, j, k) meaning i --j--> k; checks the
  /// symmetry closure explicitly.
  static std::variant<NiceDiagram, ValidationIssue> from_raw_arrows(
      int n, const std::vector<std::array<int, 3>>& arrows);

  int n() const { return n_; }
  const std::vector<Arrow>& arrow_classes() const { return classes_; }
  int arrow_count() const { return static_cast<int>(classes_.size()); }

  /// Target of the unordered pair {i,j}, if any.
  std::optional<int> target(int i, int j) const;
  /// True when some arrow i --k--> j exists (i.e. e_i ⌟ de^j ≠ 0).
  bool has_arrow_between(int i, int j) const;

  RatMatrix root_matrix() const;
  F2Matrix root_matrix_mod2() const;

  /// Component per arrow class: g_k / (g_i g_j). All g entries must be nonzero.
  std::vector<RadExt> exp_root_action(const std::vector<RadExt>& g) const;
  RatVec exp_root_action(const RatVec& g) const;

  /// All node permutations mapping arrows to arrows, sorted; found by
  /// backtracking over invariant-compatible assignments.
  std::vector<Permutation> automorphism_group() const;

  /// Lexicographically minimal arrow set over all node relabelings.
  /// Two diagrams are isomorphic iff their canonical forms coincide.
  std::vector<Arrow> canonical_form() const;

  friend bool operator==(const NiceDiagram& a, const NiceDiagram& b) {
    return a.n_ == b.n_ && a.classes_ == b.classes_;
  }

 private:
  NiceDiagram(int n, std::vector<Arrow> classes);
  int n_ = 0;
  std::vector<Arrow> classes_;
};

/// Arrow set image under a node relabeling, re-sorted.
std::vector<Arrow> relabel_arrows(const std::vector<Arrow>& classes, const Permutation& perm);
NiceDiagram relabel(const NiceDiagram& d, const Permutation& perm);

/// All valid nice diagrams with n nodes, one per isomorphism class, in a
/// deterministic order. Brute force; throws std::invalid_argument for n > 5
/// (larger diagrams are ingested from files).
std::vector<NiceDiagram> enumerate_diagrams(int n);

}  // namespace solvclass
