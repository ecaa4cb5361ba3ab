#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "solvclass/diagram.hpp"

namespace solvclass {

using Pair = std::pair<int, int>;  // (i, j): the derivation maps e_i into e_j

/// Offdiagonal index set 𝒜; pairs kept sorted. Conditions checked on
/// construction by candidate_index_sets: i ≠ j, all indices pairwise
/// distinct, no arrow i -> j.
struct IndexSet {
  std::vector<Pair> pairs;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;
};

struct NondiagonalTriple {
  IndexSet A;
  RatVec lambda;      // diagonal of D, in ker M
  RatVec A_values;    // parallel to A.pairs, all nonzero
  Rational trace;     // Tr D = sum lambda, nonzero
};

/// One-parameter family: lambda is pinned, A(t) = A0 + t A1.
struct ParametricTriple {
  IndexSet A;
  RatVec lambda;
  RatVec A0;
  RatVec A1;
  Rational trace;
  int free_parameters = 1;
  int dim_V = 0;       // n5 of the remark on uniqueness
  int dim_kernel = 0;  // dim ker M
};

struct TripleRejection {
  enum class Reason { ZeroTrace, ZeroA, NoSolution };
  Reason reason;
  RatVec lambda;
  std::string detail;
};

using TripleOutcome = std::variant<NondiagonalTriple, TripleRejection, ParametricTriple>;

/// Offdiagonal derivation support of the diagram: entries that can be nonzero
/// for some algebra with this diagram, grouped into classes that are jointly
/// zero or nonzero.
struct DerivationSupport {
  std::vector<std::vector<Pair>> classes;  // each sorted; jointly nonzero
  std::vector<Pair> eliminated;            // forced zero for every algebra
};
DerivationSupport derivation_support(const NiceDiagram& d);

/// All admissible nonempty 𝒜 (N1-N3 plus the support prefilter), one per
/// Aut(Δ)-orbit, in deterministic order.
std::vector<IndexSet> candidate_index_sets(const NiceDiagram& d);

/// Solves conditions N4-N5 for lambda and the A_j^i. lambda is always pinned;
/// the outcome is a triple when A is unique and nonzero, a rejection on zero
/// trace or zero A, and parametric otherwise.
TripleOutcome solve_lambda_A(const NiceDiagram& d, const IndexSet& A);

/// Unique lambda in ker M with sum(lambda*mu) = sum(mu) for all mu in ker M
/// (the empty-𝒜 case of N4).
RatVec nikolayevsky_diagonal(const NiceDiagram& d);

/// Bilinear derivation constraints for offdiagonal support exactly 𝒜: each
/// equation is a sum of products c_{class} * a_{pair} that must vanish.
struct DerivationTerm {
  int arrow_class;  // index into diagram.arrow_classes()
  int pair;         // index into A.pairs
  friend auto operator<=>(const DerivationTerm&, const DerivationTerm&) = default;
};
std::vector<std::vector<DerivationTerm>> derivation_equations(const NiceDiagram& d,
                                                              const IndexSet& A);

}  // namespace solvclass
