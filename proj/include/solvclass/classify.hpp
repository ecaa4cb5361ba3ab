#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "solvclass/geometry.hpp"
#include "solvclass/triple.hpp"

namespace solvclass {

/// One classified output: diagram, triple data, signed structure constants,
/// signature and the squared-constant vector X.
struct SolutionRecord {
  int n = 0;
  std::vector<Arrow> arrows;   // sorted by (k, i, j)
  IndexSet A;
  RatVec lambda;
  RatVec A_values;             // parallel to A.pairs
  RadVec c;                    // per arrow class
  RadVec a;                    // per A pair
  std::vector<int> epsilon;    // ±1 per node
  RatVec X;                    // per arrow class

  NiceDiagram diagram() const;
  /// Timelike index string, e.g. "135".
  std::string signature_str() const;
};

/// Element (delta, f) of Z_2^n ⋊ S_n acting on records as in the equivalence
/// of nondiagonal solutions.
struct GroupElement {
  std::vector<int> delta;  // ±1 per node
  Permutation perm;
};

SolutionRecord apply_group(const SolutionRecord& rec, const GroupElement& g);

/// Deterministic serialization; epsilon optionally excluded (the row level).
std::string record_key(const SolutionRecord& rec, bool include_epsilon);

/// Canonical form: minimal serialized image over Z_2^n x S_n for n <= 6, and
/// over Z_2^n x Aut(Δ) for larger n. Returns the minimizing image.
SolutionRecord canonical_record(const SolutionRecord& rec, bool include_epsilon);
std::string canonical_record_key(const SolutionRecord& rec, bool include_epsilon);

/// One representative per orbit of Z_2^n ⋊ Aut(Δ)^A; input records must share
/// one diagram and one A. Deterministic section, idempotent.
std::vector<SolutionRecord> orbit_reduce(const std::vector<SolutionRecord>& records);

/// Right-hand side of the X equation: (1/(2 Tr D)) tM X = [-1 - Σ A] +
/// Σ A_j^i (e_i - e_j) + lambda, returned as the vector b with tM X = b.
RatVec x_rhs(int n, const IndexSet& A, const RatVec& A_values, const RatVec& lambda,
             const Rational& trace);

/// Solution set of the transpose system; nullopt when inconsistent.
std::optional<RatAffineSet> compute_X(const NiceDiagram& d, const NondiagonalTriple& t);

struct StructureSolutions {
  std::vector<std::pair<RadVec, RadVec>> solutions;  // (c, a) sign assignments
  bool jacobi_possible = false;  // some c-sign choice satisfies Jacobi
};
/// Magnitudes from |c_I|^2 = |x_I|, |a_ji|^2 = |2 A_j^i Tr D|; exhaustive sign
/// enumeration filtered by the exact Jacobi and derivation checks.
/// Precondition: all x_I nonzero.
StructureSolutions solve_structure(const NiceDiagram& d, const NondiagonalTriple& t,
                                   const RatVec& X);

/// All ±1 signatures with M_2 logsign(eps) = logsign(X) and
/// eps_i eps_j = sign(A_j^i Tr D); empty when inconsistent.
std::vector<std::vector<int>> solve_epsilon(const NiceDiagram& d, const IndexSet& A,
                                            const F2Vec& pair_sign_bits, const F2Vec& x_sign_bits);
std::vector<std::vector<int>> solve_epsilon(const NiceDiagram& d, const NondiagonalTriple& t,
                                            const RatVec& X);

/// Resolution of a one-parameter family by squaring two-term derivation
/// constraints; each root is reported with its fate.
struct RootReport {
  RadExt t;                    // parameter value
  RadVec x_at_root;            // X(t), per arrow class
  std::string status;          // "resolved", "signature-inconsistent", ...
};
struct ConcreteBranch {
  NondiagonalTriple triple;
  RatVec X;
  int root_index = -1;  // into ResolveOutcome::roots
};
struct ResolveOutcome {
  std::vector<ConcreteBranch> concrete;
  std::vector<RootReport> roots;
  bool unresolved = false;
  std::string unresolved_reason;
  std::string rejection;  // nonempty when the whole branch is impossible
};
ResolveOutcome resolve_parameters(const NiceDiagram& d, const ParametricTriple& pt,
                                  const RatVec& X0, const RatVec& X1);

struct TableRow {
  SolutionRecord rep;                         // canonical row data (epsilon from first member)
  std::vector<std::vector<int>> signatures;   // admissible ±1 vectors, sorted
};

struct BranchLog {
  IndexSet A;
  std::string outcome;            // human-readable narrative
  std::string rejection;          // machine tag, empty when solutions exist
  std::vector<RootReport> roots;  // parametric branches only
  int record_count = 0;
};

struct DiagramResult {
  NiceDiagram diagram;
  bool skipped = false;
  std::string skip_reason;
  std::vector<BranchLog> branches;
  std::vector<SolutionRecord> section;  // reduced records, canonical order
  std::vector<TableRow> rows;
  std::vector<std::string> unresolved;
};

struct ClassificationReport {
  std::vector<DiagramResult> diagrams;
  int total_rows() const;
  int total_records() const;
  std::vector<std::string> all_unresolved() const;
};

struct AlgoOptions {
  bool require_surjective = false;
  bool require_unique_A = false;
  int threads = 1;
};

ClassificationReport run_algorithm1(const std::vector<NiceDiagram>& diagrams,
                                    const AlgoOptions& opt = {});

}  // namespace solvclass
