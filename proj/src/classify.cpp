#include "solvclass/classify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace solvclass {

NiceDiagram SolutionRecord::diagram() const {
  return std::get<NiceDiagram>(NiceDiagram::create(n, arrows));
}

std::string SolutionRecord::signature_str() const {
  std::string s;
  for (int i = 0; i < n; ++i)
    if (epsilon[i] < 0) s += std::to_string(i + 1);
  return s.empty() ? "-" : s;
}

std::string record_key(const SolutionRecord& rec, bool include_epsilon) {
  std::ostringstream os;
  os << rec.n << "|";
  for (const Arrow& ar : rec.arrows) os << ar.i << "," << ar.j << "," << ar.k << ";";
  os << "|L:";
  for (const Rational& l : rec.lambda) os << rational_str(l) << ",";
  os << "|A:";
  for (const Pair& p : rec.A.pairs) os << p.first << "," << p.second << ";";
  os << "|Av:";
  for (const Rational& v : rec.A_values) os << rational_str(v) << ",";
  os << "|a:";
  for (const RadExt& v : rec.a) os << v.str_ascii() << ",";
  os << "|c:";
  for (const RadExt& v : rec.c) os << v.str_ascii() << ",";
  if (include_epsilon) {
    os << "|e:";
    for (int e : rec.epsilon) os << (e < 0 ? '-' : '+');
  }
  return os.str();
}

SolutionRecord apply_group(const SolutionRecord& rec, const GroupElement& g) {
  int n = rec.n;
  const Permutation& sigma = g.perm;
  SolutionRecord out;
  out.n = n;
  out.lambda.assign(n, Rational(0));
  out.epsilon.assign(n, 1);
  for (int i = 0; i < n; ++i) {
    out.lambda[sigma[i] - 1] = rec.lambda[i];
    out.epsilon[sigma[i] - 1] = rec.epsilon[i];
  }

  // arrow classes with attached data, re-sorted into (k, i, j) order
  struct Entry {
    Arrow ar;
    RadExt c;
    Rational x;
  };
  std::vector<Entry> entries;
  for (std::size_t idx = 0; idx < rec.arrows.size(); ++idx) {
    const Arrow& ar = rec.arrows[idx];
    int i = sigma[ar.i - 1], j = sigma[ar.j - 1], k = sigma[ar.k - 1];
    if (i > j) std::swap(i, j);
    Rational sign_c(g.delta[ar.i - 1] * g.delta[ar.j - 1] * g.delta[ar.k - 1]);
    entries.push_back({{i, j, k}, sign_c * rec.c[idx], rec.X.empty() ? Rational(0) : rec.X[idx]});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.ar.k, a.ar.i, a.ar.j) < std::tie(b.ar.k, b.ar.i, b.ar.j);
  });
  for (const Entry& e : entries) {
    out.arrows.push_back(e.ar);
    out.c.push_back(e.c);
    if (!rec.X.empty()) out.X.push_back(e.x);
  }

  struct PairEntry {
    Pair p;
    Rational av;
    RadExt a;
  };
  std::vector<PairEntry> pairs;
  for (std::size_t idx = 0; idx < rec.A.pairs.size(); ++idx) {
    const Pair& p = rec.A.pairs[idx];
    Pair img{sigma[p.first - 1], sigma[p.second - 1]};
    Rational sign_a(g.delta[p.first - 1] * g.delta[p.second - 1]);
    pairs.push_back({img, rec.A_values[idx], sign_a * rec.a[idx]});
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const PairEntry& a, const PairEntry& b) { return a.p < b.p; });
  for (const PairEntry& e : pairs) {
    out.A.pairs.push_back(e.p);
    out.A_values.push_back(e.av);
    out.a.push_back(e.a);
  }
  return out;
}

namespace {

std::vector<Permutation> canonicalization_perms(const SolutionRecord& rec) {
  if (rec.n <= 6) {
    std::vector<Permutation> perms;
    Permutation p(rec.n);
    std::iota(p.begin(), p.end(), 1);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return perms;
  }
  return rec.diagram().automorphism_group();
}

template <typename Fn>
void for_each_group_element(const SolutionRecord& rec, const std::vector<Permutation>& perms,
                            Fn&& fn) {
  int n = rec.n;
  std::vector<int> delta(n, 1);
  for (const Permutation& sigma : perms) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      for (int i = 0; i < n; ++i) delta[i] = (mask >> i & 1) ? -1 : 1;
      fn(GroupElement{delta, sigma});
    }
  }
}

}  // namespace

SolutionRecord canonical_record(const SolutionRecord& rec, bool include_epsilon) {
  std::vector<Permutation> perms = canonicalization_perms(rec);
  SolutionRecord best = rec;
  std::string best_key = record_key(rec, include_epsilon);
  for_each_group_element(rec, perms, [&](const GroupElement& g) {
    SolutionRecord cand = apply_group(rec, g);
    std::string key = record_key(cand, include_epsilon);
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(cand);
    }
  });
  return best;
}

std::string canonical_record_key(const SolutionRecord& rec, bool include_epsilon) {
  return record_key(canonical_record(rec, include_epsilon), include_epsilon);
}

std::vector<SolutionRecord> orbit_reduce(const std::vector<SolutionRecord>& records) {
  if (records.empty()) return {};
  std::vector<Permutation> aut = records.front().diagram().automorphism_group();

  std::vector<SolutionRecord> sorted = records;
  std::sort(sorted.begin(), sorted.end(), [](const SolutionRecord& a, const SolutionRecord& b) {
    return record_key(a, true) < record_key(b, true);
  });

  std::set<std::string> covered;
  std::vector<SolutionRecord> section;
  for (const SolutionRecord& rec : sorted) {
    if (covered.count(record_key(rec, true))) continue;
    section.push_back(rec);
    for_each_group_element(rec, aut, [&](const GroupElement& g) {
      covered.insert(record_key(apply_group(rec, g), true));
    });
  }
  return section;
}

RatVec x_rhs(int n, const IndexSet& A, const RatVec& A_values, const RatVec& lambda,
             const Rational& trace) {
  Rational sum_A(0);
  for (const Rational& v : A_values) sum_A += v;
  RatVec rhs(n, Rational(-1) - sum_A);
  for (std::size_t p = 0; p < A.pairs.size(); ++p) {
    rhs[A.pairs[p].first - 1] += A_values[p];
    rhs[A.pairs[p].second - 1] -= A_values[p];
  }
  for (int i = 0; i < n; ++i) {
    rhs[i] += lambda[i];
    rhs[i] *= 2 * trace;
  }
  return rhs;
}

namespace {

// Direction term of the rhs for a one-parameter A family (no constant, no
// lambda contribution).
RatVec x_rhs_direction(int n, const IndexSet& A, const RatVec& A1, const Rational& trace) {
  Rational sum_A(0);
  for (const Rational& v : A1) sum_A += v;
  RatVec rhs(n, -sum_A);
  for (std::size_t p = 0; p < A.pairs.size(); ++p) {
    rhs[A.pairs[p].first - 1] += A1[p];
    rhs[A.pairs[p].second - 1] -= A1[p];
  }
  for (int i = 0; i < n; ++i) rhs[i] *= 2 * trace;
  return rhs;
}

}  // namespace

std::optional<RatAffineSet> compute_X(const NiceDiagram& d, const NondiagonalTriple& t) {
  RatVec b = x_rhs(d.n(), t.A, t.A_values, t.lambda, t.trace);
  return solve_affine(d.root_matrix().transposed(), b);
}

namespace {

struct JacobiSignEq {
  struct Term {
    int cls1, cls2;
    RadExt coeff;  // oriented magnitude product
  };
  std::vector<Term> terms;
  int max_class = 0;
};

std::vector<JacobiSignEq> jacobi_sign_equations(const NiceDiagram& d, const RadVec& mags) {
  int n = d.n();
  auto class_index = [&](int i, int j) -> int {
    if (i > j) std::swap(i, j);
    const auto& cls = d.arrow_classes();
    for (std::size_t idx = 0; idx < cls.size(); ++idx)
      if (cls[idx].i == i && cls[idx].j == j) return static_cast<int>(idx);
    return -1;
  };
  std::vector<JacobiSignEq> eqs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        std::map<int, std::vector<JacobiSignEq::Term>> by_landing;
        const std::array<std::array<int, 3>, 3> cyc = {{{i, j, k}, {j, k, i}, {k, i, j}}};
        for (const auto& [x, y, z] : cyc) {
          auto p = d.target(x, y);
          if (!p || *p == z) continue;
          auto m = d.target(*p, z);
          if (!m) continue;
          int c1 = class_index(x, y);
          int c2 = class_index(*p, z);
          int sign = (x < y ? 1 : -1) * (*p < z ? 1 : -1);
          by_landing[*m].push_back({c1, c2, Rational(sign) * (mags[c1] * mags[c2])});
        }
        for (auto& [m, terms] : by_landing) {
          JacobiSignEq eq{std::move(terms), 0};
          for (const auto& t : eq.terms) eq.max_class = std::max({eq.max_class, t.cls1, t.cls2});
          eqs.push_back(std::move(eq));
        }
      }
  return eqs;
}

}  // namespace

StructureSolutions solve_structure(const NiceDiagram& d, const NondiagonalTriple& t,
                                   const RatVec& X) {
  int m = d.arrow_count();
  int k = static_cast<int>(t.A.pairs.size());

  RadVec c_mag(m), a_mag(k);
  for (int idx = 0; idx < m; ++idx) c_mag[idx] = RadExt::sqrt_of(abs(X[idx]));
  for (int p = 0; p < k; ++p) a_mag[p] = RadExt::sqrt_of(abs(2 * t.A_values[p] * t.trace));

  std::vector<JacobiSignEq> eqs = jacobi_sign_equations(d, c_mag);
  std::vector<std::vector<const JacobiSignEq*>> by_max(m + 1);
  for (const JacobiSignEq& eq : eqs) by_max[eq.max_class].push_back(&eq);

  StructureSolutions out;
  std::vector<int> signs(m, 1);
  std::vector<std::vector<int>> c_sign_solutions;
  auto dfs = [&](auto&& self, int cls) -> void {
    if (cls == m) {
      c_sign_solutions.push_back(signs);
      return;
    }
    for (int s : {1, -1}) {
      signs[cls] = s;
      bool ok = true;
      for (const JacobiSignEq* eq : by_max[cls]) {
        RadExt sum;
        for (const auto& term : eq->terms)
          sum += Rational(signs[term.cls1] * signs[term.cls2]) * term.coeff;
        if (!sum.is_zero()) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, cls + 1);
    }
  };
  dfs(dfs, 0);
  out.jacobi_possible = !c_sign_solutions.empty();

  RatVec ones(d.n(), Rational(1));
  for (const std::vector<int>& cs : c_sign_solutions) {
    RadVec c(m);
    for (int idx = 0; idx < m; ++idx) c[idx] = Rational(cs[idx]) * c_mag[idx];
    MetricLieAlgebra L = MetricLieAlgebra::from_diagram(d, c, ones);
    for (unsigned amask = 0; amask < (1u << k); ++amask) {
      RadVec a(k);
      RadMatrix D(d.n(), d.n());
      for (int i = 0; i < d.n(); ++i) D.at(i, i) = RadExt(t.lambda[i]);
      for (int p = 0; p < k; ++p) {
        a[p] = Rational((amask >> p & 1) ? -1 : 1) * a_mag[p];
        D.at(t.A.pairs[p].second - 1, t.A.pairs[p].first - 1) = a[p];
      }
      if (!is_derivation(L, D)) out.solutions.push_back({c, a});
    }
  }
  return out;
}

std::vector<std::vector<int>> solve_epsilon(const NiceDiagram& d, const IndexSet& A,
                                            const F2Vec& pair_sign_bits,
                                            const F2Vec& x_sign_bits) {
  int n = d.n();
  int m = d.arrow_count();
  int k = static_cast<int>(A.pairs.size());
  F2Matrix sys(m + k, n);
  F2Vec rhs(m + k, 0);
  F2Matrix m2 = d.root_matrix_mod2();
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) sys.at(r, c) = m2.at(r, c);
    rhs[r] = x_sign_bits[r];
  }
  for (int p = 0; p < k; ++p) {
    sys.at(m + p, A.pairs[p].first - 1) ^= 1;
    sys.at(m + p, A.pairs[p].second - 1) ^= 1;
    rhs[m + p] = pair_sign_bits[p];
  }
  auto sol = f2_solve_affine(sys, rhs);
  std::vector<std::vector<int>> out;
  if (!sol) return out;
  for (const F2Vec& bits : sol->enumerate()) {
    std::vector<int> eps(n);
    for (int i = 0; i < n; ++i) eps[i] = bits[i] ? -1 : 1;
    out.push_back(std::move(eps));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> solve_epsilon(const NiceDiagram& d, const NondiagonalTriple& t,
                                            const RatVec& X) {
  RatVec pair_vals;
  for (const Rational& av : t.A_values) pair_vals.push_back(av * t.trace);
  return solve_epsilon(d, t.A, logsign(pair_vals), logsign(X));
}

namespace {

// quadratic c0 + c1 t + c2 t^2
using Quad = std::array<Rational, 3>;

Quad affine_product(const Rational& p0, const Rational& p1, const Rational& q0,
                    const Rational& q1) {
  return {p0 * q0, p0 * q1 + p1 * q0, p1 * q1};
}

bool quad_is_zero(const Quad& q) { return q[0] == 0 && q[1] == 0 && q[2] == 0; }

std::vector<RadExt> quad_roots(const Quad& q) {
  std::vector<RadExt> roots;
  if (q[2] != 0) {
    Rational disc = q[1] * q[1] - 4 * q[2] * q[0];
    if (disc < 0) return roots;
    RadExt sq = RadExt::sqrt_of(disc);
    Rational scale = Rational(1) / (2 * q[2]);
    roots.push_back(RadExt(-q[1] * scale) + RadExt(Rational(scale)) * sq);
    if (disc != 0) roots.push_back(RadExt(-q[1] * scale) - RadExt(Rational(scale)) * sq);
  } else if (q[1] != 0) {
    roots.push_back(RadExt(-q[0] / q[1]));
  }
  return roots;
}

}  // namespace

ResolveOutcome resolve_parameters(const NiceDiagram& d, const ParametricTriple& pt,
                                  const RatVec& X0, const RatVec& X1) {
  ResolveOutcome out;
  if (pt.free_parameters != 1) {
    out.unresolved = true;
    out.unresolved_reason = std::to_string(pt.free_parameters) + " free parameters";
    return out;
  }
  std::vector<std::vector<DerivationTerm>> eqs = derivation_equations(d, pt.A);
  for (const auto& eq : eqs) {
    if (eq.size() == 1) {
      // c * a = 0 with both factors required nonzero
      out.unresolved = false;
      out.unresolved_reason.clear();
      out.concrete.clear();
      out.roots.clear();
      out.rejection = "derivation-forces-zero";
      return out;
    }
  }

  // Squared two-term constraints |x_I A_P| = |x_J A_Q| become a pair of
  // quadratics; an equation pins the parameter when neither side is the zero
  // polynomial.
  std::vector<RadExt> candidates;
  std::vector<std::pair<Quad, Quad>> two_term;  // (F, G) products
  bool pinned = false;
  for (const auto& eq : eqs) {
    if (eq.size() != 2) continue;
    const auto& [cls1, p1] = eq[0];
    const auto& [cls2, p2] = eq[1];
    Quad F = affine_product(X0[cls1], X1[cls1], pt.A0[p1], pt.A1[p1]);
    Quad G = affine_product(X0[cls2], X1[cls2], pt.A0[p2], pt.A1[p2]);
    two_term.push_back({F, G});
    Quad diff{F[0] - G[0], F[1] - G[1], F[2] - G[2]};
    Quad sum{F[0] + G[0], F[1] + G[1], F[2] + G[2]};
    if (quad_is_zero(diff) || quad_is_zero(sum)) continue;  // vacuous equation
    pinned = true;
    for (const RadExt& r : quad_roots(diff)) candidates.push_back(r);
    for (const RadExt& r : quad_roots(sum)) candidates.push_back(r);
  }
  if (!pinned) {
    out.unresolved = true;
    out.unresolved_reason = two_term.empty()
                                ? "no two-term derivation constraint to rationalize"
                                : "derivation constraints hold identically; continuous family";
    return out;
  }

  std::vector<RadExt> unique_roots;
  for (const RadExt& r : candidates)
    if (std::find(unique_roots.begin(), unique_roots.end(), r) == unique_roots.end())
      unique_roots.push_back(r);
  std::sort(unique_roots.begin(), unique_roots.end());

  int m = d.arrow_count();
  int k = static_cast<int>(pt.A.pairs.size());
  for (const RadExt& t : unique_roots) {
    RatVec x_t(m);
    std::vector<RadExt> xv(m), av(k);
    for (int idx = 0; idx < m; ++idx) xv[idx] = RadExt(X0[idx]) + RadExt(X1[idx]) * t;
    for (int p = 0; p < k; ++p) av[p] = RadExt(pt.A0[p]) + RadExt(pt.A1[p]) * t;

    // keep only common solutions of every two-term constraint
    bool all_hold = true;
    for (const auto& [F, G] : two_term) {
      RadExt f = RadExt(F[0]) + RadExt(F[1]) * t + RadExt(F[2]) * t * t;
      RadExt g = RadExt(G[0]) + RadExt(G[1]) * t + RadExt(G[2]) * t * t;
      if (f != g && f != -g) {
        all_hold = false;
        break;
      }
    }
    if (!all_hold) continue;

    RootReport report{t, xv, ""};
    bool zero_x = false, zero_a = false;
    for (const RadExt& x : xv) zero_x |= x.is_zero();
    for (const RadExt& a : av) zero_a |= a.is_zero();
    if (zero_x) {
      report.status = "zero-structure-constant";
      out.roots.push_back(std::move(report));
      continue;
    }
    if (zero_a) {
      report.status = "zero-A";
      out.roots.push_back(std::move(report));
      continue;
    }

    std::vector<RadExt> pair_signs(k);
    for (int p = 0; p < k; ++p) pair_signs[p] = RadExt(pt.trace) * av[p];
    auto eps = solve_epsilon(d, pt.A, logsign(pair_signs), logsign(xv));
    if (eps.empty()) {
      report.status = "signature-inconsistent";
      out.roots.push_back(std::move(report));
      continue;
    }

    if (!t.is_rational()) {
      report.status = "irrational-unresolved";
      out.roots.push_back(std::move(report));
      continue;
    }

    Rational tq = t.rational_value();
    NondiagonalTriple concrete;
    concrete.A = pt.A;
    concrete.lambda = pt.lambda;
    concrete.trace = pt.trace;
    for (int p = 0; p < k; ++p) concrete.A_values.push_back(Rational(pt.A0[p] + pt.A1[p] * tq));
    for (int idx = 0; idx < m; ++idx) x_t[idx] = Rational(X0[idx] + X1[idx] * tq);
    report.status = "resolved";
    out.roots.push_back(std::move(report));
    out.concrete.push_back(
        {std::move(concrete), std::move(x_t), static_cast<int>(out.roots.size()) - 1});
  }
  return out;
}

namespace {

std::vector<SolutionRecord> make_records(const NiceDiagram& d, const NondiagonalTriple& t,
                                         const RatVec& X, const StructureSolutions& structure,
                                         const std::vector<std::vector<int>>& epsilons) {
  std::vector<SolutionRecord> records;
  for (const auto& [c, a] : structure.solutions) {
    for (const auto& eps : epsilons) {
      SolutionRecord rec;
      rec.n = d.n();
      rec.arrows = d.arrow_classes();
      rec.A = t.A;
      rec.lambda = t.lambda;
      rec.A_values = t.A_values;
      rec.c = c;
      rec.a = a;
      rec.epsilon = eps;
      rec.X = X;
      records.push_back(std::move(rec));
    }
  }
  return records;
}

// Runs the concrete tail of the pipeline: zero-x check, signatures, signed
// structure constants. Fills `rejection` when empty-handed.
std::vector<SolutionRecord> process_concrete(const NiceDiagram& d, const NondiagonalTriple& t,
                                             const RatVec& X, std::string& rejection,
                                             std::string& narrative) {
  for (const Rational& x : X) {
    if (x == 0) {
      rejection = "zero-structure-constant";
      narrative = "some x_I = 0: no nice Lie algebra with nonzero constants realizes the diagram";
      return {};
    }
  }
  auto epsilons = solve_epsilon(d, t, X);
  if (epsilons.empty()) {
    rejection = "signature-inconsistent";
    narrative = "the mod-2 signature system is inconsistent";
    return {};
  }
  StructureSolutions structure = solve_structure(d, t, X);
  if (structure.solutions.empty()) {
    rejection = structure.jacobi_possible ? "derivation-fail" : "jacobi-fail";
    narrative = structure.jacobi_possible
                    ? "no sign assignment makes D a derivation"
                    : "no sign assignment satisfies the Jacobi identity";
    return {};
  }
  narrative = "solutions";
  return make_records(d, t, X, structure, epsilons);
}

std::string pairs_str(const IndexSet& A) {
  std::string s = "{";
  for (std::size_t i = 0; i < A.pairs.size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(A.pairs[i].first) + "," + std::to_string(A.pairs[i].second) + ")";
  }
  return s + "}";
}

DiagramResult process_diagram(const NiceDiagram& d, const AlgoOptions& opt) {
  DiagramResult res{d, false, "", {}, {}, {}, {}};
  RatMatrix M = d.root_matrix();
  bool surjective = rank(M) == M.rows;
  if (opt.require_surjective && !surjective) {
    res.skipped = true;
    res.skip_reason = "root matrix not surjective";
    return res;
  }

  std::vector<SolutionRecord> section_all;
  for (const IndexSet& A : candidate_index_sets(d)) {
    BranchLog log;
    log.A = A;
    std::vector<SolutionRecord> branch_records;
    TripleOutcome outcome = solve_lambda_A(d, A);

    if (auto* rej = std::get_if<TripleRejection>(&outcome)) {
      switch (rej->reason) {
        case TripleRejection::Reason::ZeroTrace:
          log.rejection = "zero-trace";
          break;
        case TripleRejection::Reason::ZeroA:
          log.rejection = "zero-A";
          break;
        case TripleRejection::Reason::NoSolution:
          log.rejection = "no-solution";
          break;
      }
      log.outcome = "rejected: " + rej->detail;
    } else if (auto* triple = std::get_if<NondiagonalTriple>(&outcome)) {
      auto X = compute_X(d, *triple);
      if (!X) {
        log.rejection = "x-inconsistent";
        log.outcome = "rejected: no X solves the transpose system";
      } else if (!X->unique()) {
        log.rejection = "unresolved-x-family";
        log.outcome = "unresolved: X not unique (root matrix not surjective)";
        res.unresolved.push_back("A=" + pairs_str(A) + ": " + log.outcome);
      } else {
        branch_records = process_concrete(d, *triple, X->particular, log.rejection, log.outcome);
      }
    } else {
      const auto& pt = std::get<ParametricTriple>(outcome);
      if (opt.require_unique_A) {
        log.rejection = "skipped-by-flag";
        log.outcome = "skipped: A not uniquely determined (--require-unique-A)";
      } else if (pt.free_parameters > 1) {
        log.rejection = "unresolved-parametric";
        log.outcome = "unresolved: " + std::to_string(pt.free_parameters) + " free parameters";
        res.unresolved.push_back("A=" + pairs_str(A) + ": " + log.outcome);
      } else {
        RatMatrix tM = M.transposed();
        RatVec b0 = x_rhs(d.n(), pt.A, pt.A0, pt.lambda, pt.trace);
        RatVec b1 = x_rhs_direction(d.n(), pt.A, pt.A1, pt.trace);
        auto sol0 = solve_affine(tM, b0);
        auto sol1 = solve_affine(tM, b1);
        if (!sol0 || !sol1) {
          log.rejection = "x-inconsistent";
          log.outcome = "rejected: no X solves the transpose system";
        } else if (!sol0->unique() || !sol1->unique()) {
          log.rejection = "unresolved-x-family";
          log.outcome = "unresolved: parametric X family (root matrix not surjective)";
          res.unresolved.push_back("A=" + pairs_str(A) + ": " + log.outcome);
        } else {
          ResolveOutcome ro = resolve_parameters(d, pt, sol0->particular, sol1->particular);
          log.roots = ro.roots;
          if (!ro.rejection.empty()) {
            log.rejection = ro.rejection;
            log.outcome = "rejected: a derivation constraint forces a zero product";
          } else if (ro.unresolved) {
            log.rejection = "unresolved-parametric";
            log.outcome = "unresolved: " + ro.unresolved_reason;
            res.unresolved.push_back("A=" + pairs_str(A) + ": " + log.outcome);
          } else {
            for (const ConcreteBranch& cb : ro.concrete) {
              std::string rej, narr;
              auto recs = process_concrete(d, cb.triple, cb.X, rej, narr);
              if (recs.empty())
                log.roots[cb.root_index].status = rej;
              else
                branch_records.insert(branch_records.end(), recs.begin(), recs.end());
            }
            for (const RootReport& rr : log.roots)
              if (rr.status == "irrational-unresolved")
                res.unresolved.push_back("A=" + pairs_str(A) +
                                         ": irrational root t=" + rr.t.str_ascii() +
                                         " outside the rational model");
            log.outcome = branch_records.empty() ? "no root survives" : "solutions";
            if (branch_records.empty() && log.rejection.empty()) log.rejection = "no-root-survives";
          }
        }
      }
    }

    std::vector<SolutionRecord> section = orbit_reduce(branch_records);
    log.record_count = static_cast<int>(section.size());
    if (!section.empty() && log.outcome.empty()) log.outcome = "solutions";
    res.branches.push_back(std::move(log));
    section_all.insert(section_all.end(), section.begin(), section.end());
  }
  res.section = std::move(section_all);

  // Table rows: group the section by the epsilon-free canonical form.
  std::map<std::string, TableRow> rows;
  for (const SolutionRecord& rec : res.section) {
    SolutionRecord canon = canonical_record(rec, false);
    std::string key = record_key(canon, false);
    auto it = rows.find(key);
    if (it == rows.end()) {
      TableRow row;
      row.rep = canon;
      row.signatures.push_back(canon.epsilon);
      rows.emplace(key, std::move(row));
    } else {
      it->second.signatures.push_back(canon.epsilon);
    }
  }
  for (auto& [key, row] : rows) {
    std::sort(row.signatures.begin(), row.signatures.end());
    row.signatures.erase(std::unique(row.signatures.begin(), row.signatures.end()),
                         row.signatures.end());
    res.rows.push_back(std::move(row));
  }
  return res;
}

}  // namespace

int ClassificationReport::total_rows() const {
  int t = 0;
  for (const DiagramResult& d : diagrams) t += static_cast<int>(d.rows.size());
  return t;
}

int ClassificationReport::total_records() const {
  int t = 0;
  for (const DiagramResult& d : diagrams) t += static_cast<int>(d.section.size());
  return t;
}

std::vector<std::string> ClassificationReport::all_unresolved() const {
  std::vector<std::string> out;
  for (const DiagramResult& d : diagrams)
    for (const std::string& u : d.unresolved) out.push_back(u);
  return out;
}

ClassificationReport run_algorithm1(const std::vector<NiceDiagram>& diagrams,
                                    const AlgoOptions& opt) {
  std::vector<std::optional<DiagramResult>> results(diagrams.size());
  int threads = std::max(1, opt.threads);
  if (threads <= 1) {
    for (std::size_t i = 0; i < diagrams.size(); ++i)
      results[i] = process_diagram(diagrams[i], opt);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= diagrams.size()) break;
        results[i] = process_diagram(diagrams[i], opt);
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  ClassificationReport report;
  for (auto& r : results) report.diagrams.push_back(std::move(*r));
  return report;
}

}  // namespace solvclass
