#include "solvclass/triple.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace solvclass {

namespace {

// f_ij(v) = sum(v) - (v_i - v_j), the defect of condition N5.
Rational n5_defect(const RatVec& v, const Pair& p) {
  Rational s(0);
  for (const Rational& x : v) s += x;
  return s - v[p.first - 1] + v[p.second - 1];
}

int find_class_index(const NiceDiagram& d, int i, int j) {
  if (i > j) std::swap(i, j);
  const auto& cls = d.arrow_classes();
  for (std::size_t idx = 0; idx < cls.size(); ++idx)
    if (cls[idx].i == i && cls[idx].j == j) return static_cast<int>(idx);
  return -1;
}

struct SupportTerm {
  int arrow_class;
  Pair entry;  // (i, j): D e_i ∋ d e_j
};

// Equations over all offdiagonal entries of a generic derivation, one per
// (bracket pair, landing node). Coefficients are single structure constants,
// nonzero for every algebra realizing the diagram.
std::vector<std::vector<SupportTerm>> support_equations(const NiceDiagram& d) {
  int n = d.n();
  std::vector<std::vector<SupportTerm>> eqs;
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      std::map<int, std::vector<SupportTerm>> by_landing;
      auto r = d.target(p, q);
      if (r) {
        int cls = find_class_index(d, p, q);
        for (int j = 1; j <= n; ++j)
          if (j != *r) by_landing[j].push_back({cls, {*r, j}});
      }
      for (int j = 1; j <= n; ++j) {
        if (j != p && j != q) {
          if (auto t = d.target(j, q)) {
            if (!r || *t != *r)
              by_landing[*t].push_back({find_class_index(d, j, q), {p, j}});
          }
          if (auto t = d.target(p, j)) {
            if (!r || *t != *r)
              by_landing[*t].push_back({find_class_index(d, p, j), {q, j}});
          }
        }
      }
      for (auto& [u, terms] : by_landing) eqs.push_back(std::move(terms));
    }
  }
  return eqs;
}

}  // namespace

DerivationSupport derivation_support(const NiceDiagram& d) {
  int n = d.n();
  auto eqs = support_equations(d);
  std::set<Pair> alive;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) alive.insert({i, j});

  // Fixpoint: an equation reduced to a single live term forces that entry to
  // zero (its coefficient is a nonzero structure constant).
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& eq : eqs) {
      Pair last{0, 0};
      int live = 0;
      for (const SupportTerm& t : eq) {
        if (alive.count(t.entry)) {
          ++live;
          last = t.entry;
        }
      }
      if (live == 1) {
        alive.erase(last);
        changed = true;
      }
    }
  }

  // Residual two-term equations tie their entries together: one is nonzero
  // iff the other is.
  std::map<Pair, Pair> parent;
  for (const Pair& p : alive) parent[p] = p;
  auto find = [&](Pair p) {
    while (parent[p] != p) p = parent[p] = parent[parent[p]];
    return p;
  };
  for (const auto& eq : eqs) {
    std::vector<Pair> live;
    for (const SupportTerm& t : eq)
      if (alive.count(t.entry)) live.push_back(t.entry);
    if (live.size() == 2) {
      Pair a = find(live[0]), b = find(live[1]);
      if (a != b) parent[a] = b;
    }
  }

  std::map<Pair, std::vector<Pair>> groups;
  for (const Pair& p : alive) groups[find(p)].push_back(p);
  DerivationSupport out;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.classes.push_back(std::move(members));
  }
  std::sort(out.classes.begin(), out.classes.end());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j && !alive.count({i, j})) out.eliminated.push_back({i, j});
  return out;
}

std::vector<IndexSet> candidate_index_sets(const NiceDiagram& d) {
  DerivationSupport support = derivation_support(d);

  // A support class is usable only if it satisfies N1-N3 internally: a pair
  // forced nonzero alongside an inadmissible one can never appear in 𝒜.
  std::vector<std::vector<Pair>> usable;
  for (const auto& cls : support.classes) {
    bool ok = true;
    std::set<int> indices;
    for (const Pair& p : cls) {
      if (d.has_arrow_between(p.first, p.second)) ok = false;  // N3
      if (!indices.insert(p.first).second) ok = false;         // N2
      if (!indices.insert(p.second).second) ok = false;
    }
    if (ok) usable.push_back(cls);
  }

  // Nonempty unions of usable classes with pairwise distinct indices.
  std::vector<IndexSet> all;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::size_t idx, std::set<int>& used) -> void {
    if (idx == usable.size()) {
      if (chosen.empty()) return;
      IndexSet s;
      for (int c : chosen)
        for (const Pair& p : usable[c]) s.pairs.push_back(p);
      std::sort(s.pairs.begin(), s.pairs.end());
      all.push_back(std::move(s));
      return;
    }
    self(self, idx + 1, used);
    bool clash = false;
    for (const Pair& p : usable[idx])
      if (used.count(p.first) || used.count(p.second)) clash = true;
    if (!clash) {
      for (const Pair& p : usable[idx]) {
        used.insert(p.first);
        used.insert(p.second);
      }
      chosen.push_back(static_cast<int>(idx));
      self(self, idx + 1, used);
      chosen.pop_back();
      for (const Pair& p : usable[idx]) {
        used.erase(p.first);
        used.erase(p.second);
      }
    }
  };
  std::set<int> used;
  rec(rec, 0, used);

  // One representative per Aut(Δ)-orbit: the lexicographically minimal image.
  std::vector<Permutation> aut = d.automorphism_group();
  std::set<std::vector<Pair>> reps;
  std::vector<IndexSet> out;
  for (const IndexSet& s : all) {
    std::vector<Pair> best = s.pairs;
    for (const Permutation& sigma : aut) {
      std::vector<Pair> img;
      img.reserve(s.pairs.size());
      for (const Pair& p : s.pairs) img.push_back({sigma[p.first - 1], sigma[p.second - 1]});
      std::sort(img.begin(), img.end());
      if (img < best) best = img;
    }
    if (reps.insert(best).second) out.push_back(IndexSet{best});
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.pairs.size() != b.pairs.size()) return a.pairs.size() < b.pairs.size();
    return a.pairs < b.pairs;
  });
  return out;
}

namespace {

RatVec combine(const std::vector<RatVec>& basis, const RatVec& coords) {
  RatVec v(basis.empty() ? 0 : basis[0].size(), Rational(0));
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += coords[b] * basis[b][i];
  return v;
}

Rational dot(const RatVec& x, const RatVec& y) {
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Rational vec_sum(const RatVec& x) {
  Rational s(0);
  for (const Rational& v : x) s += v;
  return s;
}

}  // namespace

TripleOutcome solve_lambda_A(const NiceDiagram& d, const IndexSet& A) {
  std::vector<RatVec> K = kernel_basis(d.root_matrix());
  int k = static_cast<int>(K.size());
  int na = static_cast<int>(A.pairs.size());

  // V = {lambda in ker M : f_ij(lambda) = 0}, in kernel coordinates.
  RatMatrix F(na, k);
  for (int r = 0; r < na; ++r)
    for (int b = 0; b < k; ++b) F.at(r, b) = n5_defect(K[b], A.pairs[r]);
  std::vector<RatVec> V_coords = kernel_basis(F);
  std::vector<RatVec> V;
  for (const RatVec& coords : V_coords) V.push_back(combine(K, coords));
  int n5 = static_cast<int>(V.size());

  // N4 on V pins lambda: sum(lambda*mu) = sum(mu) for mu in a basis of V, a
  // positive definite Gram system.
  RatVec lambda(d.n(), Rational(0));
  if (n5 > 0) {
    RatMatrix G(n5, n5);
    RatVec rhs(n5);
    for (int a = 0; a < n5; ++a) {
      for (int b = 0; b < n5; ++b) G.at(a, b) = dot(V[a], V[b]);
      rhs[a] = vec_sum(V[a]);
    }
    auto sol = solve_affine(G, rhs);
    if (!sol || !sol->unique())
      return TripleRejection{TripleRejection::Reason::NoSolution, lambda,
                             "degenerate Gram system on V"};
    lambda = combine(V, sol->particular);
  }

  Rational trace = vec_sum(lambda);
  if (trace == 0)
    return TripleRejection{TripleRejection::Reason::ZeroTrace, lambda, "Tr D = 0"};

  // Complement W of V inside ker M: extend the V-coordinate basis greedily by
  // standard kernel coordinates (deterministic).
  std::vector<RatVec> W_coords;
  int current_rank = n5;
  for (int b = 0; b < k && current_rank < k; ++b) {
    int cols = n5 + static_cast<int>(W_coords.size()) + 1;
    RatMatrix m2(k, cols);
    for (int r = 0; r < k; ++r) {
      for (int a = 0; a < n5; ++a) m2.at(r, a) = V_coords[a][r];
      for (std::size_t w = 0; w < W_coords.size(); ++w)
        m2.at(r, n5 + static_cast<int>(w)) = W_coords[w][r];
      m2.at(r, cols - 1) = (r == b) ? 1 : 0;
    }
    if (rank(m2) == cols) {
      RatVec coords(k, Rational(0));
      coords[b] = 1;
      W_coords.push_back(std::move(coords));
      current_rank = cols;
    }
  }
  std::vector<RatVec> W_vecs;
  for (const RatVec& coords : W_coords) W_vecs.push_back(combine(K, coords));
  int dim_w = static_cast<int>(W_vecs.size());

  // N4 on W: sum_ij f_ij(mu) A_j^i = Tr(lambda mu) - Tr(mu), one row per
  // generator of W. Rows are independent, so the system is always solvable.
  RatMatrix S(dim_w, na);
  RatVec rhs(dim_w);
  for (int w = 0; w < dim_w; ++w) {
    for (int p = 0; p < na; ++p) S.at(w, p) = n5_defect(W_vecs[w], A.pairs[p]);
    rhs[w] = dot(lambda, W_vecs[w]) - vec_sum(W_vecs[w]);
  }
  auto sol = solve_affine(S, rhs);
  if (!sol)
    return TripleRejection{TripleRejection::Reason::NoSolution, lambda,
                           "inconsistent system for A"};

  if (sol->unique()) {
    for (const Rational& v : sol->particular)
      if (v == 0)
        return TripleRejection{TripleRejection::Reason::ZeroA, lambda, "some A_j^i vanishes"};
    return NondiagonalTriple{A, lambda, sol->particular, trace};
  }

  ParametricTriple pt;
  pt.A = A;
  pt.lambda = lambda;
  pt.A0 = sol->particular;
  pt.A1 = sol->basis.front();
  pt.trace = trace;
  pt.free_parameters = static_cast<int>(sol->basis.size());
  pt.dim_V = n5;
  pt.dim_kernel = k;
  return pt;
}

RatVec nikolayevsky_diagonal(const NiceDiagram& d) {
  std::vector<RatVec> K = kernel_basis(d.root_matrix());
  int k = static_cast<int>(K.size());
  RatVec lambda(d.n(), Rational(0));
  if (k == 0) return lambda;
  RatMatrix G(k, k);
  RatVec rhs(k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) G.at(a, b) = dot(K[a], K[b]);
    rhs[a] = vec_sum(K[a]);
  }
  auto sol = solve_affine(G, rhs);
  if (!sol || !sol->unique()) throw std::logic_error("degenerate Gram matrix on ker M");
  return combine(K, sol->particular);
}

std::vector<std::vector<DerivationTerm>> derivation_equations(const NiceDiagram& d,
                                                              const IndexSet& A) {
  int n = d.n();
  std::vector<std::vector<DerivationTerm>> eqs;
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      std::map<int, std::vector<DerivationTerm>> by_landing;
      auto r = d.target(p, q);
      if (r) {
        for (std::size_t pi = 0; pi < A.pairs.size(); ++pi)
          if (A.pairs[pi].first == *r)
            by_landing[A.pairs[pi].second].push_back({find_class_index(d, p, q), static_cast<int>(pi)});
      }
      for (std::size_t pi = 0; pi < A.pairs.size(); ++pi) {
        auto [i, j] = A.pairs[pi];
        if (i == p && j != q) {
          if (auto t = d.target(j, q))
            by_landing[*t].push_back({find_class_index(d, j, q), static_cast<int>(pi)});
        }
        if (i == q && j != p) {
          if (auto t = d.target(p, j))
            by_landing[*t].push_back({find_class_index(d, p, j), static_cast<int>(pi)});
        }
      }
      for (auto& [u, terms] : by_landing) {
        std::sort(terms.begin(), terms.end());
        eqs.push_back(std::move(terms));
      }
    }
  }
  std::sort(eqs.begin(), eqs.end());
  eqs.erase(std::unique(eqs.begin(), eqs.end()), eqs.end());
  return eqs;
}

}  // namespace solvclass
