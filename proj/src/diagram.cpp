#include "solvclass/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace solvclass {

namespace {

std::string arrow_str(int i, int j, int k) {
  return std::to_string(i) + "-" + std::to_string(j) + ">" + std::to_string(k);
}

// Acyclicity of the node relation {i -> k : some arrow}.
bool relation_is_acyclic(int n, const std::vector<Arrow>& classes) {
  std::vector<std::vector<int>> adj(n + 1);
  for (const Arrow& a : classes) {
    adj[a.i].push_back(a.k);
    adj[a.j].push_back(a.k);
  }
  std::vector<int> state(n + 1, 0);  // 0 unvisited, 1 on stack, 2 done
  std::vector<int> stack;
  for (int start = 1; start <= n; ++start) {
    if (state[start]) continue;
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      if (state[v] == 0) {
        state[v] = 1;
        for (int w : adj[v]) {
          if (state[w] == 1) return false;
          if (state[w] == 0) stack.push_back(w);
        }
      } else {
        if (state[v] == 1) state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

// Necessary Jacobi condition on the diagram: for each triple {a,b,c} and each
// landing node m, among the composition chains [[a,b],c], [[b,c],a], [[c,a],b]
// that reach e_m, a single chain cannot cancel.
std::optional<ValidationIssue> check_jacobi_compatible(int n, const NiceDiagram& d) {
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        std::map<int, int> chains;  // landing node -> chain count
        const std::array<std::array<int, 3>, 3> cyc = {{{a, b, c}, {b, c, a}, {c, a, b}}};
        for (const auto& [x, y, z] : cyc) {
          auto p = d.target(x, y);
          if (!p || *p == z) continue;
          auto m = d.target(*p, z);
          if (m) chains[*m] += 1;
        }
        for (const auto& [m, count] : chains) {
          if (count == 1)
            return ValidationIssue{"jacobi-compatibility",
                                   "single uncancellable Jacobi chain on {" + std::to_string(a) +
                                       "," + std::to_string(b) + "," + std::to_string(c) +
                                       "} landing on " + std::to_string(m)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

NiceDiagram::NiceDiagram(int n, std::vector<Arrow> classes) : n_(n), classes_(std::move(classes)) {
  std::sort(classes_.begin(), classes_.end(),
            [](const Arrow& a, const Arrow& b) { return std::tie(a.k, a.i, a.j) < std::tie(b.k, b.i, b.j); });
}

std::variant<NiceDiagram, ValidationIssue> NiceDiagram::create(int n, std::vector<Arrow> classes) {
  if (n <= 0) return ValidationIssue{"node-count", "n must be positive"};
  for (Arrow& a : classes) {
    if (a.i > a.j) std::swap(a.i, a.j);
    if (a.i < 1 || a.j > n || a.k < 1 || a.k > n)
      return ValidationIssue{"index-range", arrow_str(a.i, a.j, a.k)};
    if (a.i == a.j || a.i == a.k || a.j == a.k)
      return ValidationIssue{"distinct-indices", arrow_str(a.i, a.j, a.k)};
  }
  // One target per pair.
  std::set<std::pair<int, int>> pairs;
  for (const Arrow& a : classes) {
    if (!pairs.insert({a.i, a.j}).second)
      return ValidationIssue{"unique-target",
                             "pair {" + std::to_string(a.i) + "," + std::to_string(a.j) +
                                 "} carries two arrows"};
  }
  // One label per (source, target).
  std::set<std::pair<int, int>> source_target;
  for (const Arrow& a : classes) {
    if (!source_target.insert({a.i, a.k}).second || !source_target.insert({a.j, a.k}).second)
      return ValidationIssue{"unique-label",
                             "two arrows from one source into " + std::to_string(a.k)};
  }
  if (!relation_is_acyclic(n, classes))
    return ValidationIssue{"acyclicity", "the node relation i -> k has a cycle"};
  NiceDiagram d(n, std::move(classes));
  if (auto issue = check_jacobi_compatible(n, d)) return *issue;
  return d;
}

std::variant<NiceDiagram, ValidationIssue> NiceDiagram::from_raw_arrows(
    int n, const std::vector<std::array<int, 3>>& arrows) {
  std::set<std::array<int, 3>> have(arrows.begin(), arrows.end());
  for (const auto& [i, j, k] : arrows) {
    if (!have.count({j, i, k}))
      return ValidationIssue{"symmetry",
                             "arrow " + arrow_str(i, j, k) + " lacks its mirror " + arrow_str(j, i, k)};
  }
  std::vector<Arrow> classes;
  for (const auto& [i, j, k] : arrows)
    if (i < j) classes.push_back({i, j, k});
  return create(n, std::move(classes));
}

std::optional<int> NiceDiagram::target(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const Arrow& a : classes_)
    if (a.i == i && a.j == j) return a.k;
  return std::nullopt;
}

bool NiceDiagram::has_arrow_between(int i, int j) const {
  for (const Arrow& a : classes_)
    if ((a.i == i || a.j == i) && a.k == j) return true;
  return false;
}

RatMatrix NiceDiagram::root_matrix() const {
  RatMatrix m(arrow_count(), n_);
  for (int r = 0; r < arrow_count(); ++r) {
    m.at(r, classes_[r].i - 1) = -1;
    m.at(r, classes_[r].j - 1) = -1;
    m.at(r, classes_[r].k - 1) = 1;
  }
  return m;
}

F2Matrix NiceDiagram::root_matrix_mod2() const {
  F2Matrix m(arrow_count(), n_);
  for (int r = 0; r < arrow_count(); ++r) {
    m.at(r, classes_[r].i - 1) ^= 1;
    m.at(r, classes_[r].j - 1) ^= 1;
    m.at(r, classes_[r].k - 1) ^= 1;
  }
  return m;
}

std::vector<RadExt> NiceDiagram::exp_root_action(const std::vector<RadExt>& g) const {
  for (const RadExt& v : g)
    if (v.is_zero()) throw std::domain_error("exp_root_action with zero entry");
  std::vector<RadExt> out;
  out.reserve(classes_.size());
  for (const Arrow& a : classes_)
    out.push_back(g[a.k - 1] * (g[a.i - 1] * g[a.j - 1]).inverse());
  return out;
}

RatVec NiceDiagram::exp_root_action(const RatVec& g) const {
  for (const Rational& v : g)
    if (v == 0) throw std::domain_error("exp_root_action with zero entry");
  RatVec out;
  out.reserve(classes_.size());
  for (const Arrow& a : classes_) out.push_back(g[a.k - 1] / (g[a.i - 1] * g[a.j - 1]));
  return out;
}

std::vector<Arrow> relabel_arrows(const std::vector<Arrow>& classes, const Permutation& perm) {
  std::vector<Arrow> out;
  out.reserve(classes.size());
  for (const Arrow& a : classes) {
    int i = perm[a.i - 1], j = perm[a.j - 1], k = perm[a.k - 1];
    if (i > j) std::swap(i, j);
    out.push_back({i, j, k});
  }
  std::sort(out.begin(), out.end(),
            [](const Arrow& a, const Arrow& b) { return std::tie(a.k, a.i, a.j) < std::tie(b.k, b.i, b.j); });
  return out;
}

NiceDiagram relabel(const NiceDiagram& d, const Permutation& perm) {
  auto res = NiceDiagram::create(d.n(), relabel_arrows(d.arrow_classes(), perm));
  return std::get<NiceDiagram>(res);
}

std::vector<Permutation> NiceDiagram::automorphism_group() const {
  // Invariant per node: (#classes as source, #classes as target, #arrows in).
  std::vector<std::array<int, 2>> inv(n_ + 1, {0, 0});
  for (const Arrow& a : classes_) {
    inv[a.i][0]++;
    inv[a.j][0]++;
    inv[a.k][1]++;
  }
  std::set<std::pair<std::pair<int, int>, int>> arrow_set;  // ((i,j),k)
  for (const Arrow& a : classes_) arrow_set.insert({{a.i, a.j}, a.k});

  std::vector<Permutation> result;
  Permutation perm(n_, 0);
  std::vector<bool> used(n_ + 1, false);

  auto partial_ok = [&](int depth) {
    // A pair with both endpoints assigned must map onto an arrow pair, and a
    // fully assigned class must map onto a class.
    for (const Arrow& a : classes_) {
      if (a.i > depth || a.j > depth) continue;
      int i = perm[a.i - 1], j = perm[a.j - 1];
      if (i > j) std::swap(i, j);
      auto t_img = target(i, j);
      if (!t_img) return false;
      if (a.k <= depth && *t_img != perm[a.k - 1]) return false;
    }
    (void)arrow_set;
    return true;
  };

  auto rec = [&](auto&& self, int node) -> void {
    if (node > n_) {
      result.push_back(perm);
      return;
    }
    for (int img = 1; img <= n_; ++img) {
      if (used[img] || inv[node] != inv[img]) continue;
      perm[node - 1] = img;
      used[img] = true;
      if (partial_ok(node)) self(self, node + 1);
      used[img] = false;
      perm[node - 1] = 0;
    }
  };
  rec(rec, 1);
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Arrow> NiceDiagram::canonical_form() const {
  Permutation perm(n_);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Arrow> best = relabel_arrows(classes_, perm);
  // Full minimum over S_n; enumeration only runs for small n.
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<Arrow> cand = relabel_arrows(classes_, perm);
    if (cand < best) best = cand;
  }
  return best;
}

std::vector<NiceDiagram> enumerate_diagrams(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > 5) throw std::invalid_argument("built-in enumeration is capped at n = 5; use diagram files");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});

  std::map<std::pair<int, std::vector<Arrow>>, NiceDiagram> by_canon;
  std::vector<Arrow> chosen;
  // used_st[(s-1)*n + t-1]: some arrow s -> t already present
  std::vector<bool> used_st(static_cast<std::size_t>(n) * n, false);

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == pairs.size()) {
      auto res = NiceDiagram::create(n, chosen);
      if (!std::holds_alternative<NiceDiagram>(res)) return;
      NiceDiagram d = std::get<NiceDiagram>(std::move(res));
      std::vector<Arrow> canon = d.canonical_form();
      std::pair<int, std::vector<Arrow>> key{static_cast<int>(canon.size()), canon};
      if (!by_canon.count(key)) {
        // keep the canonical representative itself
        by_canon.emplace(key, std::get<NiceDiagram>(NiceDiagram::create(n, canon)));
      }
      return;
    }
    auto [i, j] = pairs[idx];
    self(self, idx + 1);  // no arrow on this pair
    for (int k = 1; k <= n; ++k) {
      if (k == i || k == j) continue;
      std::size_t si = static_cast<std::size_t>(i - 1) * n + (k - 1);
      std::size_t sj = static_cast<std::size_t>(j - 1) * n + (k - 1);
      if (used_st[si] || used_st[sj]) continue;
      used_st[si] = used_st[sj] = true;
      chosen.push_back({i, j, k});
      self(self, idx + 1);
      chosen.pop_back();
      used_st[si] = used_st[sj] = false;
    }
  };
  rec(rec, 0);

  std::vector<NiceDiagram> out;
  out.reserve(by_canon.size());
  for (auto& [key, d] : by_canon) out.push_back(std::move(d));
  return out;
}

}  // namespace solvclass
