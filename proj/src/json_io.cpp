#include "solvclass/json_io.hpp"

namespace solvclass {

namespace {
const Int kJsonIntMax = (Int(1) << 53);
}

json int_to_json(const Int& v) {
  if (v < kJsonIntMax && v > -kJsonIntMax) return static_cast<std::int64_t>(v);
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::runtime_error("expected integer or integer string");
}

json rational_to_json(const Rational& q) { return rational_str(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::runtime_error("expected rational as string \"p/q\" or integer");
}

json radext_to_json(const RadExt& v) {
  json terms = json::array();
  for (const auto& [m, q] : v.terms())
    terms.push_back(json::array({int_to_json(m), int_to_json(numerator(q)), int_to_json(denominator(q))}));
  return terms;
}

RadExt radext_from_json(const json& j) {
  if (!j.is_array()) throw std::runtime_error("RadExt must be a list of triples");
  RadExt v;
  for (const json& t : j) {
    if (!t.is_array() || t.size() != 3)
      throw std::runtime_error("RadExt term must be [radicand, numerator, denominator]");
    Int m = int_from_json(t[0]);
    Int num = int_from_json(t[1]);
    Int den = int_from_json(t[2]);
    if (den == 0) throw std::runtime_error("zero denominator in RadExt term");
    v += RadExt::term(Rational(num, den), m);
  }
  return v;
}

json diagram_to_json(const NiceDiagram& d) {
  json arrows = json::array();
  for (const Arrow& a : d.arrow_classes()) arrows.push_back(json::array({a.i, a.j, a.k}));
  return json{{"n", d.n()}, {"arrows", arrows}};
}

NiceDiagram diagram_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("arrows"))
    throw std::runtime_error("diagram file needs fields \"n\" and \"arrows\"");
  int n = j.at("n").get<int>();
  std::vector<Arrow> classes;
  for (const json& a : j.at("arrows")) {
    if (!a.is_array() || a.size() != 3) throw std::runtime_error("arrow must be [i, j, k]");
    classes.push_back({a[0].get<int>(), a[1].get<int>(), a[2].get<int>()});
  }
  auto res = NiceDiagram::create(n, std::move(classes));
  if (auto* issue = std::get_if<ValidationIssue>(&res))
    throw std::runtime_error("invalid nice diagram (" + issue->axiom + "): " + issue->detail);
  return std::get<NiceDiagram>(std::move(res));
}

json record_to_json(const SolutionRecord& rec) {
  json j;
  j["diagram"] = json{{"n", rec.n}, {"arrows", json::array()}};
  for (const Arrow& a : rec.arrows) j["diagram"]["arrows"].push_back(json::array({a.i, a.j, a.k}));
  j["A"] = json::array();
  for (const Pair& p : rec.A.pairs) j["A"].push_back(json::array({p.first, p.second}));
  j["A_values"] = json::array();
  for (const Rational& v : rec.A_values) j["A_values"].push_back(rational_to_json(v));
  j["lambda"] = json::array();
  for (const Rational& v : rec.lambda) j["lambda"].push_back(rational_to_json(v));
  j["c"] = json::array();
  for (std::size_t i = 0; i < rec.arrows.size(); ++i)
    j["c"].push_back(json{{"arrow", json::array({rec.arrows[i].i, rec.arrows[i].j, rec.arrows[i].k})},
                          {"value", radext_to_json(rec.c[i])}});
  j["a"] = json::array();
  for (std::size_t i = 0; i < rec.A.pairs.size(); ++i)
    j["a"].push_back(json{{"pair", json::array({rec.A.pairs[i].first, rec.A.pairs[i].second})},
                          {"value", radext_to_json(rec.a[i])}});
  j["epsilon"] = rec.epsilon;
  j["X"] = json::array();
  for (const Rational& v : rec.X) j["X"].push_back(rational_to_json(v));
  return j;
}

SolutionRecord record_from_json(const json& j) {
  SolutionRecord rec;
  const json& dj = j.at("diagram");
  rec.n = dj.at("n").get<int>();
  for (const json& a : dj.at("arrows"))
    rec.arrows.push_back({a[0].get<int>(), a[1].get<int>(), a[2].get<int>()});
  std::sort(rec.arrows.begin(), rec.arrows.end(), [](const Arrow& a, const Arrow& b) {
    return std::tie(a.k, a.i, a.j) < std::tie(b.k, b.i, b.j);
  });
  for (const json& p : j.at("A")) rec.A.pairs.push_back({p[0].get<int>(), p[1].get<int>()});
  for (const json& v : j.at("A_values")) rec.A_values.push_back(rational_from_json(v));
  for (const json& v : j.at("lambda")) rec.lambda.push_back(rational_from_json(v));
  rec.c.assign(rec.arrows.size(), RadExt());
  for (const json& entry : j.at("c")) {
    const json& a = entry.at("arrow");
    Arrow key{a[0].get<int>(), a[1].get<int>(), a[2].get<int>()};
    bool found = false;
    for (std::size_t i = 0; i < rec.arrows.size(); ++i)
      if (rec.arrows[i] == key) {
        rec.c[i] = radext_from_json(entry.at("value"));
        found = true;
      }
    if (!found) throw std::runtime_error("structure constant for unknown arrow");
  }
  rec.a.assign(rec.A.pairs.size(), RadExt());
  for (const json& entry : j.at("a")) {
    const json& p = entry.at("pair");
    Pair key{p[0].get<int>(), p[1].get<int>()};
    bool found = false;
    for (std::size_t i = 0; i < rec.A.pairs.size(); ++i)
      if (rec.A.pairs[i] == key) {
        rec.a[i] = radext_from_json(entry.at("value"));
        found = true;
      }
    if (!found) throw std::runtime_error("offdiagonal entry for unknown pair");
  }
  for (const json& e : j.at("epsilon")) rec.epsilon.push_back(e.get<int>());
  if (j.contains("X"))
    for (const json& v : j.at("X")) rec.X.push_back(rational_from_json(v));
  if (rec.lambda.size() != static_cast<std::size_t>(rec.n) ||
      rec.epsilon.size() != static_cast<std::size_t>(rec.n) ||
      rec.A_values.size() != rec.A.pairs.size())
    throw std::runtime_error("inconsistent record field sizes");
  rec.diagram();  // validates the diagram
  return rec;
}

json algebra_to_json(const MetricLieAlgebra& L) {
  json j;
  j["n"] = L.n();
  j["metric"] = json::array();
  for (const Rational& g : L.metric()) j["metric"].push_back(rational_to_json(g));
  j["brackets"] = json::array();
  for (int i = 1; i <= L.n(); ++i)
    for (int jj = i + 1; jj <= L.n(); ++jj)
      for (int k = 1; k <= L.n(); ++k)
        if (!L.c(i, jj, k).is_zero())
          j["brackets"].push_back(
              json{{"i", i}, {"j", jj}, {"k", k}, {"c", radext_to_json(L.c(i, jj, k))}});
  return j;
}

MetricLieAlgebra algebra_from_json(const json& j) {
  int n = j.at("n").get<int>();
  RatVec metric;
  for (const json& g : j.at("metric")) metric.push_back(rational_from_json(g));
  MetricLieAlgebra L(n, metric);
  for (const json& b : j.at("brackets")) {
    int i = b.at("i").get<int>();
    int jj = b.at("j").get<int>();
    int k = b.at("k").get<int>();
    if (i < 1 || i > n || jj < 1 || jj > n || k < 1 || k > n || i == jj)
      throw std::runtime_error("bracket indices out of range");
    L.set_bracket(i, jj, k, radext_from_json(b.at("c")));
  }
  return L;
}

json report_to_json(const ClassificationReport& report) {
  json j;
  j["diagrams"] = json::array();
  for (const DiagramResult& dr : report.diagrams) {
    json dj;
    dj["diagram"] = diagram_to_json(dr.diagram);
    if (dr.skipped) {
      dj["skipped"] = dr.skip_reason;
      j["diagrams"].push_back(dj);
      continue;
    }
    dj["branches"] = json::array();
    for (const BranchLog& b : dr.branches) {
      json bj;
      bj["A"] = json::array();
      for (const Pair& p : b.A.pairs) bj["A"].push_back(json::array({p.first, p.second}));
      bj["outcome"] = b.outcome;
      if (!b.rejection.empty()) bj["rejection"] = b.rejection;
      if (!b.roots.empty()) {
        bj["roots"] = json::array();
        for (const RootReport& r : b.roots) {
          json rj;
          rj["t"] = radext_to_json(r.t);
          rj["x"] = json::array();
          for (const RadExt& x : r.x_at_root) rj["x"].push_back(radext_to_json(x));
          rj["status"] = r.status;
          bj["roots"].push_back(rj);
        }
      }
      bj["records"] = b.record_count;
      dj["branches"].push_back(bj);
    }
    dj["rows"] = json::array();
    for (const TableRow& row : dr.rows) {
      json rj;
      rj["record"] = record_to_json(row.rep);
      rj["signatures"] = json::array();
      for (const auto& eps : row.signatures) rj["signatures"].push_back(eps);
      dj["rows"].push_back(rj);
    }
    dj["section"] = json::array();
    for (const SolutionRecord& rec : dr.section) dj["section"].push_back(record_to_json(rec));
    dj["unresolved"] = dr.unresolved;
    j["diagrams"].push_back(dj);
  }
  j["totals"] = json{{"rows", report.total_rows()}, {"records", report.total_records()}};
  j["unresolved"] = report.all_unresolved();
  return j;
}

MetricLieAlgebra record_algebra(const SolutionRecord& rec) {
  RatVec metric;
  for (int e : rec.epsilon) metric.push_back(Rational(e));
  return MetricLieAlgebra::from_diagram(rec.diagram(), rec.c, metric);
}

RadMatrix record_derivation(const SolutionRecord& rec) {
  RadMatrix D(rec.n, rec.n);
  for (int i = 0; i < rec.n; ++i) D.at(i, i) = RadExt(rec.lambda[i]);
  for (std::size_t p = 0; p < rec.A.pairs.size(); ++p)
    D.at(rec.A.pairs[p].second - 1, rec.A.pairs[p].first - 1) = rec.a[p];
  return D;
}

}  // namespace solvclass
