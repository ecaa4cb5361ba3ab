#include "solvclass/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "solvclass/json_io.hpp"

namespace solvclass {

namespace {

std::string algebra_str(const SolutionRecord& rec) {
  std::ostringstream os;
  for (int k = 1; k <= rec.n; ++k) {
    if (k > 1) os << ", ";
    bool any = false;
    for (std::size_t idx = 0; idx < rec.arrows.size(); ++idx) {
      if (rec.arrows[idx].k != k) continue;
      if (any) os << " + ";
      os << rec.c[idx].str() << " e" << rec.arrows[idx].i << rec.arrows[idx].j;
      any = true;
    }
    if (!any) os << "0";
  }
  return os.str();
}

std::string derivation_str(const SolutionRecord& rec) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rec.n; ++i) {
    if (i) os << ", ";
    os << rational_str(rec.lambda[i]);
  }
  os << ")";
  for (std::size_t p = 0; p < rec.A.pairs.size(); ++p) {
    const RadExt& a = rec.a[p];
    std::string s = a.str();
    os << " + ";
    os << s << " e" << rec.A.pairs[p].first << "⊗e" << rec.A.pairs[p].second;
  }
  return os.str();
}

std::string signatures_str(const TableRow& row) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < row.signatures.size(); ++i) {
    if (i) os << ", ";
    std::string s;
    for (std::size_t b = 0; b < row.signatures[i].size(); ++b)
      if (row.signatures[i][b] < 0) s += std::to_string(b + 1);
    os << (s.empty() ? "-" : s);
  }
  os << "}";
  return os.str();
}

std::string arrows_str(const NiceDiagram& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.arrow_classes().size(); ++i) {
    const Arrow& a = d.arrow_classes()[i];
    if (i) os << ",";
    os << a.i << a.j << ">" << a.k;
  }
  if (d.arrow_classes().empty()) os << "-";
  return os.str();
}

void print_text_report(const ClassificationReport& report, std::ostream& out) {
  for (const DiagramResult& dr : report.diagrams) {
    if (dr.skipped) {
      out << "# diagram " << arrows_str(dr.diagram) << " (n=" << dr.diagram.n()
          << "): skipped, " << dr.skip_reason << "\n";
      continue;
    }
    if (dr.rows.empty()) continue;
    for (const TableRow& row : dr.rows) {
      out << arrows_str(dr.diagram) << " | " << algebra_str(row.rep) << " | "
          << derivation_str(row.rep) << " | " << signatures_str(row) << "\n";
    }
  }
  auto unresolved = report.all_unresolved();
  for (const std::string& u : unresolved) out << "# unresolved: " << u << "\n";
  out << "# rows: " << report.total_rows() << ", records: " << report.total_records() << "\n";
}

void print_csv_report(const ClassificationReport& report, std::ostream& out) {
  out << "n,arrows,lambda,A_pairs,A_values,a,c,epsilon,X\n";
  for (const DiagramResult& dr : report.diagrams) {
    for (const SolutionRecord& rec : dr.section) {
      std::ostringstream line;
      line << rec.n << ",";
      for (std::size_t i = 0; i < rec.arrows.size(); ++i)
        line << (i ? ";" : "") << rec.arrows[i].i << "-" << rec.arrows[i].j << ">"
             << rec.arrows[i].k;
      line << ",";
      for (std::size_t i = 0; i < rec.lambda.size(); ++i)
        line << (i ? ";" : "") << rational_str(rec.lambda[i]);
      line << ",";
      for (std::size_t i = 0; i < rec.A.pairs.size(); ++i)
        line << (i ? ";" : "") << rec.A.pairs[i].first << "-" << rec.A.pairs[i].second;
      line << ",";
      for (std::size_t i = 0; i < rec.A_values.size(); ++i)
        line << (i ? ";" : "") << rational_str(rec.A_values[i]);
      line << ",";
      for (std::size_t i = 0; i < rec.a.size(); ++i) line << (i ? ";" : "") << rec.a[i].str_ascii();
      line << ",";
      for (std::size_t i = 0; i < rec.c.size(); ++i) line << (i ? ";" : "") << rec.c[i].str_ascii();
      line << ",";
      for (std::size_t i = 0; i < rec.epsilon.size(); ++i)
        line << (i ? ";" : "") << rec.epsilon[i];
      line << ",";
      for (std::size_t i = 0; i < rec.X.size(); ++i) line << (i ? ";" : "") << rational_str(rec.X[i]);
      out << line.str() << "\n";
    }
  }
}

int default_threads() {
  if (const char* env = std::getenv("SOLVCLASS_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

int cmd_classify(const std::vector<int>& dims, const std::vector<std::string>& files,
                 bool require_surjective, bool require_unique_A, const std::string& format,
                 const std::string& output, int threads, bool strict, std::ostream& out,
                 std::ostream& err) {
  std::vector<NiceDiagram> diagrams;
  for (int dim : dims) {
    if (dim > 5) {
      err << "error: built-in enumeration is capped at n = 5; pass diagram files for n = " << dim
          << "\n";
      return 2;
    }
    for (NiceDiagram& d : enumerate_diagrams(dim)) diagrams.push_back(std::move(d));
  }
  for (const std::string& path : files) {
    std::ifstream in(path);
    if (!in) {
      err << "error: cannot open " << path << "\n";
      return 2;
    }
    try {
      diagrams.push_back(diagram_from_json(json::parse(in)));
    } catch (const std::exception& e) {
      err << "error: " << path << ": " << e.what() << "\n";
      return 2;
    }
  }
  if (diagrams.empty()) {
    err << "error: nothing to classify (pass --dim or diagram files)\n";
    return 2;
  }

  AlgoOptions opt;
  opt.require_surjective = require_surjective;
  opt.require_unique_A = require_unique_A;
  opt.threads = threads;
  ClassificationReport report = run_algorithm1(diagrams, opt);

  std::ostringstream buffer;
  if (format == "json")
    buffer << report_to_json(report).dump(2) << "\n";
  else if (format == "csv")
    print_csv_report(report, buffer);
  else
    print_text_report(report, buffer);

  if (output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(output);
    if (!f) {
      err << "error: cannot write " << output << "\n";
      return 2;
    }
    f << buffer.str();
  }
  if (strict && !report.all_unresolved().empty()) return 3;
  return 0;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open " << path << "\n";
    return 2;
  }
  SolutionRecord rec;
  try {
    rec = record_from_json(json::parse(in));
  } catch (const std::exception& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return 2;
  }

  MetricLieAlgebra L = record_algebra(rec);
  RadMatrix D = record_derivation(rec);

  if (auto fail = jacobi_check(L)) {
    out << "FAIL jacobi: triple (" << fail->i << "," << fail->j << "," << fail->k << ")\n";
    return 1;
  }
  out << "ok jacobi\n";
  if (auto fail = is_derivation(L, D)) {
    out << "FAIL derivation: pair (" << fail->i << "," << fail->j << ")\n";
    return 1;
  }
  out << "ok derivation\n";
  NilsolitonResidual res = check_generalized_nilsoliton(L, D);
  if (!res.ok()) {
    out << "FAIL generalized nilsoliton equation\n";
    return 1;
  }
  out << "ok generalized nilsoliton\n";
  MetricLieAlgebra ext = extend(L, D);
  EinsteinOutcome eo = einstein_check(ext);
  if (!eo.einstein) {
    out << "FAIL einstein: Ric not scalar at (" << eo.row << "," << eo.col << ")\n";
    return 1;
  }
  out << "ok einstein, constant " << eo.lambda.str() << "\n";
  return 0;
}

int cmd_curvature(const std::vector<std::string>& paths, const std::string& format,
                  std::ostream& out, std::ostream& err) {
  struct Entry {
    std::string path;
    CurvatureReport report;
  };
  std::vector<Entry> entries;
  for (const std::string& path : paths) {
    std::ifstream in(path);
    if (!in) {
      err << "error: cannot open " << path << "\n";
      return 2;
    }
    try {
      json j = json::parse(in);
      MetricLieAlgebra L = j.contains("brackets")
                               ? algebra_from_json(j)
                               : extend(record_algebra(record_from_json(j)),
                                        record_derivation(record_from_json(j)));
      entries.push_back({path, curvature_invariants(L)});
    } catch (const std::exception& e) {
      err << "error: " << path << ": " << e.what() << "\n";
      return 2;
    }
  }

  if (format == "json") {
    json j = json::array();
    for (const Entry& e : entries) {
      json ej;
      ej["input"] = e.path;
      ej["trace"] = radext_to_json(e.report.trace);
      ej["normalized"] = e.report.normalized;
      ej["char_poly"] = json::array();
      for (const RadExt& c : e.report.char_poly_normalized) ej["char_poly"].push_back(radext_to_json(c));
      ej["a2"] = radext_to_json(e.report.a2);
      ej["diagonalizable"] = e.report.diagonalizable;
      j.push_back(ej);
    }
    if (entries.size() > 1) {
      json cmp = json::array();
      for (std::size_t x = 0; x < entries.size(); ++x)
        for (std::size_t y = x + 1; y < entries.size(); ++y)
          cmp.push_back(json{{"a", entries[x].path},
                             {"b", entries[y].path},
                             {"distinguishable", distinguishable(entries[x].report, entries[y].report)}});
      out << json{{"reports", j}, {"comparisons", cmp}}.dump(2) << "\n";
    } else {
      out << j.dump(2) << "\n";
    }
    return 0;
  }

  for (const Entry& e : entries) {
    out << e.path << ": a2 = " << (e.report.normalized ? e.report.a2.str() : std::string("n/a"))
        << ", diagonalizable = " << (e.report.diagonalizable ? "yes" : "no") << "\n";
  }
  for (std::size_t x = 0; x < entries.size(); ++x)
    for (std::size_t y = x + 1; y < entries.size(); ++y)
      out << entries[x].path << " vs " << entries[y].path << ": "
          << (distinguishable(entries[x].report, entries[y].report) ? "distinguishable"
                                                                    : "indistinguishable")
          << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"classification and verification of nondiagonal-triple Einstein solvmanifolds"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "run the classification");
  std::vector<int> dims;
  std::vector<std::string> files;
  bool require_surjective = false, require_unique_A = false, strict = false;
  std::string format = "text", output;
  int threads = default_threads();
  classify->add_option("--dim", dims, "built-in diagram enumeration for this dimension (<= 5)");
  classify->add_option("--file,files", files, "diagram JSON files");
  classify->add_flag("--require-surjective", require_surjective,
                     "skip diagrams without surjective root matrix");
  classify->add_flag("--require-unique-A", require_unique_A,
                     "skip index sets whose A system is underdetermined");
  classify->add_option("--format", format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  classify->add_option("--output,-o", output, "write the report to a file");
  classify->add_option("--threads,-j", threads, "worker threads (overrides SOLVCLASS_THREADS)");
  classify->add_flag("--strict", strict, "exit 3 when unresolved branches remain");

  auto* verify = app.add_subcommand("verify", "re-verify a solution record");
  std::string record_path;
  verify->add_option("record", record_path, "SolutionRecord JSON file")->required();

  auto* curvature = app.add_subcommand("curvature", "curvature invariants and comparison");
  std::vector<std::string> curvature_paths;
  std::string curvature_format = "text";
  curvature->add_option("inputs", curvature_paths, "record or algebra JSON files")->required();
  curvature->add_option("--format", curvature_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> argv = args;
  std::vector<const char*> cargv;
  cargv.push_back("solvclass");
  for (const std::string& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (classify->parsed())
    return cmd_classify(dims, files, require_surjective, require_unique_A, format, output,
                        threads, strict, out, err);
  if (verify->parsed()) return cmd_verify(record_path, out, err);
  if (curvature->parsed()) return cmd_curvature(curvature_paths, curvature_format, out, err);
  err << "error: no command\n";
  return 2;
}

}  // namespace solvclass
