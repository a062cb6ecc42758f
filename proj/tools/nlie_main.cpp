// nlie: exact-arithmetic calculator for Lie algebras and the 3-Lie algebras
// they induce: traces, induced brackets, structural series, cohomology
// spaces, central extensions, catalogs and the classification tables.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nlie/catalog.hpp"
#include "nlie/document.hpp"
#include "nlie/extensions.hpp"

using namespace nlie;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct SourceOptions {
  std::string file;
  std::string catalog_id;
  std::string params;
  std::string trace;
  std::string format = "human";
};

void add_source_options(CLI::App* cmd, SourceOptions& src, bool with_trace = true) {
  cmd->add_option("source", src.file, "algebra document path, - for stdin, or a catalog id");
  cmd->add_option("--catalog", src.catalog_id, "take the algebra from the built-in catalog");
  cmd->add_option("--params", src.params, "catalog parameter bindings, e.g. a=1,b=-1/2");
  if (with_trace) cmd->add_option("--trace", src.trace, "trace coefficients t1,...,td");
  cmd->add_option("--format", src.format, "human|machine")
      ->check(CLI::IsMember({"human", "machine"}));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

ParamMap parse_params(const std::string& text) {
  ParamMap out;
  if (text.empty()) return out;
  for (const std::string& item : split(text, ',')) {
    size_t eq = item.find('=');
    if (eq == std::string::npos) throw CatalogError("parameter binding needs name=value: " + item);
    out[item.substr(0, eq)] = Rational::from_string(item.substr(eq + 1));
  }
  return out;
}

struct LoadedAlgebra {
  std::string name;
  StructureConstants algebra;
  std::optional<LinearForm> trace;
};

LoadedAlgebra load_algebra(const SourceOptions& src) {
  LoadedAlgebra out;
  bool from_catalog = !src.catalog_id.empty();
  std::string text;
  if (!from_catalog && !src.file.empty()) {
    if (src.file == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
    } else {
      std::ifstream in(src.file);
      if (in) {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      } else {
        // not a readable file: fall back to a catalog id of the same name
        bool known = false;
        for (const CatalogEntry& e : catalog_entries())
          if (e.id == src.file) known = true;
        if (!known) throw ParseError(0, "cannot open " + src.file + " (and no such catalog id)");
        from_catalog = true;
      }
    }
  }
  if (from_catalog) {
    out.name = src.catalog_id.empty() ? src.file : src.catalog_id;
    out.algebra = catalog_get(out.name, parse_params(src.params));
  } else if (!src.file.empty()) {
    AlgebraDocument doc = parse_document(text);
    out.name = doc.name;
    out.algebra = doc.algebra;
    out.trace = doc.trace;
  } else {
    throw CLI::ValidationError("provide an algebra file or --catalog ID");
  }
  if (!src.trace.empty()) {
    LinearForm tau;
    for (const std::string& tok : split(src.trace, ',')) tau.push_back(Rational::from_string(tok));
    if (static_cast<int>(tau.size()) != out.algebra.dim())
      throw DimensionError("--trace expects " + std::to_string(out.algebra.dim()) + " coefficients");
    out.trace = tau;
  }
  return out;
}

LinearForm require_trace(const LoadedAlgebra& a) {
  if (!a.trace) throw TraceError("a trace is required: give --trace or a trace line in the document");
  return *a.trace;
}

std::string csv(const Vec& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].to_string();
  }
  return out;
}

std::string combo(const Vec& v, const std::string& sym) {
  std::ostringstream os;
  bool first = true;
  for (size_t q = 0; q < v.size(); ++q) {
    if (v[q].is_zero()) continue;
    Rational c = v[q];
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    } else if (c == Rational(-1)) {
      os << "-";
      c = Rational(1);
    }
    first = false;
    if (!c.is_one()) os << c.to_string() << " ";
    os << sym << (q + 1);
  }
  if (first) os << "0";
  return os.str();
}

std::string tuple_str(const IndexTuple& t) {
  std::string out = "[";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += "e" + std::to_string(t[i]);
  }
  return out + "]";
}

struct Report {
  bool machine;
  std::ostream& os;
  void kv(const std::string& key, const std::string& value) const { os << key << ": " << value << "\n"; }
  void subspace(const std::string& key, const Subspace& s, const std::string& sym) const {
    kv(key + "-dim", std::to_string(s.dim()));
    for (const Vec& row : s.basis_rows())
      kv(key + "-basis", machine ? csv(row) : combo(row, sym));
  }
  void algebra(const std::string& key, const StructureConstants& a) const {
    kv(key + "-arity", std::to_string(a.arity()));
    kv(key + "-dim", std::to_string(a.dim()));
    if (a.is_abelian()) kv(key + "-abelian", "yes");
    for (const auto& [tuple, value] : a.table()) {
      if (machine) {
        std::string k;
        for (size_t i = 0; i < tuple.size(); ++i) k += (i ? "," : "") + std::to_string(tuple[i]);
        kv(key + "-bracket", k + " = " + csv(value));
      } else {
        kv(key + "-bracket", tuple_str(tuple) + " = " + combo(value, "e"));
      }
    }
  }
};

int cmd_verify(const SourceOptions& src) {
  LoadedAlgebra a = load_algebra(src);
  Report rep{src.format == "machine", std::cout};
  rep.kv("report", "verify");
  rep.kv("algebra", a.name);
  VerifyReport v = verify_identity(a.algebra);
  rep.kv("identity", v.ok ? "ok" : "violated");
  for (const auto& viol : v.violations) {
    std::ostringstream os;
    os << tuple_str(viol.xs) << " on " << tuple_str(viol.ys) << " defect " << combo(viol.defect, "e");
    rep.kv("violation", os.str());
  }
  return v.ok ? kExitOk : kExitViolation;
}

int cmd_traces(const SourceOptions& src) {
  LoadedAlgebra a = load_algebra(src);
  Report rep{src.format == "machine", std::cout};
  rep.kv("report", "traces");
  rep.kv("algebra", a.name);
  rep.subspace("trace", trace_space(a.algebra), "x");
  return kExitOk;
}

int cmd_induce(const SourceOptions& src) {
  LoadedAlgebra a = load_algebra(src);
  LinearForm tau = require_trace(a);
  Report rep{src.format == "machine", std::cout};
  rep.kv("report", "induce");
  rep.kv("algebra", a.name);
  rep.kv("trace", rep.machine ? csv(tau) : combo(tau, "x"));
  StructureConstants ind = induce_bracket(a.algebra, tau);
  rep.algebra("induced", ind);
  rep.kv("identity", verify_identity(ind).ok ? "ok" : "violated");
  return kExitOk;
}

void series_block(const Report& rep, const std::string& key, const SeriesReport& s) {
  rep.kv(key + "-length", std::to_string(s.terms.size()));
  for (const Subspace& t : s.terms) rep.kv(key + "-term-dim", std::to_string(t.dim()));
  rep.kv(key + "-class", s.cls ? std::to_string(*s.cls) : "none");
}

int cmd_series(const SourceOptions& src) {
  LoadedAlgebra a = load_algebra(src);
  Report rep{src.format == "machine", std::cout};
  rep.kv("report", "series");
  rep.kv("algebra", a.name);
  series_block(rep, "derived", derived_series(a.algebra));
  series_block(rep, "central", central_series(a.algebra));
  std::optional<int> s = solvability_class(a.algebra);
  std::optional<int> n = nilpotency_class(a.algebra);
  rep.kv("solvable", s ? "yes" : "no");
  rep.kv("nilpotent", n ? "yes" : "no");
  if (a.trace && a.algebra.arity() == 2) {
    LinearForm tau = *a.trace;
    rep.kv("trace", rep.machine ? csv(tau) : combo(tau, "x"));
    rep.kv("induced-D2-zero", check_induced_solvable(a.algebra, tau) ? "yes" : "no");
    SeriesComparison cmp = check_series_inclusion(a.algebra, tau);
    rep.kv("central-inclusion", cmp.inclusion_ok ? "ok" : "violated");
    rep.kv("equality-hypothesis", cmp.equality_hypothesis ? "yes" : "no");
    if (cmp.witness) rep.kv("equality-witness", rep.machine ? csv(*cmp.witness) : combo(*cmp.witness, "e"));
    if (!cmp.inclusion_ok) return kExitViolation;
  }
  return kExitOk;
}

int cmd_center(const SourceOptions& src) {
  LoadedAlgebra a = load_algebra(src);
  Report rep{src.format == "machine", std::cout};
  rep.kv("report", "center");
  rep.kv("algebra", a.name);
  rep.subspace("center", center(a.algebra), "e");
  return kExitOk;
}

int cmd_cohomology(const SourceOptions& src, const std::string& theory, const std::string& coeffs,
                   int degree) {
  LoadedAlgebra a = load_algebra(src);
  StructureConstants target = a.algebra;
  Report rep{src.format == "machine", std::cout};
  rep.kv("report", "cohomology");
  rep.kv("algebra", a.name);
  if (theory == "trilie" && target.arity() == 2) {
    LinearForm tau = require_trace(a);
    rep.kv("trace", rep.machine ? csv(tau) : combo(tau, "x"));
    target = induce_bracket(target, tau);
  } else if (theory == "lie" && target.arity() != 2) {
    throw ArityError("lie cohomology needs an arity-2 algebra");
  } else if (theory == "trilie" && target.arity() != 3) {
    throw ArityError("trilie cohomology needs an arity-3 algebra (or a Lie algebra with a trace)");
  }
  rep.kv("theory", theory);
  rep.kv("coeffs", coeffs);
  rep.kv("degree", std::to_string(degree));
  CohomologyReport r =
      cohomology_report(target, coeffs == "adjoint" ? Coeffs::Adjoint : Coeffs::Scalar, degree);
  rep.kv("dim-Z", std::to_string(r.dim_Z));
  rep.kv("dim-B", std::to_string(r.dim_B));
  rep.kv("dim-H", std::to_string(r.dim_H));
  for (const Vec& row : r.Z.basis_rows()) rep.kv("Z-basis", csv(row));
  for (const Vec& row : r.B.basis_rows()) rep.kv("B-basis", csv(row));
  return kExitOk;
}

int cmd_extend(const SourceOptions& src, const std::string& cocycle_file) {
  LoadedAlgebra a = load_algebra(src);
  std::ifstream in(cocycle_file);
  if (!in) throw ParseError(0, "cannot open " + cocycle_file);
  std::ostringstream ss;
  ss << in.rdbuf();
  CocycleDocument cd = parse_cocycle_document(ss.str());
  if (cd.dim != a.algebra.dim() || cd.arity != a.algebra.arity())
    throw DimensionError("cocycle document does not match the algebra");
  Report rep{src.format == "machine", std::cout};
  rep.kv("report", "extend");
  rep.kv("algebra", a.name);
  CentralExtension ext = central_extend(a.algebra, cd.cochain);
  rep.algebra("total", ext.total);
  rep.kv("identity", verify_identity(ext.total).ok ? "ok" : "violated");
  rep.kv("trivial", is_trivial_extension(a.algebra, cd.cochain) ? "yes" : "no");
  if (a.algebra.arity() == 2 && a.trace) {
    InducedExtension ie = induce_extension(a.algebra, *a.trace, cd.cochain);
    rep.kv("trace", rep.machine ? csv(*a.trace) : combo(*a.trace, "x"));
    rep.algebra("induced-total", ie.ext3.total);
    for (const auto& [key, value] : ie.omega_tau.components()) {
      if (key[0] >= key[1] || key[1] >= key[2]) continue;
      std::ostringstream os;
      os << tuple_str(key) << " = " << value[0].to_string();
      rep.kv("omega-tau", os.str());
    }
    rep.kv("induced-trivial",
           is_trivial_extension(induce_bracket(a.algebra, *a.trace), ie.omega_tau) ? "yes" : "no");
  }
  return kExitOk;
}

int cmd_recognize(const SourceOptions& src) {
  LoadedAlgebra a = load_algebra(src);
  Report rep{src.format == "machine", std::cout};
  rep.kv("report", "recognize");
  rep.kv("algebra", a.name);
  if (a.algebra.arity() != 3) throw ArityError("recognize expects an arity-3 algebra");
  std::optional<Recognition> r = recognize_induced(a.algebra);
  rep.kv("recognized", r ? "yes" : "no");
  if (r) {
    rep.kv("i0", std::to_string(r->i0));
    rep.kv("tau", rep.machine ? csv(r->tau) : combo(r->tau, "x"));
    rep.algebra("lie", r->lie);
  }
  return kExitOk;
}

int cmd_catalog(const SourceOptions& src, int arity, int dim, bool classify) {
  Report rep{src.format == "machine", std::cout};
  if (classify) {
    rep.kv("report", "classification");
    for (const ClassificationRow& row : induced_classification()) {
      std::string flag = row.flag == InducedFlag::Induced
                             ? "induced"
                             : (row.flag == InducedFlag::NotInduced ? "not-induced" : "unknown");
      rep.kv(row.id, flag);
    }
    return kExitOk;
  }
  std::string id = !src.catalog_id.empty() ? src.catalog_id : src.file;
  if (!id.empty()) {
    const CatalogEntry& e = catalog_entry(id);
    AlgebraDocument doc;
    doc.name = e.id;
    doc.algebra = catalog_get(e.id, parse_params(src.params));
    doc.arity = doc.algebra.arity();
    doc.dim = doc.algebra.dim();
    std::cout << print_document(doc);
    if (!e.predicate.empty()) rep.kv("# predicate", e.predicate);
    if (!e.notes.empty()) rep.kv("# notes", e.notes);
    return kExitOk;
  }
  rep.kv("report", "catalog");
  for (const CatalogEntry* e : catalog_list(arity, dim)) {
    std::ostringstream os;
    os << "arity " << e->arity << " dim " << e->dim;
    for (const CatalogParam& p : e->params) os << " " << p.name << "=" << p.default_value.to_string();
    rep.kv(e->id, os.str());
  }
  return kExitOk;
}

int cmd_table6(const SourceOptions& src, const std::string& id) {
  Report rep{src.format == "machine", std::cout};
  rep.kv("report", "table6");
  std::vector<std::string> ids = id.empty() ? table6_row_ids() : std::vector<std::string>{id};
  for (const std::string& row_id : ids) rep.kv("row", render_table6_row(table6(row_id)));
  return kExitOk;
}

int cmd_table7(const SourceOptions& src, const std::string& id) {
  Report rep{src.format == "machine", std::cout};
  rep.kv("report", "table7");
  std::vector<std::string> ids = id.empty() ? table7_row_ids() : std::vector<std::string>{id};
  for (const std::string& row_id : ids) {
    Table7Row row = table7_for(row_id);
    std::ostringstream os;
    os << "trace " << (rep.machine ? csv(row.tau) : combo(row.tau, "x")) << " lie Z1 "
       << row.lie_report.dim_Z << " B1 " << row.lie_report.dim_B << " H1 " << row.lie_report.dim_H
       << " induced Z1 " << row.induced_report.dim_Z << " B1 " << row.induced_report.dim_B << " H1 "
       << row.induced_report.dim_H;
    rep.kv(row_id, os.str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for Lie algebras and induced 3-Lie algebras"};
  app.require_subcommand(1);

  SourceOptions src;
  std::string theory = "lie", coeffs = "adjoint", cocycle_file, table_id;
  int degree = 1, list_arity = 0, list_dim = 0;
  bool classify = false;

  CLI::App* verify = app.add_subcommand("verify", "check the fundamental (Jacobi/Filippov) identity");
  add_source_options(verify, src, false);
  CLI::App* traces = app.add_subcommand("traces", "compute the space of trace forms");
  add_source_options(traces, src, false);
  CLI::App* induce = app.add_subcommand("induce", "build the induced (n+1)-Lie bracket");
  add_source_options(induce, src);
  CLI::App* series = app.add_subcommand("series", "derived/central series, classes, transfer checks");
  add_source_options(series, src);
  CLI::App* center_cmd = app.add_subcommand("center", "compute the center");
  add_source_options(center_cmd, src, false);
  CLI::App* coh = app.add_subcommand("cohomology", "cocycle/coboundary/cohomology dimensions");
  add_source_options(coh, src);
  coh->add_option("--theory", theory, "lie|trilie")->check(CLI::IsMember({"lie", "trilie"}));
  coh->add_option("--coeffs", coeffs, "adjoint|scalar")->check(CLI::IsMember({"adjoint", "scalar"}));
  coh->add_option("--degree", degree, "1|2")->check(CLI::Range(1, 2));
  CLI::App* extend = app.add_subcommand("extend", "central extension by a scalar cocycle");
  add_source_options(extend, src);
  extend->add_option("--cocycle", cocycle_file, "cocycle document path")->required();
  CLI::App* recognize = app.add_subcommand("recognize", "recognize a 3-Lie algebra induced by a Lie algebra");
  add_source_options(recognize, src, false);
  CLI::App* catalog = app.add_subcommand("catalog", "list catalog entries or print one");
  add_source_options(catalog, src, false);
  catalog->add_option("--arity", list_arity, "filter by arity");
  catalog->add_option("--dim", list_dim, "filter by dimension");
  catalog->add_flag("--classify", classify, "flag induced / not-induced entries");
  CLI::App* table6_cmd = app.add_subcommand("table6", "trace spaces and induced brackets of the Lie catalog");
  table6_cmd->add_option("id", table_id, "single row id (all rows when omitted)");
  table6_cmd->add_option("--format", src.format, "human|machine")->check(CLI::IsMember({"human", "machine"}));
  CLI::App* table7_cmd = app.add_subcommand("table7", "degree-1 cohomology dimensions, Lie vs induced");
  table7_cmd->add_option("id", table_id, "single row id (all rows when omitted)");
  table7_cmd->add_option("--format", src.format, "human|machine")->check(CLI::IsMember({"human", "machine"}));

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return cmd_verify(src);
    if (traces->parsed()) return cmd_traces(src);
    if (induce->parsed()) return cmd_induce(src);
    if (series->parsed()) return cmd_series(src);
    if (center_cmd->parsed()) return cmd_center(src);
    if (coh->parsed()) return cmd_cohomology(src, theory, coeffs, degree);
    if (extend->parsed()) return cmd_extend(src, cocycle_file);
    if (recognize->parsed()) return cmd_recognize(src);
    if (catalog->parsed()) return cmd_catalog(src, list_arity, list_dim, classify);
    if (table6_cmd->parsed()) return cmd_table6(src, table_id);
    if (table7_cmd->parsed()) return cmd_table7(src, table_id);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;  // --help exits 0
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
}
