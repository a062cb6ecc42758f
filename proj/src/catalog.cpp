#include "nlie/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace nlie {

namespace {

const Rational& param(const ParamMap& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw CatalogError("missing parameter " + name);
  return it->second;
}

// terse builder: list of (tuple, {index: coefficient}) entries
StructureConstants make(int arity, int dim,
                        std::initializer_list<std::pair<IndexTuple, std::map<int, Rational>>> entries) {
  std::vector<BracketAssignment> raw;
  for (const auto& [tuple, coeffs] : entries) {
    Vec v = zero_vec(dim);
    for (const auto& [idx, c] : coeffs) v[static_cast<size_t>(idx - 1)] = c;
    raw.push_back({tuple, v});
  }
  return StructureConstants::canonicalize(arity, dim, raw);
}

bool always_valid(const ParamMap&) { return true; }

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](CatalogEntry e) { out.push_back(std::move(e)); };
  const std::string dg_note =
      "labels follow the de Graaf classification of solvable 4-dimensional Lie algebras; M10 exists only in characteristic 2 and is omitted";

  // ---- Lie algebras, dimension 3 ----
  add({"abelian3", 2, 3, {}, "", always_valid,
       [](const ParamMap&) { return StructureConstants::abelian(2, 3); }, ""});
  add({"L(3,-1)", 2, 3, {}, "", always_valid,
       [](const ParamMap&) { return make(2, 3, {{{1, 2}, {{2, 1}}}}); }, ""});
  add({"L(3,1)", 2, 3, {}, "", always_valid,
       [](const ParamMap&) { return make(2, 3, {{{1, 2}, {{3, 1}}}}); }, ""});
  add({"L(3,2,a)", 2, 3, {{"a", Rational(1)}}, "0 < |a| <= 1",
       [](const ParamMap& p) {
         const Rational& a = param(p, "a");
         Rational abs_a = a.sign() < 0 ? -a : a;
         return !a.is_zero() && abs_a <= Rational(1);
       },
       [](const ParamMap& p) {
         return make(2, 3, {{{1, 3}, {{1, 1}}}, {{2, 3}, {{2, param(p, "a")}}}});
       },
       ""});
  add({"L(3,3)", 2, 3, {}, "", always_valid,
       [](const ParamMap&) { return make(2, 3, {{{1, 3}, {{1, 1}}}, {{2, 3}, {{1, 1}, {2, 1}}}}); }, ""});
  add({"L(3,4,a)", 2, 3, {{"a", Rational(1)}}, "a >= 0",
       [](const ParamMap& p) { return param(p, "a").sign() >= 0; },
       [](const ParamMap& p) {
         const Rational& a = param(p, "a");
         return make(2, 3, {{{1, 3}, {{1, a}, {2, -1}}}, {{2, 3}, {{1, 1}, {2, a}}}});
       },
       ""});
  add({"L(3,5)", 2, 3, {}, "", always_valid,
       [](const ParamMap&) {
         return make(2, 3, {{{1, 2}, {{1, 1}}}, {{1, 3}, {{2, -2}}}, {{2, 3}, {{3, 1}}}});
       },
       ""});
  add({"L(3,6)", 2, 3, {}, "", always_valid,
       [](const ParamMap&) {
         return make(2, 3, {{{1, 2}, {{3, 1}}}, {{1, 3}, {{2, -1}}}, {{2, 3}, {{1, 1}}}});
       },
       "isomorphic to L(3,5) over an algebraically closed field"});

  // ---- Lie algebras, dimension 4 (solvable list) ----
  add({"abelian4", 2, 4, {}, "", always_valid,
       [](const ParamMap&) { return StructureConstants::abelian(2, 4); }, ""});
  add({"M2", 2, 4, {}, "", always_valid,
       [](const ParamMap&) {
         return make(2, 4, {{{1, 4}, {{1, 1}}}, {{2, 4}, {{2, 1}}}, {{3, 4}, {{3, 1}}}});
       },
       dg_note});
  auto build_m3 = [](const ParamMap& p) {
    const Rational& a = param(p, "a");
    return make(2, 4, {{{1, 4}, {{1, 1}}}, {{2, 4}, {{3, 1}}}, {{3, 4}, {{2, -a}, {3, a + Rational(1)}}}});
  };
  add({"M3_a", 2, 4, {{"a", Rational(1)}}, "", always_valid, build_m3, ""});
  add({"M3_0", 2, 4, {}, "", always_valid,
       [build_m3](const ParamMap&) { return build_m3({{"a", Rational(0)}}); },
       "row instance of M3_a at a = 0", true});
  add({"M4", 2, 4, {}, "", always_valid,
       [](const ParamMap&) { return make(2, 4, {{{2, 4}, {{3, 1}}}, {{3, 4}, {{3, 1}}}}); }, ""});
  add({"M5", 2, 4, {}, "", always_valid,
       [](const ParamMap&) { return make(2, 4, {{{2, 4}, {{3, 1}}}}); }, ""});
  auto build_m6 = [](const ParamMap& p) {
    return make(2, 4, {{{1, 4}, {{2, 1}}},
                       {{2, 4}, {{3, 1}}},
                       {{3, 4}, {{1, param(p, "a")}, {2, param(p, "b")}, {3, 1}}}});
  };
  add({"M6_ab", 2, 4, {{"a", Rational(1)}, {"b", Rational(1)}}, "", always_valid, build_m6, ""});
  add({"M6_0b", 2, 4, {{"b", Rational(1)}}, "", always_valid,
       [build_m6](const ParamMap& p) { return build_m6({{"a", Rational(0)}, {"b", param(p, "b")}}); },
       "row instance of M6_ab at a = 0", true});
  auto build_m7 = [](const ParamMap& p) {
    return make(2, 4, {{{1, 4}, {{2, 1}}},
                       {{2, 4}, {{3, 1}}},
                       {{3, 4}, {{1, param(p, "a")}, {2, param(p, "b")}}}});
  };
  add({"M7_ab", 2, 4, {{"a", Rational(1)}, {"b", Rational(1)}}, "a = b != 0, or a = 0, or b = 0",
       [](const ParamMap& p) {
         const Rational& a = param(p, "a");
         const Rational& b = param(p, "b");
         return (a == b && !a.is_zero()) || a.is_zero() || b.is_zero();
       },
       build_m7, ""});
  add({"M7_0b", 2, 4, {{"b", Rational(1)}}, "", always_valid,
       [build_m7](const ParamMap& p) { return build_m7({{"a", Rational(0)}, {"b", param(p, "b")}}); },
       "row instance of M7_ab at a = 0", true});
  add({"M8", 2, 4, {}, "", always_valid,
       [](const ParamMap&) { return make(2, 4, {{{1, 2}, {{2, 1}}}, {{3, 4}, {{4, 1}}}}); }, ""});
  add({"M9_a", 2, 4, {{"a", Rational(1)}}, "X^2 - X - a has no rational root",
       [](const ParamMap& p) {
         Rational disc = Rational(1) + Rational(4) * param(p, "a");
         return !disc.is_rational_square();
       },
       [](const ParamMap& p) {
         return make(2, 4, {{{1, 4}, {{1, 1}, {2, param(p, "a")}}},
                            {{2, 4}, {{1, 1}}},
                            {{1, 3}, {{1, 1}}},
                            {{2, 3}, {{2, 1}}}});
       },
       "validity over the rationals checked through the discriminant 1 + 4a"});
  add({"M11", 2, 4, {}, "", always_valid,
       [](const ParamMap&) {
         return make(2, 4, {{{1, 4}, {{1, 1}}}, {{2, 4}, {{2, 2}}}, {{3, 4}, {{3, 1}}}, {{1, 3}, {{2, 1}}}});
       },
       "stored with [e2,e4] = 2 e2, the completion forced by the Jacobi identity"});
  add({"M12", 2, 4, {}, "", always_valid,
       [](const ParamMap&) {
         return make(2, 4, {{{1, 4}, {{1, 1}}}, {{2, 4}, {{2, 1}}}, {{1, 3}, {{2, 1}}}});
       },
       "stored without a [e3,e4] term, the repair forced by the Jacobi identity"});
  auto build_m13 = [](const ParamMap& p) {
    return make(2, 4, {{{1, 4}, {{1, 1}, {3, param(p, "a")}}},
                       {{2, 4}, {{2, 1}}},
                       {{3, 4}, {{1, 1}}},
                       {{1, 3}, {{2, 1}}}});
  };
  add({"M13_a", 2, 4, {{"a", Rational(1)}}, "", always_valid, build_m13, ""});
  add({"M13_0", 2, 4, {}, "", always_valid,
       [build_m13](const ParamMap&) { return build_m13({{"a", Rational(0)}}); },
       "row instance of M13_a at a = 0", true});
  auto build_m14 = [](const ParamMap& p) {
    return make(2, 4, {{{1, 4}, {{3, param(p, "a")}}}, {{3, 4}, {{1, 1}}}, {{1, 3}, {{2, 1}}}});
  };
  add({"M14_a", 2, 4, {{"a", Rational(1)}}, "", always_valid, build_m14,
       "M14_a is isomorphic to M14_b iff a = c^2 b for some c != 0"});
  add({"M14_0", 2, 4, {}, "", always_valid,
       [build_m14](const ParamMap&) { return build_m14({{"a", Rational(0)}}); },
       "row instance of M14_a at a = 0", true});
  add({"gl2", 2, 4, {}, "", always_valid,
       [](const ParamMap&) {
         return make(2, 4, {{{1, 2}, {{2, 2}}}, {{1, 3}, {{3, -2}}}, {{2, 3}, {{1, 1}}}});
       },
       "e4 spans the center"});
  add({"E3xK", 2, 4, {}, "", always_valid,
       [](const ParamMap&) {
         return make(2, 4, {{{1, 2}, {{3, 1}}}, {{2, 3}, {{1, 1}}}, {{3, 1}, {{2, 1}}}});
       },
       "Euclidean cross-product algebra plus a central line; classified over the reals, stored with rational constants"});

  // ---- 3-Lie algebras, dimension <= 4 ----
  add({"T4.1", 3, 2, {}, "", always_valid,
       [](const ParamMap&) { return StructureConstants::abelian(3, 2); },
       "dimension below 3 forces the abelian bracket"});
  add({"T4.2a", 3, 3, {}, "", always_valid,
       [](const ParamMap&) { return StructureConstants::abelian(3, 3); }, ""});
  add({"T4.2b", 3, 3, {}, "", always_valid,
       [](const ParamMap&) { return make(3, 3, {{{1, 2, 3}, {{1, 1}}}}); }, ""});
  add({"T4.3a", 3, 4, {}, "", always_valid,
       [](const ParamMap&) { return StructureConstants::abelian(3, 4); }, ""});
  add({"T4.3b", 3, 4, {}, "", always_valid,
       [](const ParamMap&) { return make(3, 4, {{{2, 3, 4}, {{1, 1}}}}); }, ""});
  add({"T4.3c", 3, 4, {}, "", always_valid,
       [](const ParamMap&) { return make(3, 4, {{{1, 2, 3}, {{1, 1}}}}); }, ""});
  add({"T4.3d_C", 3, 4,
       {{"a", Rational(1)}, {"b", Rational(0)}, {"c", Rational(0)}, {"d", Rational(1)}},
       "C = [[a,b],[c,d]] invertible",
       [](const ParamMap& p) {
         return !(param(p, "a") * param(p, "d") - param(p, "b") * param(p, "c")).is_zero();
       },
       [](const ParamMap& p) {
         return make(3, 4, {{{1, 2, 4}, {{3, param(p, "a")}, {4, param(p, "b")}}},
                            {{1, 2, 3}, {{3, param(p, "c")}, {4, param(p, "d")}}}});
       },
       "entries with matrices C1, C2 are isomorphic iff C2 = s B C1 B^-1 for a scalar s and invertible B "
       "(recorded, not decided)"});
  add({"T4.3e_ab", 3, 4, {{"a", Rational(1)}, {"b", Rational(1)}}, "a, b != 0",
       [](const ParamMap& p) { return !param(p, "a").is_zero() && !param(p, "b").is_zero(); },
       [](const ParamMap& p) {
         return make(3, 4, {{{2, 3, 4}, {{1, 1}}},
                            {{1, 3, 4}, {{2, param(p, "a")}}},
                            {{1, 2, 4}, {{3, param(p, "b")}}}});
       },
       ""});
  add({"T4.3f_abc", 3, 4, {{"a", Rational(1)}, {"b", Rational(1)}, {"c", Rational(1)}}, "a, b, c != 0",
       [](const ParamMap& p) {
         return !param(p, "a").is_zero() && !param(p, "b").is_zero() && !param(p, "c").is_zero();
       },
       [](const ParamMap& p) {
         return make(3, 4, {{{2, 3, 4}, {{1, 1}}},
                            {{1, 3, 4}, {{2, param(p, "a")}}},
                            {{1, 2, 4}, {{3, param(p, "b")}}},
                            {{1, 2, 3}, {{4, param(p, "c")}}}});
       },
       ""});

  // ---- 3-Lie algebras, dimension 5 ----
  const std::string closed_field_note =
      "classified over an algebraically closed field; stored verbatim with rational parameter instantiations";
  auto add5 = [&](const std::string& id, std::vector<CatalogParam> params, std::string predicate,
                  std::function<bool(const ParamMap&)> valid,
                  std::function<StructureConstants(const ParamMap&)> build, std::string extra = "") {
    std::string notes = closed_field_note;
    if (!extra.empty()) notes += "; " + extra;
    add({id, 3, 5, std::move(params), std::move(predicate), std::move(valid), std::move(build), notes});
  };
  add5("T5.1", {}, "", always_valid, [](const ParamMap&) { return StructureConstants::abelian(3, 5); });
  add5("T5.2a", {}, "", always_valid,
       [](const ParamMap&) { return make(3, 5, {{{2, 3, 4}, {{1, 1}}}}); });
  add5("T5.2b", {}, "", always_valid,
       [](const ParamMap&) { return make(3, 5, {{{1, 2, 3}, {{1, 1}}}}); });
  add5("T5.3a", {}, "", always_valid, [](const ParamMap&) {
    return make(3, 5, {{{2, 3, 4}, {{1, 1}}}, {{3, 4, 5}, {{2, 1}}}});
  });
  add5("T5.3b", {}, "", always_valid, [](const ParamMap&) {
    return make(3, 5, {{{2, 3, 4}, {{1, 1}}}, {{2, 4, 5}, {{2, 1}}}, {{1, 4, 5}, {{1, 1}}}});
  });
  add5("T5.3c", {}, "", always_valid, [](const ParamMap&) {
    return make(3, 5, {{{2, 3, 4}, {{1, 1}}}, {{1, 3, 4}, {{2, 1}}}});
  });
  add5("T5.3d", {}, "", always_valid, [](const ParamMap&) {
    return make(3, 5, {{{2, 3, 4}, {{1, 1}}},
                       {{1, 3, 4}, {{2, 1}}},
                       {{2, 4, 5}, {{2, 1}}},
                       {{1, 4, 5}, {{1, 1}}}});
  });
  add5("T5.3e_alpha", {{"alpha", Rational(1)}}, "alpha != 0",
       [](const ParamMap& p) { return !param(p, "alpha").is_zero(); },
       [](const ParamMap& p) {
         return make(3, 5, {{{2, 3, 4}, {{1, param(p, "alpha")}, {2, 1}}}, {{1, 3, 4}, {{2, 1}}}});
       });
  add5("T5.3f_alpha", {{"alpha", Rational(1)}}, "alpha != 0",
       [](const ParamMap& p) { return !param(p, "alpha").is_zero(); },
       [](const ParamMap& p) {
         return make(3, 5, {{{2, 3, 4}, {{1, param(p, "alpha")}, {2, 1}}},
                            {{1, 3, 4}, {{2, 1}}},
                            {{2, 4, 5}, {{2, 1}}},
                            {{1, 4, 5}, {{1, 1}}}});
       });
  add5("T5.3g", {}, "", always_valid, [](const ParamMap&) {
    return make(3, 5, {{{1, 3, 4}, {{1, 1}}}, {{2, 3, 4}, {{2, 1}}}});
  });
  add5("T5.4a", {}, "", always_valid, [](const ParamMap&) {
    return make(3, 5, {{{2, 3, 4}, {{1, 1}}}, {{2, 4, 5}, {{2, -1}}}, {{3, 4, 5}, {{3, 1}}}});
  });
  add5("T5.4b_alpha", {{"alpha", Rational(1)}}, "",
       always_valid,
       [](const ParamMap& p) {
         return make(3, 5, {{{2, 3, 4}, {{1, 1}}},
                            {{3, 4, 5}, {{2, param(p, "alpha")}, {3, 1}}},
                            {{2, 4, 5}, {{3, 1}}},
                            {{1, 4, 5}, {{1, 1}}}});
       });
  add5("T5.4c", {}, "", always_valid, [](const ParamMap&) {
    return make(3, 5, {{{2, 3, 4}, {{1, 1}}},
                       {{3, 4, 5}, {{3, 1}}},
                       {{2, 4, 5}, {{2, 1}}},
                       {{1, 4, 5}, {{1, 2}}}});
  });
  add5("T5.4d", {}, "", always_valid, [](const ParamMap&) {
    return make(3, 5, {{{2, 3, 4}, {{1, 1}}}, {{1, 3, 4}, {{2, 1}}}, {{1, 2, 4}, {{3, 1}}}});
  });
  add5("T5.4e_beta", {{"beta", Rational(2)}}, "beta not in {0, 1}",
       [](const ParamMap& p) {
         const Rational& b = param(p, "beta");
         return !b.is_zero() && b != Rational(1);
       },
       [](const ParamMap& p) {
         const Rational& b = param(p, "beta");
         return make(3, 5, {{{1, 4, 5}, {{1, 1}}},
                            {{2, 4, 5}, {{3, 1}}},
                            {{3, 4, 5}, {{2, b}, {3, Rational(1) + b}}}});
       });
  add5("T5.4f", {}, "", always_valid, [](const ParamMap&) {
    return make(3, 5, {{{1, 4, 5}, {{1, 1}}}, {{2, 4, 5}, {{2, 1}}}, {{3, 4, 5}, {{3, 1}}}});
  });
  add5("T5.4g_stu", {{"s", Rational(1)}, {"t", Rational(1)}, {"u", Rational(1)}}, "",
       always_valid,
       [](const ParamMap& p) {
         return make(3, 5, {{{1, 4, 5}, {{2, 1}}},
                            {{2, 4, 5}, {{3, 1}}},
                            {{3, 4, 5}, {{1, param(p, "s")}, {2, param(p, "t")}, {3, param(p, "u")}}}});
       },
       "coefficient triples (s,t,u) and (s',t',u') give isomorphic algebras iff s = r^3 s', t = r^2 t', "
       "u = r u' for some r != 0 (recorded, not decided)");
  add5("T5.5a", {}, "", always_valid, [](const ParamMap&) {
    return make(3, 5, {{{2, 3, 4}, {{1, 1}}},
                       {{3, 4, 5}, {{2, 1}}},
                       {{2, 4, 5}, {{3, 1}}},
                       {{2, 3, 5}, {{4, 1}}}});
  });
  add5("T5.5b", {}, "", always_valid, [](const ParamMap&) {
    return make(3, 5, {{{2, 3, 4}, {{1, 1}}},
                       {{1, 3, 4}, {{2, 1}}},
                       {{1, 2, 4}, {{3, 1}}},
                       {{1, 2, 3}, {{4, 1}}}});
  });
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.id == id) return e;
  throw CatalogError("unknown catalog id: " + id);
}

std::vector<const CatalogEntry*> catalog_list(int arity, int dim) {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : catalog_entries()) {
    if (e.row_alias) continue;
    if (arity != 0 && e.arity != arity) continue;
    if (dim != 0 && e.dim != dim) continue;
    out.push_back(&e);
  }
  return out;
}

ParamMap catalog_defaults(const std::string& id) {
  ParamMap out;
  for (const CatalogParam& p : catalog_entry(id).params) out[p.name] = p.default_value;
  return out;
}

StructureConstants catalog_get(const std::string& id, const ParamMap& params) {
  const CatalogEntry& e = catalog_entry(id);
  ParamMap full = catalog_defaults(id);
  for (const auto& [name, value] : params) {
    if (!full.count(name)) throw CatalogError("entry " + id + " has no parameter " + name);
    full[name] = value;
  }
  if (!e.valid(full)) throw CatalogError("invalid parameters for " + id + " (" + e.predicate + ")");
  return e.build(full);
}

std::optional<Recognition> recognize_induced(const StructureConstants& t) {
  if (t.arity() != 3) throw ArityError("recognize_induced expects a 3-Lie algebra");
  const int d = t.dim();
  std::vector<Vec> values;
  for (const auto& [key, value] : t.table()) values.push_back(value);
  Subspace value_span = Subspace::span(d, values);

  for (int i0 = 1; i0 <= d; ++i0) {
    // (a) every nonzero bracket contains i0
    bool all_contain = true;
    for (const auto& [key, value] : t.table())
      if (std::find(key.begin(), key.end(), i0) == key.end()) all_contain = false;
    if (!all_contain) continue;
    // (b) e_{i0} independent from the bracket values
    if (value_span.contains(unit_vec(d, i0 - 1))) continue;
    // values must avoid the e_{i0} coordinate, otherwise tau is not a trace
    bool clean = true;
    for (const Vec& v : values)
      if (!v[static_cast<size_t>(i0 - 1)].is_zero()) clean = false;
    if (!clean) continue;

    std::vector<BracketAssignment> raw;
    for (const auto& [key, value] : t.table()) {
      IndexTuple rest;
      IndexTuple with_front{i0};
      for (int i : key)
        if (i != i0) {
          rest.push_back(i);
          with_front.push_back(i);
        }
      int sign = sort_sign(with_front);  // [e_{i0}, e_rest] = sign * [key]
      raw.push_back({rest, scale_vec(Rational(sign), value)});
    }
    StructureConstants lie = StructureConstants::canonicalize(2, d, raw);
    if (!verify_identity(lie).ok) continue;
    LinearForm tau = unit_vec(d, i0 - 1);
    if (!is_trace(lie, tau)) continue;
    if (induce_bracket(lie, tau) != t) continue;
    return Recognition{i0, lie, tau};
  }
  return std::nullopt;
}

std::vector<ClassificationRow> induced_classification(int max_dim) {
  std::vector<ClassificationRow> out;
  for (const CatalogEntry* e : catalog_list(3, 0)) {
    if (e->dim > max_dim) continue;
    StructureConstants a = catalog_get(e->id);
    ClassificationRow row{e->id, e->dim, InducedFlag::Unknown};
    if (recognize_induced(a)) {
      row.flag = InducedFlag::Induced;
    } else {
      Subspace whole = Subspace::full(a.dim());
      Subspace d1 = product_span(a, {whole, whole, whole});
      Subspace d2 = product_span(a, {d1, d1, d1});
      if (!d2.is_zero()) row.flag = InducedFlag::NotInduced;
    }
    out.push_back(row);
  }
  return out;
}

Table6Row table6(const std::string& lie_id, const ParamMap& params) {
  StructureConstants a = catalog_get(lie_id, params);
  if (a.arity() != 2) throw CatalogError("table6 expects a Lie catalog id");
  Table6Row row;
  row.id = lie_id;
  row.members = induced_family(a);
  for (const InducedMember& m : row.members) {
    row.trace_pivots.push_back(m.pivot);
    for (const auto& [key, value] : m.alg.table()) row.family[key].emplace_back(m.pivot, value);
  }
  return row;
}

namespace {
std::string linear_combo(const Vec& v) {
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
    os << "e" << (q + 1);
  }
  if (first) os << "0";
  return os.str();
}
}  // namespace

std::string render_table6_row(const Table6Row& row) {
  std::ostringstream os;
  os << row.id << ": trace ";
  if (row.trace_pivots.empty()) {
    os << "0";
  } else {
    for (size_t i = 0; i < row.trace_pivots.size(); ++i)
      os << (i ? " + " : "") << "t" << row.trace_pivots[i] << " x" << row.trace_pivots[i];
  }
  os << "; induced";
  if (row.family.empty()) {
    os << " abelian";
    return os.str();
  }
  for (const auto& [key, contribs] : row.family) {
    os << " [e" << key[0] << ",e" << key[1] << ",e" << key[2] << "] =";
    for (size_t i = 0; i < contribs.size(); ++i) {
      os << (i ? " + " : " ") << "t" << contribs[i].first << " (" << linear_combo(contribs[i].second)
         << ")";
    }
    os << ";";
  }
  return os.str();
}

std::vector<std::string> table6_row_ids() {
  return {"abelian3", "L(3,-1)",  "L(3,1)", "L(3,2,a)", "L(3,3)", "L(3,4,a)", "L(3,5)", "L(3,6)",
          "abelian4", "M2",       "M3_a",   "M3_0",     "M4",     "M5",       "M6_ab",  "M6_0b",
          "M7_ab",    "M7_0b",    "M8",     "M9_a",     "M11",    "M12",      "M13_a",  "M13_0",
          "M14_a",    "M14_0",    "gl2",    "E3xK"};
}

LinearForm table7_trace(const std::string& id) {
  if (id == "gl2") return {Rational(0), Rational(0), Rational(0), Rational(1)};
  if (id == "M4") return {Rational(1), Rational(1), Rational(0), Rational(1)};
  if (id == "M5") return {Rational(1), Rational(0), Rational(0), Rational(0)};
  if (id == "M8") return {Rational(1), Rational(0), Rational(1), Rational(0)};
  throw CatalogError("table7 has rows for gl2, M4, M5, M8 only");
}

Table7Row table7_for(const std::string& id) {
  Table7Row row;
  row.id = id;
  row.tau = table7_trace(id);
  StructureConstants lie = catalog_get(id);
  StructureConstants induced = induce_bracket(lie, row.tau);
  row.lie_report = cohomology_report(lie, Coeffs::Adjoint, 1);
  row.induced_report = cohomology_report(induced, Coeffs::Adjoint, 1);
  return row;
}

std::vector<std::string> table7_row_ids() { return {"gl2", "M4", "M5", "M8"}; }

}  // namespace nlie
