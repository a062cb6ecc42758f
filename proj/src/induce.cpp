#include "nlie/induce.hpp"

#include <functional>

namespace nlie {

namespace {
void for_each_increasing(int len, int d, const std::function<void(const IndexTuple&)>& body) {
  IndexTuple t(static_cast<size_t>(len));
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == len) {
      body(t);
      return;
    }
    for (int i = start; i <= d; ++i) {
      t[static_cast<size_t>(pos)] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 1);
}
}  // namespace

Rational apply_form(const LinearForm& tau, const Vec& v) { return dot(tau, v); }

Subspace trace_space(const StructureConstants& a) {
  std::vector<Vec> rows;
  for (const auto& [key, value] : a.table()) rows.push_back(value);
  if (rows.empty()) return Subspace::full(a.dim());
  return nullspace(Matrix::from_rows(rows, a.dim()));
}

bool is_trace(const StructureConstants& a, const LinearForm& tau) {
  if (static_cast<int>(tau.size()) != a.dim()) throw DimensionError("trace form length mismatch");
  for (const auto& [key, value] : a.table())
    if (!apply_form(tau, value).is_zero()) return false;
  return true;
}

StructureConstants induce_bracket(const StructureConstants& a, const LinearForm& tau) {
  if (!is_trace(a, tau))
    throw TraceError("form is not a trace of the bracket");
  const int n = a.arity();
  const int d = a.dim();
  StructureConstants out(n + 1, d);
  for_each_increasing(n + 1, d, [&](const IndexTuple& t) {
    Vec value = zero_vec(d);
    for (int k = 0; k <= n; ++k) {
      // tau-weighted omission of slot k, alternating signs, + on slot 0:
      // for n=2 this is the cyclic sum tau(x)[y,z]
      const Rational& w = tau[static_cast<size_t>(t[static_cast<size_t>(k)] - 1)];
      if (w.is_zero()) continue;
      IndexTuple rest;
      rest.reserve(static_cast<size_t>(n));
      for (int j = 0; j <= n; ++j)
        if (j != k) rest.push_back(t[static_cast<size_t>(j)]);
      Vec b = a.bracket_basis(rest);
      Rational sign(k % 2 == 0 ? 1 : -1);
      for (int q = 0; q < d; ++q) value[static_cast<size_t>(q)] += sign * w * b[static_cast<size_t>(q)];
    }
    out.set_entry(t, value);
  });
  return out;
}

std::vector<InducedMember> induced_family(const StructureConstants& a) {
  if (a.arity() != 2) throw ArityError("induced_family expects a Lie algebra");
  std::vector<InducedMember> out;
  Subspace ts = trace_space(a);
  for (const Vec& tau : ts.basis_rows()) {
    int pivot = 0;
    for (size_t i = 0; i < tau.size(); ++i)
      if (!tau[i].is_zero()) {
        pivot = static_cast<int>(i) + 1;
        break;
      }
    out.push_back({tau, pivot, induce_bracket(a, tau)});
  }
  return out;
}

}  // namespace nlie
