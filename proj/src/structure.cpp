#include "nlie/structure.hpp"

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

SeriesReport run_series(const StructureConstants& a, SeriesKind kind) {
  SeriesReport out;
  out.kind = kind;
  Subspace whole = Subspace::full(a.dim());
  out.terms.push_back(whole);
  if (whole.is_zero()) {
    out.cls = 0;
    return out;
  }
  while (true) {
    const Subspace& prev = out.terms.back();
    std::vector<Subspace> parts;
    if (kind == SeriesKind::Derived) {
      parts.assign(static_cast<size_t>(a.arity()), prev);
    } else {
      parts.push_back(prev);
      for (int i = 1; i < a.arity(); ++i) parts.push_back(whole);
    }
    Subspace next = product_span(a, parts);
    out.terms.push_back(next);
    if (next.is_zero()) {
      out.cls = static_cast<int>(out.terms.size()) - 1;
      break;
    }
    if (next == prev) break;  // stabilized above zero
  }
  return out;
}
}  // namespace

Subspace product_span(const StructureConstants& a, const std::vector<Subspace>& parts) {
  if (static_cast<int>(parts.size()) != a.arity())
    throw ArityError("product_span expects one part per bracket slot");
  for (const Subspace& s : parts)
    if (s.ambient_dim() != a.dim()) throw DimensionError("product_span ambient mismatch");
  std::vector<Vec> values;
  std::vector<std::vector<Vec>> bases;
  for (const Subspace& s : parts) {
    if (s.is_zero()) return Subspace::zero(a.dim());
    bases.push_back(s.basis_rows());
  }
  std::vector<size_t> pick(parts.size(), 0);
  while (true) {
    std::vector<Vec> args;
    for (size_t i = 0; i < parts.size(); ++i) args.push_back(bases[i][pick[i]]);
    values.push_back(a.bracket(args));
    size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < bases[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return Subspace::span(a.dim(), values);
}

bool is_subalgebra(const StructureConstants& a, const Subspace& s) {
  std::vector<Subspace> parts(static_cast<size_t>(a.arity()), s);
  return product_span(a, parts).leq(s);
}

bool is_ideal(const StructureConstants& a, const Subspace& s) {
  std::vector<Subspace> parts;
  parts.push_back(s);
  for (int i = 1; i < a.arity(); ++i) parts.push_back(Subspace::full(a.dim()));
  return product_span(a, parts).leq(s);
}

SeriesReport derived_series(const StructureConstants& a) { return run_series(a, SeriesKind::Derived); }
SeriesReport central_series(const StructureConstants& a) { return run_series(a, SeriesKind::Central); }

std::optional<int> solvability_class(const StructureConstants& a) { return derived_series(a).cls; }
std::optional<int> nilpotency_class(const StructureConstants& a) { return central_series(a).cls; }

Subspace center(const StructureConstants& a) {
  const int d = a.dim();
  const int n = a.arity();
  if (d == 0) return Subspace::zero(0);
  std::vector<Vec> rows;
  for_each_increasing(n - 1, d, [&](const IndexTuple& t) {
    // row block of the map x -> bracket(x, e_t)
    Matrix block(d, d);
    for (int i = 1; i <= d; ++i) {
      std::vector<Vec> args;
      args.push_back(unit_vec(d, i - 1));
      for (int j : t) args.push_back(unit_vec(d, j - 1));
      Vec col = a.bracket(args);
      for (int q = 0; q < d; ++q) block.at(q, i - 1) = col[static_cast<size_t>(q)];
    }
    for (int q = 0; q < d; ++q) rows.push_back(block.row(q));
  });
  if (rows.empty()) return Subspace::full(d);
  return nullspace(Matrix::from_rows(rows, d));
}

IdealTransfer ideal_transfer(const StructureConstants& lie, const LinearForm& tau, const Subspace& j) {
  if (lie.arity() != 2) throw ArityError("ideal_transfer expects a Lie algebra");
  if (!is_ideal(lie, j)) throw IdealPreconditionError("subspace is not a Lie ideal");
  IdealTransfer out;
  Subspace derived = product_span(lie, {Subspace::full(lie.dim()), Subspace::full(lie.dim())});
  Subspace ker_tau = nullspace(Matrix::from_rows({tau}, lie.dim()));
  out.predicted = derived.leq(j) || j.leq(ker_tau);
  out.direct = is_ideal(induce_bracket(lie, tau), j);
  return out;
}

bool check_induced_solvable(const StructureConstants& lie, const LinearForm& tau) {
  StructureConstants ind = induce_bracket(lie, tau);
  Subspace whole = Subspace::full(ind.dim());
  Subspace d1 = product_span(ind, {whole, whole, whole});
  Subspace d2 = product_span(ind, {d1, d1, d1});
  return d2.is_zero();
}

SeriesComparison check_series_inclusion(const StructureConstants& lie, const LinearForm& tau) {
  StructureConstants ind = induce_bracket(lie, tau);
  SeriesComparison out;
  SeriesReport cl = central_series(lie);
  SeriesReport ci = central_series(ind);
  size_t len = std::max(cl.terms.size(), ci.terms.size());
  out.inclusion_ok = true;
  for (size_t p = 0; p < len; ++p) {
    const Subspace& ti = p < ci.terms.size() ? ci.terms[p] : ci.terms.back();
    const Subspace& tl = p < cl.terms.size() ? cl.terms[p] : cl.terms.back();
    out.induced_dims.push_back(ti.dim());
    out.lie_dims.push_back(tl.dim());
    if (!ti.leq(tl)) out.inclusion_ok = false;
  }
  // hypothesis: exists i with [i,x,y]_tau = [x,y] for all x,y; linear in i
  const int d = lie.dim();
  std::vector<Vec> rows;
  std::vector<Rational> rhs;
  for (int x = 1; x <= d; ++x)
    for (int y = x + 1; y <= d; ++y) {
      Vec target = lie.bracket_basis({x, y});
      Matrix block(d, d);
      for (int i = 1; i <= d; ++i) {
        Vec col = ind.bracket({unit_vec(d, i - 1), unit_vec(d, x - 1), unit_vec(d, y - 1)});
        for (int q = 0; q < d; ++q) block.at(q, i - 1) = col[static_cast<size_t>(q)];
      }
      for (int q = 0; q < d; ++q) {
        rows.push_back(block.row(q));
        rhs.push_back(target[static_cast<size_t>(q)]);
      }
    }
  // solve rows * i = rhs by reducing the augmented matrix
  Matrix aug(static_cast<int>(rows.size()), d + 1);
  for (size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < d; ++c) aug.at(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
    aug.at(static_cast<int>(r), d) = rhs[r];
  }
  RrefResult rr = rref(aug);
  bool consistent = true;
  for (int p : rr.pivots)
    if (p == d) consistent = false;
  out.equality_hypothesis = consistent;
  if (consistent) {
    Vec witness = zero_vec(d);
    for (int r = 0; r < rr.rank; ++r)
      if (rr.pivots[static_cast<size_t>(r)] < d)
        witness[static_cast<size_t>(rr.pivots[static_cast<size_t>(r)])] = rr.reduced.at(r, d);
    out.witness = witness;
  }
  return out;
}

bool basis_subset_simple(const StructureConstants& a) {
  const int d = a.dim();
  Subspace whole = Subspace::full(d);
  std::vector<Subspace> parts(static_cast<size_t>(a.arity()), whole);
  if (product_span(a, parts).is_zero()) return false;
  for (unsigned mask = 1; mask + 1 < (1u << d); ++mask) {
    std::vector<Vec> vs;
    for (int i = 0; i < d; ++i)
      if (mask & (1u << i)) vs.push_back(unit_vec(d, i));
    Subspace s = Subspace::span(d, vs);
    if (s.dim() > 0 && s.dim() < d && is_ideal(a, s)) return false;
  }
  return true;
}

}  // namespace nlie
