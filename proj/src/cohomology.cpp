#include "nlie/cohomology.hpp"

#include <algorithm>
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

int sort_pair(int& a, int& b) {
  if (a == b) return 0;
  if (a > b) {
    std::swap(a, b);
    return -1;
  }
  return 1;
}
}  // namespace

Cochain::Cochain(Theory theory, Coeffs coeffs, int degree, int dim)
    : theory_(theory), coeffs_(coeffs), degree_(degree), dim_(dim) {
  if (theory == Theory::Lie) {
    if (degree < 0 || degree > 3) throw DegreeError("unsupported Lie cochain degree");
  } else {
    if (degree < 1 || degree > 3) throw DegreeError("unsupported 3-Lie cochain degree");
  }
}

int Cochain::args() const {
  if (theory_ == Theory::Lie) return degree_;
  return 2 * degree_ - 1;  // (wedge^2 A)^(degree-1) wedge A
}

std::pair<IndexTuple, int> Cochain::canonical_key(const IndexTuple& a) const {
  if (theory_ == Theory::Lie) {
    IndexTuple key = a;
    int sign = sort_sign(key);
    return {key, sign};
  }
  IndexTuple key = a;
  int sign = 1;
  // skew within each leading pair block; the trailing single is free
  for (int block = 0; block + 1 < static_cast<int>(key.size()); block += 2) {
    int s = sort_pair(key[static_cast<size_t>(block)], key[static_cast<size_t>(block) + 1]);
    if (s == 0) return {key, 0};
    sign *= s;
  }
  return {key, sign};
}

void Cochain::set(const IndexTuple& key_args, const Vec& value) {
  if (static_cast<int>(key_args.size()) != args()) throw DegreeError("cochain key length mismatch");
  if (static_cast<int>(value.size()) != value_dim()) throw DimensionError("cochain value length mismatch");
  auto [key, sign] = canonical_key(key_args);
  if (sign == 0) {
    if (!is_zero_vec(value)) throw AntisymmetryError("nonzero cochain value on repeated wedge indices");
    return;
  }
  Vec v = sign > 0 ? value : scale_vec(Rational(-1), value);
  if (is_zero_vec(v))
    comp_.erase(key);
  else
    comp_[key] = v;
}

bool Cochain::is_zero() const { return comp_.empty(); }

Vec Cochain::eval_basis(const IndexTuple& args_idx) const {
  auto [key, sign] = canonical_key(args_idx);
  if (sign == 0) return zero_vec(value_dim());
  auto it = comp_.find(key);
  if (it == comp_.end()) return zero_vec(value_dim());
  return sign > 0 ? it->second : scale_vec(Rational(-1), it->second);
}

Vec Cochain::eval(const std::vector<Vec>& args_vecs) const {
  if (static_cast<int>(args_vecs.size()) != args()) throw DegreeError("cochain argument count mismatch");
  Vec out = zero_vec(value_dim());
  IndexTuple idx(args_vecs.size());
  auto rec = [&](auto&& self, size_t pos, const Rational& coeff) -> void {
    if (coeff.is_zero()) return;
    if (pos == args_vecs.size()) {
      Vec v = eval_basis(idx);
      for (size_t q = 0; q < v.size(); ++q) out[q] += coeff * v[q];
      return;
    }
    for (int i = 1; i <= dim_; ++i) {
      const Rational& c = args_vecs[pos][static_cast<size_t>(i - 1)];
      if (c.is_zero()) continue;
      idx[pos] = i;
      self(self, pos + 1, coeff * c);
    }
  };
  rec(rec, 0, Rational(1));
  return out;
}

std::vector<IndexTuple> Cochain::key_order(Theory theory, int degree, int dim) {
  std::vector<IndexTuple> keys;
  if (theory == Theory::Lie) {
    if (degree == 0) {
      keys.push_back({});
      return keys;
    }
    for_each_increasing(degree, dim, [&](const IndexTuple& t) { keys.push_back(t); });
    return keys;
  }
  if (degree == 1) {
    for (int i = 1; i <= dim; ++i) keys.push_back({i});
    return keys;
  }
  if (degree == 2) {
    for_each_increasing(2, dim, [&](const IndexTuple& p) {
      for (int k = 1; k <= dim; ++k) keys.push_back({p[0], p[1], k});
    });
    return keys;
  }
  // degree 3: (pair, pair, single)
  std::vector<IndexTuple> pairs;
  for_each_increasing(2, dim, [&](const IndexTuple& p) { pairs.push_back(p); });
  for (const auto& p1 : pairs)
    for (const auto& p2 : pairs)
      for (int m = 1; m <= dim; ++m) keys.push_back({p1[0], p1[1], p2[0], p2[1], m});
  return keys;
}

Vec Cochain::flatten() const {
  std::vector<IndexTuple> keys = key_order(theory_, degree_, dim_);
  const int vd = value_dim();
  Vec out = zero_vec(static_cast<int>(keys.size()) * vd);
  for (size_t k = 0; k < keys.size(); ++k) {
    auto it = comp_.find(keys[k]);
    if (it == comp_.end()) continue;
    for (int q = 0; q < vd; ++q) out[k * static_cast<size_t>(vd) + static_cast<size_t>(q)] = it->second[static_cast<size_t>(q)];
  }
  return out;
}

Cochain Cochain::unflatten(Theory theory, Coeffs coeffs, int degree, int dim, const Vec& flat) {
  Cochain c(theory, coeffs, degree, dim);
  std::vector<IndexTuple> keys = key_order(theory, degree, dim);
  const int vd = c.value_dim();
  if (flat.size() != keys.size() * static_cast<size_t>(vd))
    throw DimensionError("flat cochain coordinate length mismatch");
  for (size_t k = 0; k < keys.size(); ++k) {
    Vec v(static_cast<size_t>(vd));
    for (int q = 0; q < vd; ++q) v[static_cast<size_t>(q)] = flat[k * static_cast<size_t>(vd) + static_cast<size_t>(q)];
    if (!is_zero_vec(v)) c.comp_[keys[k]] = v;
  }
  return c;
}

bool operator==(const Cochain& a, const Cochain& b) {
  return a.theory_ == b.theory_ && a.coeffs_ == b.coeffs_ && a.degree_ == b.degree_ &&
         a.dim_ == b.dim_ && a.comp_ == b.comp_;
}

bool is_fully_skew(const Cochain& c) {
  if (c.theory() != Theory::TriLie || c.degree() != 2) throw DegreeError("full-skewness applies to 3-Lie 2-cochains");
  const int d = c.dim();
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k) {
        Vec lhs = c.eval_basis({i, j, k});
        Vec rhs = scale_vec(Rational(-1), c.eval_basis({i, k, j}));
        if (lhs != rhs) return false;
      }
  return true;
}

Cochain lie_delta(const StructureConstants& a, const Cochain& c) {
  if (a.arity() != 2) throw ArityError("lie_delta expects a Lie algebra");
  if (c.theory() != Theory::Lie || c.dim() != a.dim()) throw DegreeError("cochain/algebra mismatch");
  const int d = a.dim();
  const bool adjoint = c.coeffs() == Coeffs::Adjoint;
  auto ad = [&](int i, const Vec& v) { return a.bracket({unit_vec(d, i - 1), v}); };

  if (c.degree() == 0) {
    Cochain out(Theory::Lie, c.coeffs(), 1, d);
    Vec m = c.eval_basis({});
    for (int i = 1; i <= d; ++i) {
      if (adjoint)
        out.set({i}, ad(i, m));
      else
        out.set({i}, zero_vec(1));
    }
    return out;
  }
  if (c.degree() == 1) {
    Cochain out(Theory::Lie, c.coeffs(), 2, d);
    for_each_increasing(2, d, [&](const IndexTuple& t) {
      int i = t[0], j = t[1];
      if (adjoint) {
        Vec v = ad(i, c.eval_basis({j}));
        v = sub_vec(v, ad(j, c.eval_basis({i})));
        v = sub_vec(v, c.eval({a.bracket_basis({i, j})}));
        out.set(t, v);
      } else {
        // scalar convention: delta^1 w(x,y) = w([x,y])
        out.set(t, c.eval({a.bracket_basis({i, j})}));
      }
    });
    return out;
  }
  if (c.degree() == 2) {
    Cochain out(Theory::Lie, c.coeffs(), 3, d);
    for_each_increasing(3, d, [&](const IndexTuple& t) {
      int i = t[0], j = t[1], k = t[2];
      Vec v = zero_vec(c.value_dim());
      if (adjoint) {
        v = add_vec(v, ad(i, c.eval_basis({j, k})));
        v = sub_vec(v, ad(j, c.eval_basis({i, k})));
        v = add_vec(v, ad(k, c.eval_basis({i, j})));
      }
      v = sub_vec(v, c.eval({a.bracket_basis({i, j}), unit_vec(d, k - 1)}));
      v = add_vec(v, c.eval({a.bracket_basis({i, k}), unit_vec(d, j - 1)}));
      v = sub_vec(v, c.eval({a.bracket_basis({j, k}), unit_vec(d, i - 1)}));
      out.set(t, v);
    });
    return out;
  }
  throw DegreeError("lie_delta supports degrees 0..2");
}

Cochain trilie_d(const StructureConstants& a, const Cochain& c) {
  if (a.arity() != 3) throw ArityError("trilie_d expects a 3-Lie algebra");
  if (c.theory() != Theory::TriLie || c.dim() != a.dim()) throw DegreeError("cochain/algebra mismatch");
  const int d = a.dim();
  const bool adjoint = c.coeffs() == Coeffs::Adjoint;

  if (c.degree() == 1) {
    Cochain out(Theory::TriLie, c.coeffs(), 2, d);
    for_each_increasing(2, d, [&](const IndexTuple& p) {
      for (int k = 1; k <= d; ++k) {
        IndexTuple t = {p[0], p[1], k};
        if (adjoint) {
          // sum of inner substitutions minus f of the bracket
          Vec v = zero_vec(d);
          for (int s = 0; s < 3; ++s) {
            std::vector<Vec> args;
            for (int j = 0; j < 3; ++j) {
              Vec ej = unit_vec(d, t[static_cast<size_t>(j)] - 1);
              args.push_back(j == s ? c.eval({ej}) : ej);
            }
            v = add_vec(v, a.bracket(args));
          }
          v = sub_vec(v, c.eval({a.bracket_basis(t)}));
          out.set(t, v);
        } else {
          out.set(t, c.eval({a.bracket_basis(t)}));
        }
      }
    });
    return out;
  }
  if (c.degree() == 2) {
    Cochain out(Theory::TriLie, c.coeffs(), 3, d);
    std::vector<IndexTuple> pairs;
    for_each_increasing(2, d, [&](const IndexTuple& p) { pairs.push_back(p); });
    for (const auto& p1 : pairs)
      for (const auto& p2 : pairs)
        for (int m = 1; m <= d; ++m) {
          Vec x1 = unit_vec(d, p1[0] - 1), x2 = unit_vec(d, p1[1] - 1);
          Vec y1 = unit_vec(d, p2[0] - 1), y2 = unit_vec(d, p2[1] - 1);
          Vec z = unit_vec(d, m - 1);
          Vec v = c.eval({x1, x2, a.bracket({y1, y2, z})});
          v = sub_vec(v, c.eval({a.bracket({x1, x2, y1}), y2, z}));
          v = sub_vec(v, c.eval({y1, a.bracket({x1, x2, y2}), z}));
          v = sub_vec(v, c.eval({y1, y2, a.bracket({x1, x2, z})}));
          if (adjoint) {
            v = add_vec(v, a.bracket({x1, x2, c.eval({y1, y2, z})}));
            v = sub_vec(v, a.bracket({c.eval({x1, x2, y1}), y2, z}));
            v = sub_vec(v, a.bracket({y1, c.eval({x1, x2, y2}), z}));
            v = sub_vec(v, a.bracket({y1, y2, c.eval({x1, x2, z})}));
          }
          out.set({p1[0], p1[1], p2[0], p2[1], m}, v);
        }
    return out;
  }
  throw DegreeError("trilie_d supports degrees 1..2 only");
}

Cochain coboundary(const StructureConstants& a, const Cochain& c) {
  return a.arity() == 2 ? lie_delta(a, c) : trilie_d(a, c);
}

Matrix coboundary_matrix(const StructureConstants& a, Coeffs coeffs, int degree) {
  Theory theory = a.arity() == 2 ? Theory::Lie : Theory::TriLie;
  Cochain probe(theory, coeffs, degree, a.dim());
  std::vector<IndexTuple> dom_keys = Cochain::key_order(theory, degree, a.dim());
  std::vector<IndexTuple> out_keys = Cochain::key_order(theory, degree + 1, a.dim());
  const int vd = probe.value_dim();
  const int ncols = static_cast<int>(dom_keys.size()) * vd;
  const int nrows = static_cast<int>(out_keys.size()) * vd;
  Matrix m(nrows, ncols);
  for (int col = 0; col < ncols; ++col) {
    Vec flat = zero_vec(ncols);
    flat[static_cast<size_t>(col)] = Rational(1);
    Cochain basis = Cochain::unflatten(theory, coeffs, degree, a.dim(), flat);
    Vec image = coboundary(a, basis).flatten();
    for (int row = 0; row < nrows; ++row) m.at(row, col) = image[static_cast<size_t>(row)];
  }
  return m;
}

Subspace cocycle_space(const StructureConstants& a, Coeffs coeffs, int degree) {
  if (degree != 1 && degree != 2) throw DegreeError("cocycle spaces computed for degrees 1 and 2");
  return nullspace(coboundary_matrix(a, coeffs, degree));
}

Subspace coboundary_space(const StructureConstants& a, Coeffs coeffs, int degree) {
  Theory theory = a.arity() == 2 ? Theory::Lie : Theory::TriLie;
  const int d = a.dim();
  const int vd = coeffs == Coeffs::Adjoint ? d : 1;
  const int flat_size = static_cast<int>(Cochain::key_order(theory, degree, d).size()) * vd;
  if (degree == 1) {
    if (coeffs == Coeffs::Scalar) return Subspace::zero(flat_size);
    if (theory == Theory::Lie) {
      // image of delta^0: spanned by the maps x -> [x, e_q]
      std::vector<Vec> cols;
      Matrix m = coboundary_matrix(a, coeffs, 0);
      for (int c = 0; c < m.cols(); ++c) {
        Vec col(static_cast<size_t>(m.rows()));
        for (int r = 0; r < m.rows(); ++r) col[static_cast<size_t>(r)] = m.at(r, c);
        cols.push_back(col);
      }
      return Subspace::span(flat_size, cols);
    }
    // 3-Lie degree-1 coboundaries: inner derivations z -> [e_i, e_j, z]
    std::vector<Vec> flats;
    for_each_increasing(2, d, [&](const IndexTuple& p) {
      Cochain inner(Theory::TriLie, Coeffs::Adjoint, 1, d);
      for (int z = 1; z <= d; ++z)
        inner.set({z}, a.bracket_basis({p[0], p[1], z}));
      flats.push_back(inner.flatten());
    });
    return Subspace::span(flat_size, flats);
  }
  if (degree == 2) {
    Matrix m = coboundary_matrix(a, coeffs, 1);
    std::vector<Vec> cols;
    for (int c = 0; c < m.cols(); ++c) {
      Vec col(static_cast<size_t>(m.rows()));
      for (int r = 0; r < m.rows(); ++r) col[static_cast<size_t>(r)] = m.at(r, c);
      cols.push_back(col);
    }
    return Subspace::span(flat_size, cols);
  }
  throw DegreeError("coboundary spaces computed for degrees 1 and 2");
}

CohomologyReport cohomology_report(const StructureConstants& a, Coeffs coeffs, int degree) {
  CohomologyReport rep;
  rep.Z = cocycle_space(a, coeffs, degree);
  rep.B = coboundary_space(a, coeffs, degree);
  if (!rep.B.leq(rep.Z)) throw std::logic_error("coboundary space escapes the cocycle space");
  rep.dim_Z = rep.Z.dim();
  rep.dim_B = rep.B.dim();
  rep.dim_H = rep.dim_Z - rep.dim_B;
  return rep;
}

Subspace derivations(const StructureConstants& a) { return cocycle_space(a, Coeffs::Adjoint, 1); }

std::vector<std::pair<int, int>> matrix_support(const Subspace& s, int dim) {
  std::vector<std::pair<int, int>> out;
  std::vector<bool> seen(static_cast<size_t>(dim) * dim, false);
  for (const Vec& v : s.basis_rows())
    for (size_t f = 0; f < v.size(); ++f)
      if (!v[f].is_zero()) seen[f] = true;
  for (size_t f = 0; f < seen.size(); ++f)
    if (seen[f]) {
      int i = static_cast<int>(f) / dim + 1;  // key (argument) index
      int q = static_cast<int>(f) % dim + 1;  // value coordinate
      out.emplace_back(q, i);
    }
  std::sort(out.begin(), out.end());
  return out;
}

Cochain cochain_from_matrix(Theory theory, const Matrix& m) {
  const int d = m.rows();
  if (m.cols() != d) throw DimensionError("derivation matrix must be square");
  Cochain c(theory, Coeffs::Adjoint, 1, d);
  for (int i = 1; i <= d; ++i) {
    Vec col(static_cast<size_t>(d));
    for (int q = 0; q < d; ++q) col[static_cast<size_t>(q)] = m.at(q, i - 1);
    c.set({i}, col);
  }
  return c;
}

Matrix matrix_from_cochain(const Cochain& c) {
  const int d = c.dim();
  Matrix m(d, d);
  for (int i = 1; i <= d; ++i) {
    Vec col = c.eval_basis({i});
    for (int q = 0; q < d; ++q) m.at(q, i - 1) = col[static_cast<size_t>(q)];
  }
  return m;
}

LinearForm trace_compose_check(const StructureConstants& lie, const LinearForm& tau, const Matrix& f) {
  if (!is_trace(lie, tau)) throw TraceError("tau is not a trace");
  Theory theory = lie.arity() == 2 ? Theory::Lie : Theory::TriLie;
  if (!coboundary(lie, cochain_from_matrix(theory, f)).is_zero())
    throw CocycleError("f is not a derivation");
  const int d = lie.dim();
  LinearForm out = zero_vec(d);
  for (int j = 0; j < d; ++j)
    for (int q = 0; q < d; ++q) out[static_cast<size_t>(j)] += tau[static_cast<size_t>(q)] * f.at(q, j);
  if (!is_trace(lie, out)) throw std::logic_error("tau of a derivation failed to be a trace");
  return out;
}

DerivationTransfer derivation_transfer(const StructureConstants& lie, const LinearForm& tau,
                                       const Matrix& f) {
  LinearForm tf = trace_compose_check(lie, tau, f);
  DerivationTransfer out;
  out.obstruction = induce_bracket(lie, tf);
  out.is_induced_derivation = out.obstruction.is_abelian();
  return out;
}

bool scalar_1cocycle_transfer(const StructureConstants& lie, const LinearForm& tau,
                              const LinearForm& omega) {
  if (!is_trace(lie, tau)) throw TraceError("tau is not a trace");
  if (!is_trace(lie, omega)) throw CocycleError("omega is not a scalar 1-cocycle");
  StructureConstants ind = induce_bracket(lie, tau);
  for (const auto& [key, value] : ind.table())
    if (!apply_form(omega, value).is_zero()) return false;
  return true;
}

bool induced_coboundary_identity(const StructureConstants& lie, const LinearForm& tau,
                                 const LinearForm& alpha) {
  if (!is_trace(lie, tau)) throw TraceError("tau is not a trace");
  StructureConstants ind = induce_bracket(lie, tau);
  const int d = lie.dim();
  bool ok = true;
  for_each_increasing(3, d, [&](const IndexTuple& t) {
    Rational lhs = apply_form(alpha, ind.bracket_basis(t));
    Rational rhs;
    for (int c = 0; c < 3; ++c) {
      int x = t[static_cast<size_t>(c)];
      int y = t[static_cast<size_t>((c + 1) % 3)];
      int z = t[static_cast<size_t>((c + 2) % 3)];
      rhs += tau[static_cast<size_t>(x - 1)] * apply_form(alpha, lie.bracket_basis({y, z}));
    }
    if (lhs != rhs) ok = false;
  });
  return ok;
}

LiftResult lift_2cocycle(const StructureConstants& lie, const LinearForm& tau, const Cochain& phi,
                         const LinearForm& omega) {
  if (lie.arity() != 2) throw ArityError("lift_2cocycle expects a Lie algebra");
  if (phi.theory() != Theory::Lie || phi.degree() != 2 || phi.dim() != lie.dim())
    throw DegreeError("phi must be a Lie 2-cochain of matching dimension");
  if (!is_trace(lie, tau)) throw TraceError("tau is not a trace");
  if (!lie_delta(lie, phi).is_zero())
    throw LiftPreconditionError("cocycle", "phi is not a 2-cocycle");
  const int d = lie.dim();
  // condition 1: tau(x) omega(y) = tau(y) omega(x), i.e. omega = lambda tau
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (tau[static_cast<size_t>(i)] * omega[static_cast<size_t>(j)] !=
          tau[static_cast<size_t>(j)] * omega[static_cast<size_t>(i)])
        throw LiftPreconditionError("condition-1", "omega is not proportional to tau");
  // condition 2: omega kills brackets
  for (const auto& [key, value] : lie.table())
    if (!apply_form(omega, value).is_zero())
      throw LiftPreconditionError("condition-2", "omega does not vanish on the derived algebra");

  const bool adjoint = phi.coeffs() == Coeffs::Adjoint;
  if (adjoint) {
    // condition 3: cyclic omega(x) tau(phi(y,z)) = 0 on basis triples
    bool ok = true;
    for_each_increasing(3, d, [&](const IndexTuple& t) {
      Rational s;
      for (int c = 0; c < 3; ++c) {
        int x = t[static_cast<size_t>(c)];
        int y = t[static_cast<size_t>((c + 1) % 3)];
        int z = t[static_cast<size_t>((c + 2) % 3)];
        s += omega[static_cast<size_t>(x - 1)] * apply_form(tau, phi.eval_basis({y, z}));
      }
      if (!s.is_zero()) ok = false;
    });
    if (!ok) throw LiftPreconditionError("condition-3", "cyclic omega tau phi condition fails");
  }

  LiftResult out;
  out.psi = Cochain(Theory::TriLie, phi.coeffs(), 2, d);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k) {
        Vec v = scale_vec(omega[static_cast<size_t>(i - 1)], phi.eval_basis({j, k}));
        v = add_vec(v, scale_vec(omega[static_cast<size_t>(j - 1)], phi.eval_basis({k, i})));
        v = add_vec(v, scale_vec(omega[static_cast<size_t>(k - 1)], phi.eval_basis({i, j})));
        out.psi.set({i, j, k}, v);
      }

  if (!adjoint) {
    // auxiliary vanishing condition of the scalar lifting theorem, reported
    // as a diagnostic: redundant once omega = lambda tau (d^2 psi = 0 is
    // asserted below)
    out.scalar_condition3 = true;
    for (int x1 = 1; x1 <= d && out.scalar_condition3; ++x1)
      for (int x2 = 1; x2 <= d && out.scalar_condition3; ++x2)
        for (int y1 = 1; y1 <= d && out.scalar_condition3; ++y1)
          for (int y2 = 1; y2 <= d && out.scalar_condition3; ++y2)
            for (int z = 1; z <= d; ++z) {
              Rational v = omega[static_cast<size_t>(y2 - 1)] *
                           (tau[static_cast<size_t>(x1 - 1)] *
                                phi.eval({lie.bracket_basis({y1, z}), unit_vec(d, x2 - 1)})[0] -
                            tau[static_cast<size_t>(x2 - 1)] *
                                phi.eval({lie.bracket_basis({y1, z}), unit_vec(d, x1 - 1)})[0]);
              if (!v.is_zero()) {
                out.scalar_condition3 = false;
                break;
              }
            }
  }

  StructureConstants ind = induce_bracket(lie, tau);
  if (!trilie_d(ind, out.psi).is_zero())
    throw std::logic_error("lifted cochain failed d^2 psi = 0");
  return out;
}

}  // namespace nlie
