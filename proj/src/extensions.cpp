#include "nlie/extensions.hpp"

#include <sstream>

namespace nlie {

namespace {
std::string first_violated_tuple(const StructureConstants& a, const Cochain& omega) {
  Cochain d = coboundary(a, omega);
  for (const auto& [key, value] : d.components()) {
    std::ostringstream os;
    os << "cocycle condition fails at (";
    for (size_t i = 0; i < key.size(); ++i) os << (i ? "," : "") << key[i];
    os << ")";
    return os.str();
  }
  return "";
}
}  // namespace

CentralExtension central_extend(const StructureConstants& a, const Cochain& omega) {
  const int n = a.arity();
  const int d = a.dim();
  if (omega.coeffs() != Coeffs::Scalar) throw CocycleError("extension cocycle must be scalar-valued");
  if (omega.dim() != d || omega.args() != n)
    throw DegreeError("extension cocycle must take arity-many arguments on the base");
  if (omega.theory() == Theory::TriLie && !is_fully_skew(omega))
    throw CocycleError("extension cocycle must be fully skew-symmetric");
  std::string violation = first_violated_tuple(a, omega);
  if (!violation.empty()) throw CocycleError(violation);

  CentralExtension out{a, omega, StructureConstants(n, d + 1)};
  for (const auto& [key, value] : a.table()) {
    Vec v(static_cast<size_t>(d + 1));
    for (int q = 0; q < d; ++q) v[static_cast<size_t>(q)] = value[static_cast<size_t>(q)];
    v[static_cast<size_t>(d)] = omega.eval_basis(key)[0];
    out.total.set_entry(key, v);
  }
  // tuples whose base bracket is zero can still pick up a c-component
  const auto keys = Cochain::key_order(omega.theory(), omega.degree(), d);
  for (const auto& key : keys) {
    if (omega.theory() == Theory::TriLie) {
      // storage keys (i<j,k) include repeated/unordered tuples; only
      // strictly increasing tuples name brackets
      bool increasing = true;
      for (size_t i = 0; i + 1 < key.size(); ++i)
        if (key[i] >= key[i + 1]) increasing = false;
      if (!increasing) continue;
    }
    if (a.table().count(key)) continue;
    Rational w = omega.eval_basis(key)[0];
    if (w.is_zero()) continue;
    Vec v(static_cast<size_t>(d + 1));
    v[static_cast<size_t>(d)] = w;
    out.total.set_entry(key, v);
  }
  return out;
}

InducedExtension induce_extension(const StructureConstants& lie, const LinearForm& tau,
                                  const Cochain& omega) {
  if (lie.arity() != 2) throw ArityError("induce_extension expects a Lie algebra");
  if (!is_trace(lie, tau)) throw TraceError("tau is not a trace");
  const int d = lie.dim();

  CentralExtension lie_ext = central_extend(lie, omega);
  LinearForm tau_bar = tau;
  tau_bar.push_back(Rational(0));  // tau(c) = 0
  StructureConstants induced_of_ext = induce_bracket(lie_ext.total, tau_bar);

  // omega_tau(x,y,z) = tau(x) omega(y,z) + tau(y) omega(z,x) + tau(z) omega(x,y)
  Cochain omega_tau(Theory::TriLie, Coeffs::Scalar, 2, d);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k) {
        Rational v = tau[static_cast<size_t>(i - 1)] * omega.eval_basis({j, k})[0];
        v += tau[static_cast<size_t>(j - 1)] * omega.eval_basis({k, i})[0];
        v += tau[static_cast<size_t>(k - 1)] * omega.eval_basis({i, j})[0];
        Vec val{v};
        omega_tau.set({i, j, k}, val);
      }

  StructureConstants induced = induce_bracket(lie, tau);
  InducedExtension out{central_extend(induced, omega_tau), omega_tau};
  if (out.ext3.total != induced_of_ext)
    throw std::logic_error("induced extension square failed to commute");
  return out;
}

bool is_trivial_extension(const StructureConstants& a, const Cochain& omega) {
  std::string violation = first_violated_tuple(a, omega);
  if (!violation.empty()) throw CocycleError(violation);
  Subspace b = coboundary_space(a, Coeffs::Scalar, 2);
  return b.contains(omega.flatten());
}

}  // namespace nlie
