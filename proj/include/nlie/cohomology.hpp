#ifndef NLIE_COHOMOLOGY_HPP
#define NLIE_COHOMOLOGY_HPP

#include "nlie/induce.hpp"

namespace nlie {

enum class Theory { Lie, TriLie };
enum class Coeffs { Adjoint, Scalar };

class DegreeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};
class CocycleError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};
/// Carries the violated condition of a lifting theorem ("condition-1", ...).
class LiftPreconditionError : public std::invalid_argument {
public:
  LiftPreconditionError(std::string condition, const std::string& what)
      : std::invalid_argument(what), condition_(std::move(condition)) {}
  const std::string& condition() const { return condition_; }

private:
  std::string condition_;
};

/// Multilinear cochain with declared theory/coefficients/degree, stored on
/// canonical keys:
///   Lie degree p: strictly increasing p-tuples (p = 0: the empty tuple);
///   3-Lie degree 1: single indices;
///   3-Lie degree 2: (i<j, k), skew in the leading pair only;
///   3-Lie degree 3: (i<j, k<l, m), operator output.
/// Values have length dim (adjoint) or 1 (scalar); absent keys are zero.
class Cochain {
public:
  Cochain() = default;
  Cochain(Theory theory, Coeffs coeffs, int degree, int dim);

  Theory theory() const { return theory_; }
  Coeffs coeffs() const { return coeffs_; }
  int degree() const { return degree_; }
  int dim() const { return dim_; }
  int value_dim() const { return coeffs_ == Coeffs::Adjoint ? dim_ : 1; }
  int args() const;  // number of arguments of the multilinear map

  const std::map<IndexTuple, Vec>& components() const { return comp_; }
  void set(const IndexTuple& key_args, const Vec& value);  // resolves key signs
  bool is_zero() const;

  /// Value on basis arguments (any order within each wedge block).
  Vec eval_basis(const IndexTuple& args_idx) const;
  /// Multilinear extension.
  Vec eval(const std::vector<Vec>& args_vecs) const;

  /// Flat coordinate layout used by the cocycle/coboundary spaces: keys in
  /// canonical order, value index minor.
  static std::vector<IndexTuple> key_order(Theory theory, int degree, int dim);
  Vec flatten() const;
  static Cochain unflatten(Theory theory, Coeffs coeffs, int degree, int dim, const Vec& flat);

  friend bool operator==(const Cochain& a, const Cochain& b);
  friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

private:
  Theory theory_ = Theory::Lie;
  Coeffs coeffs_ = Coeffs::Adjoint;
  int degree_ = 1, dim_ = 0;
  std::map<IndexTuple, Vec> comp_;
  // resolves (signed key, sign) for argument indices; sign 0 means the value
  // is forced to zero by skewness of a wedge block
  std::pair<IndexTuple, int> canonical_key(const IndexTuple& args_idx) const;
};

/// A 3-Lie degree-2 cochain is stored pair-skew; this checks whether its
/// trilinear extension is skew in all three arguments.
bool is_fully_skew(const Cochain& c);

/// Chevalley-Eilenberg coboundary for degrees 0..2, rho = ad or rho = 0.
/// Scalar degree 1 uses delta^1 w(x,y) = w([x,y]).
Cochain lie_delta(const StructureConstants& a, const Cochain& c);

/// 3-Lie coboundary for degrees 1..2, the degree-1 and degree-2 instances
/// spelled out by the transfer-theorem proofs; higher degrees unsupported.
Cochain trilie_d(const StructureConstants& a, const Cochain& c);

/// Coboundary of c under the complex matching a's arity.
Cochain coboundary(const StructureConstants& a, const Cochain& c);

/// Matrix of the coboundary operator from degree to degree+1 in the flat
/// coordinate layouts (columns = images of basis cochains).
Matrix coboundary_matrix(const StructureConstants& a, Coeffs coeffs, int degree);

struct CohomologyReport {
  int dim_Z = 0, dim_B = 0, dim_H = 0;
  Subspace Z, B;
};

/// Spaces in flat cochain coordinates. Theory follows a's arity.
/// B conventions: Lie B^1 = image of delta^0 (adjoint) resp. 0 (scalar);
/// 3-Lie B^1 = span of inner maps z -> [e_i,e_j,z] (adjoint) resp. 0.
Subspace cocycle_space(const StructureConstants& a, Coeffs coeffs, int degree);
Subspace coboundary_space(const StructureConstants& a, Coeffs coeffs, int degree);
CohomologyReport cohomology_report(const StructureConstants& a, Coeffs coeffs, int degree);

/// Z^1 adjoint; the degree-1 adjoint cocycles are exactly the derivations.
Subspace derivations(const StructureConstants& a);

/// Support pattern of a degree-1 adjoint subspace as matrix positions
/// (row q, col i), 1-based: the coordinates not identically zero on it.
std::vector<std::pair<int, int>> matrix_support(const Subspace& s, int dim);

/// Matrix (columns = images of e_i) <-> degree-1 adjoint cochain.
Cochain cochain_from_matrix(Theory theory, const Matrix& m);
Matrix matrix_from_cochain(const Cochain& c);

/// tau of f; a trace again whenever f is a derivation (checked).
LinearForm trace_compose_check(const StructureConstants& lie, const LinearForm& tau, const Matrix& f);

struct DerivationTransfer {
  bool is_induced_derivation = false;
  StructureConstants obstruction;  // the bracket induced by tau of f
};

/// f transfers to the induced 3-Lie algebra iff the tau-of-f-induced
/// bracket vanishes; equals the direct d^1 f = 0 test.
DerivationTransfer derivation_transfer(const StructureConstants& lie, const LinearForm& tau,
                                       const Matrix& f);

/// Whether a scalar Lie 1-cocycle stays a 1-cocycle for the induced
/// algebra; always true (the derived algebra only shrinks).
bool scalar_1cocycle_transfer(const StructureConstants& lie, const LinearForm& tau,
                              const LinearForm& omega);

/// d^1 alpha = cyclic sum tau(x) delta^1 alpha(y,z), checked on all basis
/// triples; always true.
bool induced_coboundary_identity(const StructureConstants& lie, const LinearForm& tau,
                                 const LinearForm& alpha);

struct LiftResult {
  Cochain psi;                    // trilie degree-2 cochain, fully skew
  bool scalar_condition3 = true;  // diagnostic; redundant given omega = lambda tau
};

/// psi(x,y,z) = cyclic sum omega(x) phi(y,z) for a Lie 2-cocycle phi and a
/// form omega with omega = lambda tau. Adjoint coefficients additionally
/// require the cyclic omega(x) tau(phi(y,z)) condition. d^2 psi = 0 is
/// asserted on the result.
LiftResult lift_2cocycle(const StructureConstants& lie, const LinearForm& tau, const Cochain& phi,
                         const LinearForm& omega);

}  // namespace nlie

#endif
