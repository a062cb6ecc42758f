#ifndef NLIE_STRUCTURE_HPP
#define NLIE_STRUCTURE_HPP

#include <optional>

#include "nlie/induce.hpp"

namespace nlie {

/// Span of bracket(b_1,...,b_n) over basis choices b_i from part i.
/// parts.size() must equal the arity.
Subspace product_span(const StructureConstants& a, const std::vector<Subspace>& parts);

bool is_subalgebra(const StructureConstants& a, const Subspace& s);
bool is_ideal(const StructureConstants& a, const Subspace& s);

enum class SeriesKind { Derived, Central };

struct SeriesReport {
  SeriesKind kind = SeriesKind::Derived;
  std::vector<Subspace> terms;  // term 0 = whole algebra; ends at 0 or a repeat
  bool stabilized = true;
  std::optional<int> cls;  // least p with term p = 0, if reached
};

SeriesReport derived_series(const StructureConstants& a);
SeriesReport central_series(const StructureConstants& a);
std::optional<int> solvability_class(const StructureConstants& a);
std::optional<int> nilpotency_class(const StructureConstants& a);

/// {x : bracket(x, e-tuple) = 0 for every increasing (n-1)-tuple}.
Subspace center(const StructureConstants& a);

struct IdealTransfer {
  bool predicted = false;  // [A,A] <= J or J <= ker tau
  bool direct = false;     // is_ideal of the induced algebra
};

/// The ideal-transfer criterion as an executable equivalence;
/// predicted == direct always. Requires j to be a Lie ideal.
IdealTransfer ideal_transfer(const StructureConstants& lie, const LinearForm& tau, const Subspace& j);

class IdealPreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// D^2 of the induced algebra is zero (solvability theorem); always true.
bool check_induced_solvable(const StructureConstants& lie, const LinearForm& tau);

struct SeriesComparison {
  bool inclusion_ok = false;           // C^p(A_tau) <= C^p(A) termwise
  bool equality_hypothesis = false;    // exists i with [i,x,y]_tau = [x,y]
  std::optional<Vec> witness;          // such an i when it exists
  std::vector<int> induced_dims;
  std::vector<int> lie_dims;
};

/// Termwise central-series inclusion of the induced algebra into the Lie
/// algebra, with the "exists i" equality hypothesis reported as a
/// diagnostic (solved as a linear system over candidate i).
SeriesComparison check_series_inclusion(const StructureConstants& lie, const LinearForm& tau);

/// Simplicity per the definition: D^1 nonzero and no proper nonzero ideal
/// spanned by basis subsets (catalog diagnostic, not a decision procedure).
bool basis_subset_simple(const StructureConstants& a);

}  // namespace nlie

#endif
