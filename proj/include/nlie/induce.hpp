#ifndef NLIE_INDUCE_HPP
#define NLIE_INDUCE_HPP

#include "nlie/algebra.hpp"

namespace nlie {

/// A linear form tau, as the coefficient row (tau(e_i) = coeffs[i-1]).
using LinearForm = Vec;

class TraceError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// All tau with tau(bracket) = 0: the annihilator of the derived
/// subalgebra, computed as a nullspace over the increasing basis tuples.
Subspace trace_space(const StructureConstants& a);

bool is_trace(const StructureConstants& a, const LinearForm& tau);

Rational apply_form(const LinearForm& tau, const Vec& v);

/// The (n+1)-ary bracket obtained by alternating tau-weighted omission of
/// one argument; for a Lie algebra this is the cyclic sum tau(x)[y,z].
/// Requires tau in trace_space(a); the result satisfies the fundamental
/// identity and keeps tau as a trace.
StructureConstants induce_bracket(const StructureConstants& a, const LinearForm& tau);

struct InducedMember {
  LinearForm tau;           // canonical basis trace
  int pivot = 0;            // 1-based pivot index, the t_{pivot} weight of the symbolic family
  StructureConstants alg;   // induced (n+1)-ary algebra
};

/// One induced algebra per canonical basis vector of the trace space; the
/// general-parameter table row is the t_i-weighted sum of these members.
std::vector<InducedMember> induced_family(const StructureConstants& a);

}  // namespace nlie

#endif
