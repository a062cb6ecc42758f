#ifndef NLIE_EXTENSIONS_HPP
#define NLIE_EXTENSIONS_HPP

#include "nlie/cohomology.hpp"

namespace nlie {

/// Central extension by a 1-dimensional center: the central element is the
/// last basis vector, index dim+1; total bracket restricted to the first
/// dim coordinates reproduces the base plus the cocycle on the c-component,
/// and every bracket involving c vanishes.
struct CentralExtension {
  StructureConstants base;
  Cochain cocycle;  // scalar, arguments = arity of base
  StructureConstants total;
};

/// Extends by a scalar cocycle omega of the matching degree (Lie: 2-cochain
/// with delta^2 omega = 0; 3-Lie: trilinear 2-cochain with d^2 omega = 0).
/// The cocycle check failure carries the first violated tuple.
CentralExtension central_extend(const StructureConstants& a, const Cochain& omega);

struct InducedExtension {
  CentralExtension ext3;  // central extension of the induced 3-Lie algebra
  Cochain omega_tau;      // omega_tau(x,y,z) = cyclic tau(x) omega(y,z)
};

/// The induced-extension square: inducing the extended Lie algebra by tau extended
/// with tau(c) = 0 equals centrally extending the induced algebra by
/// omega_tau, table for table (asserted).
InducedExtension induce_extension(const StructureConstants& lie, const LinearForm& tau,
                                  const Cochain& omega);

/// Cohomological triviality: omega is a coboundary of the matching scalar
/// complex (for 3-Lie algebras, membership in {d^1 alpha} over all forms).
bool is_trivial_extension(const StructureConstants& a, const Cochain& omega);

}  // namespace nlie

#endif
