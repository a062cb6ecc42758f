#ifndef NLIE_ALGEBRA_HPP
#define NLIE_ALGEBRA_HPP

#include <map>
#include <vector>

#include "nlie/linalg.hpp"

namespace nlie {

/// Basis indices are 1-based in all public I/O, matching e_1,...,e_d.
using IndexTuple = std::vector<int>;

struct BracketAssignment {
  IndexTuple indices;  // 1-based, any order
  Vec value;           // length dim
};

class ArityError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};
class AntisymmetryError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};
class DuplicateBracketError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Sign of the permutation sorting `idx` ascending; 0 if an index repeats.
int sort_sign(IndexTuple& idx);

/// Skew-symmetric n-linear bracket of a d-dimensional algebra, stored on
/// strictly increasing index tuples. Absent tuples mean zero bracket.
class StructureConstants {
public:
  StructureConstants() = default;
  StructureConstants(int arity, int dim) : arity_(arity), dim_(dim) {}

  static StructureConstants abelian(int arity, int dim) { return StructureConstants(arity, dim); }

  /// Reorders tuples to strictly increasing with sign flips; rejects
  /// repeated-index keys with nonzero value and duplicate tuple definitions;
  /// drops zero values.
  static StructureConstants canonicalize(int arity, int dim, const std::vector<BracketAssignment>& raw);

  int arity() const { return arity_; }
  int dim() const { return dim_; }
  const std::map<IndexTuple, Vec>& table() const { return table_; }
  bool is_abelian() const { return table_.empty(); }

  /// Used by builders that already hold increasing tuples; drops zeros.
  void set_entry(const IndexTuple& increasing, const Vec& value);

  /// Bracket of basis vectors e_{idx[0]},...; any order, signs resolved.
  Vec bracket_basis(IndexTuple idx) const;

  /// Multilinear antisymmetric extension; args.size() must equal arity.
  Vec bracket(const std::vector<Vec>& args) const;

  friend bool operator==(const StructureConstants& a, const StructureConstants& b);
  friend bool operator!=(const StructureConstants& a, const StructureConstants& b) { return !(a == b); }

private:
  int arity_ = 2, dim_ = 0;
  std::map<IndexTuple, Vec> table_;
};

struct IdentityViolation {
  IndexTuple xs;  // length arity-1, strictly increasing
  IndexTuple ys;  // length arity, strictly increasing
  Vec defect;
};

struct VerifyReport {
  bool ok = true;
  std::vector<IdentityViolation> violations;
};

/// Checks the fundamental (Filippov) identity on all increasing basis
/// tuples; for arity 2 this is the Jacobi identity. Sufficient by
/// multilinearity and antisymmetry.
VerifyReport verify_identity(const StructureConstants& a);

}  // namespace nlie

#endif
