#ifndef NLIE_LINALG_HPP
#define NLIE_LINALG_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "nlie/rational.hpp"

namespace nlie {

using Vec = std::vector<Rational>;

bool is_zero_vec(const Vec& v);
Vec zero_vec(int n);
Vec unit_vec(int n, int i);  // i is 0-based
Vec add_vec(const Vec& a, const Vec& b);
Vec sub_vec(const Vec& a, const Vec& b);
Vec scale_vec(const Rational& c, const Vec& v);
Rational dot(const Vec& a, const Vec& b);

/// Dense row-major rational matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}
  Matrix(int rows, int cols, std::vector<Rational> entries);
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  Vec row(int r) const;
  void set_row(int r, const Vec& v);

  Matrix mul(const Matrix& o) const;
  Vec mul(const Vec& v) const;  // matrix * column vector
  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  Matrix reduced;
  int rank = 0;
  std::vector<int> pivots;  // 0-based column indices, strictly increasing
};

/// Unique reduced row echelon form; Gauss-Jordan with leftmost pivots.
RrefResult rref(const Matrix& m);

class Subspace;

/// {x : m x = 0} as a canonical subspace of dimension cols - rank.
Subspace nullspace(const Matrix& m);

/// Canonical subspace of K^{ambient_dim}: basis in RREF, no zero rows.
/// Equal as values iff equal as subspaces.
class Subspace {
public:
  Subspace() = default;
  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);
  static Subspace span(int ambient_dim, const std::vector<Vec>& vectors);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }
  std::vector<Vec> basis_rows() const;

  bool contains(const Vec& v) const;
  bool leq(const Subspace& other) const;  // inclusion
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  int ambient_ = 0;
  Matrix basis_;  // RREF, rank rows
};

/// Thrown on ambient-dimension mismatches between subspaces/vectors.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace nlie

#endif
