#include "nlie/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace nlie {

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec zero_vec(int n) { return Vec(static_cast<size_t>(n)); }

Vec unit_vec(int n, int i) {
  Vec v(static_cast<size_t>(n));
  v[static_cast<size_t>(i)] = Rational(1);
  return v;
}

Vec add_vec(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub_vec(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scale_vec(const Rational& c, const Vec& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch");
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Matrix::Matrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<size_t>(rows) * cols)
    throw DimensionError("matrix entry count mismatch");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != static_cast<size_t>(cols)) throw DimensionError("row length mismatch");
    for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
  }
  return m;
}

Vec Matrix::row(int r) const {
  Vec v(static_cast<size_t>(cols_));
  for (int c = 0; c < cols_; ++c) v[static_cast<size_t>(c)] = at(r, c);
  return v;
}

void Matrix::set_row(int r, const Vec& v) {
  for (int c = 0; c < cols_; ++c) at(r, c) = v[static_cast<size_t>(c)];
}

Matrix Matrix::mul(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

Vec Matrix::mul(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionError("matrix-vector shape mismatch");
  Vec out(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) out[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : entries_)
    if (!x.is_zero()) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

RrefResult rref(const Matrix& m) {
  RrefResult out;
  out.reduced = m;
  Matrix& a = out.reduced;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int pivot_row = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0) continue;
    if (pivot_row != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(pivot_row, j));
    Rational inv = a.at(r, c).inverse();
    for (int j = c; j < a.cols(); ++j) a.at(r, j) = inv * a.at(r, j);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Rational f = a.at(i, c);
      for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

Subspace nullspace(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : rr.pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[static_cast<size_t>(fc)]) continue;
    Vec v = zero_vec(m.cols());
    v[static_cast<size_t>(fc)] = Rational(1);
    for (int r = 0; r < rr.rank; ++r) v[static_cast<size_t>(rr.pivots[static_cast<size_t>(r)])] = -rr.reduced.at(r, fc);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), basis);
}

Subspace Subspace::zero(int ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix(0, ambient_dim);
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

Subspace Subspace::span(int ambient_dim, const std::vector<Vec>& vectors) {
  for (const Vec& v : vectors)
    if (static_cast<int>(v.size()) != ambient_dim) throw DimensionError("span vector length mismatch");
  RrefResult rr = rref(Matrix::from_rows(vectors, ambient_dim));
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix(rr.rank, ambient_dim);
  for (int r = 0; r < rr.rank; ++r) s.basis_.set_row(r, rr.reduced.row(r));
  return s;
}

std::vector<Vec> Subspace::basis_rows() const {
  std::vector<Vec> out;
  out.reserve(static_cast<size_t>(dim()));
  for (int r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw DimensionError("vector/subspace ambient mismatch");
  // reduce v against the RREF basis
  Vec w = v;
  for (int r = 0; r < dim(); ++r) {
    int pc = -1;
    for (int c = 0; c < ambient_; ++c)
      if (!basis_.at(r, c).is_zero()) {
        pc = c;
        break;
      }
    if (pc < 0) continue;
    const Rational& f = w[static_cast<size_t>(pc)];
    if (f.is_zero()) continue;
    Rational factor = f;  // pivot entries are 1
    for (int c = pc; c < ambient_; ++c) w[static_cast<size_t>(c)] -= factor * basis_.at(r, c);
  }
  return is_zero_vec(w);
}

bool Subspace::leq(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw DimensionError("subspace ambient mismatch");
  for (int r = 0; r < dim(); ++r)
    if (!other.contains(basis_.row(r))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw DimensionError("subspace ambient mismatch");
  std::vector<Vec> rows = basis_rows();
  for (const Vec& v : other.basis_rows()) rows.push_back(v);
  return span(ambient_, rows);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

}  // namespace nlie
