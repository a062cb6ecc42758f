#ifndef NLIE_TEST_HELPERS_HPP
#define NLIE_TEST_HELPERS_HPP

#include <cstdint>
#include <initializer_list>
#include <map>

#include "nlie/algebra.hpp"

namespace nlie::testing {

// deterministic generator so property tests are reproducible
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
  Rational rational(int num_bound = 5, int den_bound = 3) {
    return Rational(range(-num_bound, num_bound), range(1, den_bound));
  }
  Vec vec(int n, int num_bound = 5) {
    Vec v(static_cast<size_t>(n));
    for (auto& x : v) x = rational(num_bound);
    return v;
  }
  Matrix matrix(int rows, int cols, int num_bound = 4) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = rational(num_bound);
    return m;
  }

private:
  uint64_t state_;
};

inline Vec rvec(std::initializer_list<long long> xs) {
  Vec v;
  for (long long x : xs) v.push_back(Rational(x));
  return v;
}

inline StructureConstants make_algebra(
    int arity, int dim,
    std::initializer_list<std::pair<IndexTuple, std::map<int, Rational>>> entries) {
  std::vector<BracketAssignment> raw;
  for (const auto& [tuple, coeffs] : entries) {
    Vec v = zero_vec(dim);
    for (const auto& [idx, c] : coeffs) v[static_cast<size_t>(idx - 1)] = c;
    raw.push_back({tuple, v});
  }
  return StructureConstants::canonicalize(arity, dim, raw);
}

}  // namespace nlie::testing

#endif
