#include "nlie/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace nlie {

int sort_sign(IndexTuple& idx) {
  int sign = 1;
  for (size_t i = 0; i + 1 < idx.size(); ++i)
    for (size_t j = 0; j + 1 < idx.size() - i; ++j)
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
  for (size_t i = 0; i + 1 < idx.size(); ++i)
    if (idx[i] == idx[i + 1]) return 0;
  return sign;
}

namespace {
std::string tuple_str(const IndexTuple& t) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ']';
  return os.str();
}

// det of the minor args[r][key[c]-1]: the coefficient of [e_{key}] in the
// skew multilinear expansion of bracket(args). Arities are tiny, so a
// permutation expansion is fine.
Rational alternating_coefficient(const std::vector<Vec>& args, const IndexTuple& key) {
  const size_t n = key.size();
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  Rational total;
  do {
    int sign = 1;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Rational term(sign);
    for (size_t r = 0; r < n; ++r) {
      const Rational& x = args[r][static_cast<size_t>(key[perm[r]] - 1)];
      if (x.is_zero()) {
        term = Rational(0);
        break;
      }
      term *= x;
    }
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}
}  // namespace

StructureConstants StructureConstants::canonicalize(int arity, int dim,
                                                    const std::vector<BracketAssignment>& raw) {
  if (arity < 2) throw ArityError("bracket arity must be at least 2");
  StructureConstants out(arity, dim);
  for (const auto& a : raw) {
    if (static_cast<int>(a.indices.size()) != arity)
      throw ArityError("bracket tuple " + tuple_str(a.indices) + " has wrong length");
    if (static_cast<int>(a.value.size()) != dim)
      throw DimensionError("bracket value length mismatch at " + tuple_str(a.indices));
    for (int i : a.indices)
      if (i < 1 || i > dim) throw DimensionError("basis index out of range in " + tuple_str(a.indices));
    IndexTuple key = a.indices;
    int sign = sort_sign(key);
    if (sign == 0) {
      if (!is_zero_vec(a.value))
        throw AntisymmetryError("repeated index with nonzero value at " + tuple_str(a.indices));
      continue;
    }
    if (is_zero_vec(a.value)) continue;
    if (out.table_.count(key))
      throw DuplicateBracketError("duplicate bracket definition for " + tuple_str(key));
    out.table_[key] = sign > 0 ? a.value : scale_vec(Rational(-1), a.value);
  }
  return out;
}

void StructureConstants::set_entry(const IndexTuple& increasing, const Vec& value) {
  if (is_zero_vec(value)) {
    table_.erase(increasing);
    return;
  }
  table_[increasing] = value;
}

Vec StructureConstants::bracket_basis(IndexTuple idx) const {
  int sign = sort_sign(idx);
  if (sign == 0) return zero_vec(dim_);
  auto it = table_.find(idx);
  if (it == table_.end()) return zero_vec(dim_);
  return sign > 0 ? it->second : scale_vec(Rational(-1), it->second);
}

Vec StructureConstants::bracket(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw ArityError("bracket expects " + std::to_string(arity_) + " arguments");
  for (const Vec& v : args)
    if (static_cast<int>(v.size()) != dim_) throw DimensionError("argument length mismatch");
  Vec out = zero_vec(dim_);
  // expand multilinearly over the stored (increasing) tuples: for each table
  // entry, the coefficient is det of the args restricted to those indices
  for (const auto& [key, value] : table_) {
    Rational coeff = alternating_coefficient(args, key);
    if (coeff.is_zero()) continue;
    for (int q = 0; q < dim_; ++q) out[static_cast<size_t>(q)] += coeff * value[static_cast<size_t>(q)];
  }
  return out;
}

bool operator==(const StructureConstants& a, const StructureConstants& b) {
  return a.arity_ == b.arity_ && a.dim_ == b.dim_ && a.table_ == b.table_;
}

VerifyReport verify_identity(const StructureConstants& a) {
  VerifyReport report;
  const int n = a.arity();
  const int d = a.dim();
  std::vector<int> xs(static_cast<size_t>(n - 1)), ys(static_cast<size_t>(n));

  auto for_each_increasing = [&](int len, auto&& body) {
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
  };

  for_each_increasing(n - 1, [&](const IndexTuple& xt) {
    for_each_increasing(n, [&](const IndexTuple& yt) {
      Vec inner = a.bracket_basis(yt);
      std::vector<Vec> outer_args;
      for (int i : xt) outer_args.push_back(unit_vec(d, i - 1));
      outer_args.push_back(inner);
      Vec lhs = a.bracket(outer_args);
      Vec rhs = zero_vec(d);
      for (int k = 0; k < n; ++k) {
        std::vector<Vec> sub_args;
        for (int i : xt) sub_args.push_back(unit_vec(d, i - 1));
        sub_args.push_back(unit_vec(d, yt[static_cast<size_t>(k)] - 1));
        Vec sub = a.bracket(sub_args);
        std::vector<Vec> term_args;
        for (int j = 0; j < n; ++j)
          term_args.push_back(j == k ? sub : unit_vec(d, yt[static_cast<size_t>(j)] - 1));
        rhs = add_vec(rhs, a.bracket(term_args));
      }
      Vec defect = sub_vec(lhs, rhs);
      if (!is_zero_vec(defect)) report.violations.push_back({xt, yt, defect});
    });
  });
  report.ok = report.violations.empty();
  return report;
}

}  // namespace nlie
