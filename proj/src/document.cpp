#include "nlie/document.hpp"

#include <sstream>

namespace nlie {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

int parse_count(const std::string& tok, int line, const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 0) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ParseError(line, "bad " + what + " '" + tok + "'");
  }
}

Rational parse_rational(const std::string& tok, int line) {
  try {
    return Rational::from_string(tok);
  } catch (...) {
    throw ParseError(line, "bad rational literal '" + tok + "'");
  }
}

struct Cursor {
  std::vector<std::pair<int, std::vector<std::string>>> lines;  // (lineno, tokens)
};

Cursor scan(const std::string& text) {
  Cursor c;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::vector<std::string> toks = tokens(line);
    if (!toks.empty()) c.lines.emplace_back(lineno, std::move(toks));
  }
  return c;
}

}  // namespace

AlgebraDocument parse_document(const std::string& text) {
  AlgebraDocument doc;
  bool have_dim = false, have_arity = false, have_trace = false;
  std::vector<BracketAssignment> raw;
  std::vector<int> raw_lines;
  Cursor c = scan(text);
  for (const auto& [lineno, toks] : c.lines) {
    const std::string& head = toks[0];
    if (head == "name") {
      if (toks.size() != 2) throw ParseError(lineno, "name takes one token");
      doc.name = toks[1];
    } else if (head == "arity") {
      if (toks.size() != 2) throw ParseError(lineno, "arity takes one integer");
      doc.arity = parse_count(toks[1], lineno, "arity");
      if (doc.arity < 2) throw ParseError(lineno, "arity must be at least 2");
      have_arity = true;
    } else if (head == "dim") {
      if (toks.size() != 2) throw ParseError(lineno, "dim takes one integer");
      doc.dim = parse_count(toks[1], lineno, "dimension");
      have_dim = true;
    } else if (head == "bracket") {
      if (!have_dim || !have_arity) throw ParseError(lineno, "bracket before dim/arity");
      size_t eq = 0;
      for (size_t i = 1; i < toks.size(); ++i)
        if (toks[i] == "=") eq = i;
      if (eq != static_cast<size_t>(doc.arity) + 1)
        throw ParseError(lineno, "bracket expects " + std::to_string(doc.arity) + " indices then '='");
      BracketAssignment a;
      for (size_t i = 1; i < eq; ++i) {
        int idx = parse_count(toks[i], lineno, "basis index");
        if (idx < 1 || idx > doc.dim) throw ParseError(lineno, "basis index out of range");
        a.indices.push_back(idx);
      }
      a.value = zero_vec(doc.dim);
      for (size_t i = eq + 1; i < toks.size(); ++i) {
        size_t colon = toks[i].find(':');
        if (colon == std::string::npos) throw ParseError(lineno, "bracket value entries are index:rational");
        int idx = parse_count(toks[i].substr(0, colon), lineno, "value index");
        if (idx < 1 || idx > doc.dim) throw ParseError(lineno, "value index out of range");
        if (!a.value[static_cast<size_t>(idx - 1)].is_zero())
          throw ParseError(lineno, "value index repeated");
        a.value[static_cast<size_t>(idx - 1)] = parse_rational(toks[i].substr(colon + 1), lineno);
      }
      raw.push_back(std::move(a));
      raw_lines.push_back(lineno);
    } else if (head == "trace") {
      if (!have_dim) throw ParseError(lineno, "trace before dim");
      if (have_trace) throw ParseError(lineno, "duplicate trace line");
      if (toks.size() != static_cast<size_t>(doc.dim) + 1)
        throw ParseError(lineno, "trace expects " + std::to_string(doc.dim) + " rationals");
      LinearForm tau;
      for (size_t i = 1; i < toks.size(); ++i) tau.push_back(parse_rational(toks[i], lineno));
      doc.trace = tau;
      have_trace = true;
    } else {
      throw ParseError(lineno, "unknown directive '" + head + "'");
    }
  }
  if (!have_dim) throw ParseError(static_cast<int>(c.lines.size()) + 1, "missing dim");
  try {
    doc.algebra = StructureConstants::canonicalize(doc.arity, doc.dim, raw);
  } catch (const std::invalid_argument& e) {
    int line = raw_lines.empty() ? 1 : raw_lines.back();
    // locate the offending assignment for a precise message
    for (size_t i = 0; i < raw.size(); ++i) {
      try {
        std::vector<BracketAssignment> upto(raw.begin(), raw.begin() + static_cast<long>(i) + 1);
        StructureConstants::canonicalize(doc.arity, doc.dim, upto);
      } catch (...) {
        line = raw_lines[i];
        break;
      }
    }
    throw ParseError(line, e.what());
  }
  return doc;
}

std::string print_document(const AlgebraDocument& doc) {
  std::ostringstream os;
  os << "name " << doc.name << "\n";
  os << "arity " << doc.arity << "\n";
  os << "dim " << doc.dim << "\n";
  for (const auto& [key, value] : doc.algebra.table()) {
    os << "bracket";
    for (int i : key) os << ' ' << i;
    os << " =";
    for (int q = 0; q < doc.dim; ++q)
      if (!value[static_cast<size_t>(q)].is_zero())
        os << ' ' << (q + 1) << ':' << value[static_cast<size_t>(q)].to_string();
    os << "\n";
  }
  if (doc.trace) {
    os << "trace";
    for (const Rational& c : *doc.trace) os << ' ' << c.to_string();
    os << "\n";
  }
  return os.str();
}

CocycleDocument parse_cocycle_document(const std::string& text) {
  CocycleDocument doc;
  bool have_dim = false, have_arity = false;
  struct ValueLine {
    IndexTuple idx;
    Rational value;
    int line;
  };
  std::vector<ValueLine> values;
  Cursor c = scan(text);
  for (const auto& [lineno, toks] : c.lines) {
    const std::string& head = toks[0];
    if (head == "arity") {
      if (toks.size() != 2) throw ParseError(lineno, "arity takes one integer");
      doc.arity = parse_count(toks[1], lineno, "arity");
      if (doc.arity != 2 && doc.arity != 3) throw ParseError(lineno, "cocycle arity must be 2 or 3");
      have_arity = true;
    } else if (head == "dim") {
      if (toks.size() != 2) throw ParseError(lineno, "dim takes one integer");
      doc.dim = parse_count(toks[1], lineno, "dimension");
      have_dim = true;
    } else if (head == "value") {
      if (!have_dim || !have_arity) throw ParseError(lineno, "value before dim/arity");
      if (toks.size() != static_cast<size_t>(doc.arity) + 3 || toks[static_cast<size_t>(doc.arity) + 1] != "=")
        throw ParseError(lineno, "value expects " + std::to_string(doc.arity) + " indices, '=', one rational");
      ValueLine v;
      v.line = lineno;
      for (int i = 1; i <= doc.arity; ++i) {
        int idx = parse_count(toks[static_cast<size_t>(i)], lineno, "basis index");
        if (idx < 1 || idx > doc.dim) throw ParseError(lineno, "basis index out of range");
        v.idx.push_back(idx);
      }
      v.value = parse_rational(toks.back(), lineno);
      values.push_back(std::move(v));
    } else {
      throw ParseError(lineno, "unknown directive '" + head + "'");
    }
  }
  if (!have_dim || !have_arity) throw ParseError(static_cast<int>(c.lines.size()) + 1, "missing dim/arity");
  Theory theory = doc.arity == 2 ? Theory::Lie : Theory::TriLie;
  doc.cochain = Cochain(theory, Coeffs::Scalar, 2, doc.dim);
  for (const ValueLine& v : values) {
    IndexTuple key = v.idx;
    int sign = sort_sign(key);
    if (sign == 0) {
      if (!v.value.is_zero()) throw ParseError(v.line, "repeated index with nonzero cocycle value");
      continue;
    }
    Rational val = sign > 0 ? v.value : -v.value;
    if (!doc.cochain.eval_basis(key)[0].is_zero()) throw ParseError(v.line, "duplicate cocycle value");
    if (doc.arity == 2) {
      doc.cochain.set(key, {val});
    } else {
      // a 3-Lie extension cocycle is fully skew; populate the pair-skew
      // storage accordingly: (i,j,k) = v, (i,k,j) = -v, (j,k,i) = v
      int i = key[0], j = key[1], k = key[2];
      doc.cochain.set({i, j, k}, {val});
      doc.cochain.set({i, k, j}, {-val});
      doc.cochain.set({j, k, i}, {val});
    }
  }
  return doc;
}

std::string print_cocycle_document(const CocycleDocument& doc) {
  std::ostringstream os;
  os << "arity " << doc.arity << "\n";
  os << "dim " << doc.dim << "\n";
  for (const auto& [key, value] : doc.cochain.components()) {
    bool increasing = true;
    for (size_t i = 0; i + 1 < key.size(); ++i)
      if (key[i] >= key[i + 1]) increasing = false;
    if (!increasing) continue;  // fully skew: increasing keys carry the data
    os << "value";
    for (int i : key) os << ' ' << i;
    os << " = " << value[0].to_string() << "\n";
  }
  return os.str();
}

}  // namespace nlie
