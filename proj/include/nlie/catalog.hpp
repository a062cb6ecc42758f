#ifndef NLIE_CATALOG_HPP
#define NLIE_CATALOG_HPP

#include <functional>

#include "nlie/cohomology.hpp"
#include "nlie/structure.hpp"

namespace nlie {

using ParamMap = std::map<std::string, Rational>;

class CatalogError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct CatalogParam {
  std::string name;
  Rational default_value;  // implementation choice used by tests and sweeps
};

struct CatalogEntry {
  std::string id;
  int arity = 2;
  int dim = 0;
  std::vector<CatalogParam> params;
  std::string predicate;  // textual validity condition, empty if none
  std::function<bool(const ParamMap&)> valid;
  std::function<StructureConstants(const ParamMap&)> build;
  std::string notes;      // caveats: field of definition, label repairs, isomorphism criteria
  bool row_alias = false; // pinned instance used for a table row (e.g. M3_0)
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& id);
std::vector<const CatalogEntry*> catalog_list(int arity, int dim);  // 0 = any; aliases excluded
StructureConstants catalog_get(const std::string& id, const ParamMap& params = {});
ParamMap catalog_defaults(const std::string& id);

struct Recognition {
  int i0 = 0;  // 1-based basis index
  StructureConstants lie;
  LinearForm tau;
};

/// Basis search for the recognition condition: an index i0 present
/// in every nonzero bracket, independent from the bracket values, with the
/// rebuilt Lie bracket passing Jacobi and re-inducing the input. Absence of
/// such an i0 in the given basis yields an empty result.
std::optional<Recognition> recognize_induced(const StructureConstants& t);

enum class InducedFlag { Induced, NotInduced, Unknown };

struct ClassificationRow {
  std::string id;
  int dim = 0;
  InducedFlag flag = InducedFlag::Unknown;
};

/// Flags every 3-Lie catalog entry (default parameters): recognition
/// success, else non-abelian derived algebra (D^2 != 0), else unknown.
std::vector<ClassificationRow> induced_classification(int max_dim = 5);

struct Table6Row {
  std::string id;
  std::vector<int> trace_pivots;  // the t_i labels of the trace row
  std::vector<InducedMember> members;
  // triple -> contributions (pivot label, coefficient vector)
  std::map<IndexTuple, std::vector<std::pair<int, Vec>>> family;
};

Table6Row table6(const std::string& lie_id, const ParamMap& params = {});
std::string render_table6_row(const Table6Row& row);
/// The table6 rows in printing order (catalog instance ids).
std::vector<std::string> table6_row_ids();

struct Table7Row {
  std::string id;
  LinearForm tau;
  CohomologyReport lie_report;
  CohomologyReport induced_report;
};

/// The traces the table7 rows are computed with.
LinearForm table7_trace(const std::string& id);
Table7Row table7_for(const std::string& id);
std::vector<std::string> table7_row_ids();  // gl2, M4, M5, M8

}  // namespace nlie

#endif
