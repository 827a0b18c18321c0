#ifndef LIEFIX_REPORT_HPP
#define LIEFIX_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "liefix/fixedpoints.hpp"

namespace liefix {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

/// {order: N, coeffs: [[num, den], ...]}
Json to_json(const Cyc& x);
/// {rows, cols, entries: [[CycScalar, ...], ...]}
Json to_json(const ExactMatrix& m);
/// {provenance, order, matrix}, plus the description.
Json to_json(const Automorphism& a);
Json to_json(const InvariantProfile& p);
Json to_json(const RealFormID& r);
Json to_json(const CentralHom& c);
Json to_json(const Warning& w);

/// One row of the outer-automorphism and centre table.
struct TableRow {
  std::string dynkin;
  std::string algebra;  // empty when the root system has no supported matrix algebra
  std::string group;
  int out_order = 1;
  int out_order_table = 1;
  std::string out_structure;  // "1", "Z/2", "S3"
  std::vector<std::pair<std::string, Permutation>> out_elements;
  FiniteAbelianGroup center;
  std::string center_source;  // "matrices" or "table"
  std::vector<long> weight_lattice_quotient;
};

/// Throws std::invalid_argument for unparsable selectors and
/// UnsupportedAlgebraError for unsupported root systems.
TableRow table_row(const std::string& selector);

Json to_json(const TableRow& row);
Json to_json(const ClassificationTable& t);
Json to_json(const FixedPointReport& r);

/// {version, seed, query, payload, warnings[]}
Json envelope(std::uint64_t seed, const Json& query, const Json& payload, const std::vector<Warning>& warnings);

std::string to_markdown(const TableRow& row);
std::string to_markdown(const ClassificationTable& t);
std::string to_markdown(const FixedPointReport& r);
std::string warnings_markdown(const std::vector<Warning>& warnings);

}  // namespace liefix

#endif  // LIEFIX_REPORT_HPP
