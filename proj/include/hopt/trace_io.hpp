#ifndef HOPT_TRACE_IO_HPP
#define HOPT_TRACE_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopt/dual.hpp"
#include "hopt/halving.hpp"

namespace hopt {

nlohmann::json to_json(const Region& r);
Region region_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RunTrace& t);
nlohmann::json to_json(const Solution& s);
nlohmann::json to_json(const DualResult& r);

/// Writes the solution and its trace as pretty JSON; throws std::runtime_error on I/O failure.
void emit_trace(const Solution& s, const std::string& path);

struct SummaryRow {
  std::string method;
  std::string function;
  double eps = 0.0;
  long long iterations = 0;
  unsigned long long value_calls = 0;
  unsigned long long direction_calls = 0;
  unsigned long long full_grad_calls = 0;
  double wall_ms = 0.0;
  double final_gap = 0.0;  // NaN when the optimum is unknown

  friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

SummaryRow summarize(const Solution& s, std::optional<double> f_star);

extern const char* const kSummaryHeader;

/// CSV line without trailing newline; numbers use 17 significant digits.
std::string to_csv(const SummaryRow& row);
SummaryRow summary_from_csv(const std::string& line);
std::vector<SummaryRow> read_summary_csv(std::istream& in);

/// Appends a row to a CSV file, writing the header when the file is new or empty.
void append_summary_csv(const std::string& path, const SummaryRow& row);

/// "iteration<TAB>value<TAB>gap" lines for plotting.
void write_history_tsv(std::ostream& out, const RunTrace& t, std::optional<double> f_star);

}  // namespace hopt

#endif  // HOPT_TRACE_IO_HPP
