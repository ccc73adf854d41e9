#ifndef HOPT_CORPUS_HPP
#define HOPT_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopt/geometry.hpp"
#include "hopt/oracle.hpp"

namespace hopt {

struct CorpusEntry {
  std::string id;
  std::string formula;
  Oracle oracle;
  AxisBox square;
  bool smooth = true;
  std::optional<Point2> argmin;   // minimizer over `square`, when known
  std::optional<double> f_star;   // minimum over `square`, when known
};

/// Built-in test functions, each with its domain and declared constants.
const std::vector<CorpusEntry>& corpus();

/// Throws std::out_of_range for unknown ids.
const CorpusEntry& corpus_entry(const std::string& id);

}  // namespace hopt

#endif  // HOPT_CORPUS_HPP
