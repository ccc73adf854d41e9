#ifndef HOPT_PROBLEM_IO_HPP
#define HOPT_PROBLEM_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "hopt/corpus.hpp"
#include "hopt/dual.hpp"

namespace hopt {

// Term list entries:
//   {"type": "quadratic", "weight": [...], "center": [...]}
//   {"type": "affine", "coef": [...], "constant": b}
//   {"type": "exp", "scale": s, "coef": [...], "constant": b}

TermSum terms_from_json(const nlohmann::json& j, std::size_t dim);

/// {"dimension", "box": {"lo", "hi"}, "f", "g1", "g2", "mu"?, "M1"?, "M2"?, "slater"?, "A"?}
DualProblem dual_problem_from_json(const nlohmann::json& j);
DualProblem load_dual_problem(const std::string& path);

/// Two-variable objective file:
/// {"name"?, "square": {"center": [c1, c2], "half_side": h}, "objective": [...], "L"?, "M"?, "f_star"?}
/// Missing L and M are filled from interval bounds over the square.
CorpusEntry objective_from_json(const nlohmann::json& j);
CorpusEntry load_objective(const std::string& path);

}  // namespace hopt

#endif  // HOPT_PROBLEM_IO_HPP
