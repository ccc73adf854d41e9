#include "hopt/problem_io.hpp"

#include <fstream>
#include <memory>

namespace hopt {

using nlohmann::json;

namespace {

std::vector<double> vec(const json& j, const char* key, std::size_t dim) {
  auto v = j.at(key).get<std::vector<double>>();
  if (v.size() != dim) throw ProblemFormatError(std::string("'") + key + "' has wrong length");
  return v;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemFormatError("cannot open problem file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ProblemFormatError("malformed problem file " + path + ": " + e.what());
  }
}

template <class F>
auto wrap(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ProblemFormatError(std::string("malformed problem: ") + e.what());
  }
}

}  // namespace

TermSum terms_from_json(const json& j, std::size_t dim) {
  return wrap([&] {
    if (!j.is_array()) throw ProblemFormatError("term list must be an array");
    std::vector<Term> terms;
    for (const auto& t : j) {
      const std::string type = t.at("type").get<std::string>();
      if (type == "quadratic") {
        terms.push_back(QuadraticTerm{vec(t, "weight", dim), vec(t, "center", dim)});
      } else if (type == "affine") {
        terms.push_back(AffineTerm{vec(t, "coef", dim), t.value("constant", 0.0)});
      } else if (type == "exp") {
        terms.push_back(ExpTerm{t.value("scale", 1.0), vec(t, "coef", dim), t.value("constant", 0.0)});
      } else {
        throw ProblemFormatError("unknown term type: " + type);
      }
    }
    return TermSum(dim, std::move(terms));
  });
}

DualProblem dual_problem_from_json(const json& j) {
  return wrap([&] {
    const std::size_t n = j.at("dimension").get<std::size_t>();
    DualProblem p;
    p.q = Box{vec(j.at("box"), "lo", n), vec(j.at("box"), "hi", n)};
    p.f = terms_from_json(j.at("f"), n);
    p.g1 = terms_from_json(j.at("g1"), n);
    p.g2 = terms_from_json(j.at("g2"), n);
    p.mu = j.value("mu", 0.0);
    p.M1 = j.value("M1", 0.0);
    p.M2 = j.value("M2", 0.0);
    if (j.contains("slater")) p.slater_point = vec(j, "slater", n);
    if (j.contains("A")) p.A = j.at("A").get<double>();
    p.validate_and_complete();
    return p;
  });
}

DualProblem load_dual_problem(const std::string& path) { return dual_problem_from_json(read_json(path)); }

CorpusEntry objective_from_json(const json& j) {
  return wrap([&] {
    const auto& sq = j.at("square");
    const auto c = vec(sq, "center", 2);
    const double h = sq.at("half_side").get<double>();
    const AxisBox square = AxisBox::square({c[0], c[1]}, h);
    auto terms = std::make_shared<TermSum>(terms_from_json(j.at("objective"), 2));
    const Box box{{square.lo1(), square.lo2()}, {square.hi1(), square.hi2()}};
    const double L = j.contains("L") ? j.at("L").get<double>() : terms->gradient_norm_bound(box);
    const double M = j.contains("M") ? j.at("M").get<double>() : terms->smoothness_bound(box);
    auto fn = std::make_shared<LambdaObjective>(
        [terms](Point2 x) {
          const double v[2] = {x.x1, x.x2};
          return terms->value(v);
        },
        [terms](Point2 x) {
          const double v[2] = {x.x1, x.x2};
          double g[2];
          terms->gradient(v, g);
          return Vec2{g[0], g[1]};
        });
    const std::string name = j.value("name", std::string("file"));
    CorpusEntry e{name, "term sum", Oracle{name, fn, L, M, std::nullopt}, square, true, std::nullopt, std::nullopt};
    if (j.contains("f_star")) e.f_star = j.at("f_star").get<double>();
    return e;
  });
}

CorpusEntry load_objective(const std::string& path) { return objective_from_json(read_json(path)); }

}  // namespace hopt
