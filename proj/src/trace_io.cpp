#include "hopt/trace_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hopt {

using nlohmann::json;

namespace {

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }
json pt(Point2 p) { return json::array({p.x1, p.x2}); }
Point2 pt_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json counters_json(const CallCounters& c) {
  return {{"value_calls", c.value_calls}, {"direction_calls", c.direction_calls}, {"full_grad_calls", c.full_grad_calls}};
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

json to_json(const Region& r) {
  if (const auto* b = std::get_if<AxisBox>(&r))
    return {{"kind", "box"}, {"center", pt(b->center)}, {"half_extents", json::array({b->half_width, b->half_height})}};
  const RightTriangle& t = std::holds_alternative<RightTriangle>(r) ? std::get<RightTriangle>(r)
                                                                    : std::get<Trapezoid>(r).parent;
  return {{"kind", region_kind(r)},
          {"vertex", pt(t.vertex)},
          {"leg", t.leg},
          {"orientation", json::array({t.orientation.s1, t.orientation.s2})}};
}

Region region_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "box") {
    const auto& h = j.at("half_extents");
    return AxisBox{pt_from(j.at("center")), h.at(0).get<double>(), h.at(1).get<double>()};
  }
  const auto& o = j.at("orientation");
  RightTriangle t{pt_from(j.at("vertex")), j.at("leg").get<double>(), {o.at(0).get<int>(), o.at(1).get<int>()}};
  if (kind == "triangle") return t;
  if (kind == "trapezoid") return Trapezoid{t};
  throw std::runtime_error("unknown region kind: " + kind);
}

json to_json(const RunTrace& t) {
  json iters = json::array();
  for (const auto& it : t.iterations) {
    json cuts = json::array();
    for (const auto& c : it.cuts) {
      json cj = {{"cut_axis", to_string(c.segment.axis)},
                 {"segment", json::array({pt(c.segment.a), pt(c.segment.b)})},
                 {"delta", num(c.delta)},
                 {"x_delta", pt(c.x_delta)},
                 {"line_evals", c.line_evals},
                 {"decision", to_string(c.side)},
                 {"grad_norm", c.grad_norm}};
      cj["kept"] = c.kept ? to_json(*c.kept) : json(nullptr);
      cuts.push_back(std::move(cj));
    }
    iters.push_back({{"index", it.index},
                     {"region", to_json(it.region_before)},
                     {"cuts", std::move(cuts)},
                     {"counters", counters_json(it.counters)}});
  }
  json history = json::array();
  for (double v : t.history) history.push_back(num(v));
  return {{"method", t.method},
          {"function", t.function},
          {"eps", t.eps},
          {"planned_iterations", t.planned_iterations},
          {"executed_iterations", t.executed_iterations},
          {"delta_horizontal", num(t.delta_horizontal)},
          {"delta_vertical", num(t.delta_vertical)},
          {"grad_error_cap", t.grad_error_cap},
          {"inexact_budget_ok", t.inexact_budget_ok},
          {"small_gradient_stop_enabled", t.small_gradient_stop_enabled},
          {"initial_region", to_json(t.initial_region)},
          {"final_region", to_json(t.final_region)},
          {"iterations", std::move(iters)},
          {"history", std::move(history)},
          {"feasibility_cuts", t.feasibility_cuts},
          {"counters", counters_json(t.counters)},
          {"stop_reason", to_string(t.stop_reason)},
          {"wall_ms", t.wall_ms}};
}

json to_json(const Solution& s) { return {{"point", pt(s.point)}, {"value", s.value}, {"trace", to_json(s.trace)}}; }

json to_json(const DualResult& r) {
  return {{"x", r.x},
          {"lambda", json::array({r.lambda.lambda1, r.lambda.lambda2})},
          {"certified", r.certified},
          {"f_value", r.f_value},
          {"complementarity", r.residual.complementarity},
          {"max_violation", r.residual.max_violation},
          {"A", r.A},
          {"delta_fn", r.delta_fn},
          {"grad_error", r.grad_error},
          {"dual_L", r.dual_L},
          {"dual_M", r.dual_M},
          {"inner_solves", r.inner_solves},
          {"outer", to_json(r.outer)}};
}

void emit_trace(const Solution& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open trace file: " + path);
  out << to_json(s).dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing trace file: " + path);
}

SummaryRow summarize(const Solution& s, std::optional<double> f_star) {
  const auto& t = s.trace;
  return {t.method,
          t.function,
          t.eps,
          t.executed_iterations,
          t.counters.value_calls,
          t.counters.direction_calls,
          t.counters.full_grad_calls,
          t.wall_ms,
          f_star ? s.value - *f_star : std::numeric_limits<double>::quiet_NaN()};
}

const char* const kSummaryHeader =
    "method,function,eps,iterations,value_calls,direction_calls,full_grad_calls,wall_ms,final_gap";

std::string to_csv(const SummaryRow& r) {
  std::ostringstream os;
  os << r.method << ',' << r.function << ',' << fmt17(r.eps) << ',' << r.iterations << ',' << r.value_calls << ','
     << r.direction_calls << ',' << r.full_grad_calls << ',' << fmt17(r.wall_ms) << ',' << fmt17(r.final_gap);
  return os.str();
}

SummaryRow summary_from_csv(const std::string& line) {
  std::vector<std::string> f;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) f.push_back(cell);
  if (f.size() != 9) throw std::runtime_error("summary row needs 9 columns: " + line);
  try {
    return {f[0],
            f[1],
            std::stod(f[2]),
            std::stoll(f[3]),
            std::stoull(f[4]),
            std::stoull(f[5]),
            std::stoull(f[6]),
            std::stod(f[7]),
            std::strtod(f[8].c_str(), nullptr)};
  } catch (const std::logic_error&) {
    throw std::runtime_error("malformed summary row: " + line);
  }
}

std::vector<SummaryRow> read_summary_csv(std::istream& in) {
  std::vector<SummaryRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == kSummaryHeader) continue;
    rows.push_back(summary_from_csv(line));
  }
  return rows;
}

void append_summary_csv(const std::string& path, const SummaryRow& row) {
  bool fresh = true;
  {
    std::ifstream probe(path, std::ios::ate);
    if (probe && probe.tellg() > 0) fresh = false;
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open csv file: " + path);
  if (fresh) out << kSummaryHeader << '\n';
  out << to_csv(row) << '\n';
}

void write_history_tsv(std::ostream& out, const RunTrace& t, std::optional<double> f_star) {
  out << "# " << t.method << ' ' << t.function << " eps=" << fmt17(t.eps) << '\n';
  out << "iteration\tvalue\tgap\n";
  for (std::size_t i = 0; i < t.history.size(); ++i) {
    const double v = t.history[i];
    out << (i + 1) << '\t' << fmt17(v) << '\t'
        << fmt17(f_star ? v - *f_star : std::numeric_limits<double>::quiet_NaN()) << '\n';
  }
}

}  // namespace hopt
