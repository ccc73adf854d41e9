#include "hopt/terms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hopt {

void Box::project(std::span<double> x) const {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
}

bool Box::contains(std::span<const double> x, double tol) const {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < lo[i] - tol || x[i] > hi[i] + tol) return false;
  return true;
}

std::vector<double> Box::center() const {
  std::vector<double> c(dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = 0.5 * (lo[i] + hi[i]);
  return c;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double affine(std::span<const double> a, double b, std::span<const double> x) {
  double s = b;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

// range of a . x + b over the box
std::pair<double, double> affine_range(const std::vector<double>& a, double b, const Box& q) {
  double lo = b;
  double hi = b;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double u = a[i] * q.lo[i];
    const double v = a[i] * q.hi[i];
    lo += std::min(u, v);
    hi += std::max(u, v);
  }
  return {lo, hi};
}

double sq_norm(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return s;
}

}  // namespace

TermSum::TermSum(std::size_t dim, std::vector<Term> terms) : dim_(dim), terms_(std::move(terms)) {
  if (dim_ == 0) throw ProblemFormatError("dimension must be >= 1");
  for (const auto& t : terms_) {
    std::visit(overloaded{
                   [&](const QuadraticTerm& q) {
                     if (q.weight.size() != dim_ || q.center.size() != dim_)
                       throw ProblemFormatError("quadratic term has wrong dimension");
                     for (double w : q.weight)
                       if (!(w >= 0.0)) throw ProblemFormatError("quadratic weights must be >= 0");
                   },
                   [&](const AffineTerm& a) {
                     if (a.coef.size() != dim_) throw ProblemFormatError("affine term has wrong dimension");
                   },
                   [&](const ExpTerm& e) {
                     if (e.coef.size() != dim_) throw ProblemFormatError("exp term has wrong dimension");
                     if (!(e.scale >= 0.0)) throw ProblemFormatError("exp scale must be >= 0");
                   }},
               t);
  }
}

double TermSum::value(std::span<const double> x) const {
  double s = 0.0;
  for (const auto& t : terms_) {
    s += std::visit(overloaded{[&](const QuadraticTerm& q) {
                                 double v = 0.0;
                                 for (std::size_t i = 0; i < dim_; ++i) {
                                   const double d = x[i] - q.center[i];
                                   v += q.weight[i] * d * d;
                                 }
                                 return v;
                               },
                               [&](const AffineTerm& a) { return affine(a.coef, a.constant, x); },
                               [&](const ExpTerm& e) { return e.scale * std::exp(affine(e.coef, e.constant, x)); }},
                    t);
  }
  return s;
}

void TermSum::gradient(std::span<const double> x, std::span<double> out) const {
  std::fill(out.begin(), out.end(), 0.0);
  for (const auto& t : terms_) {
    std::visit(overloaded{[&](const QuadraticTerm& q) {
                            for (std::size_t i = 0; i < dim_; ++i) out[i] += 2.0 * q.weight[i] * (x[i] - q.center[i]);
                          },
                          [&](const AffineTerm& a) {
                            for (std::size_t i = 0; i < dim_; ++i) out[i] += a.coef[i];
                          },
                          [&](const ExpTerm& e) {
                            const double m = e.scale * std::exp(affine(e.coef, e.constant, x));
                            for (std::size_t i = 0; i < dim_; ++i) out[i] += m * e.coef[i];
                          }},
               t);
  }
}

std::pair<double, double> TermSum::range(const Box& q) const {
  double lo = 0.0;
  double hi = 0.0;
  for (const auto& t : terms_) {
    const auto [a, b] = std::visit(
        overloaded{[&](const QuadraticTerm& qt) {
                     double tl = 0.0;
                     double th = 0.0;
                     for (std::size_t i = 0; i < dim_; ++i) {
                       const double c = qt.center[i];
                       const double dl = q.lo[i] - c;
                       const double dh = q.hi[i] - c;
                       const double far = std::max(dl * dl, dh * dh);
                       const double near = (c >= q.lo[i] && c <= q.hi[i]) ? 0.0 : std::min(dl * dl, dh * dh);
                       tl += qt.weight[i] * near;
                       th += qt.weight[i] * far;
                     }
                     return std::pair{tl, th};
                   },
                   [&](const AffineTerm& at) { return affine_range(at.coef, at.constant, q); },
                   [&](const ExpTerm& et) {
                     const auto [l, h] = affine_range(et.coef, et.constant, q);
                     return std::pair{et.scale * std::exp(l), et.scale * std::exp(h)};
                   }},
        t);
    lo += a;
    hi += b;
  }
  return {lo, hi};
}

double TermSum::gradient_norm_bound(const Box& q) const {
  // per-coordinate interval of the gradient, then the largest norm
  std::vector<double> glo(dim_, 0.0);
  std::vector<double> ghi(dim_, 0.0);
  for (const auto& t : terms_) {
    std::visit(overloaded{[&](const QuadraticTerm& qt) {
                            for (std::size_t i = 0; i < dim_; ++i) {
                              glo[i] += 2.0 * qt.weight[i] * (q.lo[i] - qt.center[i]);
                              ghi[i] += 2.0 * qt.weight[i] * (q.hi[i] - qt.center[i]);
                            }
                          },
                          [&](const AffineTerm& at) {
                            for (std::size_t i = 0; i < dim_; ++i) {
                              glo[i] += at.coef[i];
                              ghi[i] += at.coef[i];
                            }
                          },
                          [&](const ExpTerm& et) {
                            const auto [l, h] = affine_range(et.coef, et.constant, q);
                            const double ml = et.scale * std::exp(l);
                            const double mh = et.scale * std::exp(h);
                            for (std::size_t i = 0; i < dim_; ++i) {
                              glo[i] += std::min(ml * et.coef[i], mh * et.coef[i]);
                              ghi[i] += std::max(ml * et.coef[i], mh * et.coef[i]);
                            }
                          }},
               t);
  }
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    const double m = std::max(std::abs(glo[i]), std::abs(ghi[i]));
    s += m * m;
  }
  return std::sqrt(s);
}

double TermSum::smoothness_bound(const Box& q) const {
  std::vector<double> diag(dim_, 0.0);
  double rank_one = 0.0;
  for (const auto& t : terms_) {
    if (const auto* qt = std::get_if<QuadraticTerm>(&t)) {
      for (std::size_t i = 0; i < dim_; ++i) diag[i] += 2.0 * qt->weight[i];
    } else if (const auto* et = std::get_if<ExpTerm>(&t)) {
      const double h = affine_range(et->coef, et->constant, q).second;
      rank_one += et->scale * std::exp(h) * sq_norm(et->coef);
    }
  }
  double d = 0.0;
  for (double v : diag) d = std::max(d, v);
  return d + rank_one;
}

double TermSum::strong_convexity() const {
  std::vector<double> diag(dim_, 0.0);
  for (const auto& t : terms_)
    if (const auto* qt = std::get_if<QuadraticTerm>(&t))
      for (std::size_t i = 0; i < dim_; ++i) diag[i] += 2.0 * qt->weight[i];
  return diag.empty() ? 0.0 : *std::min_element(diag.begin(), diag.end());
}

}  // namespace hopt
