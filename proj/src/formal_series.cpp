#include "scv/formal_series.hpp"

#include <algorithm>

#include "scv/errors.hpp"
#include "scv/hypergeom.hpp"

namespace scv {

namespace {

ExactSeries sub(ExactSeries x, const ExactSeries& y) {
  if (x.size() < y.size()) x.resize(y.size(), Rational(0));
  for (std::size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
  return x;
}

ExactSeries scale(ExactSeries x, const ExactSeries& linear) {
  return series_multiply(x, linear, static_cast<int>(x.size()) - 1);
}

// 4t(1 - t) up to the given order.
ExactSeries quadratic_argument(int order) {
  ExactSeries g(order + 1, Rational(0));
  if (order >= 1) g[1] = 4;
  if (order >= 2) g[2] = -4;
  return g;
}

}  // namespace

ExactSeries series_F(const Rational& alpha, const std::vector<Rational>& b, int order) {
  if (order < 0) throw PreconditionViolation("series_F: negative order");
  ExactSeries a = exact_coefficients(b, order);
  for (int k = 0; k <= order; ++k) a[k] *= alpha * k + 1;
  return a;
}

ExactSeries series_multiply(const ExactSeries& x, const ExactSeries& y, int order) {
  ExactSeries out(order + 1, Rational(0));
  for (std::size_t i = 0; i < x.size() && static_cast<int>(i) <= order; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size() && static_cast<int>(i + j) <= order; ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

ExactSeries series_compose(const ExactSeries& f, const ExactSeries& g, int order) {
  if (!g.empty() && g[0] != 0) throw PreconditionViolation("series_compose: inner series must vanish at 0");
  ExactSeries out(order + 1, Rational(0));
  ExactSeries power(order + 1, Rational(0));
  power[0] = 1;
  for (std::size_t k = 0; k < f.size() && static_cast<int>(k) <= order; ++k) {
    for (int i = 0; i <= order; ++i) out[i] += f[k] * power[i];
    power = series_multiply(power, g, order);
  }
  return out;
}

ExactSeries series_theta(const ExactSeries& f) {
  ExactSeries out(f.size(), Rational(0));
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = f[k] * static_cast<long>(k);
  return out;
}

bool is_zero(const ExactSeries& f) {
  return std::all_of(f.begin(), f.end(), [](const Rational& x) { return x == 0; });
}

ExactSeries quadratic_transformation_defect(const Rational& c, const Rational& a1, int order) {
  const std::vector<Rational> b2{c, 1 - c};
  const std::vector<Rational> b3{Rational(1, 2), c, 1 - c};
  const ExactSeries one_minus_2t{Rational(1), Rational(-2)};
  const ExactSeries one_minus_t{Rational(1), Rational(-1)};

  const ExactSeries lhs = scale(series_compose(series_F(a1, b3, order), quadratic_argument(order), order), one_minus_2t);

  const ExactSeries f0 = series_F(0, b2, order);
  const ExactSeries square = scale(series_multiply(f0, f0, order), one_minus_2t);
  ExactSeries cross = scale(series_multiply(f0, series_theta(f0), order), one_minus_t);
  for (Rational& x : cross) x *= 2 * a1;

  ExactSeries rhs = square;
  for (int i = 0; i <= order; ++i) rhs[i] += cross[i];
  return sub(lhs, rhs);
}

ExactSeries geometric_clausen_defect(const Rational& c, int order) {
  const std::vector<Rational> b2{c, 1 - c};
  const std::vector<Rational> b3{Rational(1, 2), c, 1 - c};
  const ExactSeries lhs = series_compose(series_F(0, b3, order), quadratic_argument(order), order);
  const ExactSeries f0 = series_F(0, b2, order);
  return sub(lhs, series_multiply(f0, f0, order));
}

ExactSeries truncation_tail_defect(const std::vector<Rational>& b, const Rational& alpha, std::uint64_t p) {
  if (p < 3 || p > 200) throw PreconditionViolation("truncation_tail_defect: p out of range");
  const int top = static_cast<int>(p) - 1;
  const int degree = 2 * top;
  const ExactSeries a = series_F(0, b, top);
  const ExactSeries bb = series_F(alpha, b, top);

  ExactSeries truncated_product = series_multiply(a, bb, top);
  ExactSeries product_of_truncations = series_multiply(a, bb, degree);
  ExactSeries tail(degree + 1, Rational(0));
  for (int k = 1; k <= top; ++k) {
    for (int j = 0; j <= top - k; ++j) tail[top + k] += a[k + j] * bb[top - j];
  }
  return sub(sub(product_of_truncations, truncated_product), tail);
}

}  // namespace scv
